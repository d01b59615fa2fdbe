#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ftalg/analysis.hpp"
#include "ftalg/expr.hpp"
#include "ftalg/kernels.hpp"
#include "ftalg/tolerance.hpp"

namespace ftalg {

// A set of failed instance ids of one grounded system.
struct FailureSet {
  std::uint64_t bits = 0;

  static FailureSet of(std::initializer_list<std::uint32_t> ids);

  bool contains(std::uint32_t id) const { return (bits >> id) & 1u; }
  FailureSet with(std::uint32_t id) const { return {bits | (1ull << id)}; }
  FailureSet without(std::uint32_t id) const { return {bits & ~(1ull << id)}; }
  int size() const;
  std::vector<std::uint32_t> ids() const;

  friend bool operator==(FailureSet, FailureSet) = default;
};

class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::size_t components, std::size_t cap);

  std::size_t components() const { return components_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t components_;
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 20;
// Hard bound: the bitmap for 2^30 subsets is 128 MiB.
inline constexpr std::size_t kMaxEnumerableComponents = 30;

struct OracleOptions {
  std::size_t cap = kDefaultEnumerationCap;
  const kernels::Kernel* kernel = nullptr;  // null = preferred_kernel()
};

// Ground-truth failure semantics: an Atom fails iff its id is in `s`, Zero
// never fails, One always fails, a Sum fails iff any child fails, a Product
// fails iff all children fail. Throws std::invalid_argument if `s` names ids
// outside the system.
bool fails(const GroundedSystem& g, FailureSet s);

// Failure verdicts for all 2^N subsets: bit k of word k/64 = fails(subset k).
std::vector<std::uint64_t> fail_bitmap(const GroundedSystem& g,
                                       const OracleOptions& opts = {});

// Largest survivable failure-set cardinality; -inf if even the empty set
// fails. Exhaustive; throws CapExceededError above the cap.
Tolerance oracle_phi_best(const GroundedSystem& g, const OracleOptions& opts = {});

// Smallest failing cardinality minus one; +inf if no subset fails, Fin(-1)
// if the empty set already fails.
Tolerance oracle_phi_worst(const GroundedSystem& g, const OracleOptions& opts = {});

// Both phi values from one bitmap pass.
Report oracle_report(const GroundedSystem& g, const OracleOptions& opts = {});

// All inclusion-minimal failing sets, sorted by cardinality then
// lexicographically as ascending id lists. Empty iff oracle_phi_worst = +inf.
std::vector<FailureSet> minimal_cut_sets(const GroundedSystem& g,
                                         const OracleOptions& opts = {});

namespace oracle_ref {

// Reference strategy: walk subsets in popcount order, one at a time, with
// early exit — increasing cardinality for phi_worst (stop at the first
// failing set), decreasing for phi_best (stop at the first surviving set).
// Kept independent of the kernel/bitmap path; equivalence is tested.
Tolerance phi_worst(const GroundedSystem& g, std::size_t cap = kDefaultEnumerationCap);
Tolerance phi_best(const GroundedSystem& g, std::size_t cap = kDefaultEnumerationCap);

}  // namespace oracle_ref

}  // namespace ftalg
