#include "ftalg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace ftalg {

FailureSet FailureSet::of(std::initializer_list<std::uint32_t> ids) {
  FailureSet s;
  for (auto id : ids) {
    if (id >= 64) throw std::invalid_argument("instance id out of range");
    s.bits |= 1ull << id;
  }
  return s;
}

int FailureSet::size() const { return std::popcount(bits); }

std::vector<std::uint32_t> FailureSet::ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1)
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(b)));
  return out;
}

CapExceededError::CapExceededError(std::size_t components, std::size_t cap)
    : std::runtime_error("system has " + std::to_string(components) +
                         " components, above the enumeration cap " +
                         std::to_string(cap)),
      components_(components),
      cap_(cap) {}

namespace {

std::size_t checked_count(const GroundedSystem& g, std::size_t cap) {
  std::size_t n = g.component_count();
  std::size_t effective = std::min(cap, kMaxEnumerableComponents);
  if (n > effective) throw CapExceededError(n, effective);
  return n;
}

bool fails_rec(const Expr& e, std::uint64_t bits, std::size_t& next_id) {
  switch (e.kind()) {
    case ExprKind::Atom: return (bits >> next_id++) & 1u;
    case ExprKind::Zero: return false;
    case ExprKind::One: return true;
    case ExprKind::Sum: {
      bool any = false;  // no short-circuit: every atom advances the id
      for (const auto& c : e.children()) any |= fails_rec(*c, bits, next_id);
      return any;
    }
    case ExprKind::Product: {
      bool all = true;
      for (const auto& c : e.children()) all &= fails_rec(*c, bits, next_id);
      return all;
    }
  }
  return false;
}

}  // namespace

bool fails(const GroundedSystem& g, FailureSet s) {
  std::size_t n = g.component_count();
  if (n < 64 && (s.bits >> n) != 0)
    throw std::invalid_argument("failure set names ids outside the system");
  std::size_t next_id = 0;
  return fails_rec(*g.expr, s.bits, next_id);
}

std::vector<std::uint64_t> fail_bitmap(const GroundedSystem& g,
                                       const OracleOptions& opts) {
  std::size_t n = checked_count(g, opts.cap);
  FailProgram prog = compile_fail_program(g);
  std::uint64_t words = n <= 6 ? 1 : 1ull << (n - 6);
  std::vector<std::uint64_t> out(words);
  const kernels::Kernel& k = opts.kernel ? *opts.kernel : kernels::preferred_kernel();
  k.fn(prog, 0, words, out.data());
  return out;
}

namespace {

struct ScanResult {
  std::optional<int> min_failing;    // smallest failing cardinality
  std::optional<int> max_surviving;  // largest surviving cardinality
};

ScanResult scan_bitmap(const std::vector<std::uint64_t>& bitmap, std::size_t n) {
  ScanResult r;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    int c = std::popcount(k);
    if ((bitmap[k >> 6] >> (k & 63)) & 1u) {
      if (!r.min_failing || c < *r.min_failing) r.min_failing = c;
    } else {
      if (!r.max_surviving || c > *r.max_surviving) r.max_surviving = c;
    }
  }
  return r;
}

}  // namespace

Report oracle_report(const GroundedSystem& g, const OracleOptions& opts) {
  std::size_t n = checked_count(g, opts.cap);
  ScanResult r = scan_bitmap(fail_bitmap(g, opts), n);
  Report rep;
  rep.components = n;
  rep.phi_worst = r.min_failing ? Tolerance::fin(*r.min_failing - 1)
                                : Tolerance::pos_inf();
  rep.phi_best = r.max_surviving ? Tolerance::fin(*r.max_surviving)
                                 : Tolerance::neg_inf();
  return rep;
}

Tolerance oracle_phi_best(const GroundedSystem& g, const OracleOptions& opts) {
  return oracle_report(g, opts).phi_best;
}

Tolerance oracle_phi_worst(const GroundedSystem& g, const OracleOptions& opts) {
  return oracle_report(g, opts).phi_worst;
}

std::vector<FailureSet> minimal_cut_sets(const GroundedSystem& g,
                                         const OracleOptions& opts) {
  std::size_t n = checked_count(g, opts.cap);
  std::vector<std::uint64_t> bitmap = fail_bitmap(g, opts);
  auto failing = [&](std::uint64_t k) {
    return ((bitmap[k >> 6] >> (k & 63)) & 1u) != 0;
  };
  std::vector<FailureSet> cuts;
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (!failing(k)) continue;
    bool minimal = true;  // monotone structure: dropping any one element must survive
    for (std::uint64_t b = k; b != 0 && minimal; b &= b - 1)
      minimal = !failing(k ^ (b & ~(b - 1)));
    if (minimal) cuts.push_back({k});
  }
  std::sort(cuts.begin(), cuts.end(), [](FailureSet a, FailureSet b) {
    int ca = a.size(), cb = b.size();
    if (ca != cb) return ca < cb;
    return a.ids() < b.ids();
  });
  return cuts;
}

namespace oracle_ref {

namespace {

// Next mask with the same popcount (Gosper).
std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

template <typename Visit>
bool visit_popcount_class(std::size_t n, int c, Visit&& visit) {
  const std::uint64_t total = 1ull << n;
  if (c == 0) return visit(0);
  std::uint64_t v = (1ull << c) - 1;
  while (v < total) {
    if (visit(v)) return true;
    if (c == static_cast<int>(n)) break;  // single full-set mask
    v = next_same_popcount(v);
  }
  return false;
}

}  // namespace

Tolerance phi_worst(const GroundedSystem& g, std::size_t cap) {
  std::size_t n = checked_count(g, cap);
  FailProgram prog = compile_fail_program(g);
  for (int c = 0; c <= static_cast<int>(n); ++c) {
    bool found = visit_popcount_class(
        n, c, [&](std::uint64_t v) { return eval_fail(prog, v); });
    if (found) return Tolerance::fin(c - 1);
  }
  return Tolerance::pos_inf();
}

Tolerance phi_best(const GroundedSystem& g, std::size_t cap) {
  std::size_t n = checked_count(g, cap);
  FailProgram prog = compile_fail_program(g);
  for (int c = static_cast<int>(n); c >= 0; --c) {
    bool found = visit_popcount_class(
        n, c, [&](std::uint64_t v) { return !eval_fail(prog, v); });
    if (found) return Tolerance::fin(c);
  }
  return Tolerance::neg_inf();
}

}  // namespace oracle_ref

}  // namespace ftalg
