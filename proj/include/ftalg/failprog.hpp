#pragma once

#include <cstdint>
#include <vector>

#include "ftalg/expr.hpp"

namespace ftalg {

// Postfix failure-evaluation program over instance variables. Variables are
// atom occurrences numbered in depth-first order, matching ground().
struct FailProgram {
  enum class OpCode : std::uint8_t {
    Var,        // push: instance `arg` failed?
    ConstFail,  // push true  (One)
    ConstOk,    // push false (Zero)
    AnyOf,      // pop `arg` values, push OR  (Sum)
    AllOf,      // pop `arg` values, push AND (Product)
  };
  struct Op {
    OpCode code;
    std::uint32_t arg;
  };

  std::vector<Op> ops;
  std::uint32_t var_count = 0;
  std::uint32_t max_stack = 0;
};

FailProgram compile_fail_program(const Expr& e);
inline FailProgram compile_fail_program(const GroundedSystem& g) {
  return compile_fail_program(*g.expr);
}

// Single-subset evaluation; bit i of `subset` marks instance i as failed.
bool eval_fail(const FailProgram& p, std::uint64_t subset);

}  // namespace ftalg
