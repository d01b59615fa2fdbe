#include "ftalg/failprog.hpp"

#include <memory>
#include <stdexcept>

namespace ftalg {

namespace {

void emit(const Expr& e, FailProgram& p, std::uint32_t& stack, std::uint32_t& peak) {
  auto push = [&] {
    if (++stack > peak) peak = stack;
  };
  switch (e.kind()) {
    case ExprKind::Atom:
      p.ops.push_back({FailProgram::OpCode::Var, p.var_count++});
      push();
      return;
    case ExprKind::Zero:
      p.ops.push_back({FailProgram::OpCode::ConstOk, 0});
      push();
      return;
    case ExprKind::One:
      p.ops.push_back({FailProgram::OpCode::ConstFail, 0});
      push();
      return;
    case ExprKind::Sum:
    case ExprKind::Product: {
      for (const auto& c : e.children()) emit(*c, p, stack, peak);
      auto k = static_cast<std::uint32_t>(e.children().size());
      p.ops.push_back({e.kind() == ExprKind::Sum ? FailProgram::OpCode::AnyOf
                                                 : FailProgram::OpCode::AllOf,
                       k});
      stack -= k - 1;
      return;
    }
  }
}

}  // namespace

FailProgram compile_fail_program(const Expr& e) {
  FailProgram p;
  std::uint32_t stack = 0, peak = 0;
  emit(e, p, stack, peak);
  p.max_stack = peak;
  return p;
}

bool eval_fail(const FailProgram& p, std::uint64_t subset) {
  // Fixed-size local stack keeps the hot path allocation-free; wide programs
  // (huge identity-only products) spill to the heap.
  bool local[64];
  std::unique_ptr<bool[]> heap;
  bool* sp = local;
  if (p.max_stack > 64) {
    heap.reset(new bool[p.max_stack]);
    sp = heap.get();
  }
  std::size_t top = 0;
  for (const auto& op : p.ops) {
    switch (op.code) {
      case FailProgram::OpCode::Var:
        sp[top++] = (subset >> op.arg) & 1u;
        break;
      case FailProgram::OpCode::ConstFail:
        sp[top++] = true;
        break;
      case FailProgram::OpCode::ConstOk:
        sp[top++] = false;
        break;
      case FailProgram::OpCode::AnyOf: {
        bool acc = false;
        for (std::uint32_t i = 0; i < op.arg; ++i) acc |= sp[--top];
        sp[top++] = acc;
        break;
      }
      case FailProgram::OpCode::AllOf: {
        bool acc = true;
        for (std::uint32_t i = 0; i < op.arg; ++i) acc &= sp[--top];
        sp[top++] = acc;
        break;
      }
    }
  }
  if (top != 1) throw std::logic_error("unbalanced fail program");
  return sp[0];
}

}  // namespace ftalg
