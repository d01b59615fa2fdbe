#include "ftalg/analysis.hpp"

#include <cstdint>
#include <optional>

namespace ftalg {

Tolerance phi_worst(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom: return Tolerance::fin(0);
    case ExprKind::Zero: return Tolerance::pos_inf();
    case ExprKind::One: return Tolerance::fin(-1);
    case ExprKind::Sum: {
      Tolerance best = Tolerance::pos_inf();
      for (const auto& c : e.children()) best = tol_min(best, phi_worst(*c));
      return best;
    }
    case ExprKind::Product: {
      auto ch = e.children();
      Tolerance total = Tolerance::fin(static_cast<std::int64_t>(ch.size()) - 1);
      for (const auto& c : ch) total = tol_add(total, phi_worst(*c));
      return total;
    }
  }
  return Tolerance::fin(0);
}

namespace {

struct BestInfo {
  std::size_t count;
  Tolerance best;
};

BestInfo best_info(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Atom: return {1, Tolerance::fin(0)};
    case ExprKind::Zero: return {0, Tolerance::fin(0)};
    case ExprKind::One: return {0, Tolerance::neg_inf()};
    case ExprKind::Sum: {
      BestInfo acc{0, Tolerance::fin(0)};
      for (const auto& c : e.children()) {
        BestInfo i = best_info(*c);
        acc.count += i.count;
        acc.best = tol_add(acc.best, i.best);
      }
      return acc;
    }
    case ExprKind::Product: {
      // All components fail except inside the child whose count-minus-best
      // deficit is smallest; that child contributes its own best value.
      std::size_t total = 0;
      std::optional<BestInfo> chosen;
      Tolerance chosen_deficit = Tolerance::pos_inf();
      bool have = false;
      for (const auto& c : e.children()) {
        BestInfo i = best_info(*c);
        total += i.count;
        Tolerance deficit =
            i.best.is_neg_inf()
                ? Tolerance::pos_inf()
                : Tolerance::fin(static_cast<std::int64_t>(i.count) - i.best.value());
        if (!have || deficit < chosen_deficit) {
          have = true;
          chosen_deficit = deficit;
          chosen = i;
        }
      }
      if (chosen->best.is_neg_inf()) return {total, Tolerance::neg_inf()};
      return {total,
              Tolerance::fin(static_cast<std::int64_t>(total - chosen->count) +
                             chosen->best.value())};
    }
  }
  return {0, Tolerance::fin(0)};
}

}  // namespace

Tolerance phi_best(const Expr& e) { return best_info(e).best; }

Report analyze(const Expr& e) {
  BestInfo info = best_info(e);
  return {info.count, info.best, phi_worst(e)};
}

}  // namespace ftalg
