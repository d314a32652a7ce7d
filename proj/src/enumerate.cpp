#include "sknmill/enumerate.hpp"

#include <unordered_map>

namespace sknmill {

namespace {

class Enumerator {
 public:
  explicit Enumerator(Budget* budget) : budget_(budget) {}

  const std::vector<Derivation>& all(const Sequent& s) {
    if (auto it = memo_.find(s); it != memo_.end()) {
      return it->second;
    }
    std::vector<Derivation> out = compute(s);
    return memo_.emplace(s, std::move(out)).first->second;
  }

 private:
  void emit(std::vector<Derivation>& out, Derivation d) {
    if (budget_) budget_->spend();
    out.push_back(std::move(d));
  }

  template <class Combine>
  void product(std::vector<Derivation>& out, const Sequent& left, const Sequent& right,
               Combine combine) {
    // References into the memo stay valid across rehashing.
    const auto& lefts = all(left);
    if (lefts.empty()) return;
    const auto& rights = all(right);
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        emit(out, combine(l, r));
      }
    }
  }

  std::vector<Derivation> compute(const Sequent& s) {
    std::vector<Derivation> out;
    const std::size_t n = s.context.size();
    const auto sub = [&](std::size_t from, std::size_t to) {
      return Context(s.context.begin() + static_cast<std::ptrdiff_t>(from),
                     s.context.begin() + static_cast<std::ptrdiff_t>(to));
    };

    if (s.stoup && n == 0 && *s.stoup == s.succedent) {
      emit(out, ax(s.succedent));
    }
    if (!s.stoup && n == 0 && s.succedent.is_unit()) {
      emit(out, unit_r());
    }
    if (s.stoup && s.stoup->is_unit()) {
      for (const auto& d : all(Sequent{std::nullopt, s.context, s.succedent})) {
        emit(out, unit_l(d));
      }
    }
    if (s.stoup && s.stoup->is_tensor()) {
      Context ctx{s.stoup->right()};
      ctx.insert(ctx.end(), s.context.begin(), s.context.end());
      for (const auto& d :
           all(Sequent{s.stoup->left(), std::move(ctx), s.succedent})) {
        emit(out, tensor_l(d));
      }
    }
    if (!s.stoup && n > 0) {
      for (const auto& d :
           all(Sequent{s.context.front(), sub(1, n), s.succedent})) {
        emit(out, pass(d));
      }
    }
    if (s.succedent.is_lolli()) {
      Context ctx = s.context;
      ctx.push_back(s.succedent.left());
      for (const auto& d :
           all(Sequent{s.stoup, std::move(ctx), s.succedent.right()})) {
        emit(out, lolli_r(d));
      }
    }
    if (s.succedent.is_tensor()) {
      for (std::size_t k = 0; k <= n; ++k) {
        product(out, Sequent{s.stoup, sub(0, k), s.succedent.left()},
                Sequent{std::nullopt, sub(k, n), s.succedent.right()},
                [](const Derivation& f, const Derivation& g) { return tensor_r(f, g); });
      }
    }
    if (s.stoup && s.stoup->is_lolli()) {
      for (std::size_t k = 0; k <= n; ++k) {
        product(out, Sequent{std::nullopt, sub(0, k), s.stoup->left()},
                Sequent{s.stoup->right(), sub(k, n), s.succedent},
                [](const Derivation& f, const Derivation& g) { return lolli_l(f, g); });
      }
    }
    return out;
  }

  Budget* budget_;
  std::unordered_map<Sequent, std::vector<Derivation>, SequentHash> memo_;
};

}  // namespace

std::vector<Derivation> enumerate_all(const Sequent& s, Budget* budget) {
  Enumerator e(budget);
  return e.all(s);
}

}  // namespace sknmill
