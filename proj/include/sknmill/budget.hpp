#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace sknmill {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t limit)
      : std::runtime_error("budget of " + std::to_string(limit) + " nodes exhausted") {}
};

/// Caps the number of nodes a search or rewrite may produce.
class Budget {
 public:
  static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

  explicit Budget(std::size_t limit = kUnlimited) : limit_(limit) {}

  void spend(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExceeded(limit_);
    }
  }

  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace sknmill
