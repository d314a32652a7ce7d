#include <limits>
#include <unordered_map>

#include "sknmill/enumerate.hpp"
#include "sknmill/focused.hpp"

namespace sknmill {

namespace {

struct Alternative {
  FocusedRule rule;
  std::size_t split;
  std::vector<FocusedSequent> premises;
};

// Rule instances applicable to `s`, in canonical search order.
std::vector<Alternative> alternatives(const FocusedSequent& s, Calculus calculus) {
  static constexpr FocusedRule kRI[] = {FocusedRule::LolliR, FocusedRule::LI2RI};
  static constexpr FocusedRule kLI[] = {FocusedRule::UnitL, FocusedRule::TensorL,
                                        FocusedRule::P2LI};
  static constexpr FocusedRule kP[] = {FocusedRule::Pass, FocusedRule::F2P};
  static constexpr FocusedRule kF[] = {FocusedRule::Ax, FocusedRule::UnitR, FocusedRule::TensorR,
                                       FocusedRule::LolliL};
  std::span<const FocusedRule> rules;
  switch (s.phase) {
    case Phase::RI: rules = kRI; break;
    case Phase::LI: rules = kLI; break;
    case Phase::P: rules = kP; break;
    case Phase::F: rules = kF; break;
  }
  std::vector<Alternative> out;
  for (FocusedRule r : rules) {
    const bool splits = r == FocusedRule::TensorR || r == FocusedRule::LolliL;
    const std::size_t last = splits ? s.context.size() : 0;
    for (std::size_t k = 0; k <= last; ++k) {
      if (auto p = focused_premise_sequents(r, s, k, calculus)) {
        out.push_back(Alternative{r, k, std::move(*p)});
      }
    }
  }
  return out;
}

class Searcher {
 public:
  Searcher(Calculus calculus, Budget* budget) : calculus_(calculus), budget_(budget) {}

  const std::vector<FocusedDerivation>& all(const FocusedSequent& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::vector<FocusedDerivation> out;
    for (auto& alt : alternatives(s, calculus_)) {
      std::vector<FocusedDerivation> chosen;
      expand(s, alt, 0, chosen, out);
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

 private:
  void expand(const FocusedSequent& s, const Alternative& alt, std::size_t i,
              std::vector<FocusedDerivation>& chosen, std::vector<FocusedDerivation>& out) {
    if (i == alt.premises.size()) {
      if (budget_) budget_->spend();
      out.push_back(FocusedDerivation::make(alt.rule, s, chosen, alt.split));
      return;
    }
    // References into the memo stay valid across rehashing.
    const auto& subs = all(alt.premises[i]);
    for (const auto& d : subs) {
      chosen.push_back(d);
      expand(s, alt, i + 1, chosen, out);
      chosen.pop_back();
    }
  }

  Calculus calculus_;
  Budget* budget_;
  std::unordered_map<FocusedSequent, std::vector<FocusedDerivation>, FocusedSequentHash> memo_;
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  if (a == 0 || b == 0) return 0;
  return a > max / b ? max : a * b;
}

class Counter {
 public:
  explicit Counter(Calculus calculus) : calculus_(calculus) {}

  std::uint64_t count(const FocusedSequent& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (const auto& alt : alternatives(s, calculus_)) {
      std::uint64_t n = 1;
      for (const auto& p : alt.premises) {
        n = sat_mul(n, count(p));
        if (n == 0) break;
      }
      total = sat_add(total, n);
    }
    memo_.emplace(s, total);
    return total;
  }

 private:
  Calculus calculus_;
  std::unordered_map<FocusedSequent, std::uint64_t, FocusedSequentHash> memo_;
};

class FirstFinder {
 public:
  explicit FirstFinder(Calculus calculus) : calculus_(calculus) {}

  const std::optional<FocusedDerivation>& first(const FocusedSequent& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    std::optional<FocusedDerivation> found;
    for (const auto& alt : alternatives(s, calculus_)) {
      std::vector<FocusedDerivation> subs;
      for (const auto& p : alt.premises) {
        const auto& d = first(p);
        if (!d) break;
        subs.push_back(*d);
      }
      if (subs.size() == alt.premises.size()) {
        found = FocusedDerivation::make(alt.rule, s, std::move(subs), alt.split);
        break;
      }
    }
    return memo_.emplace(s, std::move(found)).first->second;
  }

 private:
  Calculus calculus_;
  std::unordered_map<FocusedSequent, std::optional<FocusedDerivation>, FocusedSequentHash> memo_;
};

}  // namespace

std::vector<FocusedDerivation> search(const FocusedSequent& s, Calculus calculus,
                                      Budget* budget) {
  Searcher searcher(calculus, budget);
  return searcher.all(s);
}

std::vector<FocusedDerivation> search(const Sequent& s, Calculus calculus, Budget* budget) {
  return search(entry_sequent(s), calculus, budget);
}

std::uint64_t count_derivations(const Sequent& s, Calculus calculus) {
  Counter counter(calculus);
  return counter.count(entry_sequent(s));
}

bool focused_derivable(const Sequent& s, Calculus calculus) {
  return derive_first(s, calculus).has_value();
}

std::optional<FocusedDerivation> derive_first(const Sequent& s, Calculus calculus) {
  FirstFinder finder(calculus);
  return finder.first(entry_sequent(s));
}

std::uint64_t count_maps(const Formula& a, const Formula& b) {
  return count_derivations(Sequent{a, {}, b}, Calculus::Tagged);
}

bool is_derivable(const Sequent& s) { return focused_derivable(s, Calculus::Tagged); }

}  // namespace sknmill
