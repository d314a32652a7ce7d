#include "support.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "sknmill/enumerate.hpp"
#include "sknmill/focused.hpp"

namespace sknmill::testing {

namespace {

constexpr const char* kPlaceholder = "Q";

// Formula shapes with placeholder atoms, keyed by (connectives, leaves).
class Shapes {
 public:
  const std::vector<Formula>& get(std::size_t connectives, std::size_t leaves) {
    const auto key = std::make_pair(connectives, leaves);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Formula> out;
    if (connectives == 0 && leaves == 1) out.push_back(Formula::atom(kPlaceholder));
    if (connectives == 1 && leaves == 0) out.push_back(Formula::unit());
    if (connectives >= 1) {
      for (std::size_t cl = 0; cl < connectives; ++cl) {
        for (std::size_t ll = 0; ll <= leaves; ++ll) {
          const auto left = get(cl, ll);
          const auto& right = get(connectives - 1 - cl, leaves - ll);
          for (const auto& a : left) {
            for (const auto& b : right) {
              out.push_back(Formula::tensor(a, b));
              out.push_back(Formula::lolli(a, b));
            }
          }
        }
      }
    }
    return memo_[key] = std::move(out);
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Formula>> memo_;
};

Formula relabel(const Formula& f, const std::vector<std::string>& names, std::size_t& next) {
  switch (f.kind()) {
    case Connective::Atom:
      return Formula::atom(names[next++]);
    case Connective::Unit:
      return f;
    case Connective::Tensor: {
      Formula a = relabel(f.left(), names, next);
      return Formula::tensor(a, relabel(f.right(), names, next));
    }
    case Connective::Lolli: {
      Formula a = relabel(f.left(), names, next);
      return Formula::lolli(a, relabel(f.right(), names, next));
    }
  }
  return f;
}

// Pairings of `n` leaf positions, named X, Y, Z in order of first occurrence.
std::vector<std::vector<std::string>> pairings(std::size_t n) {
  static const char* kNames[] = {"X", "Y", "Z"};
  std::vector<std::vector<std::string>> out;
  std::vector<int> label(n, -1);
  std::function<void(int)> go = [&](int next) {
    std::size_t i = 0;
    while (i < n && label[i] >= 0) ++i;
    if (i == n) {
      std::vector<std::string> names;
      for (int l : label) names.emplace_back(kNames[l]);
      out.push_back(std::move(names));
      return;
    }
    label[i] = next;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (label[j] >= 0) continue;
      label[j] = next;
      go(next + 1);
      label[j] = -1;
    }
    label[i] = -1;
  };
  go(0);
  return out;
}

void collect_atoms(const Formula& f, std::vector<Formula>& out) {
  if (f.is_atom()) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  } else if (!f.is_unit()) {
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  if (f.is_tensor() || f.is_lolli()) {
    collect_subformulas(f.left(), out);
    collect_subformulas(f.right(), out);
  }
}

// Random formula over `leaves` and I with at most `nodes` binary connectives.
Formula random_over(std::mt19937& rng, const std::vector<Formula>& leaves, std::size_t nodes) {
  std::uniform_int_distribution<std::size_t> coin(0, 3);
  if (nodes == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size());
    const std::size_t i = pick(rng);
    return i == leaves.size() ? Formula::unit() : leaves[i];
  }
  std::uniform_int_distribution<std::size_t> split(0, nodes - 1);
  const std::size_t l = split(rng);
  Formula a = random_over(rng, leaves, l);
  Formula b = random_over(rng, leaves, nodes - 1 - l);
  return coin(rng) < 2 ? Formula::tensor(a, b) : Formula::lolli(a, b);
}

std::vector<Formula> leaf_pool(std::span<const Formula> formulas) {
  std::vector<Formula> pool;
  for (const auto& f : formulas) collect_subformulas(f, pool);
  for (const auto& f : formulas) collect_atoms(f, pool);
  pool.push_back(Formula::atom("X"));
  return pool;
}

constexpr std::size_t kMaxSequentConnectives = 12;

}  // namespace

void for_each_sequent(const FamilyParams& params,
                      const std::function<void(const Sequent&)>& visit) {
  Shapes shapes;
  for (std::size_t c = 0; c <= params.max_connectives; ++c) {
    for (std::size_t pairs = 0; pairs <= params.max_atom_pairs; ++pairs) {
      const std::size_t leaves = 2 * pairs;
      const auto names = pairings(leaves);
      for (std::size_t has_stoup = 0; has_stoup < 2; ++has_stoup) {
        for (std::size_t k = 0; k <= params.max_context; ++k) {
          const std::size_t parts = has_stoup + k + 1;
          std::vector<Formula> chosen;
          std::function<void(std::size_t, std::size_t, std::size_t)> go =
              [&](std::size_t i, std::size_t cc, std::size_t ll) {
                if (i + 1 == parts) {
                  for (const auto& f : shapes.get(cc, ll)) {
                    chosen.push_back(f);
                    for (const auto& lab : names) {
                      std::size_t next = 0;
                      std::vector<Formula> fs;
                      for (const auto& g : chosen) fs.push_back(relabel(g, lab, next));
                      Sequent s{has_stoup ? Stoup(fs.front()) : std::nullopt,
                                Context(fs.begin() + static_cast<long>(has_stoup), fs.end() - 1),
                                fs.back()};
                      visit(s);
                    }
                    chosen.pop_back();
                  }
                  return;
                }
                for (std::size_t a = 0; a <= cc; ++a) {
                  for (std::size_t b = 0; b <= ll; ++b) {
                    for (const auto& f : shapes.get(a, b)) {
                      chosen.push_back(f);
                      go(i + 1, cc - a, ll - b);
                      chosen.pop_back();
                    }
                  }
                }
              };
          go(0, c, leaves);
        }
      }
    }
  }
}

std::vector<Sequent> derivable_family(const FamilyParams& params) {
  std::vector<Sequent> out;
  for_each_sequent(params, [&](const Sequent& s) {
    if (focused_derivable(s)) out.push_back(s);
  });
  return out;
}

Formula random_formula(std::mt19937& rng, std::size_t max_connectives,
                       const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<std::size_t> kind(0, 3);
  if (max_connectives == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    return Formula::atom(atoms[pick(rng)]);
  }
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<std::size_t> pick(0, atoms.size());
      const std::size_t i = pick(rng);
      return i == atoms.size() ? Formula::unit() : Formula::atom(atoms[i]);
    }
    case 1:
    case 2:
    case 3: {
      std::uniform_int_distribution<std::size_t> split(0, max_connectives - 1);
      const std::size_t l = split(rng);
      Formula a = random_formula(rng, l, atoms);
      Formula b = random_formula(rng, max_connectives - 1 - l, atoms);
      return kind(rng) < 2 ? Formula::tensor(a, b) : Formula::lolli(a, b);
    }
  }
  return Formula::unit();
}

namespace {

// Random term with the given target.
HilbertTerm random_term_to(std::mt19937& rng, const Formula& target, std::size_t depth) {
  std::uniform_int_distribution<int> pick(0, 3);
  if (depth == 0) return pick(rng) == 0 ? HilbertTerm::lam(target) : HilbertTerm::id(target);
  switch (pick(rng)) {
    case 0:
      return HilbertTerm::lam(target);
    case 1:
      if (target.is_tensor()) {
        return HilbertTerm::tensor(random_term_to(rng, target.left(), depth - 1),
                                   random_term_to(rng, target.right(), depth - 1));
      }
      if (target.is_lolli()) {
        return HilbertTerm::lolli(random_term_from(rng, target.left(), depth - 1),
                                  random_term_to(rng, target.right(), depth - 1));
      }
      return HilbertTerm::id(target);
    default:
      return HilbertTerm::id(target);
  }
}

}  // namespace

HilbertTerm random_term_from(std::mt19937& rng, const Formula& source, std::size_t depth) {
  if (depth == 0) return HilbertTerm::id(source);
  std::uniform_int_distribution<int> pick(0, 9);
  const std::vector<std::string> atoms{"X", "Y"};
  switch (pick(rng)) {
    case 0:
      return HilbertTerm::id(source);
    case 1:
      return HilbertTerm::rho(source);
    case 2:
      if (source.is_tensor() && source.left().is_unit()) return HilbertTerm::lam(source.right());
      break;
    case 3:
      if (source.is_tensor() && source.left().is_tensor()) {
        return HilbertTerm::alpha(source.left().left(), source.left().right(), source.right());
      }
      break;
    case 4:
      if (source.is_tensor()) {
        return HilbertTerm::tensor(random_term_from(rng, source.left(), depth - 1),
                                   random_term_from(rng, source.right(), depth - 1));
      }
      break;
    case 5:
      if (source.is_lolli()) {
        return HilbertTerm::lolli(random_term_to(rng, source.left(), depth - 1),
                                  random_term_from(rng, source.right(), depth - 1));
      }
      break;
    case 6: {
      const Formula b = random_formula(rng, 1, atoms);
      return HilbertTerm::pi(random_term_from(rng, Formula::tensor(source, b), depth - 1));
    }
    case 7:
      if (source.is_tensor() && source.left().is_lolli() &&
          source.left().left() == source.right()) {
        return HilbertTerm::pi_inv(HilbertTerm::id(source.left()));
      }
      if (source.is_tensor()) {
        return HilbertTerm::pi_inv(HilbertTerm::pi(random_term_from(rng, source, depth - 1)));
      }
      break;
    default: {
      HilbertTerm f = random_term_from(rng, source, depth - 1);
      return HilbertTerm::comp(f, random_term_from(rng, *f.target(), depth - 1));
    }
  }
  return HilbertTerm::comp(HilbertTerm::id(source), random_term_from(rng, source, depth - 1));
}

Derivation random_derivation(std::mt19937& rng, const Sequent& s) {
  const auto all = enumerate_all(s);
  if (all.empty()) throw std::invalid_argument("sequent is not derivable: " + to_string(s));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

std::optional<Sequent> random_sequent_with_stoup(std::mt19937& rng, const Formula& stoup,
                                                 std::size_t attempts) {
  std::uniform_int_distribution<std::size_t> len(0, 1);
  std::uniform_int_distribution<std::size_t> nodes(0, 3);
  for (std::size_t i = 0; i < attempts; ++i) {
    Context ctx;
    for (std::size_t k = len(rng); k > 0; --k) ctx.push_back(random_formula(rng, 1, {"X", "Y"}));
    std::vector<Formula> base{stoup};
    base.insert(base.end(), ctx.begin(), ctx.end());
    Sequent s{stoup, ctx, random_over(rng, leaf_pool(base), nodes(rng))};
    if (connectives(s) <= kMaxSequentConnectives && focused_derivable(s)) return s;
  }
  return std::nullopt;
}

std::optional<std::pair<Sequent, std::size_t>> random_sequent_with_context_formula(
    std::mt19937& rng, const Formula& formula, std::size_t attempts) {
  std::uniform_int_distribution<std::size_t> len(0, 1);
  std::uniform_int_distribution<std::size_t> nodes(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < attempts; ++i) {
    Stoup stoup;
    if (coin(rng) == 1) stoup = random_formula(rng, 1, {"X", "Y"});
    Context ctx;
    for (std::size_t k = len(rng); k > 0; --k) ctx.push_back(random_formula(rng, 1, {"X", "Y"}));
    std::uniform_int_distribution<std::size_t> at(0, ctx.size());
    const std::size_t pos = at(rng);
    ctx.insert(ctx.begin() + static_cast<long>(pos), formula);
    std::vector<Formula> base(ctx.begin(), ctx.end());
    if (stoup) base.push_back(*stoup);
    Sequent s{stoup, ctx, random_over(rng, leaf_pool(base), nodes(rng))};
    if (connectives(s) <= kMaxSequentConnectives && focused_derivable(s)) return std::make_pair(s, pos);
  }
  return std::nullopt;
}

}  // namespace sknmill::testing
