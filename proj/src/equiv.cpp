#include "sknmill/equiv.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sknmill/cut.hpp"
#include "sknmill/enumerate.hpp"
#include "sknmill/focused.hpp"

namespace sknmill {

namespace {

constexpr std::array<std::string_view, kGeneratorCount> kGeneratorNames = {
    "EtaUnit",     "EtaTensor",  "EtaLolli",    "TensorRPass",   "TensorRUnitL", "TensorRTensorL",
    "TensorRLolliL", "PassLolliR", "UnitLLolliR", "TensorLLolliR", "LolliLLolliR"};

bool matches(const Derivation& d, Generator g) {
  const auto first_is = [&](Rule r) { return d.premise(0).rule() == r; };
  switch (g) {
    case Generator::EtaUnit:
      return d.rule() == Rule::Ax && d.conclusion().succedent.is_unit();
    case Generator::EtaTensor:
      return d.rule() == Rule::Ax && d.conclusion().succedent.is_tensor();
    case Generator::EtaLolli:
      return d.rule() == Rule::Ax && d.conclusion().succedent.is_lolli();
    case Generator::TensorRPass:
      return d.rule() == Rule::TensorR && first_is(Rule::Pass);
    case Generator::TensorRUnitL:
      return d.rule() == Rule::TensorR && first_is(Rule::UnitL);
    case Generator::TensorRTensorL:
      return d.rule() == Rule::TensorR && first_is(Rule::TensorL);
    case Generator::TensorRLolliL:
      return d.rule() == Rule::TensorR && first_is(Rule::LolliL);
    case Generator::PassLolliR:
      return d.rule() == Rule::Pass && first_is(Rule::LolliR);
    case Generator::UnitLLolliR:
      return d.rule() == Rule::UnitL && first_is(Rule::LolliR);
    case Generator::TensorLLolliR:
      return d.rule() == Rule::TensorL && first_is(Rule::LolliR);
    case Generator::LolliLLolliR:
      return d.rule() == Rule::LolliL && d.premise(1).rule() == Rule::LolliR;
  }
  return false;
}

void collect_steps(const Derivation& d, std::vector<std::size_t>& path,
                   std::vector<RewriteStep>& out) {
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    path.push_back(i);
    collect_steps(d.premise(i), path, out);
    path.pop_back();
  }
  for (Generator g : root_matches(d)) out.push_back(RewriteStep{path, g});
}

Derivation replace_at(const Derivation& d, std::span<const std::size_t> path, Generator g) {
  if (path.empty()) return rewrite_root(d, g);
  const std::size_t i = path.front();
  if (i >= d.premises().size()) throw RuleError("rewrite_step: path leaves the derivation");
  std::vector<Derivation> premises(d.premises().begin(), d.premises().end());
  premises[i] = replace_at(premises[i], path.subspan(1), g);
  return Derivation::make(d.rule(), d.conclusion(), std::move(premises), d.split(), d.cut_length(),
                          d.cut_formula());
}

// Leftmost-innermost: first redex in post-order.
bool find_innermost(const Derivation& d, std::vector<std::size_t>& path, RewriteStep& out) {
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    path.push_back(i);
    if (find_innermost(d.premise(i), path, out)) return true;
    path.pop_back();
  }
  const auto m = root_matches(d);
  if (m.empty()) return false;
  out = RewriteStep{path, m.front()};
  return true;
}

// Rightmost-outermost: first redex in pre-order with premises right to left.
bool find_outermost(const Derivation& d, std::vector<std::size_t>& path, RewriteStep& out) {
  const auto m = root_matches(d);
  if (!m.empty()) {
    out = RewriteStep{path, m.front()};
    return true;
  }
  for (std::size_t i = d.premises().size(); i-- > 0;) {
    path.push_back(i);
    if (find_outermost(d.premise(i), path, out)) return true;
    path.pop_back();
  }
  return false;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

struct RewriteGraph {
  std::vector<Derivation> nodes;
  std::vector<std::vector<std::size_t>> edges;
};

RewriteGraph build_graph(const Sequent& s, Budget* budget) {
  RewriteGraph g;
  g.nodes = enumerate_all(s, budget);
  std::unordered_map<Derivation, std::size_t, DerivationHash> index;
  index.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);
  g.edges.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& r : one_step_reducts(g.nodes[i])) {
      if (budget) budget->spend();
      const auto it = index.find(r);
      if (it == index.end()) {
        throw std::logic_error("rewrite left the enumerated derivation set");
      }
      g.edges[i].push_back(it->second);
    }
  }
  return g;
}

}  // namespace

std::string_view generator_name(Generator g) {
  return kGeneratorNames[static_cast<std::size_t>(g)];
}

std::vector<Generator> root_matches(const Derivation& d) {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < kGeneratorCount; ++i) {
    const auto g = static_cast<Generator>(i);
    if (matches(d, g)) out.push_back(g);
  }
  return out;
}

Derivation rewrite_root(const Derivation& d, Generator g) {
  if (!matches(d, g)) {
    throw RuleError("generator " + std::string(generator_name(g)) + " does not match at " +
                    std::string(rule_symbol(d.rule())));
  }
  const Formula& c = d.conclusion().succedent;
  switch (g) {
    case Generator::EtaUnit:
      return unit_l(unit_r());
    case Generator::EtaTensor:
      return tensor_l(tensor_r(ax(c.left()), pass(ax(c.right()))));
    case Generator::EtaLolli:
      return lolli_r(lolli_l(pass(ax(c.left())), ax(c.right())));
    case Generator::TensorRPass:
      return pass(tensor_r(d.premise(0).premise(0), d.premise(1)));
    case Generator::TensorRUnitL:
      return unit_l(tensor_r(d.premise(0).premise(0), d.premise(1)));
    case Generator::TensorRTensorL:
      return tensor_l(tensor_r(d.premise(0).premise(0), d.premise(1)));
    case Generator::TensorRLolliL: {
      const Derivation& l = d.premise(0);
      return lolli_l(l.premise(0), tensor_r(l.premise(1), d.premise(1)));
    }
    case Generator::PassLolliR:
      return lolli_r(pass(d.premise(0).premise(0)));
    case Generator::UnitLLolliR:
      return lolli_r(unit_l(d.premise(0).premise(0)));
    case Generator::TensorLLolliR:
      return lolli_r(tensor_l(d.premise(0).premise(0)));
    case Generator::LolliLLolliR:
      return lolli_r(lolli_l(d.premise(0), d.premise(1).premise(0)));
  }
  throw RuleError("unknown generator");
}

std::vector<RewriteStep> applicable_steps(const Derivation& d) {
  std::vector<RewriteStep> out;
  std::vector<std::size_t> path;
  collect_steps(d, path, out);
  return out;
}

Derivation rewrite_step(const Derivation& d, const RewriteStep& step) {
  return replace_at(d, step.path, step.generator);
}

std::vector<Derivation> one_step_reducts(const Derivation& d) {
  std::vector<Derivation> out;
  for (const auto& step : applicable_steps(d)) out.push_back(rewrite_step(d, step));
  return out;
}

Derivation normalize(const Derivation& d, Strategy strategy, Budget* budget) {
  Derivation cur = eliminate_cuts(d);
  for (;;) {
    RewriteStep step{{}, Generator::EtaUnit};
    std::vector<std::size_t> path;
    const bool found = strategy == Strategy::LeftmostInnermost ? find_innermost(cur, path, step)
                                                               : find_outermost(cur, path, step);
    if (!found) return cur;
    if (budget) budget->spend();
    cur = rewrite_step(cur, step);
  }
}

bool equivalent(const Derivation& d1, const Derivation& d2) {
  if (!(d1.conclusion() == d2.conclusion())) {
    throw RuleError("equivalent: end sequents differ: " + to_string(d1.conclusion()) + " vs " +
                    to_string(d2.conclusion()));
  }
  return focus(d1) == focus(d2);
}

Derivation canonical(const Derivation& d) { return emb(focus(d)); }

std::vector<Derivation> equivalence_class(const Derivation& d, std::size_t ceiling,
                                          Budget* budget) {
  const Sequent& s = d.conclusion();
  if (connectives(s) > ceiling) {
    throw std::length_error("equivalence_class: sequent has more than " +
                            std::to_string(ceiling) + " connectives");
  }
  const FocusedDerivation target = focus(d);
  std::vector<Derivation> out;
  for (auto& e : enumerate_all(s, budget)) {
    if (focus(e) == target) out.push_back(std::move(e));
  }
  return out;
}

GeneratorClasses generator_classes(const Sequent& s, Budget* budget) {
  RewriteGraph g = build_graph(s, budget);
  UnionFind uf(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j : g.edges[i]) uf.unite(i, j);
  }
  GeneratorClasses out;
  out.class_of.resize(g.nodes.size());
  std::unordered_map<std::size_t, std::size_t> numbering;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto [it, fresh] = numbering.emplace(uf.find(i), numbering.size());
    out.class_of[i] = it->second;
  }
  out.class_count = numbering.size();
  out.derivations = std::move(g.nodes);
  return out;
}

RewriteAnalysis analyze_rewriting(const Sequent& s, Budget* budget) {
  RewriteGraph g = build_graph(s, budget);
  const std::size_t n = g.nodes.size();
  RewriteAnalysis out;
  out.derivations = n;
  for (const auto& e : g.edges) out.edges += e.size();

  // Cycle detection by iterative three-colour DFS.
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> colour(n, White);
  std::vector<std::size_t> order;  // reverse topological: sinks first
  order.reserve(n);
  for (std::size_t root = 0; root < n && out.terminating; ++root) {
    if (colour[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = Grey;
    while (!stack.empty() && out.terminating) {
      auto& [v, next] = stack.back();
      if (next < g.edges[v].size()) {
        const std::size_t w = g.edges[v][next++];
        if (colour[w] == Grey) {
          out.terminating = false;
        } else if (colour[w] == White) {
          colour[w] = Grey;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[v] = Black;
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  if (!out.terminating) return out;

  // Reachable normal forms, as sorted index sets, sinks first.
  std::vector<std::vector<std::size_t>> nf(n);
  for (std::size_t v : order) {
    if (g.edges[v].empty()) {
      nf[v] = {v};
      continue;
    }
    std::vector<std::size_t> acc;
    for (std::size_t w : g.edges[v]) {
      std::vector<std::size_t> merged;
      std::set_union(acc.begin(), acc.end(), nf[w].begin(), nf[w].end(),
                     std::back_inserter(merged));
      acc = std::move(merged);
    }
    nf[v] = std::move(acc);
  }

  for (std::size_t v = 0; v < n; ++v) {
    const auto& e = g.edges[v];
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        if (e[a] == e[b]) continue;
        ++out.peaks;
        std::vector<std::size_t> common;
        std::set_intersection(nf[e[a]].begin(), nf[e[a]].end(), nf[e[b]].begin(),
                              nf[e[b]].end(), std::back_inserter(common));
        if (common.empty()) {
          if (out.unjoinable_peaks++ == 0) {
            out.peak_source = g.nodes[v];
            out.peak_left = g.nodes[e[a]];
            out.peak_right = g.nodes[e[b]];
          }
        }
      }
    }
    const Derivation inner = normalize(g.nodes[v], Strategy::LeftmostInnermost, budget);
    const Derivation outer = normalize(g.nodes[v], Strategy::RightmostOutermost, budget);
    if (!(inner == outer) && out.strategy_disagreements++ == 0) {
      out.strategy_witness = g.nodes[v];
    }
    if (!(inner == canonical(g.nodes[v]))) ++out.focus_disagreements;
  }
  return out;
}

}  // namespace sknmill
