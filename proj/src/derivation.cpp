#include "sknmill/derivation.hpp"

#include <algorithm>
#include <array>

#include "sknmill/sexpr.hpp"

namespace sknmill {

namespace {

constexpr std::array<std::string_view, 10> kRuleSymbols = {"ax", "pass", "lL", "lR", "uL",
                                                           "tL", "uR",   "tR", "scut", "ccut"};

Context slice(const Context& g, std::size_t from, std::size_t to) {
  return Context(g.begin() + static_cast<std::ptrdiff_t>(from),
                 g.begin() + static_cast<std::ptrdiff_t>(to));
}

Context concat(const Context& a, const Context& b) {
  Context out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

[[noreturn]] void fail(Rule r, const std::string& why) {
  throw RuleError(std::string(rule_symbol(r)) + ": " + why);
}

}  // namespace

std::string_view rule_symbol(Rule r) { return kRuleSymbols[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_symbol(std::string_view s) {
  for (std::size_t i = 0; i < kRuleSymbols.size(); ++i) {
    if (kRuleSymbols[i] == s) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

Derivation Derivation::make(Rule rule, Sequent conclusion, std::vector<Derivation> premises,
                            std::size_t split, std::size_t cut_length,
                            std::optional<Formula> cut_formula) {
  auto node = std::make_shared<Node>(Node{rule, std::move(conclusion), std::move(premises), split,
                                          cut_length, std::move(cut_formula)});
  std::size_t h = hash_combine(static_cast<std::size_t>(rule) + 1, hash_value(node->conclusion));
  h = hash_combine(h, split * 31 + cut_length);
  node->cut_free = rule != Rule::Scut && rule != Rule::Ccut;
  for (const auto& p : node->premises) {
    node->cut_free = node->cut_free && p.is_cut_free();
    node->height = std::max(node->height, p.height() + 1);
    node->size += p.size();
    h = hash_combine(h, p.hash());
  }
  node->hash = h;
  return Derivation(std::move(node));
}

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.rule() != b.rule() || a.split() != b.split() ||
      a.cut_length() != b.cut_length() || a.size() != b.size()) {
    return false;
  }
  if (a.cut_formula() != b.cut_formula() || !(a.conclusion() == b.conclusion())) return false;
  const auto pa = a.premises();
  const auto pb = b.premises();
  return std::equal(pa.begin(), pa.end(), pb.begin(), pb.end());
}

// ---------------------------------------------------------------------------
// Checked constructors

Derivation ax(const Formula& a) {
  return Derivation::make(Rule::Ax, Sequent{a, {}, a}, {});
}

Derivation pass(Derivation d) {
  const Sequent& s = d.conclusion();
  if (!s.stoup) fail(Rule::Pass, "premise stoup must be non-empty");
  Context ctx;
  ctx.reserve(s.context.size() + 1);
  ctx.push_back(*s.stoup);
  ctx.insert(ctx.end(), s.context.begin(), s.context.end());
  Sequent c{std::nullopt, std::move(ctx), s.succedent};
  return Derivation::make(Rule::Pass, std::move(c), {std::move(d)});
}

Derivation lolli_l(Derivation f, Derivation g) {
  const Sequent& sf = f.conclusion();
  const Sequent& sg = g.conclusion();
  if (sf.stoup) fail(Rule::LolliL, "first premise stoup must be empty");
  if (!sg.stoup) fail(Rule::LolliL, "second premise stoup must be non-empty");
  Sequent c{Formula::lolli(sf.succedent, *sg.stoup), concat(sf.context, sg.context),
            sg.succedent};
  const std::size_t k = sf.context.size();
  return Derivation::make(Rule::LolliL, std::move(c), {std::move(f), std::move(g)}, k);
}

Derivation lolli_r(Derivation d) {
  const Sequent& s = d.conclusion();
  if (s.context.empty()) fail(Rule::LolliR, "premise context must be non-empty");
  Context ctx(s.context.begin(), s.context.end() - 1);
  Sequent c{s.stoup, std::move(ctx), Formula::lolli(s.context.back(), s.succedent)};
  return Derivation::make(Rule::LolliR, std::move(c), {std::move(d)});
}

Derivation unit_l(Derivation d) {
  const Sequent& s = d.conclusion();
  if (s.stoup) fail(Rule::UnitL, "premise stoup must be empty");
  Sequent c{Formula::unit(), s.context, s.succedent};
  return Derivation::make(Rule::UnitL, std::move(c), {std::move(d)});
}

Derivation tensor_l(Derivation d) {
  const Sequent& s = d.conclusion();
  if (!s.stoup) fail(Rule::TensorL, "premise stoup must be non-empty");
  if (s.context.empty()) fail(Rule::TensorL, "premise context must be non-empty");
  Sequent c{Formula::tensor(*s.stoup, s.context.front()),
            Context(s.context.begin() + 1, s.context.end()), s.succedent};
  return Derivation::make(Rule::TensorL, std::move(c), {std::move(d)});
}

Derivation unit_r() {
  return Derivation::make(Rule::UnitR, Sequent{std::nullopt, {}, Formula::unit()}, {});
}

Derivation tensor_r(Derivation f, Derivation g) {
  const Sequent& sf = f.conclusion();
  const Sequent& sg = g.conclusion();
  if (sg.stoup) fail(Rule::TensorR, "second premise stoup must be empty");
  Sequent c{sf.stoup, concat(sf.context, sg.context),
            Formula::tensor(sf.succedent, sg.succedent)};
  const std::size_t k = sf.context.size();
  return Derivation::make(Rule::TensorR, std::move(c), {std::move(f), std::move(g)}, k);
}

Derivation scut_node(Derivation f, Derivation g) {
  const Sequent& sf = f.conclusion();
  const Sequent& sg = g.conclusion();
  if (!sg.stoup || !(*sg.stoup == sf.succedent)) {
    fail(Rule::Scut, "stoup of the right premise must equal the cut formula " +
                         to_string(sf.succedent));
  }
  Sequent c{sf.stoup, concat(sf.context, sg.context), sg.succedent};
  const std::size_t k = sf.context.size();
  Formula cut = sf.succedent;
  return Derivation::make(Rule::Scut, std::move(c), {std::move(f), std::move(g)}, k, 0,
                          std::move(cut));
}

Derivation ccut_node(Derivation f, Derivation g, std::size_t position) {
  const Sequent& sf = f.conclusion();
  const Sequent& sg = g.conclusion();
  if (sf.stoup) fail(Rule::Ccut, "left premise stoup must be empty");
  if (position >= sg.context.size() || !(sg.context[position] == sf.succedent)) {
    fail(Rule::Ccut, "context of the right premise must hold " + to_string(sf.succedent) +
                         " at position " + std::to_string(position));
  }
  Context ctx = slice(sg.context, 0, position);
  ctx.insert(ctx.end(), sf.context.begin(), sf.context.end());
  ctx.insert(ctx.end(), sg.context.begin() + static_cast<std::ptrdiff_t>(position) + 1,
             sg.context.end());
  Sequent c{sg.stoup, std::move(ctx), sg.succedent};
  const std::size_t kg = sf.context.size();
  Formula cut = sf.succedent;
  return Derivation::make(Rule::Ccut, std::move(c), {std::move(f), std::move(g)}, position, kg,
                          std::move(cut));
}

// ---------------------------------------------------------------------------
// Validation

std::optional<std::vector<Sequent>> premise_sequents(Rule rule, const Sequent& c,
                                                     std::size_t split, std::size_t cut_length,
                                                     const std::optional<Formula>& cut_formula) {
  const std::size_t n = c.context.size();
  switch (rule) {
    case Rule::Ax:
      if (c.stoup && c.context.empty() && *c.stoup == c.succedent) {
        return std::vector<Sequent>{};
      }
      return std::nullopt;
    case Rule::Pass:
      if (c.stoup || c.context.empty()) return std::nullopt;
      return std::vector<Sequent>{Sequent{c.context.front(), slice(c.context, 1, n), c.succedent}};
    case Rule::LolliL:
      if (!c.stoup || !c.stoup->is_lolli() || split > n) return std::nullopt;
      return std::vector<Sequent>{
          Sequent{std::nullopt, slice(c.context, 0, split), c.stoup->left()},
          Sequent{c.stoup->right(), slice(c.context, split, n), c.succedent}};
    case Rule::LolliR: {
      if (!c.succedent.is_lolli()) return std::nullopt;
      Context ctx = c.context;
      ctx.push_back(c.succedent.left());
      return std::vector<Sequent>{Sequent{c.stoup, std::move(ctx), c.succedent.right()}};
    }
    case Rule::UnitL:
      if (!c.stoup || !c.stoup->is_unit()) return std::nullopt;
      return std::vector<Sequent>{Sequent{std::nullopt, c.context, c.succedent}};
    case Rule::TensorL: {
      if (!c.stoup || !c.stoup->is_tensor()) return std::nullopt;
      Context ctx;
      ctx.reserve(n + 1);
      ctx.push_back(c.stoup->right());
      ctx.insert(ctx.end(), c.context.begin(), c.context.end());
      return std::vector<Sequent>{Sequent{c.stoup->left(), std::move(ctx), c.succedent}};
    }
    case Rule::UnitR:
      if (c.stoup || !c.context.empty() || !c.succedent.is_unit()) return std::nullopt;
      return std::vector<Sequent>{};
    case Rule::TensorR:
      if (!c.succedent.is_tensor() || split > n) return std::nullopt;
      return std::vector<Sequent>{
          Sequent{c.stoup, slice(c.context, 0, split), c.succedent.left()},
          Sequent{std::nullopt, slice(c.context, split, n), c.succedent.right()}};
    case Rule::Scut:
      if (!cut_formula || split > n) return std::nullopt;
      return std::vector<Sequent>{Sequent{c.stoup, slice(c.context, 0, split), *cut_formula},
                                  Sequent{*cut_formula, slice(c.context, split, n), c.succedent}};
    case Rule::Ccut: {
      if (!cut_formula || split + cut_length > n) return std::nullopt;
      Context ctx = slice(c.context, 0, split);
      ctx.push_back(*cut_formula);
      ctx.insert(ctx.end(), c.context.begin() + static_cast<std::ptrdiff_t>(split + cut_length),
                 c.context.end());
      return std::vector<Sequent>{
          Sequent{std::nullopt, slice(c.context, split, split + cut_length), *cut_formula},
          Sequent{c.stoup, std::move(ctx), c.succedent}};
    }
  }
  return std::nullopt;
}

namespace {

std::optional<std::string> check_at(const Derivation& d, const Sequent& expected,
                                    const std::string& path) {
  const auto where = [&] {
    return "node " + (path.empty() ? std::string("root") : path) + " (" +
           std::string(rule_symbol(d.rule())) + ")";
  };
  if (!(d.conclusion() == expected)) {
    return where() + ": concludes " + to_string(d.conclusion()) + " but " + to_string(expected) +
           " is required";
  }
  auto premises = premise_sequents(d.rule(), expected, d.split(), d.cut_length(), d.cut_formula());
  if (!premises) {
    return where() + ": rule does not apply to " + to_string(expected);
  }
  if (premises->size() != d.premises().size()) {
    return where() + ": expected " + std::to_string(premises->size()) + " premises, found " +
           std::to_string(d.premises().size());
  }
  for (std::size_t i = 0; i < premises->size(); ++i) {
    const std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (auto err = check_at(d.premise(i), (*premises)[i], sub)) return err;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_derivation(const Derivation& d) {
  return check_at(d, d.conclusion(), "");
}

bool validate(const Derivation& d) { return !check_derivation(d).has_value(); }

// ---------------------------------------------------------------------------
// Text format

namespace {

SExpr formula_atom(const Formula& f) { return SExpr::string(to_string(f)); }

SExpr to_sexpr_tree(const Derivation& d) {
  std::vector<SExpr> items{SExpr::symbol(std::string(rule_symbol(d.rule())))};
  switch (d.rule()) {
    case Rule::LolliL:
    case Rule::TensorR:
      items.push_back(SExpr::symbol(std::to_string(d.split())));
      break;
    case Rule::Scut:
      items.push_back(SExpr::symbol(std::to_string(d.split())));
      items.push_back(formula_atom(*d.cut_formula()));
      break;
    case Rule::Ccut:
      items.push_back(SExpr::symbol(std::to_string(d.split())));
      items.push_back(SExpr::symbol(std::to_string(d.cut_length())));
      items.push_back(formula_atom(*d.cut_formula()));
      break;
    default:
      break;
  }
  for (const auto& p : d.premises()) {
    items.push_back(to_sexpr_tree(p));
  }
  return SExpr::list(std::move(items));
}

Derivation build(const SExpr& e, const Sequent& expected) {
  if (!e.is_list() || e.head().empty()) {
    throw ParseError("expected a rule application", e.position);
  }
  const auto rule = rule_from_symbol(e.head());
  if (!rule) {
    throw ParseError("unknown rule '" + std::string(e.head()) + "'", e.position);
  }
  std::size_t arg = 1;
  std::size_t split = 0;
  std::size_t cut_length = 0;
  std::optional<Formula> cut;
  const auto need = [&](std::size_t count) {
    if (e.items.size() < arg + count) {
      throw ParseError("missing arguments for " + std::string(e.head()), e.position);
    }
  };
  switch (*rule) {
    case Rule::LolliL:
    case Rule::TensorR:
      need(1);
      split = sexpr_index(e.items[arg++]);
      break;
    case Rule::Scut:
      need(2);
      split = sexpr_index(e.items[arg++]);
      cut = parse_formula(e.items[arg++].text);
      break;
    case Rule::Ccut:
      need(3);
      split = sexpr_index(e.items[arg++]);
      cut_length = sexpr_index(e.items[arg++]);
      cut = parse_formula(e.items[arg++].text);
      break;
    default:
      break;
  }
  auto premises = premise_sequents(*rule, expected, split, cut_length, cut);
  if (!premises) {
    throw ParseError(std::string(e.head()) + " does not apply to " + to_string(expected),
                     e.position);
  }
  if (e.items.size() - arg != premises->size()) {
    throw ParseError(std::string(e.head()) + " expects " + std::to_string(premises->size()) +
                         " premises",
                     e.position);
  }
  std::vector<Derivation> subs;
  subs.reserve(premises->size());
  for (std::size_t i = 0; i < premises->size(); ++i) {
    subs.push_back(build(e.items[arg + i], (*premises)[i]));
  }
  return Derivation::make(*rule, expected, std::move(subs), split, cut_length, std::move(cut));
}

}  // namespace

std::string to_sexpr(const Derivation& d) { return to_string(to_sexpr_tree(d)); }

std::string to_text(const Derivation& d) {
  return to_string(d.conclusion()) + "\n" + to_sexpr(d) + "\n";
}

Derivation derivation_from_sexpr(std::string_view sexpr, const Sequent& end) {
  return build(parse_sexpr(sexpr), end);
}

Derivation parse_derivation(std::string_view text) {
  const auto nl = text.find('\n');
  if (nl == std::string_view::npos) {
    throw ParseError("expected a sequent line followed by a derivation", text.size());
  }
  const Sequent end = parse_sequent(text.substr(0, nl));
  return derivation_from_sexpr(text.substr(nl + 1), end);
}

}  // namespace sknmill
