#include "sknmill/focused.hpp"

#include <algorithm>
#include <array>

#include "sknmill/sexpr.hpp"

namespace sknmill {

namespace {

constexpr std::array<std::string_view, 11> kFocusedSymbols = {
    "lR", "li2ri", "uL", "tL", "p2li", "pass", "f2p", "ax", "uR", "tR", "lL"};
constexpr std::array<std::string_view, 4> kPhaseNames = {"RI", "LI", "P", "F"};

TaggedContext tagged_slice(const TaggedContext& g, std::size_t from, std::size_t to) {
  return TaggedContext(g.begin() + static_cast<std::ptrdiff_t>(from),
                       g.begin() + static_cast<std::ptrdiff_t>(to));
}

FocusedSequent with_phase(const FocusedSequent& s, Phase p) {
  FocusedSequent out = s;
  out.phase = p;
  return out;
}

}  // namespace

std::string_view phase_name(Phase p) { return kPhaseNames[static_cast<std::size_t>(p)]; }

std::string_view rule_symbol(FocusedRule r) {
  return kFocusedSymbols[static_cast<std::size_t>(r)];
}

std::optional<FocusedRule> focused_rule_from_symbol(std::string_view s) {
  for (std::size_t i = 0; i < kFocusedSymbols.size(); ++i) {
    if (kFocusedSymbols[i] == s) return static_cast<FocusedRule>(i);
  }
  return std::nullopt;
}

std::size_t hash_value(const FocusedSequent& s) {
  std::size_t h = hash_value(s.stoup);
  for (const auto& e : s.context) {
    h = hash_combine(h, e.formula.hash() * 2 + (e.tagged ? 1 : 0));
  }
  h = hash_combine(h, s.context.size());
  h = hash_combine(h, s.succedent.hash());
  return hash_combine(h, static_cast<std::size_t>(s.phase) * 2 + (s.tagged ? 1 : 0));
}

Context strip(std::span<const TaggedFormula> ctx) {
  Context out;
  out.reserve(ctx.size());
  for (const auto& e : ctx) out.push_back(e.formula);
  return out;
}

TaggedContext untagged(std::span<const Formula> ctx) {
  TaggedContext out;
  out.reserve(ctx.size());
  for (const auto& f : ctx) out.push_back(TaggedFormula{f, false});
  return out;
}

FocusedSequent entry_sequent(const Sequent& s) {
  return FocusedSequent{s.stoup, untagged(s.context), s.succedent, Phase::RI, false};
}

Sequent plain(const FocusedSequent& s) { return Sequent{s.stoup, strip(s.context), s.succedent}; }

std::string to_string(const FocusedSequent& s) {
  std::string out = to_string(s.stoup) + " |";
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    out += i == 0 ? " " : ", ";
    if (s.context[i].tagged) out += '@';
    out += to_string(s.context[i].formula);
  }
  out += " |-";
  out += phase_name(s.phase);
  if (s.tagged) out += '*';
  out += ' ';
  out += to_string(s.succedent);
  return out;
}

// ---------------------------------------------------------------------------

FocusedDerivation FocusedDerivation::make(FocusedRule rule, FocusedSequent conclusion,
                                          std::vector<FocusedDerivation> premises,
                                          std::size_t split) {
  auto node = std::make_shared<Node>(Node{rule, std::move(conclusion), std::move(premises)});
  node->split = split;
  std::size_t h = hash_combine(static_cast<std::size_t>(rule) + 101, hash_value(node->conclusion));
  h = hash_combine(h, split);
  for (const auto& p : node->premises) {
    node->size += p.size();
    h = hash_combine(h, p.hash());
  }
  node->hash = h;
  return FocusedDerivation(std::move(node));
}

bool operator==(const FocusedDerivation& a, const FocusedDerivation& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.rule() != b.rule() || a.split() != b.split() ||
      a.size() != b.size() || !(a.conclusion() == b.conclusion())) {
    return false;
  }
  const auto pa = a.premises();
  const auto pb = b.premises();
  return std::equal(pa.begin(), pa.end(), pb.begin(), pb.end());
}

// ---------------------------------------------------------------------------
// Rule schemata

std::optional<std::vector<FocusedSequent>> focused_premise_sequents(FocusedRule rule,
                                                                    const FocusedSequent& c,
                                                                    std::size_t split,
                                                                    Calculus calculus) {
  const bool tags = calculus == Calculus::Tagged;
  const std::size_t n = c.context.size();
  const Formula& succ = c.succedent;
  using V = std::vector<FocusedSequent>;
  switch (rule) {
    case FocusedRule::LolliR: {
      if (c.phase != Phase::RI || !succ.is_lolli()) return std::nullopt;
      FocusedSequent p = c;
      p.context.push_back(TaggedFormula{succ.left(), tags && c.tagged});
      p.succedent = succ.right();
      return V{std::move(p)};
    }
    case FocusedRule::LI2RI:
      if (c.phase != Phase::RI || succ.is_lolli()) return std::nullopt;
      return V{with_phase(c, Phase::LI)};
    case FocusedRule::UnitL:
      if (c.phase != Phase::LI || !c.stoup || !c.stoup->is_unit()) return std::nullopt;
      if (tags && c.tagged) return std::nullopt;
      return V{FocusedSequent{std::nullopt, c.context, succ, Phase::LI, false}};
    case FocusedRule::TensorL: {
      if (c.phase != Phase::LI || !c.stoup || !c.stoup->is_tensor()) return std::nullopt;
      if (tags && c.tagged) return std::nullopt;
      TaggedContext ctx{TaggedFormula{c.stoup->right(), false}};
      ctx.insert(ctx.end(), c.context.begin(), c.context.end());
      return V{FocusedSequent{c.stoup->left(), std::move(ctx), succ, Phase::LI, false}};
    }
    case FocusedRule::P2LI:
      if (c.phase != Phase::LI || !is_negative_stoup(c.stoup)) return std::nullopt;
      return V{with_phase(c, Phase::P)};
    case FocusedRule::Pass:
      if (c.phase != Phase::P || c.stoup || n == 0) return std::nullopt;
      if (tags && c.tagged && !c.context.front().tagged) return std::nullopt;
      return V{FocusedSequent{c.context.front().formula, untagged(strip(tagged_slice(c.context, 1, n))),
                              succ, Phase::LI, false}};
    case FocusedRule::F2P:
      if (c.phase != Phase::P) return std::nullopt;
      return V{with_phase(c, Phase::F)};
    case FocusedRule::Ax:
      if (c.phase != Phase::F || !c.stoup || !c.stoup->is_atom() || n != 0 ||
          !(*c.stoup == succ)) {
        return std::nullopt;
      }
      return V{};
    case FocusedRule::UnitR:
      if (c.phase != Phase::F || c.stoup || n != 0 || !succ.is_unit()) return std::nullopt;
      return V{};
    case FocusedRule::TensorR:
      if (c.phase != Phase::F || !succ.is_tensor() || split > n) return std::nullopt;
      return V{FocusedSequent{c.stoup, untagged(strip(tagged_slice(c.context, 0, split))),
                              succ.left(), Phase::RI, tags},
               FocusedSequent{std::nullopt, untagged(strip(tagged_slice(c.context, split, n))),
                              succ.right(), Phase::RI, false}};
    case FocusedRule::LolliL: {
      if (c.phase != Phase::F || !c.stoup || !c.stoup->is_lolli() || split > n) {
        return std::nullopt;
      }
      if (tags && c.tagged) {
        const bool any = std::any_of(c.context.begin(),
                                     c.context.begin() + static_cast<std::ptrdiff_t>(split),
                                     [](const TaggedFormula& e) { return e.tagged; });
        if (!any) return std::nullopt;
      }
      return V{FocusedSequent{std::nullopt, untagged(strip(tagged_slice(c.context, 0, split))),
                              c.stoup->left(), Phase::RI, false},
               FocusedSequent{c.stoup->right(), untagged(strip(tagged_slice(c.context, split, n))),
                              succ, Phase::LI, false}};
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_focused_sequent(const FocusedSequent& s, Calculus calculus) {
  if (s.phase != Phase::RI && s.succedent.is_lolli()) {
    return "succedent of a " + std::string(phase_name(s.phase)) + " sequent must be positive";
  }
  if ((s.phase == Phase::P || s.phase == Phase::F) && !is_negative_stoup(s.stoup)) {
    return "stoup of a " + std::string(phase_name(s.phase)) + " sequent must be negative";
  }
  bool seen_tagged = false;
  for (const auto& e : s.context) {
    if (e.tagged) {
      if (calculus == Calculus::Naive) return "naive sequents carry no tags";
      if (!s.tagged) return "untagged sequent with a tagged context formula";
      seen_tagged = true;
    } else if (seen_tagged) {
      return "untagged context formula after a tagged one";
    }
  }
  if (calculus == Calculus::Naive && s.tagged) return "naive sequents carry no tags";
  return std::nullopt;
}

namespace {

std::optional<std::string> check_focused_at(const FocusedDerivation& d,
                                            const FocusedSequent& expected, Calculus calculus,
                                            const std::string& path) {
  const auto where = [&] {
    return "node " + (path.empty() ? std::string("root") : path) + " (" +
           std::string(rule_symbol(d.rule())) + ")";
  };
  if (!(d.conclusion() == expected)) {
    return where() + ": concludes " + to_string(d.conclusion()) + " but " + to_string(expected) +
           " is required";
  }
  if (auto err = check_focused_sequent(expected, calculus)) {
    return where() + ": " + *err;
  }
  auto premises = focused_premise_sequents(d.rule(), expected, d.split(), calculus);
  if (!premises) {
    return where() + ": rule does not apply to " + to_string(expected);
  }
  if (premises->size() != d.premises().size()) {
    return where() + ": wrong number of premises";
  }
  for (std::size_t i = 0; i < premises->size(); ++i) {
    const std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (auto err = check_focused_at(d.premise(i), (*premises)[i], calculus, sub)) return err;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_focused(const FocusedDerivation& d, Calculus calculus) {
  return check_focused_at(d, d.conclusion(), calculus, "");
}

bool validate_focused(const FocusedDerivation& d, Calculus calculus) {
  return !check_focused(d, calculus).has_value();
}

// ---------------------------------------------------------------------------
// Text format

namespace {

SExpr focused_tree(const FocusedDerivation& d) {
  std::vector<SExpr> items{SExpr::symbol(std::string(rule_symbol(d.rule())))};
  if (d.rule() == FocusedRule::TensorR || d.rule() == FocusedRule::LolliL) {
    items.push_back(SExpr::symbol(std::to_string(d.split())));
  }
  for (const auto& p : d.premises()) items.push_back(focused_tree(p));
  return SExpr::list(std::move(items));
}

FocusedDerivation build_focused(const SExpr& e, const FocusedSequent& expected,
                                Calculus calculus) {
  if (!e.is_list() || e.head().empty()) {
    throw ParseError("expected a rule application", e.position);
  }
  const auto rule = focused_rule_from_symbol(e.head());
  if (!rule) throw ParseError("unknown rule '" + std::string(e.head()) + "'", e.position);
  std::size_t arg = 1;
  std::size_t split = 0;
  if (*rule == FocusedRule::TensorR || *rule == FocusedRule::LolliL) {
    if (e.items.size() < 2) throw ParseError("missing split", e.position);
    split = sexpr_index(e.items[arg++]);
  }
  if (auto err = check_focused_sequent(expected, calculus)) {
    throw ParseError(*err + " in " + to_string(expected), e.position);
  }
  auto premises = focused_premise_sequents(*rule, expected, split, calculus);
  if (!premises) {
    throw ParseError(std::string(e.head()) + " does not apply to " + to_string(expected),
                     e.position);
  }
  if (e.items.size() - arg != premises->size()) {
    throw ParseError(std::string(e.head()) + " expects " + std::to_string(premises->size()) +
                         " premises",
                     e.position);
  }
  std::vector<FocusedDerivation> subs;
  for (std::size_t i = 0; i < premises->size(); ++i) {
    subs.push_back(build_focused(e.items[arg + i], (*premises)[i], calculus));
  }
  return FocusedDerivation::make(*rule, expected, std::move(subs), split);
}

}  // namespace

std::string to_sexpr(const FocusedDerivation& d) { return to_string(focused_tree(d)); }

std::string to_text(const FocusedDerivation& d, Calculus calculus) {
  const FocusedSequent& s = d.conclusion();
  std::string out = "[";
  out += phase_name(s.phase);
  if (s.tagged) out += '*';
  if (calculus == Calculus::Naive) out += " naive";
  out += "] ";
  out += to_string(s.stoup) + " |";
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    out += i == 0 ? " " : ", ";
    if (s.context[i].tagged) out += '@';
    out += to_string(s.context[i].formula);
  }
  out += " |- " + to_string(s.succedent) + "\n" + to_sexpr(d) + "\n";
  return out;
}

bool looks_focused(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '[';
}

ParsedFocused parse_focused(std::string_view text) {
  const auto open = text.find('[');
  const auto close = text.find(']');
  const auto nl = text.find('\n');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      nl == std::string_view::npos || nl < close) {
    throw ParseError("expected a focused header line '[PHASE] sequent'", 0);
  }
  std::string_view tag = text.substr(open + 1, close - open - 1);
  Calculus calculus = Calculus::Tagged;
  if (const auto sp = tag.find(' '); sp != std::string_view::npos) {
    if (tag.substr(sp + 1) != "naive") {
      throw ParseError("unknown calculus marker '" + std::string(tag.substr(sp + 1)) + "'", open);
    }
    calculus = Calculus::Naive;
    tag = tag.substr(0, sp);
  }
  bool tagged = false;
  if (!tag.empty() && tag.back() == '*') {
    tagged = true;
    tag.remove_suffix(1);
  }
  std::optional<Phase> phase;
  for (std::size_t i = 0; i < kPhaseNames.size(); ++i) {
    if (kPhaseNames[i] == tag) phase = static_cast<Phase>(i);
  }
  if (!phase) throw ParseError("unknown phase '" + std::string(tag) + "'", open + 1);

  auto parts = detail::parse_sequent_parts(text.substr(close + 1, nl - close - 1), true);
  FocusedSequent end{std::move(parts.stoup), {}, std::move(parts.succedent), *phase, tagged};
  for (auto& [f, t] : parts.context) end.context.push_back(TaggedFormula{std::move(f), t});
  return ParsedFocused{build_focused(parse_sexpr(text.substr(nl + 1)), end, calculus), calculus};
}

}  // namespace sknmill
