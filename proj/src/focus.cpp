#include <algorithm>

#include "sknmill/cut.hpp"
#include "sknmill/focused.hpp"

namespace sknmill {

namespace {

using FD = FocusedDerivation;

void require(bool ok, const char* what) {
  if (!ok) throw RuleError(what);
}

// Node builders computing the conclusion from the premises.

FD node_lolli_r(const FD& f) {
  FocusedSequent c = f.conclusion();
  require(c.phase == Phase::RI && !c.context.empty(), "lR: premise must be RI with a context");
  const Formula a = c.context.back().formula;
  c.context.pop_back();
  c.succedent = Formula::lolli(a, c.succedent);
  return FD::make(FocusedRule::LolliR, std::move(c), {f});
}

FD node_switch(FocusedRule rule, const FD& f, Phase from, Phase to) {
  FocusedSequent c = f.conclusion();
  require(c.phase == from, "phase switch: premise in the wrong phase");
  c.phase = to;
  return FD::make(rule, std::move(c), {f});
}

FD node_li2ri(const FD& f) { return node_switch(FocusedRule::LI2RI, f, Phase::LI, Phase::RI); }
FD node_p2li(const FD& f) { return node_switch(FocusedRule::P2LI, f, Phase::P, Phase::LI); }
FD node_f2p(const FD& f) { return node_switch(FocusedRule::F2P, f, Phase::F, Phase::P); }

FD node_unit_l(const FD& f) {
  FocusedSequent c = f.conclusion();
  require(c.phase == Phase::LI && !c.stoup && !c.tagged, "uL: premise must be -|G |-LI P");
  c.stoup = Formula::unit();
  return FD::make(FocusedRule::UnitL, std::move(c), {f});
}

FD node_tensor_l(const FD& f) {
  FocusedSequent c = f.conclusion();
  require(c.phase == Phase::LI && c.stoup && !c.context.empty() && !c.tagged,
          "tL: premise must be A|B,G |-LI P");
  c.stoup = Formula::tensor(*c.stoup, c.context.front().formula);
  c.context.erase(c.context.begin());
  return FD::make(FocusedRule::TensorL, std::move(c), {f});
}

FD node_pass(const FD& f, bool tagged) {
  const FocusedSequent& p = f.conclusion();
  require(p.phase == Phase::LI && p.stoup && !p.tagged, "pass: premise must be A|G |-LI P");
  TaggedContext ctx{TaggedFormula{*p.stoup, tagged}};
  for (const auto& e : p.context) ctx.push_back(TaggedFormula{e.formula, tagged});
  return FD::make(FocusedRule::Pass,
                  FocusedSequent{std::nullopt, std::move(ctx), p.succedent, Phase::P, tagged}, {f});
}

FD node_ax(const Formula& x) {
  return FD::make(FocusedRule::Ax, FocusedSequent{x, {}, x, Phase::F, false}, {});
}

FD node_unit_r() {
  return FD::make(FocusedRule::UnitR,
                  FocusedSequent{std::nullopt, {}, Formula::unit(), Phase::F, false}, {});
}

FD node_tensor_r(const FD& f, const FD& g) {
  const FocusedSequent& a = f.conclusion();
  const FocusedSequent& b = g.conclusion();
  Context ctx = strip(a.context);
  const Context rest = strip(b.context);
  ctx.insert(ctx.end(), rest.begin(), rest.end());
  return FD::make(FocusedRule::TensorR,
                  FocusedSequent{a.stoup, untagged(ctx), Formula::tensor(a.succedent, b.succedent),
                                 Phase::F, false},
                  {f, g}, a.context.size());
}

FD node_lolli_l(const FD& f, const FD& g) {
  const FocusedSequent& a = f.conclusion();
  const FocusedSequent& b = g.conclusion();
  require(b.stoup.has_value(), "lL: second premise needs a stoup");
  Context ctx = strip(a.context);
  const Context rest = strip(b.context);
  ctx.insert(ctx.end(), rest.begin(), rest.end());
  return FD::make(FocusedRule::LolliL,
                  FocusedSequent{Formula::lolli(a.succedent, *b.stoup), untagged(ctx),
                                 b.succedent, Phase::F, false},
                  {f, g}, a.context.size());
}

// lR^n over li2ri(p2li(p)) for a tagged P derivation p.
FD tagged_chain(const FD& p, std::size_t n) {
  FD acc = node_li2ri(node_p2li(p));
  for (std::size_t i = 0; i < n; ++i) acc = node_lolli_r(acc);
  return acc;
}

FD tensor_r_li(const Context& gp, const FD& f, const FD& g);

// f : T|G,G' |-F P.
FD tensor_r_f(const Context& gp, const FD& f, const FD& g) {
  const FocusedSequent& c = f.conclusion();
  const std::size_t n = c.context.size() - gp.size();
  if (f.rule() == FocusedRule::LolliL && f.split() <= n) {
    return node_lolli_l(f.premise(0), tensor_r_li(gp, f.premise(1), g));
  }
  FocusedSequent retagged = c;
  retagged.tagged = true;
  for (std::size_t i = n; i < retagged.context.size(); ++i) retagged.context[i].tagged = true;
  const FD tagged = FD::make(f.rule(), std::move(retagged),
                             std::vector<FD>(f.premises().begin(), f.premises().end()), f.split());
  return node_tensor_r(tagged_chain(node_f2p(tagged), gp.size()), g);
}

// f : T|G,G' |-P P.
FD tensor_r_p(const Context& gp, const FD& f, const FD& g) {
  const std::size_t n = f.conclusion().context.size() - gp.size();
  if (f.rule() == FocusedRule::Pass) {
    if (n > 0) return node_pass(tensor_r_li(gp, f.premise(0), g), false);
    return node_f2p(node_tensor_r(tagged_chain(node_pass(f.premise(0), true), gp.size()), g));
  }
  return node_f2p(tensor_r_f(gp, f.premise(0), g));
}

// f : S|G,G' |-LI P.
FD tensor_r_li(const Context& gp, const FD& f, const FD& g) {
  switch (f.rule()) {
    case FocusedRule::UnitL:
      return node_unit_l(tensor_r_li(gp, f.premise(0), g));
    case FocusedRule::TensorL:
      return node_tensor_l(tensor_r_li(gp, f.premise(0), g));
    case FocusedRule::P2LI:
      return node_p2li(tensor_r_p(gp, f.premise(0), g));
    default:
      break;
  }
  throw RuleError("tensor_r_ri: unexpected LI rule");
}

void require_untagged_ri(const FD& f, const char* what) {
  const FocusedSequent& c = f.conclusion();
  if (c.phase != Phase::RI || c.tagged) {
    throw RuleError(std::string(what) + ": expects an untagged RI derivation");
  }
}

}  // namespace

FD ax_ri(const Formula& a) {
  switch (a.kind()) {
    case Connective::Atom:
      return node_li2ri(node_p2li(node_f2p(node_ax(a))));
    case Connective::Unit:
      return il_ri(ir_ri());
    case Connective::Tensor:
      return tl_ri(tensor_r_ri({}, ax_ri(a.left()), pass_ri(ax_ri(a.right()))));
    case Connective::Lolli:
      return lolli_r_ri(lolli_l_ri(pass_ri(ax_ri(a.left())), ax_ri(a.right())));
  }
  throw RuleError("ax_ri: unknown formula");
}

FD ir_ri() { return node_li2ri(node_p2li(node_f2p(node_unit_r()))); }

FD il_ri(const FD& f) {
  require_untagged_ri(f, "il_ri");
  if (f.rule() == FocusedRule::LolliR) return node_lolli_r(il_ri(f.premise(0)));
  if (f.conclusion().stoup) throw RuleError("il_ri: stoup must be empty");
  return node_li2ri(node_unit_l(f.premise(0)));
}

FD tl_ri(const FD& f) {
  require_untagged_ri(f, "tl_ri");
  if (f.rule() == FocusedRule::LolliR) return node_lolli_r(tl_ri(f.premise(0)));
  return node_li2ri(node_tensor_l(f.premise(0)));
}

FD pass_ri(const FD& f) {
  require_untagged_ri(f, "pass_ri");
  if (f.rule() == FocusedRule::LolliR) return node_lolli_r(pass_ri(f.premise(0)));
  const FocusedSequent& c = f.conclusion();
  if (!c.stoup) throw RuleError("pass_ri: stoup must be nonempty");
  return node_li2ri(node_p2li(node_pass(f.premise(0), false)));
}

FD lolli_r_ri(const FD& f) {
  require_untagged_ri(f, "lolli_r_ri");
  return node_lolli_r(f);
}

FD lolli_l_ri(const FD& f, const FD& g) {
  require_untagged_ri(f, "lolli_l_ri");
  require_untagged_ri(g, "lolli_l_ri");
  if (f.conclusion().stoup) throw RuleError("lolli_l_ri: first premise stoup must be empty");
  if (g.rule() == FocusedRule::LolliR) return node_lolli_r(lolli_l_ri(f, g.premise(0)));
  if (!g.conclusion().stoup) throw RuleError("lolli_l_ri: second premise needs a stoup");
  return node_li2ri(node_p2li(node_f2p(node_lolli_l(f, g.premise(0)))));
}

FD tensor_r_ri(const Context& gamma_prime, const FD& f, const FD& g) {
  require_untagged_ri(f, "tensor_r_ri");
  require_untagged_ri(g, "tensor_r_ri");
  if (g.conclusion().stoup) throw RuleError("tensor_r_ri: second premise stoup must be empty");
  const auto& ctx = f.conclusion().context;
  if (ctx.size() < gamma_prime.size() ||
      !std::equal(gamma_prime.begin(), gamma_prime.end(),
                  ctx.end() - static_cast<std::ptrdiff_t>(gamma_prime.size()),
                  [](const Formula& a, const TaggedFormula& b) { return a == b.formula; })) {
    throw RuleError("tensor_r_ri: first premise context must end with gamma_prime");
  }
  if (f.rule() == FocusedRule::LolliR) {
    Context grown = gamma_prime;
    grown.push_back(f.conclusion().succedent.left());
    return tensor_r_ri(grown, f.premise(0), g);
  }
  return node_li2ri(tensor_r_li(gamma_prime, f.premise(0), g));
}

Derivation emb(const FD& d) {
  switch (d.rule()) {
    case FocusedRule::LolliR:
      return lolli_r(emb(d.premise(0)));
    case FocusedRule::LI2RI:
    case FocusedRule::P2LI:
    case FocusedRule::F2P:
      return emb(d.premise(0));
    case FocusedRule::UnitL:
      return unit_l(emb(d.premise(0)));
    case FocusedRule::TensorL:
      return tensor_l(emb(d.premise(0)));
    case FocusedRule::Pass:
      return pass(emb(d.premise(0)));
    case FocusedRule::Ax:
      return ax(d.conclusion().succedent);
    case FocusedRule::UnitR:
      return unit_r();
    case FocusedRule::TensorR:
      return tensor_r(emb(d.premise(0)), emb(d.premise(1)));
    case FocusedRule::LolliL:
      return lolli_l(emb(d.premise(0)), emb(d.premise(1)));
  }
  throw RuleError("emb: unknown rule");
}

namespace {

FD focus_cut_free(const Derivation& d) {
  switch (d.rule()) {
    case Rule::Ax:
      return ax_ri(d.conclusion().succedent);
    case Rule::Pass:
      return pass_ri(focus_cut_free(d.premise(0)));
    case Rule::LolliL:
      return lolli_l_ri(focus_cut_free(d.premise(0)), focus_cut_free(d.premise(1)));
    case Rule::LolliR:
      return lolli_r_ri(focus_cut_free(d.premise(0)));
    case Rule::UnitL:
      return il_ri(focus_cut_free(d.premise(0)));
    case Rule::TensorL:
      return tl_ri(focus_cut_free(d.premise(0)));
    case Rule::UnitR:
      return ir_ri();
    case Rule::TensorR:
      return tensor_r_ri({}, focus_cut_free(d.premise(0)), focus_cut_free(d.premise(1)));
    case Rule::Scut:
    case Rule::Ccut:
      break;
  }
  throw RuleError("focus: unexpected cut node");
}

}  // namespace

FD focus(const Derivation& d) { return focus_cut_free(eliminate_cuts(d)); }

}  // namespace sknmill
