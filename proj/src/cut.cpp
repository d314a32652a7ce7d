#include "sknmill/cut.hpp"

namespace sknmill {

namespace {

void require_cut_free(const Derivation& d, const char* what) {
  if (!d.is_cut_free()) {
    throw RuleError(std::string(what) + ": premises must be cut-free");
  }
}

Derivation scut_rec(const Derivation& f, const Derivation& g);
Derivation ccut_rec(const Derivation& f, const Derivation& g, std::size_t pos);

// f ends in a right rule (IR, tR or lR) whose succedent is g's stoup; the
// cut is driven by the last rule of g.
Derivation scut_right(const Derivation& f, const Derivation& g) {
  switch (g.rule()) {
    case Rule::Ax:
      return f;
    case Rule::LolliR:
      return lolli_r(scut_rec(f, g.premise(0)));
    case Rule::TensorR:
      return tensor_r(scut_rec(f, g.premise(0)), g.premise(1));
    default:
      break;
  }
  switch (f.rule()) {
    case Rule::UnitR:
      // g : I|D |- C ends in uL.
      return g.premise(0);
    case Rule::TensorR: {
      // g : A*B|D |- C ends in tL with premise A|B,D |- C.
      const Derivation& f1 = f.premise(0);
      const Derivation& f2 = f.premise(1);
      return ccut_rec(f2, scut_rec(f1, g.premise(0)), f1.conclusion().context.size());
    }
    case Rule::LolliR: {
      // g : A-oB|D1,D2 |- C ends in lL(g1, g2).
      const Derivation& f1 = f.premise(0);
      const Derivation& g1 = g.premise(0);
      const Derivation& g2 = g.premise(1);
      return ccut_rec(g1, scut_rec(f1, g2), f.conclusion().context.size());
    }
    default:
      break;
  }
  throw RuleError("scut: no principal case for " + std::string(rule_symbol(f.rule())) + " / " +
                  std::string(rule_symbol(g.rule())));
}

Derivation scut_rec(const Derivation& f, const Derivation& g) {
  switch (f.rule()) {
    case Rule::Ax:
      return g;
    case Rule::Pass:
      return pass(scut_rec(f.premise(0), g));
    case Rule::UnitL:
      return unit_l(scut_rec(f.premise(0), g));
    case Rule::TensorL:
      return tensor_l(scut_rec(f.premise(0), g));
    case Rule::LolliL:
      return lolli_l(f.premise(0), scut_rec(f.premise(1), g));
    case Rule::UnitR:
    case Rule::TensorR:
    case Rule::LolliR:
      return scut_right(f, g);
    case Rule::Scut:
    case Rule::Ccut:
      break;
  }
  throw RuleError("scut: unexpected cut node");
}

Derivation ccut_rec(const Derivation& f, const Derivation& g, std::size_t pos) {
  switch (g.rule()) {
    case Rule::Pass:
      if (pos == 0) {
        return scut_rec(f, g.premise(0));
      }
      return pass(ccut_rec(f, g.premise(0), pos - 1));
    case Rule::UnitL:
      return unit_l(ccut_rec(f, g.premise(0), pos));
    case Rule::TensorL:
      return tensor_l(ccut_rec(f, g.premise(0), pos + 1));
    case Rule::LolliR:
      return lolli_r(ccut_rec(f, g.premise(0), pos));
    case Rule::LolliL:
      if (pos < g.split()) {
        return lolli_l(ccut_rec(f, g.premise(0), pos), g.premise(1));
      }
      return lolli_l(g.premise(0), ccut_rec(f, g.premise(1), pos - g.split()));
    case Rule::TensorR:
      if (pos < g.split()) {
        return tensor_r(ccut_rec(f, g.premise(0), pos), g.premise(1));
      }
      return tensor_r(g.premise(0), ccut_rec(f, g.premise(1), pos - g.split()));
    case Rule::Ax:
    case Rule::UnitR:
    case Rule::Scut:
    case Rule::Ccut:
      break;
  }
  throw RuleError("ccut: no formula to cut in " + to_string(g.conclusion()));
}

}  // namespace

Derivation scut(const Derivation& f, const Derivation& g) {
  require_cut_free(f, "scut");
  require_cut_free(g, "scut");
  const auto& stoup = g.conclusion().stoup;
  if (!stoup || !(*stoup == f.conclusion().succedent)) {
    throw RuleError("scut: succedent " + to_string(f.conclusion().succedent) +
                    " does not match stoup " + to_string(stoup));
  }
  return scut_rec(f, g);
}

Derivation ccut(const Derivation& f, const Derivation& g, std::size_t position) {
  require_cut_free(f, "ccut");
  require_cut_free(g, "ccut");
  if (f.conclusion().stoup) {
    throw RuleError("ccut: left premise stoup must be empty");
  }
  const auto& ctx = g.conclusion().context;
  if (position >= ctx.size() || !(ctx[position] == f.conclusion().succedent)) {
    throw RuleError("ccut: context position " + std::to_string(position) + " does not hold " +
                    to_string(f.conclusion().succedent));
  }
  return ccut_rec(f, g, position);
}

Derivation eliminate_cuts(const Derivation& d) {
  if (d.is_cut_free()) {
    return d;
  }
  std::vector<Derivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) {
    premises.push_back(eliminate_cuts(p));
  }
  switch (d.rule()) {
    case Rule::Scut:
      return scut(premises[0], premises[1]);
    case Rule::Ccut:
      return ccut(premises[0], premises[1], d.split());
    default:
      return Derivation::make(d.rule(), d.conclusion(), std::move(premises), d.split(),
                              d.cut_length(), d.cut_formula());
  }
}

Derivation iter_left(const Derivation& d, std::size_t prefix) {
  if (prefix > d.conclusion().context.size()) {
    throw RuleError("iter_left: prefix longer than the context");
  }
  Derivation acc = d.conclusion().stoup ? d : unit_l(d);
  for (std::size_t i = 0; i < prefix; ++i) {
    acc = tensor_l(std::move(acc));
  }
  return acc;
}

Derivation iter_lolli_right(const Derivation& d, std::size_t suffix) {
  if (suffix > d.conclusion().context.size()) {
    throw RuleError("iter_lolli_right: suffix longer than the context");
  }
  Derivation acc = d;
  for (std::size_t i = 0; i < suffix; ++i) {
    acc = lolli_r(std::move(acc));
  }
  return acc;
}

Derivation lolli_left_ctx(const Derivation& f, const Derivation& g, std::size_t position) {
  const auto& ctx = g.conclusion().context;
  if (position >= ctx.size()) {
    throw RuleError("lolli_left_ctx: position outside the context");
  }
  if (f.conclusion().stoup) {
    throw RuleError("lolli_left_ctx: first premise stoup must be empty");
  }
  const Formula& b = ctx[position];
  return ccut(pass(lolli_l(f, ax(b))), g, position);
}

}  // namespace sknmill
