#include "sknmill/hilbert.hpp"

#include <array>

#include "sknmill/cut.hpp"
#include "sknmill/focused.hpp"
#include "sknmill/sexpr.hpp"

namespace sknmill {

namespace {

constexpr std::array<std::string_view, 9> kHilbertSymbols = {
    "id", "comp", "tensor", "lolli", "lam", "rho", "alpha", "pi", "piInv"};

using H = HilbertTerm;

bool typed(const H& t) { return t.source() && t.target(); }

}  // namespace

std::string_view hilbert_symbol(HilbertKind k) {
  return kHilbertSymbols[static_cast<std::size_t>(k)];
}

H H::make(Node node) {
  for (const auto& s : node.subterms) {
    node.size += s.size();
    node.well_typed = node.well_typed && s.well_typed();
  }
  node.well_typed = node.well_typed && node.source && node.target;
  return H(std::make_shared<const Node>(std::move(node)));
}

H H::id(const Formula& a) { return make(Node{HilbertKind::Id, {a}, {}, a, a}); }

H H::comp(H f, H g) {
  const bool ok = typed(f) && typed(g) && *f.target() == *g.source();
  Node n{HilbertKind::Comp, {}, {}, f.source(), g.target()};
  n.well_typed = ok;
  n.subterms = {std::move(f), std::move(g)};
  return make(std::move(n));
}

H H::tensor(H f, H g) {
  std::optional<Formula> src, tgt;
  if (typed(f) && typed(g)) {
    src = Formula::tensor(*f.source(), *g.source());
    tgt = Formula::tensor(*f.target(), *g.target());
  }
  return make(Node{HilbertKind::Tensor, {}, {std::move(f), std::move(g)}, src, tgt});
}

H H::lolli(H f, H g) {
  std::optional<Formula> src, tgt;
  if (typed(f) && typed(g)) {
    src = Formula::lolli(*f.target(), *g.source());
    tgt = Formula::lolli(*f.source(), *g.target());
  }
  return make(Node{HilbertKind::Lolli, {}, {std::move(f), std::move(g)}, src, tgt});
}

H H::lam(const Formula& a) {
  return make(Node{HilbertKind::Lam, {a}, {}, Formula::tensor(Formula::unit(), a), a});
}

H H::rho(const Formula& a) {
  return make(Node{HilbertKind::Rho, {a}, {}, a, Formula::tensor(a, Formula::unit())});
}

H H::alpha(const Formula& a, const Formula& b, const Formula& c) {
  return make(Node{HilbertKind::Alpha,
                   {a, b, c},
                   {},
                   Formula::tensor(Formula::tensor(a, b), c),
                   Formula::tensor(a, Formula::tensor(b, c))});
}

H H::pi(H f) {
  std::optional<Formula> src, tgt;
  if (typed(f) && f.source()->is_tensor()) {
    src = f.source()->left();
    tgt = Formula::lolli(f.source()->right(), *f.target());
  }
  return make(Node{HilbertKind::Pi, {}, {std::move(f)}, src, tgt});
}

H H::pi_inv(H f) {
  std::optional<Formula> src, tgt;
  if (typed(f) && f.target()->is_lolli()) {
    src = Formula::tensor(*f.source(), f.target()->left());
    tgt = f.target()->right();
  }
  return make(Node{HilbertKind::PiInv, {}, {std::move(f)}, src, tgt});
}

bool operator==(const H& a, const H& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  const auto fa = a.formulas();
  const auto fb = b.formulas();
  const auto sa = a.subterms();
  const auto sb = b.subterms();
  return std::equal(fa.begin(), fa.end(), fb.begin(), fb.end()) &&
         std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
}

namespace {

std::optional<std::string> check_at(const H& t, const std::string& path) {
  for (std::size_t i = 0; i < t.subterms().size(); ++i) {
    const std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    if (auto err = check_at(t.subterm(i), sub)) return err;
  }
  if (t.well_typed()) return std::nullopt;
  const std::string where =
      "term " + (path.empty() ? std::string("root") : path) + " (" +
      std::string(hilbert_symbol(t.kind())) + ")";
  switch (t.kind()) {
    case HilbertKind::Comp:
      return where + ": target " + to_string(*t.subterm(0).target()) + " differs from source " +
             to_string(*t.subterm(1).source());
    case HilbertKind::Pi:
      return where + ": source " + to_string(*t.subterm(0).source()) + " is not a tensor";
    case HilbertKind::PiInv:
      return where + ": target " + to_string(*t.subterm(0).target()) + " is not an implication";
    default:
      return where + ": ill typed";
  }
}

// Identity-padded tensor: h : X => Y gives [[X|G]] => [[Y|G]].
H lift(H h, std::span<const Formula> ctx) {
  for (const auto& a : ctx) h = H::tensor(std::move(h), H::id(a));
  return h;
}

// [[Z|D]] => Z * [[-|D]].
H assoc_split(const Formula& z, std::span<const Formula> ctx) {
  if (ctx.empty()) return H::rho(z);
  const auto init = ctx.first(ctx.size() - 1);
  const Formula& last = ctx.back();
  return H::comp(H::tensor(assoc_split(z, init), H::id(last)),
                 H::alpha(z, encode_antecedent(std::nullopt, init), last));
}

H from_cut_free(const Derivation& d) {
  const Sequent& s = d.conclusion();
  switch (d.rule()) {
    case Rule::Ax:
      return H::id(s.succedent);
    case Rule::UnitR:
      return H::id(Formula::unit());
    case Rule::UnitL:
    case Rule::TensorL:
      // The antecedent encodings of premise and conclusion coincide.
      return from_cut_free(d.premise(0));
    case Rule::Pass: {
      const Formula& a = s.context.front();
      const std::span<const Formula> rest(s.context.begin() + 1, s.context.end());
      return H::comp(lift(H::lam(a), rest), from_cut_free(d.premise(0)));
    }
    case Rule::LolliR:
      return H::pi(from_cut_free(d.premise(0)));
    case Rule::TensorR: {
      const std::span<const Formula> ctx(s.context);
      const Formula z = encode_antecedent(s.stoup, ctx.first(d.split()));
      return H::comp(assoc_split(z, ctx.subspan(d.split())),
                     H::tensor(from_cut_free(d.premise(0)), from_cut_free(d.premise(1))));
    }
    case Rule::LolliL: {
      const std::span<const Formula> ctx(s.context);
      const Formula& ab = *s.stoup;
      const H ev = H::pi_inv(H::id(ab));
      const H m = H::comp(H::comp(assoc_split(ab, ctx.first(d.split())),
                                  H::tensor(H::id(ab), from_cut_free(d.premise(0)))),
                          ev);
      return H::comp(lift(m, ctx.subspan(d.split())), from_cut_free(d.premise(1)));
    }
    case Rule::Scut:
    case Rule::Ccut:
      break;
  }
  throw RuleError("from_seqcalc: unexpected cut node");
}

Formula formula_arg(const SExpr& e) {
  if (e.is_list()) throw ParseError("expected a formula", e.position);
  try {
    return parse_formula(e.text);
  } catch (const ParseError& err) {
    throw ParseError(std::string("bad formula: ") + err.what(), e.position);
  }
}

SExpr formula_sexpr(const Formula& f) {
  if (f.is_atom() || f.is_unit()) return SExpr::symbol(to_string(f));
  return SExpr::string(to_string(f));
}

SExpr hilbert_tree(const H& t) {
  std::vector<SExpr> items{SExpr::symbol(std::string(hilbert_symbol(t.kind())))};
  for (const auto& f : t.formulas()) items.push_back(formula_sexpr(f));
  for (const auto& s : t.subterms()) items.push_back(hilbert_tree(s));
  return SExpr::list(std::move(items));
}

H build(const SExpr& e) {
  if (!e.is_list() || e.head().empty()) throw ParseError("expected a term", e.position);
  const std::string_view head = e.head();
  std::optional<HilbertKind> kind;
  for (std::size_t i = 0; i < kHilbertSymbols.size(); ++i) {
    if (kHilbertSymbols[i] == head) kind = static_cast<HilbertKind>(i);
  }
  if (!kind) throw ParseError("unknown term constructor '" + std::string(head) + "'", e.position);
  const auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1) {
      throw ParseError(std::string(head) + " expects " + std::to_string(n) + " arguments",
                       e.position);
    }
  };
  switch (*kind) {
    case HilbertKind::Id: arity(1); return H::id(formula_arg(e.items[1]));
    case HilbertKind::Lam: arity(1); return H::lam(formula_arg(e.items[1]));
    case HilbertKind::Rho: arity(1); return H::rho(formula_arg(e.items[1]));
    case HilbertKind::Alpha:
      arity(3);
      return H::alpha(formula_arg(e.items[1]), formula_arg(e.items[2]), formula_arg(e.items[3]));
    case HilbertKind::Comp: arity(2); return H::comp(build(e.items[1]), build(e.items[2]));
    case HilbertKind::Tensor: arity(2); return H::tensor(build(e.items[1]), build(e.items[2]));
    case HilbertKind::Lolli: arity(2); return H::lolli(build(e.items[1]), build(e.items[2]));
    case HilbertKind::Pi: arity(1); return H::pi(build(e.items[1]));
    case HilbertKind::PiInv: arity(1); return H::pi_inv(build(e.items[1]));
  }
  throw ParseError("unknown term constructor", e.position);
}

}  // namespace

std::optional<std::string> check_hilbert(const H& t) { return check_at(t, ""); }

bool validate_hilbert(const H& t) { return t.well_typed(); }

Derivation to_seqcalc(const H& t) {
  if (!t.well_typed()) throw RuleError("to_seqcalc: " + *check_hilbert(t));
  const auto& fs = t.formulas();
  switch (t.kind()) {
    case HilbertKind::Id:
      return ax(fs[0]);
    case HilbertKind::Comp:
      return scut(to_seqcalc(t.subterm(0)), to_seqcalc(t.subterm(1)));
    case HilbertKind::Tensor:
      return tensor_l(tensor_r(to_seqcalc(t.subterm(0)), pass(to_seqcalc(t.subterm(1)))));
    case HilbertKind::Lolli:
      return lolli_r(lolli_l(pass(to_seqcalc(t.subterm(0))), to_seqcalc(t.subterm(1))));
    case HilbertKind::Lam:
      return tensor_l(unit_l(pass(ax(fs[0]))));
    case HilbertKind::Rho:
      return tensor_r(ax(fs[0]), unit_r());
    case HilbertKind::Alpha:
      return tensor_l(tensor_l(tensor_r(ax(fs[0]), pass(tensor_r(ax(fs[1]), pass(ax(fs[2])))))));
    case HilbertKind::Pi: {
      const Formula& ab = *t.subterm(0).source();
      return lolli_r(scut(tensor_r(ax(ab.left()), pass(ax(ab.right()))), to_seqcalc(t.subterm(0))));
    }
    case HilbertKind::PiInv: {
      const Formula& bc = *t.subterm(0).target();
      return tensor_l(scut(to_seqcalc(t.subterm(0)), lolli_l(pass(ax(bc.left())), ax(bc.right()))));
    }
  }
  throw RuleError("to_seqcalc: unknown term");
}

H from_seqcalc(const Derivation& d) { return from_cut_free(eliminate_cuts(d)); }

bool hilbert_equal(const H& t1, const H& t2) {
  if (!t1.well_typed()) throw RuleError("hilbert_equal: " + *check_hilbert(t1));
  if (!t2.well_typed()) throw RuleError("hilbert_equal: " + *check_hilbert(t2));
  if (!(*t1.source() == *t2.source()) || !(*t1.target() == *t2.target())) {
    throw RuleError("hilbert_equal: terms are not parallel: " + to_string(*t1.source()) + " => " +
                    to_string(*t1.target()) + " vs " + to_string(*t2.source()) + " => " +
                    to_string(*t2.target()));
  }
  return focus(to_seqcalc(t1)) == focus(to_seqcalc(t2));
}

std::string to_string(const H& t) { return to_string(hilbert_tree(t)); }

H parse_hilbert(std::string_view text) { return build(parse_sexpr(text)); }

}  // namespace sknmill
