#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sknmill/derivation.hpp"
#include "sknmill/formula.hpp"

namespace sknmill {

enum class HilbertKind : std::uint8_t { Id, Comp, Tensor, Lolli, Lam, Rho, Alpha, Pi, PiInv };

/// Text-format head symbol: id comp tensor lolli lam rho alpha pi piInv.
std::string_view hilbert_symbol(HilbertKind k);

/// Term of the Hilbert-style calculus with cached source and target.
///
/// Construction never fails: ill-typed terms are representable so that
/// validate_hilbert can reject them. comp(f, g) is f followed by g.
class HilbertTerm {
 public:
  static HilbertTerm id(const Formula& a);
  static HilbertTerm comp(HilbertTerm f, HilbertTerm g);
  static HilbertTerm tensor(HilbertTerm f, HilbertTerm g);
  /// From f : C => A and g : B => D builds A -o B => C -o D.
  static HilbertTerm lolli(HilbertTerm f, HilbertTerm g);
  static HilbertTerm lam(const Formula& a);
  static HilbertTerm rho(const Formula& a);
  static HilbertTerm alpha(const Formula& a, const Formula& b, const Formula& c);
  /// From f : A * B => C builds A => B -o C.
  static HilbertTerm pi(HilbertTerm f);
  /// From f : A => B -o C builds A * B => C.
  static HilbertTerm pi_inv(HilbertTerm f);

  HilbertKind kind() const { return node_->kind; }
  std::span<const Formula> formulas() const { return node_->formulas; }
  std::span<const HilbertTerm> subterms() const { return node_->subterms; }
  const HilbertTerm& subterm(std::size_t i) const { return node_->subterms.at(i); }

  /// True when every node is well typed.
  bool well_typed() const { return node_->well_typed; }
  /// Source and target; nullopt when the shape of a subterm makes them
  /// undefined (e.g. pi of a map whose source is not a tensor).
  const std::optional<Formula>& source() const { return node_->source; }
  const std::optional<Formula>& target() const { return node_->target; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const HilbertTerm& a, const HilbertTerm& b);

 private:
  struct Node {
    HilbertKind kind;
    std::vector<Formula> formulas;
    std::vector<HilbertTerm> subterms;
    std::optional<Formula> source;
    std::optional<Formula> target;
    bool well_typed = true;
    std::size_t size = 1;
  };
  explicit HilbertTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static HilbertTerm make(Node node);
  std::shared_ptr<const Node> node_;
};

/// Diagnostic for the first ill-typed node (pre-order), or nullopt.
std::optional<std::string> check_hilbert(const HilbertTerm& t);
bool validate_hilbert(const HilbertTerm& t);

/// Cut-free derivation of A | |- B for a well-typed t : A => B.
Derivation to_seqcalc(const HilbertTerm& t);

/// Term of type [[S|G]] => C for a derivation of S|G |- C; for A | |- B
/// this is A => B. Cut nodes are eliminated first.
HilbertTerm from_seqcalc(const Derivation& d);

/// Equality modulo the congruence of the free category, decided through
/// the focused normal forms of the translations. Throws RuleError when the
/// terms are ill typed or not parallel.
bool hilbert_equal(const HilbertTerm& t1, const HilbertTerm& t2);

/// S-expression text, e.g. `(comp (rho X) (lam X))`; formulae that are not
/// single tokens are double-quoted.
std::string to_string(const HilbertTerm& t);
HilbertTerm parse_hilbert(std::string_view text);

}  // namespace sknmill
