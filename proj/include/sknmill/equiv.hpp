#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sknmill/budget.hpp"
#include "sknmill/derivation.hpp"

namespace sknmill {

/// The eleven generating pairs of the congruence, oriented left to right.
enum class Generator : std::uint8_t {
  EtaUnit,         // ax_I ~> IL(IR)
  EtaTensor,       // ax_{A*B} ~> tL(tR(ax_A, pass ax_B))
  EtaLolli,        // ax_{A-oB} ~> lR(lL(pass ax_A, ax_B))
  TensorRPass,     // tR(pass f, g) ~> pass(tR(f, g))
  TensorRUnitL,    // tR(IL f, g) ~> IL(tR(f, g))
  TensorRTensorL,  // tR(tL f, g) ~> tL(tR(f, g))
  TensorRLolliL,   // tR(lL(f, g), h) ~> lL(f, tR(g, h))
  PassLolliR,      // pass(lR f) ~> lR(pass f)
  UnitLLolliR,     // IL(lR f) ~> lR(IL f)
  TensorLLolliR,   // tL(lR f) ~> lR(tL f)
  LolliLLolliR,    // lL(f, lR g) ~> lR(lL(f, g))
};

inline constexpr std::size_t kGeneratorCount = 11;

std::string_view generator_name(Generator g);

/// A redex position (premise indices from the root) and the generator
/// whose left side matches there. Steps always go left to right.
struct RewriteStep {
  std::vector<std::size_t> path;
  Generator generator;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// Generators whose left side matches at the root of `d`.
std::vector<Generator> root_matches(const Derivation& d);
/// Replaces the root of `d` by the right side of `g`; throws RuleError if
/// the left side does not match.
Derivation rewrite_root(const Derivation& d, Generator g);

/// All redexes, leftmost-innermost first (post-order, premises left to
/// right), generators in declaration order at each position.
std::vector<RewriteStep> applicable_steps(const Derivation& d);
Derivation rewrite_step(const Derivation& d, const RewriteStep& step);
/// Every one-step reduct, in applicable_steps order.
std::vector<Derivation> one_step_reducts(const Derivation& d);

enum class Strategy : std::uint8_t { LeftmostInnermost, RightmostOutermost };

/// Rewrites until no redex is left. Cut nodes are eliminated first. Each
/// step spends one budget unit.
Derivation normalize(const Derivation& d, Strategy strategy = Strategy::LeftmostInnermost,
                     Budget* budget = nullptr);

/// Equality modulo the congruence, decided by comparing focused normal
/// forms. Throws RuleError if the end sequents differ.
bool equivalent(const Derivation& d1, const Derivation& d2);

/// emb(focus(d)): the canonical representative of the class of `d`.
Derivation canonical(const Derivation& d);

inline constexpr std::size_t kDefaultClassCeiling = 8;

/// Members of enumerate_all(end sequent) equivalent to `d`, in enumeration
/// order. Throws std::length_error above `ceiling` connectives.
std::vector<Derivation> equivalence_class(const Derivation& d,
                                          std::size_t ceiling = kDefaultClassCeiling,
                                          Budget* budget = nullptr);

/// Class oracle independent of focusing: partitions enumerate_all(s) into
/// the connected components of the one-step rewrite graph. Classes are
/// numbered by first occurrence.
struct GeneratorClasses {
  std::vector<Derivation> derivations;
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;
};
GeneratorClasses generator_classes(const Sequent& s, Budget* budget = nullptr);

/// Termination and confluence of the oriented rewrite relation restricted
/// to the (finite, rewrite-closed) set enumerate_all(s).
struct RewriteAnalysis {
  std::size_t derivations = 0;
  std::size_t edges = 0;
  /// No rewrite cycle, so every rewrite sequence terminates.
  bool terminating = true;
  std::size_t peaks = 0;
  std::size_t unjoinable_peaks = 0;
  /// Source of the first unjoinable peak and its two reducts.
  std::optional<Derivation> peak_source;
  std::optional<Derivation> peak_left;
  std::optional<Derivation> peak_right;
  /// Derivations whose two strategy normal forms differ.
  std::size_t strategy_disagreements = 0;
  std::optional<Derivation> strategy_witness;
  /// Derivations whose leftmost-innermost normal form differs from
  /// emb(focus(d)).
  std::size_t focus_disagreements = 0;
};
RewriteAnalysis analyze_rewriting(const Sequent& s, Budget* budget = nullptr);

}  // namespace sknmill
