#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sknmill/budget.hpp"
#include "sknmill/derivation.hpp"
#include "sknmill/formula.hpp"

namespace sknmill {

/// Proof-search phases: right invertible, left invertible, passivation, focusing.
enum class Phase : std::uint8_t { RI, LI, P, F };

/// Tagged is the calculus with tag annotations; Naive ignores tags and side
/// conditions and admits spurious permutations of pass/lL past tR.
enum class Calculus : std::uint8_t { Tagged, Naive };

std::string_view phase_name(Phase p);

struct TaggedFormula {
  Formula formula;
  bool tagged = false;

  friend bool operator==(const TaggedFormula&, const TaggedFormula&) = default;
};

/// Untagged entries always precede tagged ones.
using TaggedContext = std::vector<TaggedFormula>;

struct FocusedSequent {
  Stoup stoup;
  TaggedContext context;
  Formula succedent;
  Phase phase = Phase::RI;
  bool tagged = false;

  friend bool operator==(const FocusedSequent&, const FocusedSequent&) = default;
};

std::size_t hash_value(const FocusedSequent& s);
struct FocusedSequentHash {
  std::size_t operator()(const FocusedSequent& s) const { return hash_value(s); }
};

/// Context with all tags removed.
Context strip(std::span<const TaggedFormula> ctx);
TaggedContext untagged(std::span<const Formula> ctx);
/// Entry point of search: phase RI, untagged.
FocusedSequent entry_sequent(const Sequent& s);
/// Erases phase and tags.
Sequent plain(const FocusedSequent& s);

std::string to_string(const FocusedSequent& s);

enum class FocusedRule : std::uint8_t {
  LolliR, LI2RI, UnitL, TensorL, P2LI, Pass, F2P, Ax, UnitR, TensorR, LolliL
};

/// Text-format atom: lR li2ri uL tL p2li pass f2p ax uR tR lL.
std::string_view rule_symbol(FocusedRule r);
std::optional<FocusedRule> focused_rule_from_symbol(std::string_view s);

/// Phase-indexed, tag-annotated derivation. Switch rules are explicit nodes.
class FocusedDerivation {
 public:
  static FocusedDerivation make(FocusedRule rule, FocusedSequent conclusion,
                                std::vector<FocusedDerivation> premises, std::size_t split = 0);

  FocusedRule rule() const { return node_->rule; }
  const FocusedSequent& conclusion() const { return node_->conclusion; }
  std::span<const FocusedDerivation> premises() const { return node_->premises; }
  const FocusedDerivation& premise(std::size_t i) const { return node_->premises.at(i); }
  std::size_t split() const { return node_->split; }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const FocusedDerivation& a, const FocusedDerivation& b);

 private:
  struct Node {
    FocusedRule rule;
    FocusedSequent conclusion;
    std::vector<FocusedDerivation> premises;
    std::size_t split = 0;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit FocusedDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FocusedDerivationHash {
  std::size_t operator()(const FocusedDerivation& d) const { return d.hash(); }
};

/// Premises demanded by a rule instance, including tag side conditions in
/// the tagged calculus; nullopt when the rule does not apply.
std::optional<std::vector<FocusedSequent>> focused_premise_sequents(
    FocusedRule rule, const FocusedSequent& conclusion, std::size_t split, Calculus calculus);

/// Phase typing and tag hygiene of a single sequent.
std::optional<std::string> check_focused_sequent(const FocusedSequent& s, Calculus calculus);

std::optional<std::string> check_focused(const FocusedDerivation& d,
                                         Calculus calculus = Calculus::Tagged);
bool validate_focused(const FocusedDerivation& d, Calculus calculus = Calculus::Tagged);

/// All focused derivations of `s` (entered in phase RI, untagged), in the
/// canonical search order.
std::vector<FocusedDerivation> search(const Sequent& s, Calculus calculus = Calculus::Tagged,
                                      Budget* budget = nullptr);
std::vector<FocusedDerivation> search(const FocusedSequent& s, Calculus calculus,
                                      Budget* budget = nullptr);
/// Number of focused derivations, without materialising them.
std::uint64_t count_derivations(const Sequent& s, Calculus calculus = Calculus::Tagged);
bool focused_derivable(const Sequent& s, Calculus calculus = Calculus::Tagged);
/// First derivation in search order, if any.
std::optional<FocusedDerivation> derive_first(const Sequent& s,
                                              Calculus calculus = Calculus::Tagged);

/// Erases phases and tags.
Derivation emb(const FocusedDerivation& d);

/// Normal form of an unfocused derivation; cut nodes are eliminated first.
FocusedDerivation focus(const Derivation& d);

// Admissible rules in phase RI, over untagged RI derivations.
FocusedDerivation ax_ri(const Formula& a);
FocusedDerivation ir_ri();
FocusedDerivation il_ri(const FocusedDerivation& f);
FocusedDerivation tl_ri(const FocusedDerivation& f);
FocusedDerivation pass_ri(const FocusedDerivation& f);
FocusedDerivation lolli_r_ri(const FocusedDerivation& f);
FocusedDerivation lolli_l_ri(const FocusedDerivation& f, const FocusedDerivation& g);
/// From f : S|G,G' |-RI A and g : -|D |-RI B builds S|G,D |-RI [[G'|A]] * B.
FocusedDerivation tensor_r_ri(const Context& gamma_prime, const FocusedDerivation& f,
                              const FocusedDerivation& g);

/// Maps A => B in the free skew monoidal closed category, counted as focused
/// derivations of A | |- B.
std::uint64_t count_maps(const Formula& a, const Formula& b);

/// Header line `[RI] X | |- X * I`, `[RI*] ...` when tagged, with tagged
/// context entries written `@A`; ` naive` before `]` marks the naive calculus.
std::string to_text(const FocusedDerivation& d, Calculus calculus = Calculus::Tagged);
std::string to_sexpr(const FocusedDerivation& d);

struct ParsedFocused {
  FocusedDerivation derivation;
  Calculus calculus;
};
ParsedFocused parse_focused(std::string_view text);
/// True if `text` starts with a focused header.
bool looks_focused(std::string_view text);

}  // namespace sknmill
