#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sknmill/formula.hpp"

namespace sknmill {

/// Rules of the unfocused sequent calculus, plus the two cut rules.
enum class Rule : std::uint8_t { Ax, Pass, LolliL, LolliR, UnitL, TensorL, UnitR, TensorR, Scut, Ccut };

/// Text-format atom for a rule: ax pass lL lR uL tL uR tR scut ccut.
std::string_view rule_symbol(Rule r);
std::optional<Rule> rule_from_symbol(std::string_view s);

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rule-labelled derivation tree with the concluded sequent cached at
/// every node.
///
/// `split` is the length of the context handed to the first premise for
/// TensorR, LolliL and Scut, and the length of Delta0 for Ccut.
/// `cut_length` is the length of the cut premise's context for Ccut.
class Derivation {
 public:
  /// Builds a node without checking it against any rule. Use the checked
  /// constructors below unless a deliberately invalid tree is wanted.
  static Derivation make(Rule rule, Sequent conclusion, std::vector<Derivation> premises,
                         std::size_t split = 0, std::size_t cut_length = 0,
                         std::optional<Formula> cut_formula = std::nullopt);

  Rule rule() const { return node_->rule; }
  const Sequent& conclusion() const { return node_->conclusion; }
  std::span<const Derivation> premises() const { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }
  std::size_t split() const { return node_->split; }
  std::size_t cut_length() const { return node_->cut_length; }
  const std::optional<Formula>& cut_formula() const { return node_->cut_formula; }

  bool is_cut_free() const { return node_->cut_free; }
  std::size_t height() const { return node_->height; }
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  struct Node {
    Rule rule;
    Sequent conclusion;
    std::vector<Derivation> premises;
    std::size_t split = 0;
    std::size_t cut_length = 0;
    std::optional<Formula> cut_formula;
    bool cut_free = true;
    std::size_t height = 1;
    std::size_t size = 1;
    std::size_t hash = 0;
  };
  explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct DerivationHash {
  std::size_t operator()(const Derivation& d) const { return d.hash(); }
};

// Checked constructors: each computes its conclusion from the premises and
// throws RuleError when the premises do not fit the rule.
Derivation ax(const Formula& a);
Derivation pass(Derivation d);
Derivation lolli_l(Derivation f, Derivation g);
Derivation lolli_r(Derivation d);
Derivation unit_l(Derivation d);
Derivation tensor_l(Derivation d);
Derivation unit_r();
Derivation tensor_r(Derivation f, Derivation g);
/// One-step cut node S|G,D |- C from f : S|G |- A and g : A|D |- C.
Derivation scut_node(Derivation f, Derivation g);
/// One-step cut node S|D0,G,D1 |- C from f : -|G |- A and g : S|D0,A,D1 |- C,
/// with `position` the length of D0.
Derivation ccut_node(Derivation f, Derivation g, std::size_t position);

/// Premise sequents demanded by a rule instance with the given conclusion,
/// or nullopt when the conclusion does not match the rule's schema.
std::optional<std::vector<Sequent>> premise_sequents(Rule rule, const Sequent& conclusion,
                                                     std::size_t split, std::size_t cut_length,
                                                     const std::optional<Formula>& cut_formula);

/// Diagnostic for the first offending node (pre-order), or nullopt if valid.
/// Cached conclusions are re-derived from the root sequent, not trusted.
std::optional<std::string> check_derivation(const Derivation& d);
bool validate(const Derivation& d);

/// Two-line text form: the end sequent, then the S-expression tree, e.g.
///   X | |- X * I
///   (tR 0 (ax) (uR))
std::string to_sexpr(const Derivation& d);
std::string to_text(const Derivation& d);
/// Rebuilds a derivation of `end` from its S-expression tree.
Derivation derivation_from_sexpr(std::string_view sexpr, const Sequent& end);
Derivation parse_derivation(std::string_view text);

}  // namespace sknmill
