#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sknmill {

enum class Connective : std::uint8_t { Atom, Unit, Tensor, Lolli };

enum class Polarity : std::uint8_t { Positive, Negative };

/// Immutable formula over atoms, I, tensor and left implication.
///
/// Formulae are shared trees: copying is cheap and equality is structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula unit();
  static Formula tensor(Formula left, Formula right);
  static Formula lolli(Formula antecedent, Formula consequent);

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is_unit() const { return kind() == Connective::Unit; }
  bool is_tensor() const { return kind() == Connective::Tensor; }
  bool is_lolli() const { return kind() == Connective::Lolli; }

  /// Atom name; empty for non-atoms.
  const std::string& name() const;
  /// Left operand of a tensor, antecedent of an implication.
  const Formula& left() const;
  /// Right operand of a tensor, consequent of an implication.
  const Formula& right() const;

  /// Number of occurrences of I, tensor and implication.
  std::size_t connectives() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t connectives = 0;
  std::size_t hash = 0;
};

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline std::size_t Formula::connectives() const { return node_->connectives; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline const Formula& Formula::left() const { return *node_->left; }
inline const Formula& Formula::right() const { return *node_->right; }

/// Optional stoup formula; std::nullopt is the empty stoup "-".
using Stoup = std::optional<Formula>;
using Context = std::vector<Formula>;

struct Sequent {
  Stoup stoup;
  Context context;
  Formula succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

std::size_t hash_combine(std::size_t seed, std::size_t value);
std::size_t hash_value(const Stoup& s);
std::size_t hash_value(const Sequent& s);

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return hash_value(s); }
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Formula parse_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

std::string to_string(const Formula& f);
std::string to_string(const Stoup& s);
std::string to_string(const Context& g);
std::string to_string(const Sequent& s);
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Sequent& s);

bool is_valid_atom_name(std::string_view name);

/// ((([[S]] * A1) * A2) ... ) * An, with [[-]] = I.
Formula encode_antecedent(const Stoup& stoup, std::span<const Formula> context);
/// A1 -o (A2 -o ... (An -o C)).
Formula encode_succedent(std::span<const Formula> context, const Formula& succedent);

Polarity polarity(const Formula& f);
/// Negative stoups are empty, atomic or implications.
bool is_negative_stoup(const Stoup& s);

std::size_t connectives(const Sequent& s);
/// 2 * connectives + (stoup empty ? 1 : 0); strictly decreases from
/// conclusion to each premise of every cut-free rule.
std::size_t measure(const Sequent& s);

namespace detail {

/// Token-level reader shared by the formula, sequent and derivation parsers.
class Lexer {
 public:
  enum class Kind { Atom, Unit, Tensor, Lolli, LParen, RParen, Bar, Turnstile, Dash, Comma, At, End };
  struct Token {
    Kind kind;
    std::string text;
    std::size_t position;
  };

  explicit Lexer(std::string_view text);
  const Token& peek() const { return tokens_[index_]; }
  Token next();
  bool accept(Kind kind);
  void expect(Kind kind, const char* what);
  bool at_end() const { return peek().kind == Kind::End; }

  Formula formula();

 private:
  Formula lolli();
  Formula tensor();
  Formula factor();

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

struct SequentParts {
  Stoup stoup;
  std::vector<std::pair<Formula, bool>> context;  // (formula, tagged)
  Formula succedent;
};

/// Parses `stoup | ctx |- formula`; with allow_tags, context entries may be
/// prefixed by '@' to mark them tagged.
SequentParts parse_sequent_parts(std::string_view text, bool allow_tags);

}  // namespace detail

}  // namespace sknmill
