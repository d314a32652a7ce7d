#include "sknmill/formula.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace sknmill {

namespace {

constexpr std::size_t kSeedUnit = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kSeedTensor = 0x632be59bd9b4e019ULL;
constexpr std::size_t kSeedLolli = 0x85ebca6b0c2b2ae3ULL;

bool is_atom_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

}  // namespace

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !is_atom_start(name.front()) || name == "I") {
    return false;
  }
  for (char c : name) {
    if (!is_atom_char(c)) {
      return false;
    }
  }
  return true;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Connective::Atom;
  node->hash = std::hash<std::string>{}(name);
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::unit() {
  static const Formula instance = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Unit;
    node->connectives = 1;
    node->hash = kSeedUnit;
    return Formula(std::move(node));
  }();
  return instance;
}

Formula Formula::tensor(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Tensor;
  node->connectives = 1 + left.connectives() + right.connectives();
  node->hash = hash_combine(hash_combine(kSeedTensor, left.hash()), right.hash());
  node->left = std::move(left);
  node->right = std::move(right);
  return Formula(std::move(node));
}

Formula Formula::lolli(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Lolli;
  node->connectives = 1 + antecedent.connectives() + consequent.connectives();
  node->hash = hash_combine(hash_combine(kSeedLolli, antecedent.hash()), consequent.hash());
  node->left = std::move(antecedent);
  node->right = std::move(consequent);
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.connectives() != b.connectives()) {
    return false;
  }
  switch (a.kind()) {
    case Connective::Atom:
      return a.name() == b.name();
    case Connective::Unit:
      return true;
    case Connective::Tensor:
    case Connective::Lolli:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::size_t hash_value(const Stoup& s) { return s ? s->hash() : 0x51ed270b27ULL; }

std::size_t hash_value(const Sequent& s) {
  std::size_t h = hash_value(s.stoup);
  for (const auto& f : s.context) {
    h = hash_combine(h, f.hash());
  }
  h = hash_combine(h, s.context.size());
  return hash_combine(h, s.succedent.hash());
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum class Level { Lolli, Tensor, Factor };

void print(std::ostream& os, const Formula& f, Level level) {
  switch (f.kind()) {
    case Connective::Atom:
      os << f.name();
      return;
    case Connective::Unit:
      os << 'I';
      return;
    case Connective::Tensor: {
      const bool parens = level == Level::Factor;
      if (parens) os << '(';
      print(os, f.left(), Level::Tensor);
      os << " * ";
      print(os, f.right(), Level::Factor);
      if (parens) os << ')';
      return;
    }
    case Connective::Lolli: {
      const bool parens = level != Level::Lolli;
      if (parens) os << '(';
      print(os, f.left(), Level::Tensor);
      os << " -o ";
      print(os, f.right(), Level::Lolli);
      if (parens) os << ')';
      return;
    }
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f, Level::Lolli);
  return os;
}

std::string to_string(const Formula& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

std::string to_string(const Stoup& s) { return s ? to_string(*s) : "-"; }

std::string to_string(const Context& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(g[i]);
  }
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out = to_string(s.stoup) + " |";
  if (!s.context.empty()) {
    out += ' ';
    out += to_string(s.context);
  }
  out += " |- ";
  out += to_string(s.succedent);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << to_string(s); }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

Lexer::Lexer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '(') {
      tokens_.push_back({Kind::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      tokens_.push_back({Kind::RParen, ")", start});
      ++i;
    } else if (c == '*') {
      tokens_.push_back({Kind::Tensor, "*", start});
      ++i;
    } else if (c == ',') {
      tokens_.push_back({Kind::Comma, ",", start});
      ++i;
    } else if (c == '@') {
      tokens_.push_back({Kind::At, "@", start});
      ++i;
    } else if (c == '|') {
      if (i + 1 < text.size() && text[i + 1] == '-') {
        tokens_.push_back({Kind::Turnstile, "|-", start});
        i += 2;
      } else {
        tokens_.push_back({Kind::Bar, "|", start});
        ++i;
      }
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == 'o') {
        tokens_.push_back({Kind::Lolli, "-o", start});
        i += 2;
      } else {
        tokens_.push_back({Kind::Dash, "-", start});
        ++i;
      }
    } else if (is_atom_start(c)) {
      while (i < text.size() && is_atom_char(text[i])) {
        ++i;
      }
      std::string word(text.substr(start, i - start));
      tokens_.push_back({word == "I" ? Kind::Unit : Kind::Atom, std::move(word), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  tokens_.push_back({Kind::End, "", text.size()});
}

Lexer::Token Lexer::next() {
  Token t = tokens_[index_];
  if (t.kind != Kind::End) {
    ++index_;
  }
  return t;
}

bool Lexer::accept(Kind kind) {
  if (peek().kind == kind) {
    next();
    return true;
  }
  return false;
}

void Lexer::expect(Kind kind, const char* what) {
  if (!accept(kind)) {
    const auto& t = peek();
    throw ParseError(std::string("expected ") + what + ", found '" +
                         (t.kind == Kind::End ? std::string("end of input") : t.text) + "'",
                     t.position);
  }
}

Formula Lexer::formula() { return lolli(); }

Formula Lexer::lolli() {
  Formula lhs = tensor();
  if (accept(Kind::Lolli)) {
    return Formula::lolli(std::move(lhs), lolli());
  }
  return lhs;
}

Formula Lexer::tensor() {
  Formula acc = factor();
  while (accept(Kind::Tensor)) {
    acc = Formula::tensor(std::move(acc), factor());
  }
  return acc;
}

Formula Lexer::factor() {
  const Token t = peek();
  switch (t.kind) {
    case Kind::Unit:
      next();
      return Formula::unit();
    case Kind::Atom:
      next();
      return Formula::atom(t.text);
    case Kind::LParen: {
      next();
      Formula inner = formula();
      expect(Kind::RParen, "')'");
      return inner;
    }
    default:
      throw ParseError("expected a formula, found '" +
                           (t.kind == Kind::End ? std::string("end of input") : t.text) + "'",
                       t.position);
  }
}

SequentParts parse_sequent_parts(std::string_view text, bool allow_tags) {
  Lexer lex(text);
  Stoup stoup;
  if (!lex.accept(Lexer::Kind::Dash)) {
    stoup = lex.formula();
  }
  lex.expect(Lexer::Kind::Bar, "'|'");
  std::vector<std::pair<Formula, bool>> context;
  if (lex.peek().kind != Lexer::Kind::Turnstile) {
    do {
      bool tagged = false;
      if (allow_tags && lex.accept(Lexer::Kind::At)) {
        tagged = true;
      }
      context.emplace_back(lex.formula(), tagged);
    } while (lex.accept(Lexer::Kind::Comma));
  }
  lex.expect(Lexer::Kind::Turnstile, "'|-'");
  Formula succedent = lex.formula();
  if (!lex.at_end()) {
    throw ParseError("trailing input '" + lex.peek().text + "'", lex.peek().position);
  }
  return SequentParts{std::move(stoup), std::move(context), std::move(succedent)};
}

}  // namespace detail

Formula parse_formula(std::string_view text) {
  detail::Lexer lex(text);
  Formula f = lex.formula();
  if (!lex.at_end()) {
    throw ParseError("trailing input '" + lex.peek().text + "'", lex.peek().position);
  }
  return f;
}

Sequent parse_sequent(std::string_view text) {
  auto parts = detail::parse_sequent_parts(text, false);
  Context context;
  context.reserve(parts.context.size());
  for (auto& [f, tagged] : parts.context) {
    context.push_back(std::move(f));
  }
  return Sequent{std::move(parts.stoup), std::move(context), std::move(parts.succedent)};
}

// ---------------------------------------------------------------------------

Formula encode_antecedent(const Stoup& stoup, std::span<const Formula> context) {
  Formula acc = stoup ? *stoup : Formula::unit();
  for (const auto& f : context) {
    acc = Formula::tensor(std::move(acc), f);
  }
  return acc;
}

Formula encode_succedent(std::span<const Formula> context, const Formula& succedent) {
  Formula acc = succedent;
  for (auto it = context.rbegin(); it != context.rend(); ++it) {
    acc = Formula::lolli(*it, std::move(acc));
  }
  return acc;
}

Polarity polarity(const Formula& f) {
  return f.is_lolli() ? Polarity::Negative : Polarity::Positive;
}

bool is_negative_stoup(const Stoup& s) { return !s || s->is_atom() || s->is_lolli(); }

std::size_t connectives(const Sequent& s) {
  std::size_t n = s.succedent.connectives();
  if (s.stoup) n += s.stoup->connectives();
  for (const auto& f : s.context) n += f.connectives();
  return n;
}

std::size_t measure(const Sequent& s) { return 2 * connectives(s) + (s.stoup ? 0 : 1); }

}  // namespace sknmill
