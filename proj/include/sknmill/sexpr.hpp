#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sknmill {

/// Minimal S-expression: a symbol, a quoted string, or a list.
struct SExpr {
  enum class Kind { Symbol, String, List };

  Kind kind = Kind::List;
  std::string text;
  std::vector<SExpr> items;
  std::size_t position = 0;

  static SExpr symbol(std::string s) { return SExpr{Kind::Symbol, std::move(s), {}, 0}; }
  static SExpr string(std::string s) { return SExpr{Kind::String, std::move(s), {}, 0}; }
  static SExpr list(std::vector<SExpr> items) { return SExpr{Kind::List, {}, std::move(items), 0}; }

  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_list() const { return kind == Kind::List; }
  bool is_string() const { return kind == Kind::String; }
  /// The head symbol of a non-empty list, else "".
  std::string_view head() const;
};

/// Parses exactly one S-expression (surrounding whitespace allowed).
SExpr parse_sexpr(std::string_view text);
std::string to_string(const SExpr& e);

/// Reads a non-negative integer symbol, throwing ParseError otherwise.
std::size_t sexpr_index(const SExpr& e);

}  // namespace sknmill
