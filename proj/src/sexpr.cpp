#include "sknmill/sexpr.hpp"

#include <cctype>

#include "sknmill/formula.hpp"

namespace sknmill {

std::string_view SExpr::head() const {
  if (kind != Kind::List || items.empty() || !items.front().is_symbol()) {
    return {};
  }
  return items.front().text;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input", pos_);
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SExpr list = SExpr::list({});
      list.position = start;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) {
          throw ParseError("unterminated list", start);
        }
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (c == ')') {
      throw ParseError("unexpected ')'", start);
    }
    if (c == '"') {
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
          ++pos_;
        }
        s += text_[pos_++];
      }
      if (pos_ >= text_.size()) {
        throw ParseError("unterminated string", start);
      }
      ++pos_;
      SExpr e = SExpr::string(std::move(s));
      e.position = start;
      return e;
    }
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"') {
      ++pos_;
    }
    SExpr e = SExpr::symbol(std::string(text_.substr(start, pos_ - start)));
    e.position = start;
    return e;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) {
      throw ParseError("trailing input after expression", pos_);
    }
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(std::string& out, const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Symbol:
      out += e.text;
      return;
    case SExpr::Kind::String:
      out += '"';
      for (char c : e.text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return;
    case SExpr::Kind::List:
      out += '(';
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i > 0) out += ' ';
        write(out, e.items[i]);
      }
      out += ')';
      return;
  }
}

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  Reader reader(text);
  SExpr e = reader.read();
  reader.finish();
  return e;
}

std::string to_string(const SExpr& e) {
  std::string out;
  write(out, e);
  return out;
}

std::size_t sexpr_index(const SExpr& e) {
  if (!e.is_symbol() || e.text.empty()) {
    throw ParseError("expected a non-negative integer", e.position);
  }
  std::size_t value = 0;
  for (char c : e.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("expected a non-negative integer, found '" + e.text + "'", e.position);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

}  // namespace sknmill
