#include <doctest.h>

#include <random>

#include "sknmill/formula.hpp"
#include "support.hpp"

using namespace sknmill;

namespace {

Formula X() { return Formula::atom("X"); }
Formula Y() { return Formula::atom("Y"); }
Formula Z() { return Formula::atom("Z"); }
Formula W() { return Formula::atom("W"); }
Formula I() { return Formula::unit(); }
Formula T(Formula a, Formula b) { return Formula::tensor(std::move(a), std::move(b)); }
Formula L(Formula a, Formula b) { return Formula::lolli(std::move(a), std::move(b)); }

}  // namespace

TEST_CASE("parse_formula: literals, associativity and precedence") {
  CHECK(parse_formula("I") == I());
  CHECK(parse_formula("X * Y * Z") == T(T(X(), Y()), Z()));
  CHECK(parse_formula("X * Y -o Z -o W") == L(T(X(), Y()), L(Z(), W())));
  CHECK(parse_formula("X*(Y*Z)") == T(X(), T(Y(), Z())));
  CHECK(parse_formula("(X -o Y) -o Z") == L(L(X(), Y()), Z()));
  CHECK(parse_formula("  ( ( X ) ) ") == X());
}

TEST_CASE("print_formula: minimal parentheses") {
  CHECK(to_string(T(I(), X())) == "I * X");
  CHECK(to_string(L(X(), L(Y(), Z()))) == "X -o Y -o Z");
  CHECK(to_string(T(L(X(), X()), Y())) == "(X -o X) * Y");
  CHECK(to_string(T(X(), T(Y(), Z()))) == "X * (Y * Z)");
  CHECK(to_string(T(T(X(), Y()), Z())) == "X * Y * Z");
  CHECK(to_string(L(L(X(), Y()), Z())) == "(X -o Y) -o Z");
  CHECK(to_string(L(T(X(), Y()), Z())) == "X * Y -o Z");
}

TEST_CASE("atom names") {
  CHECK(is_valid_atom_name("X"));
  CHECK(is_valid_atom_name("foo_bar'2"));
  CHECK(is_valid_atom_name("A''"));
  CHECK_FALSE(is_valid_atom_name(""));
  CHECK_FALSE(is_valid_atom_name("1X"));
  CHECK_FALSE(is_valid_atom_name("_a"));
  CHECK_FALSE(is_valid_atom_name("'a"));
  CHECK_FALSE(is_valid_atom_name("I"));
  CHECK(parse_formula("A' * B_1") == T(Formula::atom("A'"), Formula::atom("B_1")));
  CHECK(parse_formula("Ix") == Formula::atom("Ix"));
  CHECK_THROWS_AS(Formula::atom("1X"), std::invalid_argument);
}

TEST_CASE("parse errors carry a position") {
  const auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no parse error for " << text);
    return 0;
  };
  CHECK(position_of("X *") == 3);
  CHECK(position_of("(X") == 2);
  CHECK(position_of("X Y") == 2);
  CHECK(position_of("") == 0);
  CHECK(position_of("X -o") == 4);
  CHECK(position_of("X # Y") == 2);
  CHECK_THROWS_AS(parse_sequent("X |- Y"), ParseError);
  CHECK_THROWS_AS(parse_sequent("X | Y"), ParseError);
  CHECK_THROWS_AS(parse_sequent("X | Y, |- Z"), ParseError);
  CHECK_THROWS_AS(parse_sequent("- | @Y |- Y"), ParseError);
}

TEST_CASE("round trip on random formulae") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = testing::random_formula(rng, 8, {"X", "Y", "Z", "a'", "b_1"});
    CAPTURE(to_string(f));
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("sequents parse and print") {
  const Sequent s = parse_sequent("- | X, Y -o Z |- X * I");
  CHECK_FALSE(s.stoup.has_value());
  REQUIRE(s.context.size() == 2);
  CHECK(s.context[1] == L(Y(), Z()));
  CHECK(s.succedent == T(X(), I()));
  CHECK(to_string(s) == "- | X, Y -o Z |- X * I");
  const Sequent t = parse_sequent("I * X | |- X");
  CHECK(t.stoup == T(I(), X()));
  CHECK(t.context.empty());
  CHECK(to_string(t) == "I * X | |- X");
  CHECK(parse_sequent(to_string(t)) == t);
  CHECK(connectives(s) == 3);
  CHECK(measure(s) == 7);
  CHECK(measure(t) == 4);
}

TEST_CASE("encode_antecedent") {
  const Context none;
  CHECK(encode_antecedent(std::nullopt, none) == I());
  const Context bc{Y(), Z()};
  CHECK(encode_antecedent(X(), bc) == T(T(X(), Y()), Z()));
  const Context a{X()};
  CHECK(encode_antecedent(std::nullopt, a) == T(I(), X()));
}

TEST_CASE("encode_succedent") {
  const Context none;
  CHECK(encode_succedent(none, Z()) == Z());
  const Context ab{X(), Y()};
  CHECK(encode_succedent(ab, Z()) == L(X(), L(Y(), Z())));
  const Context x{X()};
  CHECK(encode_succedent(x, I()) == L(X(), I()));
}

TEST_CASE("encode_antecedent left-nesting coherence") {
  const std::vector<Formula> pool{X(), I(), T(X(), Y()), L(Y(), Z())};
  std::vector<Context> contexts{{}};
  for (const auto& a : pool) {
    contexts.push_back({a});
    for (const auto& b : pool) contexts.push_back({a, b});
  }
  std::vector<Stoup> stoups{std::nullopt};
  for (const auto& a : pool) stoups.emplace_back(a);
  std::size_t checked = 0;
  for (const auto& s : stoups) {
    for (const auto& g : contexts) {
      for (const auto& d : contexts) {
        Context gd = g;
        gd.insert(gd.end(), d.begin(), d.end());
        CHECK(encode_antecedent(s, gd) == encode_antecedent(encode_antecedent(s, g), d));
        ++checked;
      }
    }
  }
  CHECK(checked == 5 * 21 * 21);
}

TEST_CASE("polarity and negative stoups") {
  CHECK(polarity(L(X(), Y())) == Polarity::Negative);
  CHECK(polarity(T(X(), Y())) == Polarity::Positive);
  CHECK(polarity(I()) == Polarity::Positive);
  CHECK(polarity(X()) == Polarity::Positive);
  CHECK_FALSE(is_negative_stoup(T(X(), Y())));
  CHECK_FALSE(is_negative_stoup(I()));
  CHECK(is_negative_stoup(std::nullopt));
  CHECK(is_negative_stoup(X()));
  CHECK(is_negative_stoup(L(X(), Y())));
}

TEST_CASE("stoup classes partition") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::random_formula(rng, 4, {"X", "Y"});
    const int classes = int(is_negative_stoup(f)) + int(f.is_unit()) + int(f.is_tensor());
    CHECK(classes == 1);
  }
}

TEST_CASE("structural equality and hashing") {
  CHECK(parse_formula("X * (Y -o Z)") == parse_formula("X*(Y-oZ)"));
  CHECK_FALSE(parse_formula("X * Y") == parse_formula("Y * X"));
  CHECK(parse_formula("X * Y").hash() == T(X(), Y()).hash());
  CHECK(T(I(), L(X(), Y())).connectives() == 3);
}
