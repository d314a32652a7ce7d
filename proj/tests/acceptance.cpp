// Acceptance suite: prints one PASS/FAIL line per criterion, followed by
// indented details. Exits non-zero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sknmill/cut.hpp"
#include "sknmill/enumerate.hpp"
#include "sknmill/equiv.hpp"
#include "sknmill/focused.hpp"
#include "sknmill/hilbert.hpp"
#include "support.hpp"

using namespace sknmill;
using H = HilbertTerm;

namespace {

Formula F(const char* text) { return parse_formula(text); }
Sequent S(const char* text) { return parse_sequent(text); }

struct Report {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (details.size() < 12) details.push_back("violated: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

int failures = 0;

void print(int number, const char* title, const Report& r, double seconds) {
  if (!r.pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", number, title, seconds);
  for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
  std::fflush(stdout);
}

template <class Fn>
void criterion(int number, const char* title, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.note(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  print(number, title, r, secs);
}

const testing::FamilyParams kFamily{.max_connectives = 6, .max_atom_pairs = 3, .max_context = 2};

const std::vector<Sequent>& derivable() {
  static const std::vector<Sequent> d = testing::derivable_family(kFamily);
  return d;
}

// Derivation of [[S|G]] | |- C from one of S | G |- C.
Derivation closed(const Derivation& d) {
  const Sequent& s = d.conclusion();
  if (!s.stoup && s.context.empty()) return unit_l(d);
  return iter_left(d, s.context.size());
}

void derivability_goldens(Report& r) {
  const char* yes[] = {"I * X | |- X",
                       "X | |- X * I",
                       "(X * Y) * Z | |- X * (Y * Z)",
                       "I -o X | |- X",
                       "(X * Y) -o Z | |- X -o (Y -o Z)",
                       "I | |- X -o (I * X)",
                       "- | Y |- (X -o X) * Y",
                       "X -o Y | Z |- (X -o Y) * Z",
                       "X -o (Y * Z) | X |- Y * Z"};
  const char* no[] = {"X | |- I * X", "X * I | |- X", "X * (Y * Z) | |- (X * Y) * Z"};
  for (const char* s : yes) {
    const bool got = is_derivable(S(s));
    const bool oracle = !enumerate_all(S(s)).empty();
    r.require(got && oracle, std::string("derivable: ") + s);
  }
  for (const char* s : no) {
    const bool got = is_derivable(S(s));
    const bool oracle = !enumerate_all(S(s)).empty();
    r.require(!got && !oracle, std::string("not derivable: ") + s);
  }
  r.note("9 derivable and 3 underivable sequents agree with exhaustive unfocused search");
}

void essential_counts(Report& r) {
  for (const char* s : {"X | I * Y |- X * (I * Y)", "X | I, Y |- (X * I) * Y",
                        "I -o (X -o Y) | I, X |- Y", "I -o I | Z |- (I -o I) * Z"}) {
    const auto n = search(S(s)).size();
    r.require(n == 2, std::string(s) + " has " + std::to_string(n) + " tagged derivations");
    r.note(std::string(s) + ": " + std::to_string(n));
  }
}

void naive_vs_tagged(Report& r) {
  const auto check = [&](const char* s, std::size_t naive_expected, std::size_t tagged_expected) {
    const Sequent q = S(s);
    const auto naive = search(q, Calculus::Naive).size();
    const auto tagged = search(q).size();
    const auto classes = generator_classes(q).class_count;
    r.require(naive == naive_expected && tagged == tagged_expected,
              std::string(s) + ": naive " + std::to_string(naive) + ", tagged " +
                  std::to_string(tagged));
    r.require(classes == tagged, std::string(s) + ": class count " + std::to_string(classes));
    r.note(std::string(s) + ": naive " + std::to_string(naive) + ", tagged " +
           std::to_string(tagged) + ", unfocused classes " + std::to_string(classes));
  };
  check("- | X, Y |- X * Y", 2, 1);
  // A -o X | G, D, L |- P * D with G = [Y], D = [], L = [Z].
  check("Y -o X | Y, Z |- X * Z", 2, 1);
}

void bijection_suite(Report& r) {
  std::size_t sequents = 0, derivable_count = 0, focused = 0, unfocused = 0;
  testing::for_each_sequent(kFamily, [&](const Sequent& s) {
    ++sequents;
    const auto tagged = search(s);
    if (tagged.empty()) {
      r.require(enumerate_all(s).empty(), "derivable only without focusing: " + to_string(s));
      return;
    }
    ++derivable_count;
    const auto gc = generator_classes(s);
    r.require(gc.class_count == tagged.size(),
              to_string(s) + ": " + std::to_string(tagged.size()) + " focused vs " +
                  std::to_string(gc.class_count) + " classes");
    for (const auto& f : tagged) {
      r.require(focus(emb(f)) == f, "focus(emb f) != f on " + to_string(s));
      ++focused;
    }
    for (std::size_t i = 0; i < gc.derivations.size(); ++i) {
      const Derivation back = emb(focus(gc.derivations[i]));
      const auto it = std::find(gc.derivations.begin(), gc.derivations.end(), back);
      r.require(it != gc.derivations.end() &&
                    gc.class_of[static_cast<std::size_t>(it - gc.derivations.begin())] ==
                        gc.class_of[i],
                "emb(focus d) leaves the class of d on " + to_string(s));
      ++unfocused;
    }
  });
  r.require(sequents >= 500, "family has fewer than 500 sequents");
  r.note("family: " + std::to_string(sequents) + " sequents, " + std::to_string(derivable_count) +
         " derivable");
  r.note("checked " + std::to_string(focused) + " focused and " + std::to_string(unfocused) +
         " unfocused derivations");
}

void rewrite_system(Report& r) {
  std::size_t derivations = 0, edges = 0, peaks = 0, unjoinable = 0, disagreements = 0,
              focus_dis = 0, nonconfluent_sequents = 0;
  bool terminating = true;
  std::optional<RewriteAnalysis> witness;
  std::optional<Sequent> witness_sequent;
  Budget budget(Budget::kUnlimited);
  for (const auto& s : derivable()) {
    const auto a = analyze_rewriting(s, &budget);
    derivations += a.derivations;
    edges += a.edges;
    peaks += a.peaks;
    unjoinable += a.unjoinable_peaks;
    disagreements += a.strategy_disagreements;
    focus_dis += a.focus_disagreements;
    terminating = terminating && a.terminating;
    if (a.unjoinable_peaks > 0) {
      ++nonconfluent_sequents;
      if (!witness || a.derivations < witness->derivations) {
        witness = a;
        witness_sequent = s;
      }
    }
  }
  r.require(terminating, "a rewrite cycle exists");
  r.require(unjoinable == 0, std::to_string(unjoinable) + " of " + std::to_string(peaks) +
                                 " one-step peaks do not rejoin (" +
                                 std::to_string(nonconfluent_sequents) + " sequents)");
  r.require(disagreements == 0, std::to_string(disagreements) +
                                    " derivations normalize differently under leftmost-innermost "
                                    "and rightmost-outermost");
  r.note("terminating: " + std::string(terminating ? "yes" : "no") + " (" +
         std::to_string(derivations) + " derivations, " + std::to_string(edges) +
         " rewrite steps, no cycles)");
  r.note("innermost normal form differs from emb(focus d) for " + std::to_string(focus_dis) +
         " derivations");
  if (witness) {
    r.note("smallest witness sequent: " + to_string(*witness_sequent));
    r.note("  source: " + to_sexpr(*witness->peak_source));
    r.note("  reduct: " + to_sexpr(*witness->peak_left) + " -> " +
           to_sexpr(normalize(*witness->peak_left)));
    r.note("  reduct: " + to_sexpr(*witness->peak_right) + " -> " +
           to_sexpr(normalize(*witness->peak_right)));
    r.note("  both normal forms have the same focused image: " +
           std::string(focus(*witness->peak_left) == focus(*witness->peak_right) ? "yes" : "no"));
  }
}

void cut_admissibility(Report& r) {
  std::mt19937 rng(2024);
  const auto pool = testing::derivable_family({.max_connectives = 4, .max_atom_pairs = 2, .max_context = 2});
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const auto same = [](const Derivation& a, const Derivation& b) { return focus(a) == focus(b); };
  std::size_t scut_pairs = 0, ccut_pairs = 0, triples = 0;
  for (std::size_t attempt = 0; attempt < 20000 && (scut_pairs < 250 || ccut_pairs < 250); ++attempt) {
    const Sequent& s = pool[pick(rng)];
    const Derivation f = testing::random_derivation(rng, s);
    if (scut_pairs < 250) {
      if (const auto gs = testing::random_sequent_with_stoup(rng, s.succedent, 200)) {
        const Derivation g = testing::random_derivation(rng, *gs);
        const Derivation fg = scut(f, g);
        const std::string where = to_sexpr(f) + " ; " + to_sexpr(g);
        r.require(validate(fg) && fg.is_cut_free(), "scut output invalid: " + where);
        r.require(fg.conclusion() == scut_node(f, g).conclusion(), "scut end sequent: " + where);
        r.require(same(scut(ax(*gs->stoup), g), g), "scut left unit: " + where);
        r.require(same(scut(f, ax(s.succedent)), f), "scut right unit: " + where);
        ++scut_pairs;
        if (const auto hs = testing::random_sequent_with_stoup(rng, gs->succedent, 200)) {
          const Derivation h = testing::random_derivation(rng, *hs);
          r.require(same(scut(fg, h), scut(f, scut(g, h))), "scut associativity: " + where);
          ++triples;
        }
      }
    }
    if (ccut_pairs < 250 && !s.stoup) {
      if (const auto gs = testing::random_sequent_with_context_formula(rng, s.succedent, 200)) {
        const Derivation g = testing::random_derivation(rng, gs->first);
        const std::size_t pos = gs->second;
        const Derivation c = ccut(f, g, pos);
        const std::string where = to_sexpr(f) + " ; " + to_sexpr(g);
        r.require(validate(c) && c.is_cut_free(), "ccut output invalid: " + where);
        r.require(c.conclusion() == ccut_node(f, g, pos).conclusion(), "ccut end sequent: " + where);
        r.require(same(ccut(pass(ax(s.succedent)), g, pos), g), "ccut left unit: " + where);
        r.require(same(ccut(f, pass(ax(s.succedent)), 0), f), "ccut right unit: " + where);
        // Associativity against scut: cutting f into g then g into h's stoup.
        if (const auto hs = testing::random_sequent_with_stoup(rng, gs->first.succedent, 200)) {
          const Derivation h = testing::random_derivation(rng, *hs);
          r.require(same(scut(c, h), ccut(f, scut(g, h), pos)), "ccut/scut associativity: " + where);
          ++triples;
        }
        ++ccut_pairs;
      }
    }
  }
  r.require(scut_pairs >= 200 && ccut_pairs >= 200, "not enough composable pairs found");
  r.note(std::to_string(scut_pairs) + " scut pairs, " + std::to_string(ccut_pairs) +
         " ccut pairs, " + std::to_string(triples) + " associativity triples");
}

void hilbert_coherence(Report& r) {
  const Formula x = F("X"), y = F("Y"), z = F("Z"), w = F("W"), i = Formula::unit();
  const auto c = [](const H& f, const H& g) { return H::comp(f, g); };
  const auto t = [](const Formula& a, const Formula& b) { return Formula::tensor(a, b); };
  const std::vector<std::pair<const char*, std::pair<H, H>>> diagrams = {
      {"lambda_I . rho_I = id", {c(H::rho(i), H::lam(i)), H::id(i)}},
      {"(A * lambda) . alpha . (rho * B) = id",
       {c(c(H::tensor(H::rho(x), H::id(y)), H::alpha(x, i, y)), H::tensor(H::id(x), H::lam(y))),
        H::id(t(x, y))}},
      {"lambda_{A*B} . alpha = lambda_A * B",
       {c(H::alpha(i, x, y), H::lam(t(x, y))), H::tensor(H::lam(x), H::id(y))}},
      {"alpha . rho_{A*B} = A * rho_B",
       {c(H::rho(t(x, y)), H::alpha(x, y, i)), H::tensor(H::id(x), H::rho(y))}},
      {"pentagon",
       {c(H::alpha(t(x, y), z, w), H::alpha(x, y, t(z, w))),
        c(c(H::tensor(H::alpha(x, y, z), H::id(w)), H::alpha(x, t(y, z), w)),
          H::tensor(H::id(x), H::alpha(y, z, w)))}},
  };
  for (const auto& [name, eq] : diagrams) {
    r.require(validate_hilbert(eq.first) && validate_hilbert(eq.second) &&
                  hilbert_equal(eq.first, eq.second),
              std::string("diagram ") + name);
  }
  r.note("five Mac Lane diagrams hold at atoms");

  std::mt19937 rng(99);
  std::size_t terms = 0;
  for (int k = 0; k < 500; ++k) {
    const Formula a = testing::random_formula(rng, 3, {"X", "Y", "Z"});
    const H term = testing::random_term_from(rng, a, 3);
    r.require(validate_hilbert(term), "generated term ill typed: " + to_string(term));
    r.require(hilbert_equal(from_seqcalc(to_seqcalc(term)), term),
              "from_seqcalc(to_seqcalc t) != t for " + to_string(term));
    ++terms;
  }
  std::size_t derivs = 0;
  for (const auto& s : testing::derivable_family({.max_connectives = 4, .max_atom_pairs = 2, .max_context = 2})) {
    for (const auto& d : enumerate_all(s)) {
      r.require(equivalent(to_seqcalc(from_seqcalc(d)), closed(d)),
                "to_seqcalc(from_seqcalc d) not equivalent to d: " + to_sexpr(d));
      ++derivs;
    }
  }
  r.note("round trips: " + std::to_string(terms) + " generated terms, " + std::to_string(derivs) +
         " enumerated derivations");
  const auto m1 = count_maps(x, t(i, x));
  const auto m2 = count_maps(t(i, x), x);
  r.require(m1 == 0, "count_maps(X, I * X) = " + std::to_string(m1));
  r.require(m2 == 1, "count_maps(I * X, X) = " + std::to_string(m2));
  r.note("count_maps(X, I * X) = " + std::to_string(m1) + ", count_maps(I * X, X) = " +
         std::to_string(m2));
}

}  // namespace

int main() {
  criterion(1, "derivability goldens", derivability_goldens);
  criterion(2, "essential non-determinism counts", essential_counts);
  criterion(3, "naive vs tagged counts", naive_vs_tagged);
  criterion(4, "bijection suite", bijection_suite);
  criterion(5, "rewrite system: termination, local confluence, strategy independence",
            rewrite_system);
  criterion(6, "cut admissibility", cut_admissibility);
  criterion(7, "Hilbert coherence", hilbert_coherence);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
