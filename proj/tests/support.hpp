#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "sknmill/derivation.hpp"
#include "sknmill/formula.hpp"
#include "sknmill/hilbert.hpp"

namespace sknmill::testing {

/// Parameters of the systematic sequent family: every sequent with at most
/// `max_connectives` connectives and at most `max_context` context formulae
/// whose atoms are drawn from X, Y, Z, each used atom occurring exactly
/// twice, named in order of first occurrence.
struct FamilyParams {
  std::size_t max_connectives = 6;
  std::size_t max_atom_pairs = 3;
  std::size_t max_context = 2;
};

/// Calls `visit` on every member of the family, in a fixed order.
void for_each_sequent(const FamilyParams& params, const std::function<void(const Sequent&)>& visit);

/// Members of the family that are derivable.
std::vector<Sequent> derivable_family(const FamilyParams& params);

/// Random formula with at most `max_connectives` connectives over `atoms`.
Formula random_formula(std::mt19937& rng, std::size_t max_connectives,
                       const std::vector<std::string>& atoms);

/// Random well-typed Hilbert term with the given source.
HilbertTerm random_term_from(std::mt19937& rng, const Formula& source, std::size_t depth);

/// Random cut-free derivation of a derivable sequent `s`, drawn uniformly from
/// enumerate_all(s).
Derivation random_derivation(std::mt19937& rng, const Sequent& s);

/// Random derivable sequent whose stoup is `stoup` (when given) or whose
/// context contains `formula` at a random position, or nullopt after
/// `attempts` failed tries.
std::optional<Sequent> random_sequent_with_stoup(std::mt19937& rng, const Formula& stoup,
                                                 std::size_t attempts = 2000);
std::optional<std::pair<Sequent, std::size_t>> random_sequent_with_context_formula(
    std::mt19937& rng, const Formula& formula, std::size_t attempts = 2000);

}  // namespace sknmill::testing
