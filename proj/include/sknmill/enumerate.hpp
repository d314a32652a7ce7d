#pragma once

#include <vector>

#include "sknmill/budget.hpp"
#include "sknmill/derivation.hpp"

namespace sknmill {

/// Every cut-free derivation of `s`, each exactly once.
///
/// Rules are tried in the order ax, uR, uL, tL, pass, lR, tR, lL, and context
/// splits from left to right, which fixes the output order.
std::vector<Derivation> enumerate_all(const Sequent& s, Budget* budget = nullptr);

/// Derivability, decided by focused proof search.
bool is_derivable(const Sequent& s);

}  // namespace sknmill
