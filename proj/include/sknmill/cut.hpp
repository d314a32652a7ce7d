#pragma once

#include <cstddef>

#include "sknmill/derivation.hpp"

namespace sknmill {

/// Admissible stoup cut: from f : S|G |- A and g : A|D |- C builds a
/// cut-free derivation of S|G,D |- C. Both inputs must be cut-free.
Derivation scut(const Derivation& f, const Derivation& g);

/// Admissible context cut: from f : -|G |- A and g : S|D0,A,D1 |- C, with
/// `position` = |D0|, builds a cut-free derivation of S|D0,G,D1 |- C.
Derivation ccut(const Derivation& f, const Derivation& g, std::size_t position);

/// Removes every Scut/Ccut node, innermost cuts first.
Derivation eliminate_cuts(const Derivation& d);

/// L*: from d : S|G,D |- C builds [[S|G]] | D |- C, where `prefix` = |G|.
Derivation iter_left(const Derivation& d, std::size_t prefix);

/// -oR*: from d : S|G,D |- C builds S|G |- [[D|C]], where `suffix` = |D|.
Derivation iter_lolli_right(const Derivation& d, std::size_t suffix);

/// -oL_C: from f : -|G |- A and g : S|D0,B,D1 |- C (`position` = |D0|)
/// builds S|D0,A -o B,G,D1 |- C as ccut(pass(lolli_l(f, ax B)), g).
Derivation lolli_left_ctx(const Derivation& f, const Derivation& g, std::size_t position);

}  // namespace sknmill
