#pragma once

#include <string>

#include "sknmill/derivation.hpp"
#include "sknmill/focused.hpp"

namespace sknmill {

enum class RenderFormat { Ascii, Latex };

/// Proof tree with premises above an inference line labelled by the rule.
/// LaTeX output is a standalone document using bussproofs.
std::string render(const Derivation& d, RenderFormat format);
std::string render(const FocusedDerivation& d, RenderFormat format);

/// Math-mode LaTeX for a formula; atom names are escaped.
std::string latex_formula(const Formula& f);

}  // namespace sknmill
