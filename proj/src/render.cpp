#include "sknmill/render.hpp"

#include <algorithm>
#include <vector>

namespace sknmill {

namespace {

std::string ascii_label(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Pass: return "pass";
    case Rule::LolliL: return "-oL";
    case Rule::LolliR: return "-oR";
    case Rule::UnitL: return "IL";
    case Rule::TensorL: return "*L";
    case Rule::UnitR: return "IR";
    case Rule::TensorR: return "*R";
    case Rule::Scut: return "scut";
    case Rule::Ccut: return "ccut";
  }
  return "?";
}

std::string ascii_label(FocusedRule r) {
  switch (r) {
    case FocusedRule::LolliR: return "-oR";
    case FocusedRule::LI2RI: return "LI2RI";
    case FocusedRule::UnitL: return "IL";
    case FocusedRule::TensorL: return "*L";
    case FocusedRule::P2LI: return "P2LI";
    case FocusedRule::Pass: return "pass";
    case FocusedRule::F2P: return "F2P";
    case FocusedRule::Ax: return "ax";
    case FocusedRule::UnitR: return "IR";
    case FocusedRule::TensorR: return "*R";
    case FocusedRule::LolliL: return "-oL";
  }
  return "?";
}

std::string latex_label(Rule r) {
  switch (r) {
    case Rule::Ax: return "\\mathsf{ax}";
    case Rule::Pass: return "\\mathsf{pass}";
    case Rule::LolliL: return "{\\multimap}\\mathsf{L}";
    case Rule::LolliR: return "{\\multimap}\\mathsf{R}";
    case Rule::UnitL: return "\\mathsf{IL}";
    case Rule::TensorL: return "{\\otimes}\\mathsf{L}";
    case Rule::UnitR: return "\\mathsf{IR}";
    case Rule::TensorR: return "{\\otimes}\\mathsf{R}";
    case Rule::Scut: return "\\mathsf{scut}";
    case Rule::Ccut: return "\\mathsf{ccut}";
  }
  return "?";
}

std::string latex_label(FocusedRule r) {
  switch (r) {
    case FocusedRule::LI2RI: return "\\mathsf{LI2RI}";
    case FocusedRule::P2LI: return "\\mathsf{P2LI}";
    case FocusedRule::F2P: return "\\mathsf{F2P}";
    case FocusedRule::LolliR: return latex_label(Rule::LolliR);
    case FocusedRule::UnitL: return latex_label(Rule::UnitL);
    case FocusedRule::TensorL: return latex_label(Rule::TensorL);
    case FocusedRule::Pass: return latex_label(Rule::Pass);
    case FocusedRule::Ax: return latex_label(Rule::Ax);
    case FocusedRule::UnitR: return latex_label(Rule::UnitR);
    case FocusedRule::TensorR: return latex_label(Rule::TensorR);
    case FocusedRule::LolliL: return latex_label(Rule::LolliL);
  }
  return "?";
}

// A rendered subtree: lines top to bottom, all padded to `width`, with the
// conclusion on the last line spanning [left, right).
struct Block {
  std::vector<std::string> lines;
  std::size_t width = 0;
  std::size_t left = 0;
  std::size_t right = 0;
};

void pad_to(std::string& s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
}

Block combine(const std::vector<Block>& premises, const std::string& conclusion,
              const std::string& label) {
  constexpr std::size_t kGap = 3;
  // Premises side by side, bottom-aligned.
  Block above;
  std::size_t height = 0;
  for (const auto& p : premises) height = std::max(height, p.lines.size());
  above.lines.assign(height, "");
  std::size_t offset = 0;
  std::size_t first_left = 0;
  std::size_t last_right = 0;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const Block& p = premises[i];
    if (i > 0) offset += kGap;
    const std::size_t shift = height - p.lines.size();
    for (std::size_t r = 0; r < height; ++r) {
      pad_to(above.lines[r], offset);
      above.lines[r] += r < shift ? std::string(p.width, ' ') : p.lines[r - shift];
    }
    if (i == 0) first_left = offset + p.left;
    last_right = offset + p.right;
    offset += p.width;
  }
  above.width = offset;

  // Inference line covers the premises' conclusions and the conclusion.
  const std::size_t span_premises = premises.empty() ? 0 : last_right - first_left;
  const std::size_t bar = std::max(span_premises, conclusion.size());
  std::size_t bar_left = premises.empty() ? 0 : first_left;
  if (bar > span_premises) {
    const std::size_t extra = bar - span_premises;
    bar_left = bar_left >= extra / 2 ? bar_left - extra / 2 : 0;
  }
  Block out;
  out.lines = std::move(above.lines);
  const std::string rule_line = std::string(bar_left, ' ') + std::string(bar, '-') + " " + label;
  out.lines.push_back(rule_line);
  const std::size_t concl_left = bar_left + (bar - conclusion.size()) / 2;
  out.lines.push_back(std::string(concl_left, ' ') + conclusion);
  out.width = 0;
  for (const auto& l : out.lines) out.width = std::max(out.width, l.size());
  for (auto& l : out.lines) pad_to(l, out.width);
  out.left = concl_left;
  out.right = concl_left + conclusion.size();
  return out;
}

std::string finish_ascii(const Block& b) {
  std::string out;
  for (const auto& l : b.lines) {
    std::string t = l;
    while (!t.empty() && t.back() == ' ') t.pop_back();
    out += t + "\n";
  }
  return out;
}

Block ascii_block(const Derivation& d) {
  std::vector<Block> premises;
  for (const auto& p : d.premises()) premises.push_back(ascii_block(p));
  return combine(premises, to_string(d.conclusion()), ascii_label(d.rule()));
}

Block ascii_block(const FocusedDerivation& d) {
  std::vector<Block> premises;
  for (const auto& p : d.premises()) premises.push_back(ascii_block(p));
  return combine(premises, to_string(d.conclusion()), ascii_label(d.rule()));
}

// ---------------------------------------------------------------------------
// LaTeX

std::string latex_atom(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '_') {
      out += "\\_";
    } else {
      out += c;
    }
  }
  return name.size() == 1 ? out : "\\mathit{" + out + "}";
}

std::string latex_stoup(const Stoup& s) { return s ? latex_formula(*s) : "{-}"; }

std::string latex_sequent(const Sequent& s) {
  std::string out = latex_stoup(s.stoup) + " \\mid ";
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i > 0) out += ", ";
    out += latex_formula(s.context[i]);
  }
  return out + " \\vdash " + latex_formula(s.succedent);
}

std::string latex_sequent(const FocusedSequent& s) {
  std::string out = latex_stoup(s.stoup) + " \\mid ";
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i > 0) out += ", ";
    out += latex_formula(s.context[i].formula);
    if (s.context[i].tagged) out += "^{\\bullet}";
  }
  out += " \\vdash";
  if (s.tagged) out += "^{\\bullet}";
  out += "_{\\mathsf{" + std::string(phase_name(s.phase)) + "}} ";
  return out + latex_formula(s.succedent);
}

template <class D>
void latex_tree(const D& d, std::string& out) {
  for (const auto& p : d.premises()) latex_tree(p, out);
  if (d.premises().empty()) out += "\\AxiomC{}\n";
  out += "\\RightLabel{$" + latex_label(d.rule()) + "$}\n";
  static constexpr const char* kInf[] = {"\\UnaryInfC", "\\UnaryInfC", "\\BinaryInfC"};
  out += std::string(kInf[std::max<std::size_t>(d.premises().size(), 1)]) + "{$" +
         latex_sequent(d.conclusion()) + "$}\n";
}

template <class D>
std::string latex_document(const D& d) {
  std::string out =
      "\\documentclass{article}\n"
      "\\usepackage{amssymb}\n"
      "\\usepackage{bussproofs}\n"
      "\\begin{document}\n"
      "\\begin{prooftree}\n";
  latex_tree(d, out);
  out +=
      "\\end{prooftree}\n"
      "\\end{document}\n";
  return out;
}

}  // namespace

std::string latex_formula(const Formula& f) {
  const auto wrap = [](const Formula& g, bool parens) {
    return parens ? "(" + latex_formula(g) + ")" : latex_formula(g);
  };
  switch (f.kind()) {
    case Connective::Atom:
      return latex_atom(f.name());
    case Connective::Unit:
      return "\\mathsf{I}";
    case Connective::Tensor:
      return wrap(f.left(), f.left().is_lolli()) + " \\otimes " +
             wrap(f.right(), !f.right().is_atom() && !f.right().is_unit());
    case Connective::Lolli:
      return wrap(f.left(), f.left().is_lolli()) + " \\multimap " + latex_formula(f.right());
  }
  return "?";
}

std::string render(const Derivation& d, RenderFormat format) {
  if (format == RenderFormat::Latex) return latex_document(d);
  return finish_ascii(ascii_block(d));
}

std::string render(const FocusedDerivation& d, RenderFormat format) {
  if (format == RenderFormat::Latex) return latex_document(d);
  return finish_ascii(ascii_block(d));
}

}  // namespace sknmill
