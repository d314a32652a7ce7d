#include "sknmill/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sknmill/cut.hpp"
#include "sknmill/enumerate.hpp"
#include "sknmill/equiv.hpp"
#include "sknmill/focused.hpp"
#include "sknmill/hilbert.hpp"
#include "sknmill/render.hpp"

namespace sknmill::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Backend { Tagged, Naive, Unfocused };

struct Options {
  bool json = false;
  std::size_t budget = 1'000'000;
  std::string calculus = "tagged";
  unsigned jobs = 1;
  std::string format = "ascii";
  std::vector<std::string> inputs;
};

// A failure that maps to an exit status.
struct Failure {
  int code;
  std::string message;
};

Backend backend(const Options& o) {
  if (o.calculus == "naive") return Backend::Naive;
  if (o.calculus == "unfocused") return Backend::Unfocused;
  return Backend::Tagged;
}

Calculus focused_calculus(Backend b) {
  return b == Backend::Naive ? Calculus::Naive : Calculus::Tagged;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read file '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Derivation load_unfocused(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_focused(text)) {
    throw Failure{kUsage, path + ": expected an unfocused derivation, found a focused one"};
  }
  Derivation d = parse_derivation(text);
  if (auto err = check_derivation(d)) throw Failure{kUsage, path + ": " + *err};
  return d;
}

ParsedFocused load_focused(const std::string& path) {
  const std::string text = read_file(path);
  if (!looks_focused(text)) {
    throw Failure{kUsage, path + ": expected a focused derivation header '[RI] ...'"};
  }
  ParsedFocused p = parse_focused(text);
  if (auto err = check_focused(p.derivation, p.calculus)) throw Failure{kUsage, path + ": " + *err};
  return p;
}

// Result of a command before formatting.
struct Outcome {
  int code = kOk;
  std::string text;  // plain-text output
  Json result;       // JSON "result" field
  std::optional<std::uint64_t> count;
  std::optional<std::vector<std::string>> derivations;
};

Outcome text_outcome(std::string text) {
  Outcome o;
  o.result = text;
  o.text = std::move(text);
  return o;
}

Outcome decision(bool yes, const char* positive, const char* negative) {
  Outcome o;
  o.code = yes ? kOk : kNegative;
  o.text = std::string(yes ? positive : negative) + "\n";
  o.result = yes;
  return o;
}

Outcome cmd_derive(const Options& opt, Budget& budget) {
  const Sequent s = parse_sequent(opt.inputs.at(0));
  const Backend b = backend(opt);
  if (b == Backend::Unfocused) {
    const auto all = enumerate_all(s, &budget);
    if (all.empty()) return decision(false, "", "not derivable");
    return text_outcome(to_text(all.front()));
  }
  const auto d = derive_first(s, focused_calculus(b));
  if (!d) return decision(false, "", "not derivable");
  return text_outcome(to_text(*d, focused_calculus(b)));
}

Outcome cmd_enumerate(const Options& opt, Budget& budget) {
  const Sequent s = parse_sequent(opt.inputs.at(0));
  const Backend b = backend(opt);
  std::vector<std::string> texts;
  if (b == Backend::Unfocused) {
    for (const auto& d : enumerate_all(s, &budget)) texts.push_back(to_text(d));
  } else {
    const Calculus c = focused_calculus(b);
    for (const auto& d : search(s, c, &budget)) texts.push_back(to_text(d, c));
  }
  Outcome o;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (i > 0) o.text += "\n";
    o.text += texts[i];
  }
  o.result = texts.size();
  o.count = texts.size();
  o.derivations = std::move(texts);
  return o;
}

Outcome cmd_count(const Options& opt, Budget& budget) {
  const Sequent s = parse_sequent(opt.inputs.at(0));
  const Backend b = backend(opt);
  const std::uint64_t n = b == Backend::Unfocused ? enumerate_all(s, &budget).size()
                                                  : count_derivations(s, focused_calculus(b));
  Outcome o;
  o.text = std::to_string(n) + "\n";
  o.result = n;
  o.count = n;
  return o;
}

Outcome cmd_decide(const Options& opt) {
  return decision(is_derivable(parse_sequent(opt.inputs.at(0))), "derivable", "not derivable");
}

Outcome cmd_normalize(const Options& opt, Budget& budget) {
  return text_outcome(
      to_text(normalize(load_unfocused(opt.inputs.at(0)), Strategy::LeftmostInnermost, &budget)));
}

Outcome cmd_eq(const Options& opt) {
  const Derivation a = load_unfocused(opt.inputs.at(0));
  const Derivation b = load_unfocused(opt.inputs.at(1));
  if (!(a.conclusion() == b.conclusion())) {
    throw Failure{kUsage, "derivations conclude different sequents: " + to_string(a.conclusion()) +
                              " and " + to_string(b.conclusion())};
  }
  return decision(equivalent(a, b), "equivalent", "not equivalent");
}

Outcome cmd_focus(const Options& opt) {
  return text_outcome(to_text(focus(load_unfocused(opt.inputs.at(0)))));
}

Outcome cmd_emb(const Options& opt) {
  return text_outcome(to_text(emb(load_focused(opt.inputs.at(0)).derivation)));
}

Outcome cmd_hilbert2seq(const Options& opt) {
  const HilbertTerm t = parse_hilbert(read_file(opt.inputs.at(0)));
  if (auto err = check_hilbert(t)) throw Failure{kUsage, opt.inputs.at(0) + ": " + *err};
  return text_outcome(to_text(to_seqcalc(t)));
}

Outcome cmd_seq2hilbert(const Options& opt) {
  const std::string& path = opt.inputs.at(0);
  const Derivation d = looks_focused(read_file(path)) ? emb(load_focused(path).derivation)
                                                      : load_unfocused(path);
  return text_outcome(to_string(from_seqcalc(d)) + "\n");
}

Outcome cmd_render(const Options& opt) {
  const std::string& path = opt.inputs.at(0);
  const RenderFormat f = opt.format == "latex" ? RenderFormat::Latex : RenderFormat::Ascii;
  if (looks_focused(read_file(path))) return text_outcome(render(load_focused(path).derivation, f));
  return text_outcome(render(load_unfocused(path), f));
}

Outcome dispatch(const std::string& command, const Options& opt, Budget& budget) {
  if (command == "derive") return cmd_derive(opt, budget);
  if (command == "enumerate") return cmd_enumerate(opt, budget);
  if (command == "count") return cmd_count(opt, budget);
  if (command == "decide") return cmd_decide(opt);
  if (command == "normalize") return cmd_normalize(opt, budget);
  if (command == "eq") return cmd_eq(opt);
  if (command == "focus") return cmd_focus(opt);
  if (command == "emb") return cmd_emb(opt);
  if (command == "hilbert2seq") return cmd_hilbert2seq(opt);
  if (command == "seq2hilbert") return cmd_seq2hilbert(opt);
  if (command == "render") return cmd_render(opt);
  throw Failure{kUsage, "unknown command '" + command + "'"};
}

void emit(std::ostream& out, const std::string& command, const Options& opt, const Outcome& o) {
  Json env;
  env["command"] = command;
  env["input"] = opt.inputs.size() == 1 ? Json(opt.inputs.front()) : Json(opt.inputs);
  env["result"] = o.result;
  if (o.count) env["count"] = *o.count;
  if (o.derivations) env["derivations"] = *o.derivations;
  out << env.dump(2) << "\n";
}

void emit_error(std::ostream& out, std::ostream& err, const std::string& command,
                const Options& opt, const Failure& f) {
  if (opt.json) {
    Json env;
    env["command"] = command;
    env["input"] = opt.inputs.size() == 1 ? Json(opt.inputs.front()) : Json(opt.inputs);
    env["result"] = nullptr;
    env["error"] = f.message;
    env["exit"] = f.code;
    out << env.dump(2) << "\n";
  }
  err << "error: " << f.message << "\n";
}

struct CommandSpec {
  const char* name;
  const char* help;
  const char* arg;
  int arity;
};

constexpr CommandSpec kCommands[] = {
    {"derive", "Print one focused derivation of SEQ, or fail", "SEQ", 1},
    {"enumerate", "Print every derivation of SEQ", "SEQ", 1},
    {"count", "Print the number of derivations of SEQ", "SEQ", 1},
    {"decide", "Decide derivability of SEQ", "SEQ", 1},
    {"normalize", "Rewrite a derivation to normal form", "FILE", 1},
    {"eq", "Decide equivalence of two derivations", "FILE", 2},
    {"focus", "Map a derivation to its focused normal form", "FILE", 1},
    {"emb", "Erase phases and tags of a focused derivation", "FILE", 1},
    {"hilbert2seq", "Translate a Hilbert-style term to a derivation", "FILE", 1},
    {"seq2hilbert", "Translate a derivation to a Hilbert-style term", "FILE", 1},
    {"render", "Draw a derivation as a proof tree", "FILE", 1},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof search, normalisation and coherence for skew monoidal closed logic",
               "sknmill"};
  app.require_subcommand(1, 1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a JSON envelope");
  app.add_option("--budget", opt.budget, "Node budget for search and rewriting")
      ->capture_default_str();
  app.add_option("--calculus", opt.calculus, "Backend for derive/enumerate/count")
      ->check(CLI::IsMember({"tagged", "naive", "unfocused"}))
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads (accepted; runs sequentially)")
      ->check(CLI::PositiveNumber);

  for (const auto& spec : kCommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    sub->add_option(spec.arg, opt.inputs, spec.arity == 2 ? "Two input files" : "Input")
        ->required()
        ->expected(spec.arity);
    if (std::string_view(spec.name) == "render") {
      sub->add_option("--format", opt.format, "Output format")
          ->check(CLI::IsMember({"ascii", "latex"}))
          ->capture_default_str();
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Budget budget(opt.budget);
  try {
    const Outcome o = dispatch(command, opt, budget);
    if (opt.json) {
      emit(out, command, opt, o);
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const Failure& f) {
    emit_error(out, err, command, opt, f);
    return f.code;
  } catch (const ParseError& e) {
    emit_error(out, err, command, opt, Failure{kUsage, e.what()});
    return kUsage;
  } catch (const BudgetExceeded& e) {
    emit_error(out, err, command, opt, Failure{kBudget, e.what()});
    return kBudget;
  } catch (const std::exception& e) {
    emit_error(out, err, command, opt, Failure{kUsage, e.what()});
    return kUsage;
  }
}

}  // namespace sknmill::cli
