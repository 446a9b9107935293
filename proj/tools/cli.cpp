#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "render.hpp"
#include "wrd/error.hpp"
#include "wrd/lifting.hpp"
#include "wrd/reduction.hpp"

namespace wrd::cli {

namespace {

enum class PuzzleKind { Numberlink, Wataridori };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  file << text;
}

PuzzleKind puzzle_kind(const std::string& text, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("puzzle")) {
    if (doc["puzzle"] == "numberlink") return PuzzleKind::Numberlink;
    if (doc["puzzle"] == "wataridori") return PuzzleKind::Wataridori;
  }
  throw Error(ErrorCode::ParseError, path + ": \"puzzle\" must be \"numberlink\" or \"wataridori\"");
}

// Numberlink solutions label their paths, Wataridori solutions do not.
void check_solution_kind(const std::string& text, PuzzleKind kind, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array()) return;
  for (const auto& p : doc["paths"]) {
    if (!p.is_object()) continue;
    const bool labeled = p.contains("label");
    if (labeled != (kind == PuzzleKind::Numberlink)) {
      throw Error(ErrorCode::InvalidArgument, path + ": solution kind does not match the puzzle");
    }
  }
}

struct Options {
  std::string input;
  std::string output;
  std::string solution;
  std::string g_input;
  std::string map;
  std::string format = "ascii";
  std::uint64_t budget = kDefaultBudget;
  bool require_coverage = false;
  std::optional<int> k;
};

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(o.input);
  auto report = [&](auto result, auto write) {
    err << to_string(result.status) << " nodes=" << result.nodes << "\n";
    switch (result.status) {
      case SolveStatus::Solved:
        write_output(o.output, write(*result.solution), out);
        return static_cast<int>(kOk);
      case SolveStatus::Unsat: return static_cast<int>(kNegative);
      case SolveStatus::BudgetExceeded: return static_cast<int>(kBudget);
    }
    return static_cast<int>(kUsage);
  };
  if (puzzle_kind(text, o.input) == PuzzleKind::Numberlink) {
    return report(solve(parse_numberlink_instance(text), o.budget),
                  [](const NumberlinkSolution& s) { return serialize(s); });
  }
  return report(solve(parse_wataridori_instance(text), o.budget),
                [](const WataridoriSolution& s) { return serialize(s); });
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  const std::string sol_text = read_file(o.solution);
  const PuzzleKind kind = puzzle_kind(text, o.input);
  check_solution_kind(sol_text, kind, o.solution);
  Verdict verdict;
  if (kind == PuzzleKind::Numberlink) {
    verdict = verify_solution(parse_numberlink_instance(text), parse_numberlink_solution(sol_text), o.require_coverage);
  } else {
    verdict = verify_solution(parse_wataridori_instance(text), parse_wataridori_solution(sol_text));
  }
  out << format_verdict(verdict) << "\n";
  return verdict.accepted() ? kOk : kNegative;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.input);
  if (puzzle_kind(text, o.input) != PuzzleKind::Numberlink) {
    throw Error(ErrorCode::InvalidArgument, o.input + ": reduce expects a Numberlink puzzle");
  }
  const NumberlinkInstance g = parse_numberlink_instance(text);
  const Reduction r = o.k ? reduce(g, *o.k) : reduce(g);
  write_output(o.output, serialize(r.puzzle), out);
  write_output(o.map, serialize(r.map), out);
  return kOk;
}

int cmd_lift(const Options& o, std::ostream& out) {
  const NumberlinkInstance g = parse_numberlink_instance(read_file(o.g_input));
  const NumberlinkSolution s = parse_numberlink_solution(read_file(o.solution));
  const ReductionMap map = parse_reduction_map(read_file(o.map));
  write_output(o.output, serialize(lift(g, s, map)), out);
  return kOk;
}

int cmd_unlift(const Options& o, std::ostream& out) {
  const WataridoriSolution h = parse_wataridori_solution(read_file(o.solution));
  const ReductionMap map = parse_reduction_map(read_file(o.map));
  write_output(o.output, serialize(unlift(h, map)), out);
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.format != "ascii" && o.format != "svg") {
    throw Error(ErrorCode::InvalidArgument, "unknown render format \"" + o.format + "\"");
  }
  const bool svg = o.format == "svg";
  const std::string text = read_file(o.input);
  const PuzzleKind kind = puzzle_kind(text, o.input);
  std::optional<std::string> sol_text;
  if (!o.solution.empty()) {
    sol_text = read_file(o.solution);
    check_solution_kind(*sol_text, kind, o.solution);
  }
  std::string rendered;
  if (kind == PuzzleKind::Numberlink) {
    const NumberlinkInstance inst = parse_numberlink_instance(text);
    std::optional<NumberlinkSolution> sol;
    if (sol_text) sol = parse_numberlink_solution(*sol_text);
    rendered = svg ? render_svg(inst, sol ? &*sol : nullptr) : render_ascii(inst, sol ? &*sol : nullptr);
  } else {
    const WataridoriInstance inst = parse_wataridori_instance(text);
    std::optional<WataridoriSolution> sol;
    if (sol_text) sol = parse_wataridori_solution(*sol_text);
    rendered = svg ? render_svg(inst, sol ? &*sol : nullptr) : render_ascii(inst, sol ? &*sol : nullptr);
  }
  write_output(o.output, rendered, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numberlink / Wataridori solver, verifier and reduction toolkit", "wrd"};
  app.require_subcommand(1, 1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a Numberlink or Wataridori puzzle");
  solve_cmd->add_option("-i,--input", o.input, "Puzzle document")->required();
  solve_cmd->add_option("-o,--output", o.output, "Solution document (default: stdout)");
  solve_cmd->add_option("--budget", o.budget, "Search node limit")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against its puzzle");
  verify_cmd->add_option("-i,--input", o.input, "Puzzle document")->required();
  verify_cmd->add_option("-s,--solution", o.solution, "Solution document")->required();
  verify_cmd->add_flag("--require-coverage", o.require_coverage, "Numberlink: every cell must be covered");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a Numberlink puzzle to Wataridori");
  reduce_cmd->add_option("-i,--input", o.input, "Numberlink document")->required();
  reduce_cmd->add_option("-o,--output", o.output, "Wataridori document")->required();
  reduce_cmd->add_option("--map", o.map, "Reduction map document")->required();
  reduce_cmd->add_option("--k", o.k, "Gadget parameter (default: chosen from the label count)");

  auto* lift_cmd = app.add_subcommand("lift", "Map a Numberlink solution onto the reduced puzzle");
  lift_cmd->add_option("-g", o.g_input, "Numberlink document")->required();
  lift_cmd->add_option("-s,--solution", o.solution, "Numberlink solution")->required();
  lift_cmd->add_option("--map", o.map, "Reduction map document")->required();
  lift_cmd->add_option("-o,--output", o.output, "Wataridori solution (default: stdout)");

  auto* unlift_cmd = app.add_subcommand("unlift", "Recover a Numberlink solution from a reduced solution");
  unlift_cmd->add_option("-s,--solution", o.solution, "Wataridori solution")->required();
  unlift_cmd->add_option("--map", o.map, "Reduction map document")->required();
  unlift_cmd->add_option("-o,--output", o.output, "Numberlink solution (default: stdout)");

  auto* render_cmd = app.add_subcommand("render", "Draw a puzzle, optionally with a solution");
  render_cmd->add_option("-i,--input", o.input, "Puzzle document")->required();
  render_cmd->add_option("-s,--solution", o.solution, "Solution document");
  render_cmd->add_option("--format", o.format, "ascii or svg")->capture_default_str();
  render_cmd->add_option("-o,--output", o.output, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (lift_cmd->parsed()) return cmd_lift(o, out);
    if (unlift_cmd->parsed()) return cmd_unlift(o, out);
    if (render_cmd->parsed()) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wrd::cli
