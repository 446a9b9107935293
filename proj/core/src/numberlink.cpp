#include "wrd/numberlink.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wrd/error.hpp"

namespace wrd {

namespace {

std::string cell_text(CellCoord c) {
  std::ostringstream os;
  os << "(" << c.x << "," << c.y << ")";
  return os.str();
}

bool yx_less(CellCoord a, CellCoord b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

}  // namespace

NumberlinkInstance validate_instance(const NumberlinkInstance& inst) {
  if (inst.width <= 0 || inst.height <= 0) {
    throw Error(ErrorCode::InvalidArgument, "grid dimensions must be positive");
  }
  std::vector<int> order;
  std::map<int, std::vector<CellCoord>> by_label;
  for (const Terminal& t : inst.terminals) {
    if (t.label <= 0) throw Error(ErrorCode::InvalidLabel, "label " + std::to_string(t.label) + " is not positive");
    for (CellCoord c : t.cells) {
      if (!in_bounds(c, inst.width, inst.height)) {
        throw Error(ErrorCode::OutOfBounds, "terminal " + cell_text(c) + " of label " + std::to_string(t.label) +
                                                " is outside the grid");
      }
    }
    auto [it, inserted] = by_label.try_emplace(t.label);
    if (inserted) order.push_back(t.label);
    it->second.insert(it->second.end(), t.cells.begin(), t.cells.end());
  }
  if (order.empty()) throw Error(ErrorCode::NoLabels, "instance has no terminals");

  std::set<CellCoord> used;
  NumberlinkInstance out{inst.width, inst.height, {}};
  for (int label : order) {
    const auto& cells = by_label[label];
    if (cells.size() != 2) {
      throw Error(ErrorCode::LabelMultiplicity,
                  "label " + std::to_string(label) + " appears " + std::to_string(cells.size()) + " times");
    }
    for (CellCoord c : cells) {
      if (!used.insert(c).second) throw Error(ErrorCode::DuplicateTerminal, "cell " + cell_text(c) + " holds two terminals");
    }
    out.terminals.push_back({static_cast<int>(out.terminals.size()) + 1, cells});
  }
  return out;
}

Verdict verify_solution(const NumberlinkInstance& inst, const NumberlinkSolution& sol, bool require_full_coverage) {
  const auto& paths = sol.paths;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Path& p = paths[i].cells;
    if (p.size() < 2) {
      return Verdict::reject(Rule::PathTooShort, idx, p.empty() ? std::nullopt : std::optional(p.front()),
                             "a path needs at least two cells");
    }
    std::set<CellCoord> seen;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!in_bounds(p[j], inst.width, inst.height)) {
        return Verdict::reject(Rule::OutOfBounds, idx, p[j], "cell outside the grid");
      }
      if (j > 0 && !adjacent(p[j - 1], p[j])) {
        return Verdict::reject(Rule::NotAdjacent, idx, p[j], "step from " + cell_text(p[j - 1]) + " is not orthogonal");
      }
      if (!seen.insert(p[j]).second) return Verdict::reject(Rule::RepeatedCell, idx, p[j], "path revisits a cell");
    }
  }

  std::map<int, const Terminal*> terminal_of;
  std::map<CellCoord, int> terminal_cells;
  for (const Terminal& t : inst.terminals) {
    terminal_of[t.label] = &t;
    for (CellCoord c : t.cells) terminal_cells[c] = t.label;
  }
  std::map<int, int> path_of;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int idx = static_cast<int>(i);
    const int label = paths[i].label;
    if (!terminal_of.contains(label)) {
      return Verdict::reject(Rule::UnknownLabel, idx, paths[i].cells.front(), "label " + std::to_string(label) + " is not in the instance");
    }
    if (!path_of.emplace(label, idx).second) {
      return Verdict::reject(Rule::DuplicateLabel, idx, paths[i].cells.front(), "second path for label " + std::to_string(label));
    }
  }
  for (const Terminal& t : inst.terminals) {
    if (!path_of.contains(t.label)) {
      return Verdict::reject(Rule::MissingPath, -1, t.cells.front(), "no path for label " + std::to_string(t.label));
    }
  }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Path& p = paths[i].cells;
    const Terminal& t = *terminal_of[paths[i].label];
    const bool forward = p.front() == t.cells[0] && p.back() == t.cells[1];
    const bool backward = p.front() == t.cells[1] && p.back() == t.cells[0];
    if (!forward && !backward) {
      CellCoord bad = (p.front() == t.cells[0] || p.front() == t.cells[1]) ? p.back() : p.front();
      return Verdict::reject(Rule::EndpointMismatch, idx, bad,
                             "endpoints do not match the terminals of label " + std::to_string(t.label));
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (terminal_cells.contains(p[j])) {
        return Verdict::reject(Rule::TerminalCrossed, idx, p[j],
                               "passes through a terminal of label " + std::to_string(terminal_cells[p[j]]));
      }
    }
  }

  std::map<CellCoord, int> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (CellCoord c : paths[i].cells) {
      auto [it, inserted] = owner.emplace(c, static_cast<int>(i));
      if (!inserted) {
        return Verdict::reject(Rule::CellShared, static_cast<int>(i), c,
                               "cell already used by path " + std::to_string(it->second));
      }
    }
  }

  if (require_full_coverage) {
    for (int y = inst.height - 1; y >= 0; --y) {
      for (int x = 0; x < inst.width; ++x) {
        if (!owner.contains({x, y})) return Verdict::reject(Rule::UncoveredCell, -1, CellCoord{x, y}, "cell not covered by any path");
      }
    }
  }
  return Verdict::accept();
}

NumberlinkSolution normalize_direction(NumberlinkSolution sol) {
  for (LabeledPath& p : sol.paths) {
    if (!p.cells.empty() && yx_less(p.cells.back(), p.cells.front())) std::reverse(p.cells.begin(), p.cells.end());
  }
  std::stable_sort(sol.paths.begin(), sol.paths.end(),
                   [](const LabeledPath& a, const LabeledPath& b) { return a.label < b.label; });
  return sol;
}

}  // namespace wrd
