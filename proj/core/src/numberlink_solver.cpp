#include <deque>

#include "wrd/error.hpp"
#include "wrd/numberlink.hpp"

namespace wrd {

namespace {

// Depth-first search that routes labels one at a time. Two prunings, both
// preserving solvability of the non-covering variant:
//  * induced paths only: a new cell may not touch the path anywhere except
//    its head, and a head next to its target must step onto it (any
//    solution can be shortcut into this form without touching other paths);
//  * reachability: the head of the current path and every later label must
//    still reach their targets through free cells.
class NumberlinkSearch {
 public:
  NumberlinkSearch(const NumberlinkInstance& inst, std::uint64_t budget)
      : inst_(inst), width_(inst.width), height_(inst.height), budget_(budget),
        occupied_(static_cast<std::size_t>(width_ * height_), 0) {
    for (const Terminal& t : inst.terminals) {
      for (CellCoord c : t.cells) at(c) = t.label;
    }
    // extend() holds a reference to paths_.back() across recursion.
    paths_.reserve(inst.terminals.size());
  }

  SolveResult<NumberlinkSolution> run() {
    SolveResult<NumberlinkSolution> result;
    const bool found = route_label(0);
    result.nodes = nodes_;
    if (found) {
      result.status = SolveStatus::Solved;
      NumberlinkSolution sol;
      for (std::size_t i = 0; i < paths_.size(); ++i) sol.paths.push_back({inst_.terminals[i].label, paths_[i]});
      result.solution = std::move(sol);
    } else {
      result.status = aborted_ ? SolveStatus::BudgetExceeded : SolveStatus::Unsat;
    }
    return result;
  }

 private:
  int& at(CellCoord c) { return occupied_[static_cast<std::size_t>(c.y * width_ + c.x)]; }
  int at(CellCoord c) const { return occupied_[static_cast<std::size_t>(c.y * width_ + c.x)]; }

  bool route_label(std::size_t index) {
    if (index == inst_.terminals.size()) return true;
    const Terminal& t = inst_.terminals[index];
    paths_.push_back({t.cells[0]});
    const bool found = extend(index);
    if (!found) paths_.pop_back();
    return found;
  }

  bool extend(std::size_t index) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const Terminal& t = inst_.terminals[index];
    const CellCoord target = t.cells[1];
    Path& path = paths_.back();
    const CellCoord head = path.back();

    if (adjacent(head, target)) {
      path.push_back(target);
      if (route_label(index + 1)) return true;
      path.pop_back();
      return false;
    }
    if (!targets_reachable(index, head)) return false;

    for (CellCoord next : orthogonal_neighbors(head, width_, height_)) {
      if (at(next) != 0 || touches_path(next, path)) continue;
      at(next) = t.label;
      path.push_back(next);
      if (extend(index)) return true;
      path.pop_back();
      at(next) = 0;
      if (aborted_) return false;
    }
    return false;
  }

  bool touches_path(CellCoord cell, const Path& path) const {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (adjacent(cell, path[i])) return true;
    }
    return false;
  }

  bool targets_reachable(std::size_t index, CellCoord head) const {
    if (!reachable(head, inst_.terminals[index].cells[1])) return false;
    for (std::size_t j = index + 1; j < inst_.terminals.size(); ++j) {
      const Terminal& t = inst_.terminals[j];
      if (!reachable(t.cells[0], t.cells[1])) return false;
    }
    return true;
  }

  bool reachable(CellCoord from, CellCoord to) const {
    std::vector<bool> seen(occupied_.size(), false);
    std::deque<CellCoord> queue{from};
    seen[static_cast<std::size_t>(from.y * width_ + from.x)] = true;
    while (!queue.empty()) {
      CellCoord cur = queue.front();
      queue.pop_front();
      for (CellCoord nb : orthogonal_neighbors(cur, width_, height_)) {
        if (nb == to) return true;
        auto idx = static_cast<std::size_t>(nb.y * width_ + nb.x);
        if (seen[idx] || at(nb) != 0) continue;
        seen[idx] = true;
        queue.push_back(nb);
      }
    }
    return false;
  }

  const NumberlinkInstance& inst_;
  int width_;
  int height_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> occupied_;
  std::vector<Path> paths_;
};

}  // namespace

SolveResult<NumberlinkSolution> solve(const NumberlinkInstance& inst, std::uint64_t budget) {
  const NumberlinkInstance normalized = validate_instance(inst);
  if (normalized != inst) {
    throw Error(ErrorCode::PreconditionFailed, "solve expects a validated, normalized instance");
  }
  return NumberlinkSearch(inst, budget).run();
}

}  // namespace wrd
