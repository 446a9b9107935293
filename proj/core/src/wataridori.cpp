#include "wrd/wataridori.hpp"

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

}  // namespace

void validate_instance(const WataridoriInstance& inst) {
  std::set<CellCoord> cells;
  for (const Circle& c : inst.circles) {
    if (!inst.regions.contains(c.cell)) throw Error(ErrorCode::OutOfBounds, "circle " + cell_text(c.cell) + " is outside the grid");
    if (c.number && *c.number <= 0) {
      throw Error(ErrorCode::InvalidNumber, "circle " + cell_text(c.cell) + " has non-positive number " + std::to_string(*c.number));
    }
    if (!cells.insert(c.cell).second) throw Error(ErrorCode::DuplicateCircle, "two circles on " + cell_text(c.cell));
  }
}

Verdict verify_solution(const WataridoriInstance& inst, const WataridoriSolution& sol) {
  const auto& paths = sol.paths;
  const int width = inst.width();
  const int height = inst.height();

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Path& p = paths[i];
    if (p.size() < 2) {
      return Verdict::reject(Rule::PathTooShort, idx, p.empty() ? std::nullopt : std::optional(p.front()),
                             "a path needs at least two cells");
    }
    std::set<CellCoord> seen;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!in_bounds(p[j], width, height)) return Verdict::reject(Rule::OutOfBounds, idx, p[j], "cell outside the grid");
      if (j > 0 && !adjacent(p[j - 1], p[j])) {
        return Verdict::reject(Rule::NotAdjacent, idx, p[j], "step from " + cell_text(p[j - 1]) + " is not orthogonal");
      }
      if (!seen.insert(p[j]).second) return Verdict::reject(Rule::RepeatedCell, idx, p[j], "path revisits a cell");
    }
  }

  std::map<CellCoord, std::size_t> circle_at;
  for (std::size_t c = 0; c < inst.circles.size(); ++c) circle_at[inst.circles[c].cell] = c;

  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (CellCoord end : {paths[i].front(), paths[i].back()}) {
      if (!circle_at.contains(end)) {
        return Verdict::reject(Rule::EndpointNotCircle, static_cast<int>(i), end, "path ends on a cell without a circle");
      }
    }
  }

  std::map<std::size_t, int> ended_by;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (CellCoord end : {paths[i].front(), paths[i].back()}) {
      auto [it, inserted] = ended_by.emplace(circle_at[end], static_cast<int>(i));
      if (!inserted) {
        return Verdict::reject(Rule::CircleReused, static_cast<int>(i), end,
                               "circle already ends path " + std::to_string(it->second));
      }
    }
  }

  std::map<CellCoord, int> owner;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      const bool interior = j > 0 && j + 1 < p.size();
      if (interior && circle_at.contains(p[j])) {
        return Verdict::reject(Rule::CellShared, static_cast<int>(i), p[j], "path runs through a circle");
      }
      auto [it, inserted] = owner.emplace(p[j], static_cast<int>(i));
      if (!inserted) {
        return Verdict::reject(Rule::CellShared, static_cast<int>(i), p[j],
                               "cell already used by path " + std::to_string(it->second));
      }
    }
  }

  for (std::size_t c = 0; c < inst.circles.size(); ++c) {
    if (!ended_by.contains(c)) return Verdict::reject(Rule::UnpairedCircle, -1, inst.circles[c].cell, "circle is not connected");
  }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const int idx = static_cast<int>(i);
    const Path& p = paths[i];
    std::set<int> visited{inst.regions.id(p.front())};
    for (std::size_t j = 1; j < p.size(); ++j) {
      const int prev = inst.regions.id(p[j - 1]);
      const int cur = inst.regions.id(p[j]);
      if (cur != prev && !visited.insert(cur).second) {
        return Verdict::reject(Rule::RegionReentered, idx, p[j], "re-enters region " + std::to_string(cur));
      }
    }
    const int runs = static_cast<int>(visited.size());
    const auto& a = inst.circles[circle_at[p.front()]].number;
    const auto& b = inst.circles[circle_at[p.back()]].number;
    if (a && b && *a != *b) {
      return Verdict::reject(Rule::NumberMismatch, idx, p.back(),
                             "joins " + std::to_string(*a) + " with " + std::to_string(*b));
    }
    const auto target = a ? a : b;
    if (target && *target != runs) {
      return Verdict::reject(Rule::CountMismatch, idx, p.front(),
                             "passes through " + std::to_string(runs) + " regions, needs " + std::to_string(*target));
    }
  }
  return Verdict::accept();
}

}  // namespace wrd
