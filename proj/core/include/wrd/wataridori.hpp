#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrd/grid.hpp"
#include "wrd/search.hpp"
#include "wrd/verdict.hpp"

namespace wrd {

/// A circle; an empty `number` is a wildcard.
struct Circle {
  CellCoord cell;
  std::optional<int> number;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct WataridoriInstance {
  RegionMap regions;
  std::vector<Circle> circles;

  int width() const noexcept { return regions.width(); }
  int height() const noexcept { return regions.height(); }

  friend bool operator==(const WataridoriInstance&, const WataridoriInstance&) = default;
};

struct WataridoriSolution {
  std::vector<Path> paths;

  friend bool operator==(const WataridoriSolution&, const WataridoriSolution&) = default;
};

/// Throws Error(OutOfBounds | DuplicateCircle | InvalidNumber). An odd
/// number of circles is legal here; it only makes the instance unsolvable.
void validate_instance(const WataridoriInstance& inst);

/// Checks, in order: path structure; every endpoint is a circle; no circle
/// ends two paths; no cell is used twice (passing through a circle counts as
/// sharing it); every circle is paired; no path re-enters a region; the
/// numbers at both ends agree and equal the path's region-run count.
/// Wildcards accept any count; a wildcard pair accepts any path.
Verdict verify_solution(const WataridoriInstance& inst, const WataridoriSolution& sol);

/// Exact search for small boards. Repeatedly takes the first unpaired circle
/// in scan order (top row first, left to right) and grows a path from it
/// until it closes on a compatible circle. Partial paths that re-enter a
/// region or exceed their start circle's number are cut, as are states in
/// which some unpaired circle has no free neighbour.
SolveResult<WataridoriSolution> solve(const WataridoriInstance& inst, std::uint64_t budget = kDefaultBudget);

WataridoriInstance parse_wataridori_instance(std::string_view text);
WataridoriSolution parse_wataridori_solution(std::string_view text);
std::string serialize(const WataridoriInstance& inst);
std::string serialize(const WataridoriSolution& sol);

}  // namespace wrd
