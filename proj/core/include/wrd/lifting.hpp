#pragma once

#include <utility>

#include "wrd/numberlink.hpp"
#include "wrd/reduction.hpp"
#include "wrd/wataridori.hpp"

namespace wrd {

/// Block-local route from a number block's center circle out through one
/// arm, making `zigzags` dips into the ladder's flank row on the way.
struct ArmRoute {
  Arm arm = Arm::East;
  int zigzags = 0;
  Path cells;  // starts at the center, ends at entry_cell(k, arm)
};

/// Splits the i - 1 zig-zags owed by label i between the two end blocks,
/// first block first: (min(i - 1, k), rest). Requires 1 <= i <= 2k + 1.
std::pair<int, int> zigzag_split(int label, int k);

/// East template: along the corridor row, dipping one row down at column
/// pairs (c+2+2t, c+3+2t) for t < zigzags. Other arms are quarter-turn
/// images of it. Requires 0 <= zigzags <= k.
ArmRoute route_arm(int k, Arm arm, int zigzags);

/// Maps a Numberlink solution of `g` onto the reduced Wataridori instance
/// described by `map`: one main path per label (label i crossing exactly
/// 4k + 2i + 1 regions) followed by one 2-cell path per filler pair.
/// Throws Error(InvalidSolution) if `s` does not verify against `g`, and
/// Error(MapInconsistent) if `map` was not produced from `g`.
WataridoriSolution lift(const NumberlinkInstance& g, const NumberlinkSolution& s, const ReductionMap& map);

/// Inverse direction. Rebuilds H from `map`, requires `h` to verify against it
/// (Error(PreconditionFailed) otherwise), compresses every center-to-center
/// path to its block sequence and returns the Numberlink solution, sorted by
/// label with normalized direction. Error(UnliftFailed) if a main path
/// revisits a block or does not end on a matching pair of number blocks.
NumberlinkSolution unlift(const WataridoriSolution& h, const ReductionMap& map);

}  // namespace wrd
