#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrd/grid.hpp"
#include "wrd/numberlink.hpp"
#include "wrd/wataridori.hpp"

namespace wrd {

// Block geometry. A block for gadget parameter k is a square of side
// 4k + 5; its middle row and column (index 2k + 2) carry the corridor.

inline int block_size(int k) { return 4 * k + 5; }
inline int block_mid(int k) { return 2 * k + 2; }

enum class BlockKind { Number, Empty };

/// The four sides of a block, named by compass direction (north = +y).
enum class Arm { East, West, North, South };

std::string_view to_string(Arm arm);

/// Corridor cell on the block border for `arm`, block-local.
CellCoord entry_cell(int k, Arm arm);

/// Number of quarter turns (counter-clockwise) taking the east side to `arm`.
int quarter_turns_from_east(Arm arm);

/// Two adjacent number-1 circles in one region, joined by a 2-cell path in
/// every lifted solution. Stored with a < b.
struct FillerPair {
  CellCoord a;
  CellCoord b;

  friend auto operator<=>(const FillerPair&, const FillerPair&) = default;
};

struct BlockTemplate {
  BlockKind kind = BlockKind::Empty;
  int k = 0;
  int size = 0;
  std::vector<WallSegment> walls;        // sorted, unique, block-local
  std::vector<Circle> circles;           // sorted by cell
  std::vector<FillerPair> filler_pairs;  // sorted
  std::optional<CellCoord> center;       // number blocks only
};

/// max(1, ceil((p - 1) / 2)); guarantees 2k + 1 >= p. Throws InvalidArgument for p < 1.
int choose_k(int pair_count);

/// Throws Error(InvalidK) for k < 1.
BlockTemplate build_empty_block(int k);

/// `assigned_number` must be odd and within [4k + 3, 8k + 3]
/// (Error(InvalidNumber) otherwise).
BlockTemplate build_number_block(int k, int assigned_number);

struct BlockInfo {
  int gx = 0;
  int gy = 0;
  BlockKind kind = BlockKind::Empty;
  int label = 0;                    // number blocks only
  std::optional<CellCoord> center;  // number blocks only, H coordinates

  friend bool operator==(const BlockInfo&, const BlockInfo&) = default;
};

/// Everything needed to move between a Numberlink instance G and its
/// Wataridori image H. Blocks are listed row by row from the bottom
/// (gy ascending, then gx ascending); filler pairs are in H coordinates.
struct ReductionMap {
  int k = 0;
  int block_size = 0;
  int g_width = 0;
  int g_height = 0;
  std::vector<BlockInfo> blocks;
  std::map<int, int> number_assignment;  // label -> 4k + 2 label + 1
  std::vector<FillerPair> filler_pairs;

  const BlockInfo& block_at(int gx, int gy) const {
    return blocks[static_cast<std::size_t>(gy * g_width + gx)];
  }

  friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

struct Reduction {
  WataridoriInstance puzzle;
  ReductionMap map;
};

/// Builds H from G (validated and normalized first) with k = choose_k(p).
Reduction reduce(const NumberlinkInstance& g);

/// Same, with an explicit gadget parameter; requires k >= 1 and 2k + 1 >= p.
Reduction reduce(const NumberlinkInstance& g, int k);

/// The normalized Numberlink instance a map was built from. Each label's two
/// cells come in block order (bottom row first), which may differ from the
/// order in the original document.
NumberlinkInstance source_instance(const ReductionMap& map);

ReductionMap parse_reduction_map(std::string_view text);
std::string serialize(const ReductionMap& map);

}  // namespace wrd
