#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace wrd {

/// A cell on a rectangular board. x grows to the right, y grows upward
/// (row 0 is the bottom row).
struct CellCoord {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

/// Ordered cells of an orthogonal path. Validity (length, adjacency,
/// simplicity) is checked by is_simple_orthogonal_path, not by the type.
using Path = std::vector<CellCoord>;

enum class Orientation { Horizontal, Vertical };

/// Unit segment on the grid-line lattice, keyed by its lower/left endpoint.
/// A horizontal segment at (x, y) separates cell (x, y-1) from (x, y);
/// a vertical segment at (x, y) separates cell (x-1, y) from (x, y).
struct WallSegment {
  int x = 0;
  int y = 0;
  Orientation orientation = Orientation::Horizontal;

  friend auto operator<=>(const WallSegment&, const WallSegment&) = default;
};

enum class Direction { Up, Down, Left, Right };

CellCoord step(CellCoord cell, Direction dir);

inline bool in_bounds(CellCoord cell, int width, int height) {
  return cell.x >= 0 && cell.y >= 0 && cell.x < width && cell.y < height;
}

inline bool adjacent(CellCoord a, CellCoord b) {
  int dx = a.x - b.x;
  int dy = a.y - b.y;
  return (dx == 0 && (dy == 1 || dy == -1)) || (dy == 0 && (dx == 1 || dx == -1));
}

/// Per-cell region ids of a board partition.
///
/// Invariants enforced at construction: every region is orthogonally
/// connected, ids are dense (0..R-1), and ids are canonical, i.e. assigned in
/// order of first appearance when scanning rows top to bottom (y descending),
/// each row left to right.
class RegionMap {
 public:
  /// Accepts any dense, connected labelling and relabels it canonically.
  /// Throws Error on shape mismatch, non-dense ids, or disconnected regions.
  RegionMap(int width, int height, std::vector<int> ids);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int region_count() const noexcept { return region_count_; }
  bool contains(CellCoord cell) const noexcept { return in_bounds(cell, width_, height_); }

  int id(CellCoord cell) const;
  int id(int x, int y) const { return id(CellCoord{x, y}); }

  /// Row-major ids, bottom row first.
  std::span<const int> ids() const noexcept { return ids_; }

  friend bool operator==(const RegionMap&, const RegionMap&) = default;

 private:
  int width_;
  int height_;
  int region_count_ = 0;
  std::vector<int> ids_;
};

/// In-bounds neighbours in the fixed order up, down, left, right.
/// Throws Error(OutOfBounds) if `cell` itself is outside the board.
std::vector<CellCoord> orthogonal_neighbors(CellCoord cell, int width, int height);

bool is_simple_orthogonal_path(std::span<const CellCoord> cells, int width, int height);

/// Flood fill over the board; the outer boundary is always treated as walled.
RegionMap regions_from_walls(std::span<const WallSegment> walls, int width, int height);

/// Region ids along `path`, one entry per maximal run of equal ids.
std::vector<int> region_runs(std::span<const CellCoord> path, const RegionMap& rmap);

bool paths_pairwise_disjoint(std::span<const Path> paths);

/// Quarter turn counter-clockwise inside a size x size block:
/// cell (x, y) -> (size-1-y, x).
CellCoord rotate_ccw(CellCoord cell, int size);
WallSegment rotate_ccw(WallSegment wall, int size);

}  // namespace wrd
