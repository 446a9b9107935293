#include "wrd/grid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "wrd/error.hpp"

namespace wrd {

namespace {

std::string describe(CellCoord c) {
  std::ostringstream os;
  os << "(" << c.x << "," << c.y << ")";
  return os.str();
}

// Dense-grid wall lookup: hwalls has (height+1) rows of width entries,
// vwalls has height rows of (width+1) entries.
class WallGrid {
 public:
  WallGrid(int width, int height)
      : width_(width),
        height_(height),
        hwalls_(static_cast<std::size_t>((height + 1) * width), false),
        vwalls_(static_cast<std::size_t>(height * (width + 1)), false) {}

  void add(const WallSegment& w) {
    if (w.orientation == Orientation::Horizontal) {
      if (w.x < 0 || w.x >= width_ || w.y < 0 || w.y > height_) off_lattice(w);
      hwalls_[static_cast<std::size_t>(w.y * width_ + w.x)] = true;
    } else {
      if (w.x < 0 || w.x > width_ || w.y < 0 || w.y >= height_) off_lattice(w);
      vwalls_[static_cast<std::size_t>(w.y * (width_ + 1) + w.x)] = true;
    }
  }

  bool blocked(CellCoord from, CellCoord to) const {
    if (to.x == from.x + 1) return vwall(to.x, from.y);
    if (to.x == from.x - 1) return vwall(from.x, from.y);
    if (to.y == from.y + 1) return hwall(from.x, to.y);
    return hwall(from.x, from.y);
  }

 private:
  [[noreturn]] void off_lattice(const WallSegment& w) const {
    std::ostringstream os;
    os << (w.orientation == Orientation::Horizontal ? "horizontal" : "vertical") << " wall at ("
       << w.x << "," << w.y << ") is outside the " << width_ << "x" << height_ << " lattice";
    throw Error(ErrorCode::WallOffLattice, os.str());
  }

  bool hwall(int x, int y) const { return hwalls_[static_cast<std::size_t>(y * width_ + x)]; }
  bool vwall(int x, int y) const { return vwalls_[static_cast<std::size_t>(y * (width_ + 1) + x)]; }

  int width_;
  int height_;
  std::vector<bool> hwalls_;
  std::vector<bool> vwalls_;
};

}  // namespace

CellCoord step(CellCoord cell, Direction dir) {
  switch (dir) {
    case Direction::Up: return {cell.x, cell.y + 1};
    case Direction::Down: return {cell.x, cell.y - 1};
    case Direction::Left: return {cell.x - 1, cell.y};
    case Direction::Right: return {cell.x + 1, cell.y};
  }
  return cell;
}

RegionMap::RegionMap(int width, int height, std::vector<int> ids)
    : width_(width), height_(height), ids_(std::move(ids)) {
  if (width <= 0 || height <= 0 ||
      ids_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    std::ostringstream os;
    os << "expected " << width << "x" << height << " region ids, got " << ids_.size();
    throw Error(ErrorCode::RegionShapeMismatch, os.str());
  }
  const int max_id = *std::max_element(ids_.begin(), ids_.end());
  std::vector<int> size_of(static_cast<std::size_t>(std::max(max_id, 0) + 1), 0);
  for (int id : ids_) {
    if (id < 0) throw Error(ErrorCode::RegionIdsNotDense, "negative region id " + std::to_string(id));
    ++size_of[static_cast<std::size_t>(id)];
  }
  for (std::size_t id = 0; id < size_of.size(); ++id) {
    if (size_of[id] == 0) {
      throw Error(ErrorCode::RegionIdsNotDense, "region id " + std::to_string(id) + " is unused");
    }
  }

  // Canonical relabelling doubles as the connectivity check: each flood from
  // an unvisited cell must cover every cell carrying its input id.
  std::vector<int> canonical(ids_.size(), -1);
  std::vector<bool> seen_input(size_of.size(), false);
  int next = 0;
  std::vector<CellCoord> stack;
  for (int y = height - 1; y >= 0; --y) {
    for (int x = 0; x < width; ++x) {
      const auto start = static_cast<std::size_t>(y * width + x);
      if (canonical[start] >= 0) continue;
      const int input_id = ids_[start];
      if (seen_input[static_cast<std::size_t>(input_id)]) {
        throw Error(ErrorCode::RegionDisconnected,
                    "region id " + std::to_string(input_id) + " is not connected (cell " +
                        describe({x, y}) + ")");
      }
      seen_input[static_cast<std::size_t>(input_id)] = true;
      canonical[start] = next;
      stack.push_back({x, y});
      while (!stack.empty()) {
        CellCoord cur = stack.back();
        stack.pop_back();
        for (CellCoord nb : orthogonal_neighbors(cur, width, height)) {
          const auto idx = static_cast<std::size_t>(nb.y * width + nb.x);
          if (canonical[idx] >= 0 || ids_[idx] != input_id) continue;
          canonical[idx] = next;
          stack.push_back(nb);
        }
      }
      ++next;
    }
  }
  ids_ = std::move(canonical);
  region_count_ = next;
}

int RegionMap::id(CellCoord cell) const {
  if (!contains(cell)) throw Error(ErrorCode::OutOfBounds, "cell " + describe(cell) + " outside region map");
  return ids_[static_cast<std::size_t>(cell.y * width_ + cell.x)];
}

std::vector<CellCoord> orthogonal_neighbors(CellCoord cell, int width, int height) {
  if (!in_bounds(cell, width, height)) {
    throw Error(ErrorCode::OutOfBounds, "cell " + describe(cell) + " outside " + std::to_string(width) +
                                            "x" + std::to_string(height) + " grid");
  }
  std::vector<CellCoord> out;
  out.reserve(4);
  for (Direction d : {Direction::Up, Direction::Down, Direction::Left, Direction::Right}) {
    CellCoord nb = step(cell, d);
    if (in_bounds(nb, width, height)) out.push_back(nb);
  }
  return out;
}

bool is_simple_orthogonal_path(std::span<const CellCoord> cells, int width, int height) {
  if (cells.size() < 2) return false;
  std::set<CellCoord> seen;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!in_bounds(cells[i], width, height)) return false;
    if (i > 0 && !adjacent(cells[i - 1], cells[i])) return false;
    if (!seen.insert(cells[i]).second) return false;
  }
  return true;
}

RegionMap regions_from_walls(std::span<const WallSegment> walls, int width, int height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::RegionShapeMismatch, "grid dimensions must be positive");
  }
  WallGrid grid(width, height);
  for (const WallSegment& w : walls) grid.add(w);

  std::vector<int> ids(static_cast<std::size_t>(width * height), -1);
  std::vector<CellCoord> stack;
  int next = 0;
  for (int y = height - 1; y >= 0; --y) {
    for (int x = 0; x < width; ++x) {
      if (ids[static_cast<std::size_t>(y * width + x)] >= 0) continue;
      ids[static_cast<std::size_t>(y * width + x)] = next;
      stack.push_back({x, y});
      while (!stack.empty()) {
        CellCoord cur = stack.back();
        stack.pop_back();
        for (CellCoord nb : orthogonal_neighbors(cur, width, height)) {
          auto& slot = ids[static_cast<std::size_t>(nb.y * width + nb.x)];
          if (slot >= 0 || grid.blocked(cur, nb)) continue;
          slot = next;
          stack.push_back(nb);
        }
      }
      ++next;
    }
  }
  return RegionMap(width, height, std::move(ids));
}

std::vector<int> region_runs(std::span<const CellCoord> path, const RegionMap& rmap) {
  std::vector<int> runs;
  for (CellCoord c : path) {
    int id = rmap.id(c);
    if (runs.empty() || runs.back() != id) runs.push_back(id);
  }
  return runs;
}

bool paths_pairwise_disjoint(std::span<const Path> paths) {
  std::set<CellCoord> owner;
  for (const Path& p : paths) {
    // A cell repeated inside one path is a simplicity issue, not sharing.
    std::set<CellCoord> mine(p.begin(), p.end());
    for (CellCoord c : mine) {
      if (!owner.insert(c).second) return false;
    }
  }
  return true;
}

CellCoord rotate_ccw(CellCoord cell, int size) { return {size - 1 - cell.y, cell.x}; }

WallSegment rotate_ccw(WallSegment wall, int size) {
  // Lattice points rotate as (X, Y) -> (size - Y, X).
  if (wall.orientation == Orientation::Horizontal) {
    return {size - wall.y, wall.x, Orientation::Vertical};
  }
  return {size - wall.y - 1, wall.x, Orientation::Horizontal};
}

}  // namespace wrd
