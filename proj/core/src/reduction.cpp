#include "wrd/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "wrd/error.hpp"

namespace wrd {

namespace {

void require_k(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidK, "gadget parameter k must be at least 1, got " + std::to_string(k));
}

FillerPair make_pair(CellCoord a, CellCoord b) { return a < b ? FillerPair{a, b} : FillerPair{b, a}; }

// All unit lattice lines inside and on the rectangle [x0, x1] x [y0, y1].
void add_lattice(std::vector<WallSegment>& walls, int x0, int y0, int x1, int y1) {
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x < x1; ++x) walls.push_back({x, y, Orientation::Horizontal});
  }
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y < y1; ++y) walls.push_back({x, y, Orientation::Vertical});
  }
}

// Quadrant outlines with a gap at the corridor crossing on every line.
std::vector<WallSegment> corridor_walls(int k) {
  const int s = block_size(k);
  const int c = block_mid(k);
  std::vector<WallSegment> walls;
  for (int line : {0, c, c + 1, s}) {
    for (int t = 0; t < s; ++t) {
      if (t == c) continue;
      walls.push_back({line, t, Orientation::Vertical});
      walls.push_back({t, line, Orientation::Horizontal});
    }
  }
  return walls;
}

// Filler ring of the bottom-left quadrant. The quadrant's right column sits
// at x = c - 1 in an empty block and one column further in (x = c - 2) in a
// number block, where the south ladder occupies x = c - 1.
struct Ring {
  std::vector<CellCoord> cells;
  std::vector<FillerPair> pairs;
};

Ring bottom_left_ring(int k, BlockKind kind) {
  const int c = block_mid(k);
  const int right = kind == BlockKind::Number ? c - 2 : c - 1;
  Ring ring;
  for (int x = 0; x < c; ++x) {
    ring.cells.push_back({x, 0});
    ring.cells.push_back({x, c - 1});
  }
  for (int y = 1; y <= c - 2; ++y) {
    ring.cells.push_back({0, y});
    ring.cells.push_back({right, y});
  }
  for (int j = 0; j <= k; ++j) {
    ring.pairs.push_back(make_pair({2 * j, 0}, {2 * j + 1, 0}));
    ring.pairs.push_back(make_pair({2 * j, c - 1}, {2 * j + 1, c - 1}));
  }
  for (int j = 0; j < k; ++j) {
    ring.pairs.push_back(make_pair({0, 2 * j + 1}, {0, 2 * j + 2}));
    ring.pairs.push_back(make_pair({right, 2 * j + 1}, {right, 2 * j + 2}));
  }
  return ring;
}

CellCoord rotate_times(CellCoord cell, int size, int turns) {
  for (int t = 0; t < turns; ++t) cell = rotate_ccw(cell, size);
  return cell;
}

BlockTemplate build_block(int k, BlockKind kind) {
  require_k(k);
  BlockTemplate block;
  block.kind = kind;
  block.k = k;
  block.size = block_size(k);
  block.walls = corridor_walls(k);

  const Ring ring = bottom_left_ring(k, kind);
  for (int turns = 0; turns < 4; ++turns) {
    for (CellCoord cell : ring.cells) block.circles.push_back({rotate_times(cell, block.size, turns), 1});
    for (const FillerPair& p : ring.pairs) {
      block.filler_pairs.push_back(make_pair(rotate_times(p.a, block.size, turns), rotate_times(p.b, block.size, turns)));
    }
  }
  return block;
}

void finish(BlockTemplate& block) {
  std::sort(block.walls.begin(), block.walls.end());
  block.walls.erase(std::unique(block.walls.begin(), block.walls.end()), block.walls.end());
  std::sort(block.circles.begin(), block.circles.end(),
            [](const Circle& a, const Circle& b) { return a.cell < b.cell; });
  std::sort(block.filler_pairs.begin(), block.filler_pairs.end());
}

CellCoord offset(CellCoord c, int dx, int dy) { return {c.x + dx, c.y + dy}; }

}  // namespace

std::string_view to_string(Arm arm) {
  switch (arm) {
    case Arm::East: return "east";
    case Arm::West: return "west";
    case Arm::North: return "north";
    case Arm::South: return "south";
  }
  return "?";
}

CellCoord entry_cell(int k, Arm arm) {
  const int s = block_size(k);
  const int c = block_mid(k);
  switch (arm) {
    case Arm::East: return {s - 1, c};
    case Arm::West: return {0, c};
    case Arm::North: return {c, s - 1};
    case Arm::South: return {c, 0};
  }
  return {c, c};
}

int quarter_turns_from_east(Arm arm) {
  switch (arm) {
    case Arm::East: return 0;
    case Arm::North: return 1;
    case Arm::West: return 2;
    case Arm::South: return 3;
  }
  return 0;
}

int choose_k(int pair_count) {
  if (pair_count < 1) throw Error(ErrorCode::InvalidArgument, "need at least one label pair");
  const int k = pair_count / 2;  // ceil((p - 1) / 2) for p >= 1
  return std::max(1, k);
}

BlockTemplate build_empty_block(int k) {
  BlockTemplate block = build_block(k, BlockKind::Empty);
  finish(block);
  return block;
}

BlockTemplate build_number_block(int k, int assigned_number) {
  require_k(k);
  if (assigned_number % 2 == 0 || assigned_number < 4 * k + 3 || assigned_number > 8 * k + 3) {
    std::ostringstream os;
    os << "center number " << assigned_number << " is not an odd value in [" << 4 * k + 3 << ", " << 8 * k + 3
       << "] for k = " << k;
    throw Error(ErrorCode::InvalidNumber, os.str());
  }
  BlockTemplate block = build_block(k, BlockKind::Number);
  const int s = block.size;
  const int c = block_mid(k);
  add_lattice(block.walls, c - 1, 1, c + 1, 2 * k + 1);      // south arm
  add_lattice(block.walls, 1, c, 2 * k + 1, c + 2);          // west arm
  add_lattice(block.walls, c, c + 2, c + 2, s - 1);          // north arm
  add_lattice(block.walls, c + 2, c - 1, s - 1, c + 1);      // east arm
  block.center = CellCoord{c, c};
  block.circles.push_back({{c, c}, assigned_number});
  finish(block);
  return block;
}

Reduction reduce(const NumberlinkInstance& g) {
  const NumberlinkInstance normalized = validate_instance(g);
  return reduce(normalized, choose_k(normalized.pair_count()));
}

Reduction reduce(const NumberlinkInstance& g, int k) {
  const NumberlinkInstance inst = validate_instance(g);
  require_k(k);
  const int p = inst.pair_count();
  if (2 * k + 1 < p) {
    throw Error(ErrorCode::InvalidK, "k = " + std::to_string(k) + " cannot separate " + std::to_string(p) + " labels");
  }
  const int s = block_size(k);
  const int c = block_mid(k);

  ReductionMap map;
  map.k = k;
  map.block_size = s;
  map.g_width = inst.width;
  map.g_height = inst.height;

  std::vector<int> label_at(static_cast<std::size_t>(inst.width * inst.height), 0);
  for (const Terminal& t : inst.terminals) {
    for (CellCoord cell : t.cells) label_at[static_cast<std::size_t>(cell.y * inst.width + cell.x)] = t.label;
  }

  const BlockTemplate empty = build_empty_block(k);
  std::map<int, BlockTemplate> number_blocks;
  for (const Terminal& t : inst.terminals) {
    const int number = 4 * k + 2 * t.label + 1;
    map.number_assignment[t.label] = number;
    number_blocks.emplace(t.label, build_number_block(k, number));
  }

  std::vector<WallSegment> walls;
  std::vector<Circle> circles;
  for (int gy = 0; gy < inst.height; ++gy) {
    for (int gx = 0; gx < inst.width; ++gx) {
      const int label = label_at[static_cast<std::size_t>(gy * inst.width + gx)];
      const BlockTemplate& block = label > 0 ? number_blocks.at(label) : empty;
      const int ox = gx * s;
      const int oy = gy * s;

      BlockInfo info{gx, gy, block.kind, label, std::nullopt};
      if (label > 0) info.center = CellCoord{ox + c, oy + c};
      map.blocks.push_back(info);

      for (const WallSegment& w : block.walls) walls.push_back({w.x + ox, w.y + oy, w.orientation});
      for (const Circle& circle : block.circles) circles.push_back({offset(circle.cell, ox, oy), circle.number});
      for (const FillerPair& fp : block.filler_pairs) {
        map.filler_pairs.push_back({offset(fp.a, ox, oy), offset(fp.b, ox, oy)});
      }
    }
  }

  WataridoriInstance puzzle{regions_from_walls(walls, s * inst.width, s * inst.height), std::move(circles)};
  return {std::move(puzzle), std::move(map)};
}

NumberlinkInstance source_instance(const ReductionMap& map) {
  NumberlinkInstance inst{map.g_width, map.g_height, {}};
  std::map<int, std::vector<CellCoord>> cells;
  for (const BlockInfo& b : map.blocks) {
    if (b.kind == BlockKind::Number) cells[b.label].push_back({b.gx, b.gy});
  }
  for (auto& [label, list] : cells) inst.terminals.push_back({label, list});
  return validate_instance(inst);
}

}  // namespace wrd
