#include "wrd/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wrd/error.hpp"

namespace wrd {

namespace {

Arm arm_towards(CellCoord from, CellCoord to) {
  if (to.x > from.x) return Arm::East;
  if (to.x < from.x) return Arm::West;
  if (to.y > from.y) return Arm::North;
  return Arm::South;
}

// Straight corridor walk inside one block, both ends included.
void append_line(Path& out, CellCoord from, CellCoord to) {
  CellCoord cur = from;
  if (out.empty() || out.back() != cur) out.push_back(cur);
  while (cur != to) {
    cur.x += (to.x > cur.x) - (to.x < cur.x);
    cur.y += (to.y > cur.y) - (to.y < cur.y);
    out.push_back(cur);
  }
}

void append_offset(Path& out, const Path& local, int ox, int oy) {
  for (CellCoord c : local) out.push_back({c.x + ox, c.y + oy});
}

void check_map(const NumberlinkInstance& g, const ReductionMap& map) {
  if (reduce(g, map.k).map != map) {
    throw Error(ErrorCode::MapInconsistent, "reduction map was not produced from this Numberlink instance");
  }
}

}  // namespace

std::pair<int, int> zigzag_split(int label, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be at least 1");
  if (label < 1 || label > 2 * k + 1) {
    throw Error(ErrorCode::InvalidLabel, "label " + std::to_string(label) + " outside 1.." + std::to_string(2 * k + 1));
  }
  const int first = std::min(label - 1, k);
  return {first, label - 1 - first};
}

ArmRoute route_arm(int k, Arm arm, int zigzags) {
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be at least 1");
  if (zigzags < 0 || zigzags > k) {
    throw Error(ErrorCode::InvalidArgument, "zig-zag count " + std::to_string(zigzags) + " outside 0.." + std::to_string(k));
  }
  const int s = block_size(k);
  const int c = block_mid(k);
  Path east{{c, c}, {c + 1, c}};
  int x = c + 2;
  for (int t = 0; t < zigzags; ++t, x += 2) {
    east.insert(east.end(), {{x, c}, {x, c - 1}, {x + 1, c - 1}, {x + 1, c}});
  }
  for (; x < s; ++x) east.push_back({x, c});

  ArmRoute route{arm, zigzags, {}};
  const int turns = quarter_turns_from_east(arm);
  for (CellCoord cell : east) {
    for (int t = 0; t < turns; ++t) cell = rotate_ccw(cell, s);
    route.cells.push_back(cell);
  }
  return route;
}

WataridoriSolution lift(const NumberlinkInstance& g, const NumberlinkSolution& s, const ReductionMap& map) {
  const NumberlinkInstance inst = validate_instance(g);
  const Verdict verdict = verify_solution(inst, s);
  if (!verdict.accepted()) {
    throw Error(ErrorCode::InvalidSolution, "Numberlink solution rejected: " + format_verdict(verdict));
  }
  check_map(inst, map);

  const int k = map.k;
  const int size = map.block_size;
  const int c = block_mid(k);
  const CellCoord center{c, c};

  std::vector<const LabeledPath*> by_label(s.paths.size() + 1, nullptr);
  for (const LabeledPath& p : s.paths) by_label[static_cast<std::size_t>(p.label)] = &p;

  WataridoriSolution out;
  for (std::size_t label = 1; label < by_label.size(); ++label) {
    const Path& q = by_label[label]->cells;
    const auto [first_zigs, last_zigs] = zigzag_split(static_cast<int>(label), k);
    Path main;

    const ArmRoute exit = route_arm(k, arm_towards(q.front(), q[1]), first_zigs);
    append_offset(main, exit.cells, q.front().x * size, q.front().y * size);

    for (std::size_t j = 1; j + 1 < q.size(); ++j) {
      const int ox = q[j].x * size;
      const int oy = q[j].y * size;
      const CellCoord in = entry_cell(k, arm_towards(q[j], q[j - 1]));
      const CellCoord out_cell = entry_cell(k, arm_towards(q[j], q[j + 1]));
      Path local;
      append_line(local, in, center);
      append_line(local, center, out_cell);
      append_offset(main, local, ox, oy);
    }

    ArmRoute enter = route_arm(k, arm_towards(q.back(), q[q.size() - 2]), last_zigs);
    std::reverse(enter.cells.begin(), enter.cells.end());
    append_offset(main, enter.cells, q.back().x * size, q.back().y * size);

    out.paths.push_back(std::move(main));
  }
  for (const FillerPair& fp : map.filler_pairs) out.paths.push_back({fp.a, fp.b});
  return out;
}

NumberlinkSolution unlift(const WataridoriSolution& h, const ReductionMap& map) {
  const NumberlinkInstance g = source_instance(map);
  const Reduction rebuilt = reduce(g, map.k);
  if (rebuilt.map != map) throw Error(ErrorCode::MapInconsistent, "reduction map is not self-consistent");
  const Verdict verdict = verify_solution(rebuilt.puzzle, h);
  if (!verdict.accepted()) {
    throw Error(ErrorCode::PreconditionFailed, "Wataridori solution rejected: " + format_verdict(verdict));
  }

  std::map<CellCoord, const BlockInfo*> center_block;
  for (const BlockInfo& b : map.blocks) {
    if (b.kind == BlockKind::Number) center_block[*b.center] = &b;
  }

  const int size = map.block_size;
  NumberlinkSolution sol;
  for (std::size_t i = 0; i < h.paths.size(); ++i) {
    const Path& p = h.paths[i];
    const bool starts = center_block.contains(p.front());
    const bool ends = center_block.contains(p.back());
    if (!starts && !ends) continue;
    const std::string where = "path " + std::to_string(i);
    if (!starts || !ends) throw Error(ErrorCode::UnliftFailed, where + " joins a center circle to a non-center circle");

    const BlockInfo& a = *center_block[p.front()];
    const BlockInfo& b = *center_block[p.back()];
    if (a.label != b.label) throw Error(ErrorCode::UnliftFailed, where + " joins centers of different labels");
    if (!map.number_assignment.contains(a.label)) {
      throw Error(ErrorCode::UnliftFailed, where + " ends on label " + std::to_string(a.label) + " with no assigned number");
    }

    Path blocks;
    std::set<CellCoord> visited;
    for (CellCoord cell : p) {
      const CellCoord block{cell.x / size, cell.y / size};
      if (!blocks.empty() && blocks.back() == block) continue;
      if (!visited.insert(block).second) {
        throw Error(ErrorCode::UnliftFailed, where + " re-enters block (" + std::to_string(block.x) + "," +
                                                 std::to_string(block.y) + ")");
      }
      blocks.push_back(block);
    }
    sol.paths.push_back({a.label, std::move(blocks)});
  }

  sol = normalize_direction(std::move(sol));
  const Verdict back = verify_solution(g, sol);
  if (!back.accepted()) throw Error(ErrorCode::UnliftFailed, "recovered paths do not solve G: " + format_verdict(back));
  return sol;
}

}  // namespace wrd
