#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "wrd/lifting.hpp"
#include "wrd/reduction.hpp"

using namespace wrd;

namespace {

std::vector<CellCoord> circle_cells(const BlockTemplate& b, bool include_center) {
  std::vector<CellCoord> cells;
  for (const Circle& c : b.circles) {
    if (include_center || c.cell != b.center) cells.push_back(c.cell);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

BlockTemplate rotated(const BlockTemplate& b) {
  BlockTemplate r = b;
  for (auto& w : r.walls) w = rotate_ccw(w, b.size);
  for (auto& c : r.circles) c.cell = rotate_ccw(c.cell, b.size);
  for (auto& p : r.filler_pairs) {
    CellCoord a = rotate_ccw(p.a, b.size);
    CellCoord c = rotate_ccw(p.b, b.size);
    p = a < c ? FillerPair{a, c} : FillerPair{c, a};
  }
  if (r.center) r.center = rotate_ccw(*r.center, b.size);
  std::sort(r.walls.begin(), r.walls.end());
  std::sort(r.circles.begin(), r.circles.end(), [](const Circle& x, const Circle& y) { return x.cell < y.cell; });
  std::sort(r.filler_pairs.begin(), r.filler_pairs.end());
  return r;
}

bool same_block(const BlockTemplate& a, const BlockTemplate& b) {
  return a.walls == b.walls && a.circles == b.circles && a.filler_pairs == b.filler_pairs && a.center == b.center;
}

void check_block_invariants(const BlockTemplate& b) {
  const int k = b.k;
  const int s = b.size;
  const int c = block_mid(k);
  REQUIRE(s == 4 * k + 5);
  const RegionMap regions = regions_from_walls(b.walls, s, s);

  // Filler pairs: a perfect matching of the number-1 circles, adjacent, one region each.
  std::set<CellCoord> ones;
  for (const Circle& circle : b.circles) {
    REQUIRE(in_bounds(circle.cell, s, s));
    if (circle.cell == b.center) continue;
    REQUIRE(circle.number == 1);
    ones.insert(circle.cell);
  }
  std::set<CellCoord> matched;
  for (const FillerPair& p : b.filler_pairs) {
    REQUIRE(adjacent(p.a, p.b));
    REQUIRE(regions.id(p.a) == regions.id(p.b));
    REQUIRE(ones.contains(p.a));
    REQUIRE(ones.contains(p.b));
    REQUIRE(matched.insert(p.a).second);
    REQUIRE(matched.insert(p.b).second);
  }
  CHECK(matched == ones);
  CHECK(b.filler_pairs.size() == static_cast<std::size_t>(16 * k + 8));

  if (b.kind == BlockKind::Empty) {
    CHECK(b.circles.size() == static_cast<std::size_t>(32 * k + 16));
    CHECK(regions.region_count() == 5);
    CHECK_FALSE(b.center.has_value());
  } else {
    CHECK(b.circles.size() == static_cast<std::size_t>(32 * k + 17));
    CHECK(regions.region_count() == 16 * k + 9);
    REQUIRE(b.center == CellCoord{c, c});

    std::map<int, int> sizes;
    for (int id : regions.ids()) ++sizes[id];
    int singletons = 0;
    for (auto [id, n] : sizes) singletons += n == 1;
    CHECK(singletons == 16 * k + 4);  // ladder cells plus the four entry cells
    for (Arm arm : {Arm::East, Arm::West, Arm::North, Arm::South}) {
      CHECK(sizes[regions.id(entry_cell(k, arm))] == 1);
    }
    const int plus = regions.id(c, c);
    CHECK(sizes[plus] == 5);
    for (CellCoord n : {CellCoord{c + 1, c}, CellCoord{c - 1, c}, CellCoord{c, c + 1}, CellCoord{c, c - 1}}) {
      CHECK(regions.id(n) == plus);
    }
  }

  // Rings are closed: from the inside of a quadrant, the non-circle cells
  // reachable without touching a circle all lie in that quadrant's region.
  const std::set<CellCoord> all_circles(ones.begin(), ones.end());
  for (CellCoord start : {CellCoord{1, 1}, CellCoord{s - 2, 1}, CellCoord{1, s - 2}, CellCoord{s - 2, s - 2}}) {
    REQUIRE_FALSE(all_circles.contains(start));
    const int region = regions.id(start);
    std::set<CellCoord> seen{start};
    std::queue<CellCoord> todo;
    todo.push(start);
    while (!todo.empty()) {
      const CellCoord cur = todo.front();
      todo.pop();
      REQUIRE(regions.id(cur) == region);
      for (CellCoord n : orthogonal_neighbors(cur, s, s)) {
        if (all_circles.contains(n) || !seen.insert(n).second) continue;
        todo.push(n);
      }
    }
  }

  CHECK(same_block(rotated(b), b));
}

NumberlinkInstance row_instance(int m, std::vector<Terminal> terms) { return {m, 1, std::move(terms)}; }

}  // namespace

TEST_CASE("choose_k") {
  CHECK(choose_k(5) == 2);
  CHECK(choose_k(4) == 2);
  CHECK(choose_k(3) == 1);
  CHECK(choose_k(2) == 1);
  CHECK(choose_k(1) == 1);
  CHECK(choose_k(6) == 3);
  for (int p = 1; p <= 40; ++p) CHECK(2 * choose_k(p) + 1 >= p);
  CHECK_ERROR_CODE(choose_k(0), ErrorCode::InvalidArgument);

  // The unclamped formula gives k = 0 for p = 1. At k = 0 every ladder
  // lattice spans 2k = 0 rows, the number range {4k+3..8k+3} is the single
  // value 3 and no zig-zag is possible: the gadget degenerates.
  const int k0 = 0;
  CHECK(2 * k0 == 0);
  CHECK(4 * k0 + 3 == 8 * k0 + 3);
  CHECK_ERROR_CODE(build_empty_block(0), ErrorCode::InvalidK);
  CHECK_ERROR_CODE(build_number_block(0, 3), ErrorCode::InvalidK);
}

TEST_CASE("k = 2 blocks equal the figure transcriptions") {
  SUBCASE("number block") {
    const auto fig = test::block_fixture("figA_k2.json");
    const BlockTemplate b = build_number_block(2, 11);
    CHECK(b.size == fig.size);
    CHECK(b.walls == fig.walls);
    CHECK(circle_cells(b, false) == fig.circles);
    CHECK(b.filler_pairs == fig.filler_pairs);
    CHECK(b.center == fig.center);
    CHECK(regions_from_walls(b.walls, b.size, b.size).region_count() == 41);
    CHECK(b.circles.size() == 81);
    CHECK(b.filler_pairs.size() == 40);
  }
  SUBCASE("empty block") {
    const auto fig = test::block_fixture("figB_k2.json");
    const BlockTemplate b = build_empty_block(2);
    CHECK(b.size == fig.size);
    CHECK(b.walls == fig.walls);
    CHECK(circle_cells(b, true) == fig.circles);
    CHECK(b.filler_pairs == fig.filler_pairs);
    CHECK(regions_from_walls(b.walls, b.size, b.size).region_count() == 5);
    CHECK(b.circles.size() == 80);
  }
}

TEST_CASE("block invariants for k = 1..5") {
  const BlockTemplate e1 = build_empty_block(1);
  CHECK(e1.size == 9);
  CHECK(e1.circles.size() == 48);
  CHECK(e1.filler_pairs.size() == 24);
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    check_block_invariants(build_empty_block(k));
    for (int n = 4 * k + 3; n <= 8 * k + 3; n += 2) {
      const BlockTemplate b = build_number_block(k, n);
      check_block_invariants(b);
      const auto center = std::find_if(b.circles.begin(), b.circles.end(),
                                       [&](const Circle& c) { return c.cell == b.center; });
      REQUIRE(center != b.circles.end());
      CHECK(center->number == n);
    }
  }
  CHECK_ERROR_CODE(build_number_block(2, 10), ErrorCode::InvalidNumber);
  CHECK_ERROR_CODE(build_number_block(2, 9), ErrorCode::InvalidNumber);
  CHECK_ERROR_CODE(build_number_block(2, 21), ErrorCode::InvalidNumber);
}

TEST_CASE("reduce fig 3") {
  const NumberlinkInstance g = test::fig3();
  const Reduction r = reduce(g);
  const WataridoriInstance& h = r.puzzle;
  CHECK(r.map.k == 2);
  CHECK(h.width() == 78);
  CHECK(h.height() == 78);
  CHECK(h.circles.size() == 2890);
  CHECK(r.map.filler_pairs.size() == 1440);
  CHECK(r.map.number_assignment == std::map<int, int>{{1, 11}, {2, 13}, {3, 15}, {4, 17}, {5, 19}});

  std::multiset<int> centers;
  std::set<CellCoord> circle_set;
  for (const Circle& c : h.circles) {
    circle_set.insert(c.cell);
    if (c.number != 1) centers.insert(*c.number);
  }
  CHECK(centers == std::multiset<int>{11, 11, 13, 13, 15, 15, 17, 17, 19, 19});
  for (const FillerPair& p : r.map.filler_pairs) {
    REQUIRE(adjacent(p.a, p.b));
    REQUIRE(h.regions.id(p.a) == h.regions.id(p.b));
    REQUIRE(circle_set.contains(p.a));
    REQUIRE(circle_set.contains(p.b));
  }
  for (const BlockInfo& b : r.map.blocks) {
    if (b.kind != BlockKind::Number) continue;
    const int s = r.map.block_size;
    CHECK(b.center == CellCoord{b.gx * s + 6, b.gy * s + 6});
  }
  NumberlinkInstance source = source_instance(r.map);
  NumberlinkInstance original = g;
  for (auto* inst : {&source, &original})
    for (auto& t : inst->terminals) std::sort(t.cells.begin(), t.cells.end());
  CHECK(source == original);
  CHECK(parse_reduction_map(serialize(r.map)) == r.map);
}

TEST_CASE("adjacent number blocks share a two-cell corridor region") {
  const Reduction r = reduce(row_instance(2, {{1, {{0, 0}, {1, 0}}}}));
  const RegionMap& regions = r.puzzle.regions;
  CHECK(r.map.k == 1);
  CHECK(r.puzzle.width() == 18);
  CHECK(r.puzzle.height() == 9);
  const CellCoord east_entry{8, 4};
  const CellCoord west_entry{9, 4};
  CHECK(regions.id(east_entry) == regions.id(west_entry));
  int size = 0;
  for (int id : regions.ids()) size += id == regions.id(east_entry);
  CHECK(size == 2);
}

TEST_CASE("corridors merge across empty blocks") {
  const Reduction r = reduce(row_instance(3, {{1, {{0, 0}, {2, 0}}}}));
  const int s = r.map.block_size;
  const int c = block_mid(r.map.k);
  const RegionMap& regions = r.puzzle.regions;
  const int corridor = regions.id(s - 1, c);
  for (int x = s - 1; x <= 2 * s; ++x) CHECK(regions.id(x, c) == corridor);
  for (int y = 0; y < s; ++y) CHECK(regions.id(s + c, y) == corridor);
  CHECK(regions.id(s - 2, c) != corridor);
  CHECK(regions.id(2 * s + 1, c) != corridor);
}

TEST_CASE("size law") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    if (m * n < 2) continue;
    std::vector<CellCoord> cells;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < m; ++x) cells.push_back({x, y});
    std::shuffle(cells.begin(), cells.end(), rng);
    const int p = 1 + static_cast<int>(rng() % (m * n / 2));
    NumberlinkInstance g{m, n, {}};
    for (int i = 0; i < p; ++i) g.terminals.push_back({i + 1, {cells[2 * i], cells[2 * i + 1]}});
    const Reduction r = reduce(g);
    const int k = choose_k(p);
    CHECK(r.map.k == k);
    CHECK(r.puzzle.width() == (4 * k + 5) * m);
    CHECK(r.puzzle.height() == (4 * k + 5) * n);
    const std::size_t numbered = static_cast<std::size_t>(2 * p);
    CHECK(r.puzzle.circles.size() == numbered * (32 * k + 17) + (static_cast<std::size_t>(m * n) - numbered) * (32 * k + 16));
  }
}

TEST_CASE("explicit k") {
  const NumberlinkInstance g = test::fig3();
  CHECK(reduce(g, 3).puzzle.width() == 17 * 6);
  CHECK_ERROR_CODE(reduce(g, 1), ErrorCode::InvalidK);
  CHECK_ERROR_CODE(reduce(g, 0), ErrorCode::InvalidK);
}

TEST_CASE("per-side region counts through the adjacent corridor") {
  // Label 1 in the middle block of a 3x3 board; every side faces an empty block.
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const NumberlinkInstance g{3, 3, {{1, {{1, 1}, {2, 2}}}}};
    const Reduction r = reduce(g, k);
    const int s = r.map.block_size;
    for (Arm arm : {Arm::East, Arm::West, Arm::North, Arm::South}) {
      std::set<int> counts;
      for (int z = 0; z <= k; ++z) {
        Path p;
        for (CellCoord cell : route_arm(k, arm, z).cells) p.push_back({cell.x + s, cell.y + s});
        const CellCoord last = p.back();
        const CellCoord inward = p[p.size() - 2];
        p.push_back({2 * last.x - inward.x, 2 * last.y - inward.y});
        const auto runs = region_runs(p, r.puzzle.regions);
        CHECK(std::set<int>(runs.begin(), runs.end()).size() == runs.size());
        counts.insert(static_cast<int>(runs.size()));
      }
      std::set<int> expected;
      for (int v = 2 * k + 2; v <= 4 * k + 2; v += 2) expected.insert(v);
      CHECK(counts == expected);
    }
  }
}

TEST_CASE("fig C routes") {
  const auto fig = test::fig_c_routes();
  REQUIRE(fig.size() == 3);
  const NumberlinkInstance g{2, 1, {{1, {{0, 0}, {1, 0}}}}};
  const Reduction r = reduce(g, 2);
  const int expected[] = {6, 8, 10};
  for (int z = 0; z <= 2; ++z) {
    const ArmRoute route = route_arm(2, Arm::East, z);
    CHECK(route.cells == fig[z]);
    Path p = route.cells;
    p.push_back({13, 6});  // first cell of the neighbouring block's corridor
    CHECK(region_runs(p, r.puzzle.regions).size() == static_cast<std::size_t>(expected[z]));
  }
}
