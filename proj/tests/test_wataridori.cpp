#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wrd/wataridori.hpp"

using namespace wrd;

namespace {

Circle wild(int x, int y) { return {{x, y}, std::nullopt}; }
Circle num(int x, int y, int n) { return {{x, y}, n}; }

WataridoriInstance one_row(std::vector<int> ids, std::vector<Circle> circles) {
  const int w = static_cast<int>(ids.size());
  return {RegionMap(w, 1, std::move(ids)), std::move(circles)};
}

}  // namespace

TEST_CASE("fig 1 fixture") {
  const WataridoriInstance h = test::fig1();
  const WataridoriSolution s = test::fig1_solution();
  CHECK(h.width() == 6);
  CHECK(h.height() == 6);
  CHECK(h.regions.region_count() == 18);
  CHECK(h.circles.size() == 14);
  CHECK(s.paths.size() == 7);
  validate_instance(h);
  CHECK(verify_solution(h, s).accepted());

  // The wildcard-to-8 path crosses eight regions.
  const auto it = std::find_if(s.paths.begin(), s.paths.end(),
                               [](const Path& p) { return p.back() == CellCoord{5, 4} || p.front() == CellCoord{5, 4}; });
  REQUIRE(it != s.paths.end());
  CHECK(region_runs(*it, h.regions).size() == 8);
  CHECK(test::distinct_regions_or_reentry(*it, h.regions) == 8);

  SUBCASE("invariant under reversal, reordering and relabelling") {
    WataridoriSolution t = s;
    std::reverse(t.paths.begin(), t.paths.end());
    for (auto& p : t.paths) std::reverse(p.begin(), p.end());
    CHECK(verify_solution(h, t).accepted());

    std::vector<int> ids(h.regions.ids().begin(), h.regions.ids().end());
    for (int& id : ids) id = 17 - id;
    const WataridoriInstance relabelled{RegionMap(6, 6, ids), h.circles};
    CHECK(relabelled == h);
    CHECK(verify_solution(relabelled, s).accepted());
  }
}

TEST_CASE("verify_solution rule codes") {
  const WataridoriInstance h = test::fig1();
  const WataridoriSolution s = test::fig1_solution();

  SUBCASE("region re-entry") {
    // U-shaped region around a single cell.
    const WataridoriInstance u{RegionMap(3, 2, {0, 1, 0, 0, 0, 0}), {wild(0, 0), wild(2, 0)}};
    const auto v = verify_solution(u, {{{{0, 0}, {1, 0}, {2, 0}}}});
    CHECK(v.rule == Rule::RegionReentered);
    CHECK(verify_solution(u, {{{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 0}}}}).accepted());
  }
  SUBCASE("numbers") {
    const auto inst = one_row({0, 1, 2}, {num(0, 0, 2), num(2, 0, 3)});
    CHECK(verify_solution(inst, {{{{0, 0}, {1, 0}, {2, 0}}}}).rule == Rule::NumberMismatch);
    const auto inst2 = one_row({0, 1, 2}, {num(0, 0, 2), wild(2, 0)});
    CHECK(verify_solution(inst2, {{{{0, 0}, {1, 0}, {2, 0}}}}).rule == Rule::CountMismatch);
    const auto inst3 = one_row({0, 1, 2}, {wild(0, 0), num(2, 0, 3)});
    CHECK(verify_solution(inst3, {{{{0, 0}, {1, 0}, {2, 0}}}}).accepted());
    const auto inst4 = one_row({0, 1, 2}, {wild(0, 0), wild(2, 0)});
    CHECK(verify_solution(inst4, {{{{0, 0}, {1, 0}, {2, 0}}}}).accepted());
  }
  SUBCASE("wildcards pair within one region") {
    const auto inst = one_row({0, 0}, {wild(0, 0), wild(1, 0)});
    const auto path = Path{{0, 0}, {1, 0}};
    CHECK(region_runs(path, inst.regions).size() == 1);
    CHECK(verify_solution(inst, {{path}}).accepted());
  }
  SUBCASE("pairing") {
    WataridoriSolution dropped = s;
    dropped.paths.erase(dropped.paths.begin() + 1);
    const auto v = verify_solution(h, dropped);
    CHECK(v.rule == Rule::UnpairedCircle);
    CHECK(v.cell == CellCoord{0, 4});

    WataridoriSolution twice = s;
    twice.paths.push_back(s.paths[1]);
    CHECK(verify_solution(h, twice).rule == Rule::CircleReused);
  }
  SUBCASE("endpoints and sharing") {
    WataridoriSolution short_end = s;
    short_end.paths[2].pop_back();
    CHECK(verify_solution(h, short_end).rule == Rule::EndpointNotCircle);

    // Passing through an unrelated circle counts as sharing it.
    WataridoriSolution through = s;
    through.paths[4] = {{3, 2}, {3, 3}, {4, 3}};
    const auto v = verify_solution(h, through);
    CHECK(v.rule == Rule::CellShared);
    CHECK(v.cell == CellCoord{3, 3});
  }
  SUBCASE("empty instance") {
    const auto inst = one_row({0}, {});
    CHECK(verify_solution(inst, {}).accepted());
  }
}

TEST_CASE("validate_instance") {
  CHECK_ERROR_CODE(validate_instance(one_row({0, 0}, {wild(0, 0), wild(0, 0)})), ErrorCode::DuplicateCircle);
  CHECK_ERROR_CODE(validate_instance(one_row({0, 0}, {wild(0, 0), wild(2, 0)})), ErrorCode::OutOfBounds);
  CHECK_ERROR_CODE(validate_instance(one_row({0, 0}, {num(0, 0, 0), wild(1, 0)})), ErrorCode::InvalidNumber);
  validate_instance(one_row({0}, {wild(0, 0)}));
}

TEST_CASE("solve") {
  SUBCASE("fig 1") {
    const auto h = test::fig1();
    const auto r = solve(h);
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(verify_solution(h, *r.solution).accepted());
  }
  SUBCASE("two wildcards in one region") {
    const auto r = solve(one_row({0, 0}, {wild(0, 0), wild(1, 0)}));
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(r.solution->paths == std::vector<Path>{{{0, 0}, {1, 0}}});
  }
  SUBCASE("a 2 cannot span three regions") {
    CHECK(solve(one_row({0, 1, 2}, {num(0, 0, 2), num(2, 0, 2)})).status == SolveStatus::Unsat);
  }
  SUBCASE("odd circle count") {
    CHECK(solve(one_row({0, 0, 0}, {wild(0, 0), wild(1, 0), wild(2, 0)})).status == SolveStatus::Unsat);
  }
  SUBCASE("no circles") {
    const auto r = solve(one_row({0}, {}));
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(r.solution->paths.empty());
  }
  SUBCASE("budget") {
    CHECK(solve(test::fig1(), 1).status == SolveStatus::BudgetExceeded);
  }
}

TEST_CASE("solve agrees with brute force on random small instances") {
  std::mt19937 rng(4242);
  int solved = 0;
  int unsat = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 4);
    const int h = 1 + static_cast<int>(rng() % 4);
    std::vector<WallSegment> walls;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        if (x > 0 && rng() % 4 == 0) walls.push_back({x, y, Orientation::Vertical});
        if (y > 0 && rng() % 4 == 0) walls.push_back({x, y, Orientation::Horizontal});
      }
    RegionMap regions = regions_from_walls(walls, w, h);
    if (regions.region_count() > 5) continue;
    std::vector<CellCoord> cells;
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) cells.push_back({x, y});
    std::shuffle(cells.begin(), cells.end(), rng);
    const int count = static_cast<int>(rng() % (std::min<std::size_t>(6, cells.size()) + 1));
    std::vector<Circle> circles;
    for (int i = 0; i < count; ++i) {
      const int n = static_cast<int>(rng() % 4);
      circles.push_back({cells[i], n == 0 ? std::nullopt : std::optional<int>(n)});
    }
    const WataridoriInstance inst{std::move(regions), std::move(circles)};
    const auto r = solve(inst);
    REQUIRE(r.status != SolveStatus::BudgetExceeded);
    const bool expected = test::wataridori_solvable_brute_force(inst);
    REQUIRE(expected == (r.status == SolveStatus::Solved));
    if (r.solution) {
      REQUIRE(verify_solution(inst, *r.solution).accepted());
      ++solved;
    } else {
      ++unsat;
    }
  }
  CHECK(solved > 20);
  CHECK(unsat > 20);
}

TEST_CASE("documents") {
  const auto h = test::fig1();
  CHECK(parse_wataridori_instance(serialize(h)) == h);
  const auto s = test::fig1_solution();
  CHECK(parse_wataridori_solution(serialize(s)) == s);

  CHECK_ERROR_CODE(parse_wataridori_instance(R"({"puzzle":"wataridori","width":2,"height":1,"regions":[[0,0,0]],"circles":[]})"),
                   ErrorCode::RegionShapeMismatch);
  CHECK_ERROR_CODE(parse_wataridori_instance(R"({"puzzle":"wataridori","width":3,"height":1,"regions":[[0,1,0]],"circles":[]})"),
                   ErrorCode::RegionDisconnected);
  CHECK_ERROR_CODE(parse_wataridori_instance(R"({"puzzle":"wataridori","width":2,"height":1,"regions":[[0,0]],"circles":[{"x":0,"y":0,"n":1}]})"),
                   ErrorCode::UnknownField);
  CHECK_ERROR_CODE(parse_wataridori_instance(R"({"puzzle":"wataridori","width":2,"height":1,"regions":[[0,0]],"circles":[{"x":0,"y":0},{"x":0,"y":0}]})"),
                   ErrorCode::DuplicateCircle);
  CHECK_ERROR_CODE(parse_wataridori_solution(R"({"paths":[{"cells":[[0,0],[1,0]]}], "extra":true})"), ErrorCode::UnknownField);
  CHECK_ERROR_CODE(parse_wataridori_solution(R"({"paths":[{"cells":[[0,0],[1,0]]}])"), ErrorCode::ParseError);
}
