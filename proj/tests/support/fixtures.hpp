#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wrd/grid.hpp"
#include "wrd/numberlink.hpp"
#include "wrd/reduction.hpp"
#include "wrd/wataridori.hpp"

namespace wrd::test {

inline std::string fixture_path(const std::string& name) { return std::string(WRD_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json json_fixture(const std::string& name) { return nlohmann::json::parse(read_fixture(name)); }

inline CellCoord cell_of(const nlohmann::json& j) { return {j[0].get<int>(), j[1].get<int>()}; }

inline Path path_of(const nlohmann::json& j) {
  Path p;
  for (const auto& c : j) p.push_back(cell_of(c));
  return p;
}

inline std::vector<WallSegment> walls_of(const nlohmann::json& list) {
  std::vector<WallSegment> walls;
  for (const auto& w : list) {
    walls.push_back({w[0].get<int>(), w[1].get<int>(),
                     w[2].get<std::string>() == "h" ? Orientation::Horizontal : Orientation::Vertical});
  }
  return walls;
}

inline WataridoriInstance fig1() { return parse_wataridori_instance(read_fixture("fig1.json")); }
inline WataridoriSolution fig1_solution() { return parse_wataridori_solution(read_fixture("fig1_solution.json")); }
inline NumberlinkInstance fig3() { return parse_numberlink_instance(read_fixture("fig3.json")); }
inline NumberlinkSolution fig3_solution() { return parse_numberlink_solution(read_fixture("fig3_solution.json")); }

/// Hand transcription of a k = 2 gadget block (Fig A / Fig B style fixture).
struct BlockTranscription {
  int size = 0;
  std::vector<WallSegment> walls;  // sorted, unique
  std::vector<CellCoord> circles;  // sorted; the center is listed separately
  std::vector<FillerPair> filler_pairs;
  std::optional<CellCoord> center;
  std::vector<Path> example_routes;
};

inline BlockTranscription block_fixture(const std::string& name) {
  const auto j = json_fixture(name);
  BlockTranscription t;
  t.size = j["size"].get<int>();
  t.walls = walls_of(j["walls"]);
  std::sort(t.walls.begin(), t.walls.end());
  t.walls.erase(std::unique(t.walls.begin(), t.walls.end()), t.walls.end());
  for (const auto& c : j["circles"]) t.circles.push_back(cell_of(c));
  std::sort(t.circles.begin(), t.circles.end());
  for (const auto& p : j["filler_pairs"]) {
    CellCoord a = cell_of(p[0]);
    CellCoord b = cell_of(p[1]);
    t.filler_pairs.push_back(a < b ? FillerPair{a, b} : FillerPair{b, a});
  }
  std::sort(t.filler_pairs.begin(), t.filler_pairs.end());
  if (j.contains("center")) t.center = cell_of(j["center"]);
  for (const auto& r : j["example_routes"]) t.example_routes.push_back(path_of(r));
  return t;
}

inline std::vector<Path> fig_c_routes() {
  const auto doc = json_fixture("figC_k2_east_routes.json");
  std::vector<Path> routes;
  for (const auto& r : doc["routes"]) routes.push_back(path_of(r));
  return routes;
}

}  // namespace wrd::test
