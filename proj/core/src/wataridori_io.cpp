#include "json_util.hpp"
#include "wrd/wataridori.hpp"

namespace wrd {

using detail::Json;
using detail::ObjectReader;

WataridoriInstance parse_wataridori_instance(std::string_view text) {
  const Json doc = detail::parse_document(text);
  ObjectReader root(doc, "", {"puzzle", "width", "height", "regions", "circles"});
  const Json& kind = root.required("puzzle");
  if (!kind.is_string() || kind.get<std::string>() != "wataridori") {
    throw Error(ErrorCode::ParseError, "at /puzzle: expected \"wataridori\"");
  }
  const int width = root.required_int("width");
  const int height = root.required_int("height");
  if (width <= 0 || height <= 0) throw Error(ErrorCode::ParseError, "grid dimensions must be positive");

  const Json& rows = detail::as_array(root.required("regions"), "/regions");
  if (rows.size() != static_cast<std::size_t>(height)) {
    throw Error(ErrorCode::RegionShapeMismatch, "at /regions: expected " + std::to_string(height) + " rows, got " +
                                                    std::to_string(rows.size()));
  }
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(width * height));
  for (std::size_t y = 0; y < rows.size(); ++y) {
    const std::string where = "/regions/" + std::to_string(y);
    const Json& row = detail::as_array(rows[y], where);
    if (row.size() != static_cast<std::size_t>(width)) {
      throw Error(ErrorCode::RegionShapeMismatch, "at " + where + ": expected " + std::to_string(width) +
                                                      " ids, got " + std::to_string(row.size()));
    }
    for (std::size_t x = 0; x < row.size(); ++x) ids.push_back(detail::as_int(row[x], where + "/" + std::to_string(x)));
  }

  std::vector<Circle> circles;
  const Json& list = detail::as_array(root.required("circles"), "/circles");
  for (std::size_t i = 0; i < list.size(); ++i) {
    ObjectReader c(list[i], "/circles/" + std::to_string(i), {"x", "y", "number"});
    Circle circle{{c.required_int("x"), c.required_int("y")}, std::nullopt};
    if (c.has("number")) circle.number = c.required_int("number");
    circles.push_back(circle);
  }

  WataridoriInstance inst{RegionMap(width, height, std::move(ids)), std::move(circles)};
  validate_instance(inst);
  return inst;
}

WataridoriSolution parse_wataridori_solution(std::string_view text) {
  const Json doc = detail::parse_document(text);
  ObjectReader root(doc, "", {"paths"});
  const Json& paths = detail::as_array(root.required("paths"), "/paths");
  WataridoriSolution sol;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    ObjectReader p(paths[i], "/paths/" + std::to_string(i), {"cells"});
    sol.paths.push_back(detail::as_path(p.required("cells"), p.child("cells")));
  }
  return sol;
}

std::string serialize(const WataridoriInstance& inst) {
  Json doc;
  doc["puzzle"] = "wataridori";
  doc["width"] = inst.width();
  doc["height"] = inst.height();
  Json rows = Json::array();
  for (int y = 0; y < inst.height(); ++y) {
    Json row = Json::array();
    for (int x = 0; x < inst.width(); ++x) row.push_back(inst.regions.id(x, y));
    rows.push_back(std::move(row));
  }
  doc["regions"] = std::move(rows);
  Json circles = Json::array();
  for (const Circle& c : inst.circles) {
    Json entry{{"x", c.cell.x}, {"y", c.cell.y}};
    if (c.number) entry["number"] = *c.number;
    circles.push_back(std::move(entry));
  }
  doc["circles"] = std::move(circles);
  return detail::format(doc);
}

std::string serialize(const WataridoriSolution& sol) {
  Json paths = Json::array();
  for (const Path& p : sol.paths) paths.push_back(Json{{"cells", detail::path_json(p)}});
  Json doc;
  doc["paths"] = std::move(paths);
  return detail::format(doc);
}

}  // namespace wrd
