#include "json_util.hpp"
#include "wrd/numberlink.hpp"

namespace wrd {

using detail::Json;
using detail::ObjectReader;

NumberlinkInstance parse_numberlink_instance(std::string_view text) {
  const Json doc = detail::parse_document(text);
  ObjectReader root(doc, "", {"puzzle", "width", "height", "terminals"});
  const Json& kind = root.required("puzzle");
  if (!kind.is_string() || kind.get<std::string>() != "numberlink") {
    throw Error(ErrorCode::ParseError, "at /puzzle: expected \"numberlink\"");
  }
  NumberlinkInstance inst;
  inst.width = root.required_int("width");
  inst.height = root.required_int("height");
  const Json& terms = detail::as_array(root.required("terminals"), "/terminals");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    ObjectReader t(terms[i], "/terminals/" + std::to_string(i), {"label", "cells"});
    Terminal term;
    term.label = t.required_int("label");
    const Json& cells = detail::as_array(t.required("cells"), t.child("cells"));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      term.cells.push_back(detail::as_cell(cells[j], t.child("cells") + "/" + std::to_string(j)));
    }
    inst.terminals.push_back(std::move(term));
  }
  return validate_instance(inst);
}

NumberlinkSolution parse_numberlink_solution(std::string_view text) {
  const Json doc = detail::parse_document(text);
  ObjectReader root(doc, "", {"paths"});
  const Json& paths = detail::as_array(root.required("paths"), "/paths");
  NumberlinkSolution sol;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    ObjectReader p(paths[i], "/paths/" + std::to_string(i), {"label", "cells"});
    sol.paths.push_back({p.required_int("label"), detail::as_path(p.required("cells"), p.child("cells"))});
  }
  return sol;
}

std::string serialize(const NumberlinkInstance& inst) {
  Json doc;
  doc["puzzle"] = "numberlink";
  doc["width"] = inst.width;
  doc["height"] = inst.height;
  Json terms = Json::array();
  for (const Terminal& t : inst.terminals) {
    Json cells = Json::array();
    for (CellCoord c : t.cells) cells.push_back(detail::cell_json(c));
    terms.push_back(Json{{"label", t.label}, {"cells", cells}});
  }
  doc["terminals"] = std::move(terms);
  return detail::format(doc);
}

std::string serialize(const NumberlinkSolution& sol) {
  Json paths = Json::array();
  for (const LabeledPath& p : sol.paths) paths.push_back(Json{{"label", p.label}, {"cells", detail::path_json(p.cells)}});
  Json doc;
  doc["paths"] = std::move(paths);
  return detail::format(doc);
}

}  // namespace wrd
