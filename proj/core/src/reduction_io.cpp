#include "json_util.hpp"
#include "wrd/reduction.hpp"

namespace wrd {

using detail::Json;
using detail::ObjectReader;

ReductionMap parse_reduction_map(std::string_view text) {
  const Json doc = detail::parse_document(text);
  ObjectReader root(doc, "", {"k", "block_size", "g_width", "g_height", "blocks", "number_assignment", "filler_pairs"});
  ReductionMap map;
  map.k = root.required_int("k");
  map.block_size = root.required_int("block_size");
  map.g_width = root.required_int("g_width");
  map.g_height = root.required_int("g_height");
  if (map.k < 1 || map.block_size != block_size(map.k)) {
    throw Error(ErrorCode::MapInconsistent, "block_size must be 4k + 5 with k >= 1");
  }
  if (map.g_width <= 0 || map.g_height <= 0) throw Error(ErrorCode::MapInconsistent, "G dimensions must be positive");

  const Json& blocks = detail::as_array(root.required("blocks"), "/blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ObjectReader b(blocks[i], "/blocks/" + std::to_string(i), {"gx", "gy", "kind", "label", "center"});
    BlockInfo info;
    info.gx = b.required_int("gx");
    info.gy = b.required_int("gy");
    const Json& kind = b.required("kind");
    if (kind == "number") {
      info.kind = BlockKind::Number;
      info.label = b.required_int("label");
      info.center = detail::as_cell(b.required("center"), b.child("center"));
    } else if (kind == "empty") {
      info.kind = BlockKind::Empty;
      if (b.has("label") || b.has("center")) {
        throw Error(ErrorCode::MapInconsistent, "at " + b.where() + ": empty blocks carry no label or center");
      }
    } else {
      throw Error(ErrorCode::ParseError, "at " + b.child("kind") + ": expected \"number\" or \"empty\"");
    }
    map.blocks.push_back(info);
  }
  if (map.blocks.size() != static_cast<std::size_t>(map.g_width * map.g_height)) {
    throw Error(ErrorCode::MapInconsistent, "expected one block per G cell");
  }
  for (std::size_t i = 0; i < map.blocks.size(); ++i) {
    const BlockInfo& b = map.blocks[i];
    if (static_cast<std::size_t>(b.gy * map.g_width + b.gx) != i || b.gx < 0 || b.gx >= map.g_width) {
      throw Error(ErrorCode::MapInconsistent, "blocks must be listed row by row from the bottom");
    }
  }

  const Json& assignment = root.required("number_assignment");
  if (!assignment.is_object()) throw Error(ErrorCode::ParseError, "at /number_assignment: expected an object");
  for (auto it = assignment.begin(); it != assignment.end(); ++it) {
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "at /number_assignment: key \"" + it.key() + "\" is not a label");
    }
    map.number_assignment[label] = detail::as_int(it.value(), "/number_assignment/" + it.key());
  }

  const Json& pairs = detail::as_array(root.required("filler_pairs"), "/filler_pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "/filler_pairs/" + std::to_string(i);
    const Json& pair = detail::as_array(pairs[i], where);
    if (pair.size() != 2) throw Error(ErrorCode::ParseError, "at " + where + ": expected two cells");
    map.filler_pairs.push_back({detail::as_cell(pair[0], where + "/0"), detail::as_cell(pair[1], where + "/1")});
  }
  return map;
}

std::string serialize(const ReductionMap& map) {
  Json doc;
  doc["k"] = map.k;
  doc["block_size"] = map.block_size;
  doc["g_width"] = map.g_width;
  doc["g_height"] = map.g_height;
  Json blocks = Json::array();
  for (const BlockInfo& b : map.blocks) {
    Json entry{{"gx", b.gx}, {"gy", b.gy}, {"kind", b.kind == BlockKind::Number ? "number" : "empty"}};
    if (b.kind == BlockKind::Number) {
      entry["label"] = b.label;
      entry["center"] = detail::cell_json(*b.center);
    }
    blocks.push_back(std::move(entry));
  }
  doc["blocks"] = std::move(blocks);
  Json assignment = Json::object();
  for (const auto& [label, number] : map.number_assignment) assignment[std::to_string(label)] = number;
  doc["number_assignment"] = std::move(assignment);
  Json pairs = Json::array();
  for (const FillerPair& p : map.filler_pairs) pairs.push_back(Json::array({detail::cell_json(p.a), detail::cell_json(p.b)}));
  doc["filler_pairs"] = std::move(pairs);
  return detail::format(doc);
}

}  // namespace wrd
