#pragma once

// Private helpers shared by the document readers/writers. Not installed.

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wrd/error.hpp"
#include "wrd/grid.hpp"

namespace wrd::detail {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text);

/// Checked view of a JSON object: rejects non-objects and unknown keys on
/// construction. `where` is a JSON-pointer-like location used in messages.
class ObjectReader {
 public:
  ObjectReader(const Json& obj, std::string where, std::initializer_list<std::string_view> allowed);

  bool has(std::string_view key) const;
  const Json& required(std::string_view key) const;
  int required_int(std::string_view key) const;
  std::string child(std::string_view key) const { return where_ + "/" + std::string(key); }
  const std::string& where() const { return where_; }

 private:
  const Json& obj_;
  std::string where_;
};

int as_int(const Json& value, const std::string& where);
const Json& as_array(const Json& value, const std::string& where);
CellCoord as_cell(const Json& value, const std::string& where);
Path as_path(const Json& value, const std::string& where);

Json cell_json(CellCoord c);
Json path_json(const Path& p);

/// Deterministic layout: a node goes on one line when its compact form fits
/// the line budget or it is an array of scalars; otherwise one child per line.
std::string format(const Json& doc);

}  // namespace wrd::detail
