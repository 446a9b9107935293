#include "json_util.hpp"

#include <algorithm>

namespace wrd::detail {

namespace {

constexpr std::size_t kLineBudget = 96;

bool scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

void emit(const Json& j, std::size_t indent, std::size_t prefix, std::string& out) {
  std::string compact = j.dump();
  if (j.is_primitive() || scalar_array(j) || indent + prefix + compact.size() <= kLineBudget) {
    out += compact;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    std::size_t key_len = 0;
    if (object) {
      std::string key = Json(it.key()).dump() + ": ";
      key_len = key.size();
      out += key;
    }
    emit(it.value(), indent + 2, key_len, out);
    if (i + 1 < j.size()) out += ",";
    out += "\n";
  }
  out += std::string(indent, ' ');
  out += object ? "}" : "]";
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    auto pos = what.find("parse error");
    throw Error(ErrorCode::ParseError, pos == std::string::npos ? what : what.substr(pos));
  }
}

ObjectReader::ObjectReader(const Json& obj, std::string where, std::initializer_list<std::string_view> allowed)
    : obj_(obj), where_(std::move(where)) {
  if (!obj_.is_object()) throw Error(ErrorCode::ParseError, "at " + where_ + ": expected an object");
  for (auto it = obj_.begin(); it != obj_.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw Error(ErrorCode::UnknownField, "at " + child(it.key()) + ": unknown field \"" + it.key() + "\"");
    }
  }
}

bool ObjectReader::has(std::string_view key) const { return obj_.contains(std::string(key)); }

const Json& ObjectReader::required(std::string_view key) const {
  auto it = obj_.find(std::string(key));
  if (it == obj_.end()) throw Error(ErrorCode::MissingField, "at " + where_ + ": missing field \"" + std::string(key) + "\"");
  return *it;
}

int ObjectReader::required_int(std::string_view key) const { return as_int(required(key), child(key)); }

int as_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw Error(ErrorCode::ParseError, "at " + where + ": expected an integer");
  const auto v = value.get<long long>();
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw Error(ErrorCode::ParseError, "at " + where + ": integer out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& value, const std::string& where) {
  if (!value.is_array()) throw Error(ErrorCode::ParseError, "at " + where + ": expected an array");
  return value;
}

CellCoord as_cell(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) throw Error(ErrorCode::ParseError, "at " + where + ": expected [x, y]");
  return {as_int(value[0], where + "/0"), as_int(value[1], where + "/1")};
}

Path as_path(const Json& value, const std::string& where) {
  Path p;
  const Json& arr = as_array(value, where);
  for (std::size_t i = 0; i < arr.size(); ++i) p.push_back(as_cell(arr[i], where + "/" + std::to_string(i)));
  return p;
}

Json cell_json(CellCoord c) { return Json::array({c.x, c.y}); }

Json path_json(const Path& p) {
  Json arr = Json::array();
  for (CellCoord c : p) arr.push_back(cell_json(c));
  return arr;
}

std::string format(const Json& doc) {
  std::string out;
  emit(doc, 0, 0, out);
  out += "\n";
  return out;
}

}  // namespace wrd::detail
