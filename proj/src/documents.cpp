#include <cmath>
#include <fstream>
#include <sstream>

#include "documents_internal.hpp"
#include "occ/errors.hpp"

namespace occ::detail {

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string(what) + ": malformed document: " + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Reader::Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {
  if (!node_.is_object()) throw ValidationError(path_ + ": expected an object");
}

void Reader::allow_only(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, value] : node_.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) throw ValidationError(path_ + ": unknown key '" + key + "'");
  }
}

bool Reader::has(std::string_view key) const { return node_.contains(key); }

const Json& Reader::required(std::string_view key) const {
  auto it = node_.find(key);
  if (it == node_.end()) fail(key, "missing required key");
  return *it;
}

void Reader::fail(std::string_view key, std::string_view message) const {
  throw ValidationError(path_ + "." + std::string(key) + ": " + std::string(message));
}

std::int64_t Reader::integer(std::string_view key) const {
  const Json& v = required(key);
  if (!v.is_number_integer()) fail(key, "expected an integer");
  return v.get<std::int64_t>();
}

double Reader::number(std::string_view key) const {
  const Json& v = required(key);
  if (!v.is_number()) fail(key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(key, "expected a finite number");
  return d;
}

bool Reader::boolean(std::string_view key) const {
  const Json& v = required(key);
  if (!v.is_boolean()) fail(key, "expected a boolean");
  return v.get<bool>();
}

std::string Reader::string(std::string_view key) const {
  const Json& v = required(key);
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

std::string Reader::id(std::string_view key) const {
  std::string s = string(key);
  if (s.empty()) fail(key, "id must be non-empty");
  return s;
}

SignedAppraisal Reader::appraisal(std::string_view key) const {
  const double d = number(key);
  if (!(d >= -1.0 && d <= 1.0)) fail(key, "value out of range [-1,1]");
  return SignedAppraisal(d);
}

double Reader::unit(std::string_view key) const {
  const double d = number(key);
  if (!(d >= 0.0 && d <= 1.0)) fail(key, "value out of range [0,1]");
  return d;
}

const Json& Reader::object(std::string_view key) const {
  const Json& v = required(key);
  if (!v.is_object()) fail(key, "expected an object");
  return v;
}

const Json& Reader::array(std::string_view key) const {
  const Json& v = required(key);
  if (!v.is_array()) fail(key, "expected an array");
  return v;
}

const Json& Reader::optional_array(std::string_view key) const {
  static const Json kEmpty = Json::array();
  return has(key) ? array(key) : kEmpty;
}

}  // namespace occ::detail
