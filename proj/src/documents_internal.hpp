#pragma once

// Strict-schema helpers over nlohmann::json shared by the KB, scenario,
// stimulus and params codecs. Every failure is a ValidationError whose
// message carries the path of the offending field.

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"
#include "occ/core.hpp"

namespace occ::detail {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

Json parse_json(std::string_view text, std::string_view what);
std::string read_file(const std::filesystem::path& path);

class Reader {
public:
  Reader(const Json& node, std::string path);

  // Rejects any key outside `allowed`.
  void allow_only(std::initializer_list<std::string_view> allowed) const;

  bool has(std::string_view key) const;
  const Json& required(std::string_view key) const;

  std::int64_t integer(std::string_view key) const;
  double number(std::string_view key) const;
  bool boolean(std::string_view key) const;
  std::string string(std::string_view key) const;
  // Non-empty string.
  std::string id(std::string_view key) const;
  SignedAppraisal appraisal(std::string_view key) const;
  // Number in [0,1].
  double unit(std::string_view key) const;
  const Json& object(std::string_view key) const;
  const Json& array(std::string_view key) const;
  // Empty array when the key is absent.
  const Json& optional_array(std::string_view key) const;

  const std::string& path() const noexcept { return path_; }
  [[noreturn]] void fail(std::string_view key, std::string_view message) const;

private:
  const Json& node_;
  std::string path_;
};

}  // namespace occ::detail
