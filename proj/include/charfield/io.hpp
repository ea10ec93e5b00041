#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "charfield/chartab.hpp"
#include "charfield/fov.hpp"

namespace charfield::io {

using Json = nlohmann::ordered_json;

/// {"n": conductor, "c": [[exponent, numerator, denominator], ...]} over nonzero terms E(n)^exponent.
Json to_json(const Cyclo& c);
/// Throws ValidationError on malformed input.
Cyclo cyclo_from_json(const Json& j);

Json table_to_json(const CharacterTable& table, const std::string& group);
std::string table_to_csv(const CharacterTable& table);
std::string table_to_pretty(const CharacterTable& table, const std::string& group);

Json report_to_json(const FReport& report);
std::string report_to_pretty(const FReport& report);

/// Custom group input: {"degree": n, "generators": [[images...], ...]}.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;
};

/// Throws ParseError on invalid JSON and ValidationError on a well-formed but invalid document.
GroupFile parse_group_file(std::string_view text);
/// Compact serialization; parse_group_file(write_group_file(g)) == g and writing is byte-stable.
std::string write_group_file(const GroupFile& g);
GroupFile group_file_of(const PermGroup& group);
PermGroup build_group(const GroupFile& g, const EnumerationOptions& options = {});

}  // namespace charfield::io
