#pragma once

#include "eqlines/lineset.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace eqlines {

/// JSON interchange form:
///   {"n": 3, "angle": "1/2", "signs": [[0, 1, -1], ...]}
/// Non-equiangular data is written with "gram": [["p/q", ...], ...] instead
/// of "signs". An optional "frame": {"squared_norm": k, "vectors": [[...]]}
/// carries integer representatives.
nlohmann::json to_json(const LineSet& lines);
LineSet lineset_from_json(const nlohmann::json& j);

std::string serialize(const LineSet& lines);
/// Throws ParseError on malformed input.
LineSet parse_lineset(const std::string& text);

LineSet read_lineset(const std::filesystem::path& path);
void write_lineset(const std::filesystem::path& path, const LineSet& lines);

}  // namespace eqlines
