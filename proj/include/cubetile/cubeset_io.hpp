#pragma once

// Cubeset interchange format (UTF-8 JSON):
//
//   {"dim": 2, "mode": "periodic", "period": [2, 2],
//    "offsets": [["0", "0"], ["1", "1/2"]]}
//
// Rationals are strings "p/q", with "/q" omitted when q == 1. The "period"
// key is present only in periodic mode. Parsed sets are canonicalized and
// duplicates are rejected.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubetile/translate_set.hpp"

namespace cubetile {

nlohmann::ordered_json to_json(const TranslateSet& set);
TranslateSet cubeset_from_json(const nlohmann::json& doc);

/// Single-line JSON document (one line of a JSON-lines stream).
std::string to_json_line(const TranslateSet& set);
TranslateSet parse_cubeset(const std::string& text);

TranslateSet read_cubeset(const std::string& path);
void write_cubeset(const std::string& path, const TranslateSet& set);

/// Reads every non-blank line of a JSON-lines stream.
std::vector<TranslateSet> read_cubeset_lines(std::istream& in);

/// Sample-point files: a JSON array of points, each an array of rational strings.
std::vector<Point> parse_points(const nlohmann::json& doc);
nlohmann::ordered_json points_to_json(const std::vector<Point>& points);

}  // namespace cubetile
