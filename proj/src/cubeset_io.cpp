#include "cubetile/cubeset_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "cubetile/errors.hpp"

namespace cubetile {

namespace {

nlohmann::ordered_json point_to_json(const Point& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p) arr.push_back(c.to_string());
  return arr;
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  throw ParseError("rational must be a string \"p/q\" or an integer, got " + v.dump());
}

Point point_from_json(const nlohmann::json& v) {
  if (!v.is_array()) throw ParseError("point must be an array, got " + v.dump());
  std::vector<Rational> coords;
  coords.reserve(v.size());
  for (const auto& c : v) coords.push_back(rational_from_json(c));
  return Point(std::move(coords));
}

}  // namespace

nlohmann::ordered_json to_json(const TranslateSet& input) {
  const TranslateSet set = input.is_canonical() ? input : canonicalize(input);
  nlohmann::ordered_json doc;
  doc["dim"] = set.dim();
  doc["mode"] = set.is_periodic() ? "periodic" : "finite";
  if (set.is_periodic()) doc["period"] = set.period();
  auto offsets = nlohmann::ordered_json::array();
  for (const auto& t : set.offsets()) offsets.push_back(point_to_json(t));
  doc["offsets"] = std::move(offsets);
  return doc;
}

TranslateSet cubeset_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("cubeset must be a JSON object");
    const auto dim = doc.at("dim").get<std::int64_t>();
    if (dim < 1) throw ParseError("dim must be positive");
    const auto mode_text = doc.at("mode").get<std::string>();
    std::vector<Point> offsets;
    for (const auto& t : doc.at("offsets")) offsets.push_back(point_from_json(t));
    if (mode_text == "finite") {
      if (doc.contains("period")) throw ParseError("finite cubeset must not carry a period");
      return canonicalize(TranslateSet(static_cast<std::size_t>(dim), Mode::Finite, std::move(offsets)));
    }
    if (mode_text == "periodic") {
      auto period = doc.at("period").get<std::vector<std::int64_t>>();
      return canonicalize(TranslateSet(static_cast<std::size_t>(dim), Mode::Periodic, std::move(offsets), std::move(period)));
    }
    throw ParseError("mode must be \"finite\" or \"periodic\", got \"" + mode_text + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cubeset: ") + e.what());
  }
}

std::string to_json_line(const TranslateSet& set) { return to_json(set).dump(); }

TranslateSet parse_cubeset(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return cubeset_from_json(doc);
}

TranslateSet read_cubeset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cubeset(buf.str());
}

void write_cubeset(const std::string& path, const TranslateSet& set) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << to_json(set).dump(2) << '\n';
}

std::vector<TranslateSet> read_cubeset_lines(std::istream& in) {
  std::vector<TranslateSet> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_cubeset(line));
  }
  return out;
}

std::vector<Point> parse_points(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("sample file must hold a JSON array of points");
  std::vector<Point> out;
  for (const auto& p : doc) out.push_back(point_from_json(p));
  return out;
}

nlohmann::ordered_json points_to_json(const std::vector<Point>& points) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : points) arr.push_back(point_to_json(p));
  return arr;
}

}  // namespace cubetile
