#include "fatpts/cli/scheme_document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fatpts/core/errors.hpp"
#include "json.hpp"

namespace fatpts::cli {

using nlohmann::json;
using nlohmann::ordered_json;

Scheme SchemeDocument::to_scheme() const {
  return Scheme(grid, row_points.value_or(default_coordinates(grid.rows())),
                col_points.value_or(default_coordinates(grid.cols())));
}

namespace {

std::string line_loc(std::size_t line) { return "line " + std::to_string(line); }

SchemeDocument parse_text(std::string_view text) {
  std::vector<RowTuple> rows;
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    RowTuple row;
    std::string tok;
    std::size_t field = 0;
    while (fields >> tok) {
      ++field;
      const auto where = line_loc(lineno) + ", field " + std::to_string(field);
      if (tok.front() == '-') throw ParseError(where, "negative multiplicity '" + tok + "'");
      if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(where, "not a non-negative integer: '" + tok + "'");
      if (tok.size() > 6) throw ParseError(where, "multiplicity too large: '" + tok + "'");
      row.push_back(static_cast<Multiplicity>(std::stoul(tok)));
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(line_loc(lineno), "ragged row: expected " + std::to_string(rows.front().size()) +
                                             " entries, got " + std::to_string(row.size()));
    if (std::all_of(row.begin(), row.end(), [](Multiplicity m) { return m == 0; }))
      throw ParseError(line_loc(lineno), "row is all zero; trim it from the grid");
    rows.push_back(std::move(row));
    lines.push_back(lineno);
  }
  if (rows.empty()) throw ParseError("input", "no grid rows found");
  for (std::size_t j = 0; j < rows.front().size(); ++j)
    if (std::all_of(rows.begin(), rows.end(), [&](const RowTuple& r) { return r[j] == 0; }))
      throw ParseError("column " + std::to_string(j + 1), "column is all zero; trim it from the grid");
  return SchemeDocument{MultiplicityGrid(std::move(rows)), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

Rational json_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InvalidInput& e) {
      throw ParseError(where, e.what());
    }
  }
  throw ParseError(where, "coordinate must be an integer or an \"n/d\" string");
}

std::vector<ProjectivePoint> json_points(const json& arr, const std::string& key, std::size_t expected) {
  if (!arr.is_array()) throw ParseError(key, "expected an array of [x0, x1] pairs");
  if (arr.size() != expected)
    throw ParseError(key, "expected " + std::to_string(expected) + " points, got " + std::to_string(arr.size()));
  std::vector<ProjectivePoint> pts;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto where = key + "[" + std::to_string(k) + "]";
    const auto& p = arr[k];
    if (!p.is_array() || p.size() != 2) throw ParseError(where, "expected a pair [x0, x1]");
    auto x0 = json_rational(p[0], where + "[0]");
    auto x1 = json_rational(p[1], where + "[1]");
    try {
      pts.emplace_back(std::move(x0), std::move(x1));
    } catch (const InvalidInput& e) {
      throw ParseError(where, e.what());
    }
    for (std::size_t l = 0; l < k; ++l)
      if (pts[l] == pts[k])
        throw ParseError(where, "duplicate coordinate " + pts[k].to_string() + " (same as " + key + "[" +
                                    std::to_string(l) + "])");
  }
  return pts;
}

std::vector<std::string> json_labels(const json& arr, const std::string& key, std::size_t expected) {
  if (!arr.is_array() || arr.size() != expected)
    throw ParseError(key, "expected an array of " + std::to_string(expected) + " strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (!arr[k].is_string()) throw ParseError(key + "[" + std::to_string(k) + "]", "label must be a string");
    out.push_back(arr[k].get<std::string>());
  }
  return out;
}

json parse_json_object(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("json", e.what());
  }
  if (!j.is_object()) throw ParseError("json", "top level must be an object");
  return j;
}

void read_coordinates(SchemeDocument& doc, const json& j) {
  if (j.contains("row_points")) doc.row_points = json_points(j["row_points"], "row_points", doc.grid.rows());
  if (j.contains("col_points")) doc.col_points = json_points(j["col_points"], "col_points", doc.grid.cols());
}

SchemeDocument parse_json(std::string_view text) {
  const json j = parse_json_object(text);
  static const char* known[] = {"grid", "row_points", "col_points", "row_labels", "col_labels"};
  for (const auto& [key, value] : j.items())
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ParseError(key, "unknown field");
  if (!j.contains("grid") || !j["grid"].is_array() || j["grid"].empty())
    throw ParseError("grid", "expected a non-empty array of rows");
  std::vector<RowTuple> rows;
  for (std::size_t i = 0; i < j["grid"].size(); ++i) {
    const auto& r = j["grid"][i];
    const auto where = "grid[" + std::to_string(i) + "]";
    if (!r.is_array() || r.empty()) throw ParseError(where, "expected a non-empty array");
    if (!rows.empty() && r.size() != rows.front().size())
      throw ParseError(where, "ragged row: expected " + std::to_string(rows.front().size()) + " entries, got " +
                                  std::to_string(r.size()));
    RowTuple row;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const auto& v = r[k];
      const auto at = where + "[" + std::to_string(k) + "]";
      if (!v.is_number_integer()) throw ParseError(at, "multiplicity must be an integer");
      if (v.get<long long>() < 0) throw ParseError(at, "negative multiplicity");
      if (v.get<long long>() > 999999) throw ParseError(at, "multiplicity too large");
      row.push_back(static_cast<Multiplicity>(v.get<long long>()));
    }
    rows.push_back(std::move(row));
  }
  SchemeDocument doc{[&] {
    try {
      return MultiplicityGrid(std::move(rows));
    } catch (const InvalidInput& e) {
      throw ParseError("grid", std::string(e.what()) + "; trim it from the grid");
    }
  }()};
  read_coordinates(doc, j);
  if (j.contains("row_labels")) doc.row_labels = json_labels(j["row_labels"], "row_labels", doc.grid.rows());
  if (j.contains("col_labels")) doc.col_labels = json_labels(j["col_labels"], "col_labels", doc.grid.cols());
  return doc;
}

ordered_json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

ordered_json points_json(const std::vector<ProjectivePoint>& pts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back({rational_json(p.x0()), rational_json(p.x1())});
  return arr;
}

}  // namespace

SchemeDocument parse_scheme(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

void apply_coordinates(SchemeDocument& doc, std::string_view json_text) {
  const json j = parse_json_object(json_text);
  for (const auto& [key, value] : j.items())
    if (key != "row_points" && key != "col_points") throw ParseError(key, "unknown field in coordinate file");
  read_coordinates(doc, j);
}

std::string emit_text(const SchemeDocument& doc) {
  std::string out;
  for (const auto& row : doc.grid.data()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_json(const SchemeDocument& doc) {
  ordered_json j;
  j["grid"] = doc.grid.data();
  if (doc.row_points) j["row_points"] = points_json(*doc.row_points);
  if (doc.col_points) j["col_points"] = points_json(*doc.col_points);
  if (doc.row_labels) j["row_labels"] = *doc.row_labels;
  if (doc.col_labels) j["col_labels"] = *doc.col_labels;
  return j.dump() + "\n";
}

}  // namespace fatpts::cli
