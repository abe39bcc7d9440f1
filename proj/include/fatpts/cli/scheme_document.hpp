#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fatpts/algebra/point.hpp"
#include "fatpts/algebra/scheme.hpp"
#include "fatpts/core/grid.hpp"

namespace fatpts::cli {

/// Input error with a location such as "line 3" or "row_points[1][0]".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct SchemeDocument {
  MultiplicityGrid grid;
  std::optional<std::vector<ProjectivePoint>> row_points = std::nullopt;
  std::optional<std::vector<ProjectivePoint>> col_points = std::nullopt;
  std::optional<std::vector<std::string>> row_labels = std::nullopt;
  std::optional<std::vector<std::string>> col_labels = std::nullopt;

  /// Missing coordinates default to [1 : k-1].
  Scheme to_scheme() const;
};

/// Grid text (whitespace-separated rows, '#' comments, blank lines ignored)
/// or, when the first non-blank character is '{', the JSON document
///   {"grid": [[...]], "row_points": [[x0, x1], ...], "col_points": [...],
///    "row_labels": [...], "col_labels": [...]}
/// with coordinates given as integers or "n/d" strings. Throws ParseError.
SchemeDocument parse_scheme(std::string_view text);

/// Replaces the coordinates with those of a JSON document holding
/// "row_points" and/or "col_points". Throws ParseError.
void apply_coordinates(SchemeDocument& doc, std::string_view json_text);

/// Grid text only; coordinates and labels are not representable.
std::string emit_text(const SchemeDocument& doc);
std::string emit_json(const SchemeDocument& doc);

}  // namespace fatpts::cli
