#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace casimir::cli {

using Json = nlohmann::ordered_json;

struct Column {
  std::string name;
  std::string unit;
  std::vector<double> values;
};

/// Named numeric columns plus a metadata object describing the run.
struct CurveOutput {
  std::vector<Column> columns;
  Json metadata = Json::object();

  /// Throws ValidationError unless all columns have equal length.
  void validate() const;
  std::size_t rows() const;
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

/// CSV: header `name[unit],...`, then rows in %.11e (12 significant digits).
std::string to_csv(const CurveOutput& curve);
/// JSON: {"metadata": {...}, "columns": [{"name", "unit", "values"}]}, two-space indent.
/// Non-finite values are written as null.
std::string to_json(const CurveOutput& curve);
CurveOutput from_json(const std::string& text);

std::string emit(const CurveOutput& curve, Format format);

/// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::string& path, const std::string& bytes);

}  // namespace casimir::cli
