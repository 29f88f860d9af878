#include "casimir/cli/curve_output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include <unistd.h>

#include "casimir/error.hpp"

namespace casimir::cli {

void CurveOutput::validate() const {
  for (const auto& c : columns) {
    if (c.values.size() != columns.front().values.size()) {
      throw ValidationError("curve output: column '" + c.name + "' has " +
                            std::to_string(c.values.size()) + " rows, expected " +
                            std::to_string(columns.front().values.size()));
    }
  }
}

std::size_t CurveOutput::rows() const { return columns.empty() ? 0 : columns.front().values.size(); }

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ValidationError("unknown output format '" + name + "' (expected csv|json)");
}

std::string to_csv(const CurveOutput& curve) {
  curve.validate();
  std::string out;
  for (std::size_t j = 0; j < curve.columns.size(); ++j) {
    if (j) out += ',';
    out += curve.columns[j].name + "[" + curve.columns[j].unit + "]";
  }
  out += '\n';
  char buf[40];
  for (std::size_t i = 0; i < curve.rows(); ++i) {
    for (std::size_t j = 0; j < curve.columns.size(); ++j) {
      if (j) out += ',';
      std::snprintf(buf, sizeof buf, "%.11e", curve.columns[j].values[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const CurveOutput& curve) {
  curve.validate();
  Json doc = Json::object();
  doc["metadata"] = curve.metadata;
  Json cols = Json::array();
  for (const auto& c : curve.columns) {
    Json values = Json::array();
    for (double v : c.values) {
      if (std::isfinite(v)) {
        values.push_back(v);
      } else {
        values.push_back(nullptr);
      }
    }
    cols.push_back(Json{{"name", c.name}, {"unit", c.unit}, {"values", std::move(values)}});
  }
  doc["columns"] = std::move(cols);
  return doc.dump(2) + "\n";
}

CurveOutput from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("curve JSON: ") + e.what());
  }
  CurveOutput curve;
  try {
    curve.metadata = doc.at("metadata");
    for (const auto& c : doc.at("columns")) {
      Column col{c.at("name").get<std::string>(), c.at("unit").get<std::string>(), {}};
      for (const auto& v : c.at("values")) {
        col.values.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                         : v.get<double>());
      }
      curve.columns.push_back(std::move(col));
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("curve JSON: ") + e.what());
  }
  curve.validate();
  return curve;
}

std::string emit(const CurveOutput& curve, Format format) {
  return format == Format::csv ? to_csv(curve) : to_json(curve);
}

void write_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write '" + tmp.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw ValidationError("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ValidationError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace casimir::cli
