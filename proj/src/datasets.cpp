#include "casimir/datasets.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end && !text.empty();
}

struct Row {
  std::size_t line = 0;
  double a = 0.0;
  double b = 0.0;
};

struct TwoColumn {
  std::string header_first;
  std::string header_second;
  std::vector<Row> rows;
};

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ValidationError(source + ": line " + std::to_string(line) + ": " + what);
}

TwoColumn read_two_columns(std::istream& in, const std::string& source) {
  TwoColumn out;
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      fail(source, number, "expected exactly two comma-separated columns");
    }
    const auto first = trim(text.substr(0, comma));
    const auto second = trim(text.substr(comma + 1));
    if (!have_header) {
      out.header_first = std::string(first);
      out.header_second = std::string(second);
      have_header = true;
      continue;
    }
    Row r{number, 0.0, 0.0};
    if (!parse_double(first, r.a)) fail(source, number, "cannot parse '" + std::string(first) + "'");
    if (!parse_double(second, r.b)) {
      fail(source, number, "cannot parse '" + std::string(second) + "'");
    }
    out.rows.push_back(r);
  }
  if (!have_header) throw ValidationError(source + ": missing header line");
  if (out.rows.empty()) throw ValidationError(source + ": no data rows");
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return in;
}

}  // namespace

OpticalTable parse_optical_table(std::istream& in, const std::string& source) {
  const auto data = read_two_columns(in, source);
  bool energy = false;
  if (data.header_first == "energy_eV") {
    energy = true;
  } else if (data.header_first != "omega_rad_s") {
    throw ValidationError(source + ": first column must be 'omega_rad_s' or 'energy_eV', got '" +
                          data.header_first + "'");
  }
  if (data.header_second != "im_eps") {
    throw ValidationError(source + ": second column must be 'im_eps', got '" +
                          data.header_second + "'");
  }
  std::vector<double> omega;
  std::vector<double> im;
  for (const auto& r : data.rows) {
    const double w = energy ? ev_to_rad_per_s(r.a) : r.a;
    if (!(w > 0.0) || !std::isfinite(w)) fail(source, r.line, "frequency must be positive");
    if (!omega.empty() && !(w > omega.back())) {
      fail(source, r.line, "frequency not strictly increasing");
    }
    if (!(r.b >= 0.0) || !std::isfinite(r.b)) {
      fail(source, r.line, "Im eps must be >= 0 (passivity)");
    }
    omega.push_back(w);
    im.push_back(r.b);
  }
  try {
    return OpticalTable(std::move(omega), std::move(im));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

OpticalTable read_optical_table(const std::string& path) {
  auto in = open(path);
  return parse_optical_table(in, path);
}

ExperimentBand parse_band(std::istream& in, const std::string& source) {
  const auto data = read_two_columns(in, source);
  if (data.header_first != "z_nm" || data.header_second != "delta_mPa") {
    throw ValidationError(source + ": header must be 'z_nm,delta_mPa'");
  }
  std::vector<BandRow> rows;
  for (const auto& r : data.rows) {
    if (!(r.a > 0.0) || !std::isfinite(r.a)) fail(source, r.line, "z must be > 0");
    if (!rows.empty() && !(r.a * 1e-9 > rows.back().z)) {
      fail(source, r.line, "z not strictly increasing");
    }
    if (!(r.b > 0.0) || !std::isfinite(r.b)) fail(source, r.line, "half-width must be > 0");
    rows.push_back({r.a * 1e-9, r.b * 1e-3});
  }
  return ExperimentBand(std::move(rows));
}

ExperimentBand read_band(const std::string& path) {
  auto in = open(path);
  return parse_band(in, path);
}

LayeredPlate parse_layers(std::string_view spec) {
  std::vector<Layer> layers;
  std::size_t index = 0;
  while (true) {
    ++index;
    const auto comma = spec.find(',');
    const auto item = trim(spec.substr(0, comma));
    const std::string where = "layer " + std::to_string(index) + " '" + std::string(item) + "'";
    Layer l;
    const auto at = item.find('@');
    if (!parse_double(item.substr(0, at), l.density)) {
      throw ValidationError(where + ": cannot parse density");
    }
    if (at != std::string_view::npos) {
      double nm = 0.0;
      if (!parse_double(item.substr(at + 1), nm)) {
        throw ValidationError(where + ": cannot parse thickness");
      }
      l.thickness = nm * 1e-9;
    }
    layers.push_back(l);
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return LayeredPlate(std::move(layers));
}

}  // namespace casimir
