#include "casimir/grid.hpp"

#include <cmath>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

Grid::Grid(std::vector<double> points, GridScale scale)
    : points_(std::move(points)), scale_(scale) {
  if (points_.empty()) throw ValidationError("grid must be nonempty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) {
      throw ValidationError("grid point " + std::to_string(i) + " is not finite");
    }
    if (scale_ == GridScale::logarithmic && !(points_[i] > 0.0)) {
      throw ValidationError("logarithmic grid point " + std::to_string(i) + " is not positive");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw ValidationError("grid is not strictly increasing at index " + std::to_string(i));
    }
  }
}

Grid make_grid(double min, double max, int n, GridScale scale) {
  if (scale == GridScale::logarithmic && !(min > 0.0)) {
    throw DomainError("make_grid: logarithmic grid needs min > 0");
  }
  if (!(min < max)) throw DomainError("make_grid: min must be < max");
  if (n < 2) throw DomainError("make_grid: need at least 2 points");

  std::vector<double> pts(static_cast<std::size_t>(n));
  const double last = static_cast<double>(n - 1);
  if (scale == GridScale::linear) {
    const double step = (max - min) / last;
    for (int i = 0; i < n; ++i) pts[i] = min + step * i;
  } else {
    const double lo = std::log10(min);
    const double hi = std::log10(max);
    for (int i = 0; i < n; ++i) pts[i] = std::pow(10.0, lo + (hi - lo) * (i / last));
  }
  pts.front() = min;
  pts.back() = max;
  return Grid(std::move(pts), scale);
}

GridScale parse_grid_scale(std::string_view name) {
  if (name == "linear" || name == "lin") return GridScale::linear;
  if (name == "logarithmic" || name == "log") return GridScale::logarithmic;
  throw ValidationError("unknown grid scale '" + std::string(name) + "' (expected linear|log)");
}

std::string_view to_string(GridScale scale) {
  return scale == GridScale::linear ? "linear" : "log";
}

}  // namespace casimir
