#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace casimir {

enum class GridScale { linear, logarithmic };

/// Strictly increasing, nonempty list of finite sample points (positive when logarithmic).
class Grid {
public:
  Grid(std::vector<double> points, GridScale scale);

  std::span<const double> points() const noexcept { return points_; }
  GridScale scale() const noexcept { return scale_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }

private:
  std::vector<double> points_;
  GridScale scale_;
};

/// n points spanning [min, max]; the endpoints are stored exactly.
Grid make_grid(double min, double max, int n, GridScale scale);

GridScale parse_grid_scale(std::string_view name);
std::string_view to_string(GridScale scale);

}  // namespace casimir
