#include "casimir/yukawa.hpp"

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/summation.hpp"

namespace casimir {

namespace {
constexpr double kTwoPiG = 2.0 * PhysicalConstants::pi * PhysicalConstants::G;
}

LayeredPlate::LayeredPlate(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw ValidationError("layered plate: no layers");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& l = layers_[i];
    const std::string where = "layer " + std::to_string(i + 1);
    if (!(l.density > 0.0) || !std::isfinite(l.density)) {
      throw ValidationError(where + ": density must be > 0");
    }
    const bool last = i + 1 == layers_.size();
    if (last && !std::isinf(l.thickness)) {
      throw ValidationError(where + ": the last layer must be infinitely thick");
    }
    if (!last && !(l.thickness > 0.0 && std::isfinite(l.thickness))) {
      throw ValidationError(where + ": thickness must be finite and > 0");
    }
  }
}

LayeredPlate LayeredPlate::homogeneous(double density) {
  return LayeredPlate({Layer{std::numeric_limits<double>::infinity(), density}});
}

void YukawaParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("Yukawa range must be > 0");
  if (!std::isfinite(alpha_G)) throw DomainError("Yukawa strength must be finite");
}

ExperimentBand::ExperimentBand(std::vector<BandRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ValidationError("experiment band: no rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::string where = "band row " + std::to_string(i + 1);
    if (!(rows_[i].z > 0.0) || !std::isfinite(rows_[i].z)) {
      throw ValidationError(where + ": z must be > 0");
    }
    if (i > 0 && !(rows_[i].z > rows_[i - 1].z)) {
      throw ValidationError(where + ": z not strictly increasing");
    }
    if (!(rows_[i].delta > 0.0) || !std::isfinite(rows_[i].delta)) {
      throw ValidationError(where + ": half-width must be > 0");
    }
  }
}

ExperimentBand ExperimentBand::scaled(double factor) const {
  std::vector<BandRow> rows(rows_);
  for (auto& r : rows) r.delta *= factor;
  return ExperimentBand(std::move(rows));
}

double yukawa_point_potential(double m1, double m2, double r, const YukawaParams& p) {
  p.validate();
  if (!(r > 0.0)) throw DomainError("point potential: r must be > 0");
  return -(PhysicalConstants::G * m1 * m2 / r) * (1.0 + p.alpha_G * std::exp(-r / p.lambda));
}

double effective_density(const LayeredPlate& plate, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("effective density: lambda must be > 0");
  CompensatedSum sum;
  double depth = 0.0;
  for (const auto& l : plate.layers()) {
    const double top = std::exp(-depth / lambda);
    if (std::isinf(l.thickness)) {
      sum.add(l.density * top);
      break;
    }
    sum.add(l.density * top * -std::expm1(-l.thickness / lambda));
    depth += l.thickness;
  }
  return sum.value();
}

double yukawa_pressure(const LayeredPlate& p1, const LayeredPlate& p2, double z,
                       const YukawaParams& p) {
  p.validate();
  if (!(z > 0.0)) throw DomainError("Yukawa pressure: z must be > 0");
  const double l = p.lambda;
  return -kTwoPiG * p.alpha_G * l * l * effective_density(p1, l) * effective_density(p2, l) *
         std::exp(-z / l);
}

ConstraintCurve constrain(const ExperimentBand& band, const LayeredPlate& p1,
                          const LayeredPlate& p2, const Grid& lambda_grid) {
  ConstraintCurve curve;
  curve.reserve(lambda_grid.size());
  for (double lambda : lambda_grid.points()) {
    const double rho = effective_density(p1, lambda) * effective_density(p2, lambda);
    if (!(rho > 0.0)) {
      throw ConfigurationError("constraint: effective densities vanish at lambda = " +
                               std::to_string(lambda));
    }
    const double scale = kTwoPiG * lambda * lambda * rho;
    ConstraintRow row{lambda, std::numeric_limits<double>::infinity(), band.rows().front().z};
    for (const auto& b : band.rows()) {
      const double x = b.z / lambda;
      const double v = x < 700.0 ? b.delta * std::exp(x) / scale
                                 : std::exp(std::log(b.delta) + x - std::log(scale));
      if (v < row.alpha_max) {
        row.alpha_max = v;
        row.z_star = b.z;
      }
    }
    curve.push_back(row);
  }
  return curve;
}

}  // namespace casimir
