#pragma once

#include <limits>
#include <vector>

#include "casimir/grid.hpp"

namespace casimir {

struct Layer {
  double thickness = std::numeric_limits<double>::infinity();  // m; infinite for the substrate
  double density = 0.0;                                        // kg/m^3
};

/// Layers listed from the surface inward; exactly the last one is infinitely thick.
class LayeredPlate {
public:
  explicit LayeredPlate(std::vector<Layer> layers);
  static LayeredPlate homogeneous(double density);

  const std::vector<Layer>& layers() const noexcept { return layers_; }

private:
  std::vector<Layer> layers_;
};

struct YukawaParams {
  double alpha_G = 0.0;
  double lambda = 0.0;  // m

  void validate() const;
};

struct BandRow {
  double z = 0.0;      // m
  double delta = 0.0;  // Pa, half-width of the confidence interval of P_th - P_exp
};

class ExperimentBand {
public:
  explicit ExperimentBand(std::vector<BandRow> rows);

  const std::vector<BandRow>& rows() const noexcept { return rows_; }
  ExperimentBand scaled(double factor) const;

private:
  std::vector<BandRow> rows_;
};

struct ConstraintRow {
  double lambda = 0.0;
  double alpha_max = 0.0;  // region above is excluded
  double z_star = 0.0;     // separation attaining the minimum
};

using ConstraintCurve = std::vector<ConstraintRow>;

/// -(G m1 m2 / r)(1 + alpha_G e^{-r/lambda}).
double yukawa_point_potential(double m1, double m2, double r, const YukawaParams& p);

/// sum_i rho_i (e^{-s_{i-1}/lambda} - e^{-s_i/lambda}) over cumulative depths s_i.
double effective_density(const LayeredPlate& plate, double lambda);

/// -2 pi G alpha_G lambda^2 rho_eff1 rho_eff2 e^{-z/lambda}. Newtonian attraction omitted.
double yukawa_pressure(const LayeredPlate& p1, const LayeredPlate& p2, double z,
                       const YukawaParams& p);

/// alpha_max(lambda) = min_z delta(z) / (2 pi G lambda^2 rho_eff1 rho_eff2 e^{-z/lambda}).
/// Overflowing bounds are reported as +infinity.
ConstraintCurve constrain(const ExperimentBand& band, const LayeredPlate& p1,
                          const LayeredPlate& p2, const Grid& lambda_grid);

}  // namespace casimir
