#pragma once

#include "casimir/yukawa.hpp"

namespace casimir::testing {

/// Yukawa pressure between two layered plates by direct volume summation of the pair
/// potential -G alpha rho1 rho2 e^{-r/lambda}/r. Midpoint cells of lambda/15 in every
/// direction, lateral disk of radius 20 lambda with the exact remainder
/// 2 pi lambda e^{-sqrt(R^2 + h^2)/lambda}, depth 20 lambda per plate, and a central
/// difference in z.
double brute_force_yukawa_pressure(const LayeredPlate& p1, const LayeredPlate& p2, double z,
                                   const YukawaParams& p);

}  // namespace casimir::testing
