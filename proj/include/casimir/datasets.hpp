#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "casimir/materials.hpp"
#include "casimir/yukawa.hpp"

namespace casimir {

/// Two-column optical table. The header names the frequency column: `omega_rad_s` for
/// angular frequency or `energy_eV` for photon energy, followed by `im_eps`. Lines
/// starting with `#` and blank lines are skipped. Errors cite the line number.
OpticalTable parse_optical_table(std::istream& in, const std::string& source);
OpticalTable read_optical_table(const std::string& path);

/// Confidence band with header `z_nm,delta_mPa`.
ExperimentBand parse_band(std::istream& in, const std::string& source);
ExperimentBand read_band(const std::string& path);

/// Layer list "rho@thickness_nm,...,rho": densities in kg/m^3, the last entry is the
/// substrate and carries no thickness. "19300@200,2330" is 200 nm of gold on silicon.
LayeredPlate parse_layers(std::string_view spec);

}  // namespace casimir
