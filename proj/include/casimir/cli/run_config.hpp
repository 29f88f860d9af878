#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "casimir/cli/curve_output.hpp"
#include "casimir/constants.hpp"
#include "casimir/grid.hpp"
#include "casimir/materials.hpp"

namespace casimir::cli {

/// "var:min:max:n[:scale]", for example "z_nm:100:5000:60:log".
struct SweepSpec {
  std::string var;
  double min = 0.0;
  double max = 0.0;
  int n = 0;
  GridScale scale = GridScale::linear;

  static SweepSpec parse(std::string_view text);
  Grid grid() const;
};

/// Every input of one invocation. Units follow the flags: nm, K, eV, um, kg/m^3.
struct RunConfig {
  std::string command = "pressure";
  std::string material = "ideal";
  std::string material2;     // empty: same as material
  std::string prescription;  // empty: the material's natural rule
  double z_nm = 1000.0;
  double T = 300.0;
  std::string sweep;
  std::string quantity;  // for the sweep command
  std::string format = "csv";
  std::string out;  // empty: stdout
  std::string optical_table;
  std::string band;
  std::string layers = "19300";
  std::string layers2;  // empty: same as layers
  double R_um = 100.0;
  double K = 1e-4;       // N/m
  double m_eff = 1e-9;   // kg
  double z0_nm = 1000.0;
  std::string dz_nm = "-200:900:221";
  std::string roughness_nm;  // "a" for +-a, or "h@w,h@w,..."
  Tolerances tolerances;

  Json to_json() const;
  /// Missing keys keep their defaults; unknown keys are rejected.
  static RunConfig from_json(const Json& j);
  static RunConfig from_file(const std::string& path);

  /// Structural checks that need no file access or engine calls.
  void validate() const;
};

inline constexpr std::string_view kCommands[] = {"pressure", "force",      "free-energy",
                                                 "entropy",  "sweep",      "classical",
                                                 "constrain", "oscillator", "kk"};

/// Material presets and inline forms:
///   ideal | vacuum | gold-plasma | gold-drude | gold-impedance
///   plasma:<omega_p eV> | drude:<omega_p eV>:<gamma eV> | impedance:<omega_p eV>
///   tabulated[:drude:<omega_p eV>:<gamma eV> | :plasma:<omega_p eV>]  (needs a table)
/// A gamma override replaces the relaxation frequency of Drude-type models.
MaterialModel resolve_material(std::string_view spec, std::shared_ptr<const OpticalTable> table,
                               std::optional<double> gamma_ev = std::nullopt);

}  // namespace casimir::cli
