#include "casimir/materials.hpp"

#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"

namespace casimir {

std::string to_string(MaterialKind kind) {
  switch (kind) {
    case MaterialKind::ideal_metal: return "ideal-metal";
    case MaterialKind::plasma: return "plasma";
    case MaterialKind::drude: return "drude";
    case MaterialKind::impedance: return "impedance";
    case MaterialKind::tabulated: return "tabulated";
  }
  return "unknown";
}

MaterialModel MaterialModel::ideal_metal() { return MaterialModel{}; }

MaterialModel MaterialModel::plasma(double omega_p) {
  if (!(omega_p > 0.0)) throw ValidationError("plasma model: omega_p must be > 0");
  MaterialModel m;
  m.kind_ = MaterialKind::plasma;
  m.omega_p_ = omega_p;
  return m;
}

MaterialModel MaterialModel::drude(double omega_p, double gamma) {
  if (!(omega_p > 0.0)) throw ValidationError("drude model: omega_p must be > 0");
  if (!(gamma >= 0.0)) throw ValidationError("drude model: gamma must be >= 0");
  MaterialModel m;
  m.kind_ = MaterialKind::drude;
  m.omega_p_ = omega_p;
  m.gamma_ = gamma;
  return m;
}

MaterialModel MaterialModel::impedance(double omega_p) {
  if (!(omega_p > 0.0)) throw ValidationError("impedance model: omega_p must be > 0");
  MaterialModel m;
  m.kind_ = MaterialKind::impedance;
  m.omega_p_ = omega_p;
  return m;
}

MaterialModel MaterialModel::tabulated(std::shared_ptr<const OpticalTable> table,
                                       LowFrequencyExtension extension) {
  if (!table) throw ValidationError("tabulated model: missing optical table");
  MaterialModel m;
  m.kind_ = MaterialKind::tabulated;
  m.table_ = std::move(table);
  m.extension_ = extension;
  m.omega_p_ = extension.omega_p;
  m.gamma_ = extension.gamma;
  return m;
}

MaterialModel MaterialModel::vacuum() {
  std::vector<double> omega(OpticalTable::kMinRows);
  for (std::size_t i = 0; i < omega.size(); ++i) omega[i] = std::pow(10.0, 10.0 + i);
  return tabulated(std::make_shared<const OpticalTable>(std::move(omega),
                                                        std::vector<double>(omega.size(), 0.0)),
                   LowFrequencyExtension::none());
}

bool MaterialModel::is_vacuum() const noexcept {
  return kind_ == MaterialKind::tabulated && extension_.kind == LowFrequencyExtension::Kind::none &&
         table_->lossless();
}

bool MaterialModel::has_plasma_frequency() const noexcept { return omega_p_ > 0.0; }

double MaterialModel::omega_p() const {
  if (!has_plasma_frequency()) {
    throw ConfigurationError("material " + describe() + " has no plasma frequency");
  }
  return omega_p_;
}

const OpticalTable& MaterialModel::table() const {
  if (!table_) throw UnsupportedOperation("material " + describe() + " has no optical table");
  return *table_;
}

std::string MaterialModel::describe() const {
  std::ostringstream s;
  s.precision(6);
  s << to_string(kind_);
  switch (kind_) {
    case MaterialKind::ideal_metal: break;
    case MaterialKind::plasma:
    case MaterialKind::impedance:
      s << "(omega_p=" << rad_per_s_to_ev(omega_p_) << " eV)";
      break;
    case MaterialKind::drude:
      s << "(omega_p=" << rad_per_s_to_ev(omega_p_) << " eV, gamma=" << rad_per_s_to_ev(gamma_)
        << " eV)";
      break;
    case MaterialKind::tabulated: {
      s << "(" << table_->size() << " rows, extension=";
      switch (extension_.kind) {
        case LowFrequencyExtension::Kind::none: s << "none"; break;
        case LowFrequencyExtension::Kind::drude:
          s << "drude omega_p=" << rad_per_s_to_ev(extension_.omega_p)
            << " eV gamma=" << rad_per_s_to_ev(extension_.gamma) << " eV";
          break;
        case LowFrequencyExtension::Kind::plasma:
          s << "plasma omega_p=" << rad_per_s_to_ev(extension_.omega_p) << " eV";
          break;
      }
      s << ")";
      break;
    }
  }
  return s.str();
}

namespace presets {
MaterialModel gold_plasma() { return MaterialModel::plasma(ev_to_rad_per_s(kGoldPlasmaEv)); }
MaterialModel gold_drude() {
  return MaterialModel::drude(ev_to_rad_per_s(kGoldPlasmaEv), ev_to_rad_per_s(kGoldGammaEv));
}
MaterialModel gold_impedance() { return MaterialModel::impedance(ev_to_rad_per_s(kGoldPlasmaEv)); }
}  // namespace presets

double eps_minus_one(const MaterialModel& m, double xi) {
  if (!(xi > 0.0)) throw DomainError("eps_imag_axis: xi must be > 0 (xi = 0 uses zero-frequency rules)");
  switch (m.kind()) {
    case MaterialKind::plasma: {
      const double r = m.omega_p() / xi;
      return r * r;
    }
    case MaterialKind::drude:
      return m.omega_p() * m.omega_p() / (xi * (xi + m.gamma()));
    case MaterialKind::tabulated:
      return kk_eps_minus_one(m.table(), m.extension(), xi);
    case MaterialKind::ideal_metal:
    case MaterialKind::impedance:
      break;
  }
  throw UnsupportedOperation("eps_imag_axis: " + to_string(m.kind()) +
                             " model has no dielectric permittivity");
}

double eps_imag_axis(const MaterialModel& m, double xi) { return 1.0 + eps_minus_one(m, xi); }

double impedance_imag_axis(const MaterialModel& m, double xi) {
  if (m.kind() != MaterialKind::impedance) {
    throw UnsupportedOperation("impedance_imag_axis: " + to_string(m.kind()) +
                               " model is not an impedance model");
  }
  if (!(xi >= 0.0)) throw DomainError("impedance_imag_axis: xi must be >= 0");
  if (xi == 0.0) return 0.0;
  return xi / std::hypot(xi, m.omega_p());
}

}  // namespace casimir
