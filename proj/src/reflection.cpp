#include "casimir/reflection.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/error.hpp"
#include "casimir/simd/kernels.hpp"

namespace casimir {

Prescription parse_prescription(std::string_view name) {
  if (name == "schwinger") return Prescription::schwinger_ideal;
  if (name == "drude") return Prescription::drude;
  if (name == "plasma") return Prescription::plasma;
  if (name == "impedance-ir") return Prescription::impedance_ir;
  if (name == "impedance-skin") return Prescription::impedance_skin;
  throw ConfigurationError("unknown prescription '" + std::string(name) +
                           "' (expected schwinger|drude|plasma|impedance-ir|impedance-skin)");
}

std::string_view to_string(Prescription p) {
  switch (p) {
    case Prescription::schwinger_ideal: return "schwinger";
    case Prescription::drude: return "drude";
    case Prescription::plasma: return "plasma";
    case Prescription::impedance_ir: return "impedance-ir";
    case Prescription::impedance_skin: return "impedance-skin";
  }
  return "unknown";
}

Prescription natural_prescription(const MaterialModel& m) {
  switch (m.kind()) {
    case MaterialKind::ideal_metal: return Prescription::schwinger_ideal;
    case MaterialKind::plasma: return Prescription::plasma;
    case MaterialKind::drude: return Prescription::drude;
    case MaterialKind::impedance: return Prescription::impedance_ir;
    case MaterialKind::tabulated:
      switch (m.extension().kind) {
        case LowFrequencyExtension::Kind::drude: return Prescription::drude;
        case LowFrequencyExtension::Kind::plasma: return Prescription::plasma;
        case LowFrequencyExtension::Kind::none: return Prescription::schwinger_ideal;
      }
  }
  return Prescription::schwinger_ideal;
}

void check_compatible(const MaterialModel& m, Prescription p) {
  bool ok = false;
  switch (p) {
    case Prescription::schwinger_ideal:
      ok = true;
      break;
    case Prescription::drude:
      ok = m.kind() == MaterialKind::ideal_metal || m.kind() == MaterialKind::drude ||
           (m.kind() == MaterialKind::tabulated &&
            m.extension().kind == LowFrequencyExtension::Kind::drude);
      break;
    case Prescription::plasma:
      ok = m.kind() == MaterialKind::ideal_metal || m.kind() == MaterialKind::plasma ||
           m.kind() == MaterialKind::drude ||
           (m.kind() == MaterialKind::tabulated && m.has_plasma_frequency());
      break;
    case Prescription::impedance_ir:
    case Prescription::impedance_skin:
      ok = m.kind() == MaterialKind::ideal_metal || m.kind() == MaterialKind::impedance;
      break;
  }
  if (!ok) {
    throw ConfigurationError("prescription '" + std::string(to_string(p)) +
                             "' cannot be applied to material " + m.describe());
  }
}

WaveContext::WaveContext(double xi, double k) : xi_(xi), k_(k) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw DomainError("wave context: xi must be >= 0");
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("wave context: k must be > 0");
  const double xc = xi / PhysicalConstants::c;
  q_ = (xi == 0.0) ? k : std::hypot(k, xc);
}

namespace {

// r = (w - y)/(w + y) in magnitude, with its complement.
void impedance_zero_te(double w, double y, double& r, double& om) {
  const double d = w + y;
  r = std::abs(w - y) / d;
  om = (w >= y ? 2.0 * y : 2.0 * w) / d;
}

}  // namespace

ReflectionPair fresnel(const MaterialModel& m, const WaveContext& ctx) {
  if (ctx.xi() == 0.0) {
    throw std::logic_error("fresnel: xi = 0 must go through zero_freq_limit");
  }
  if (m.kind() == MaterialKind::ideal_metal) return {1.0, 1.0};
  if (m.kind() == MaterialKind::impedance) return impedance_reflection(m, ctx);
  // The kernel is homogeneous of degree 0 in (y, t): use y = q, t = xi / c.
  const double y = ctx.q();
  const double t = ctx.xi() / PhysicalConstants::c;
  double r_tm = 0, r_te = 0, om_tm = 0, om_te = 0;
  simd::scalar_kernels().fresnel(&y, 1, eps_minus_one(m, ctx.xi()), t * t, &r_tm, &r_te, &om_tm,
                                 &om_te);
  return {r_tm, r_te};
}

ReflectionPair zero_freq_limit(const MaterialModel& m, double k, Prescription p) {
  if (!(k > 0.0)) throw DomainError("zero_freq_limit: k must be > 0");
  check_compatible(m, p);
  if (m.kind() == MaterialKind::ideal_metal) return {1.0, 1.0};
  if (m.is_vacuum()) return {0.0, 0.0};
  switch (p) {
    case Prescription::schwinger_ideal:
    case Prescription::impedance_skin:
      return {1.0, 1.0};
    case Prescription::drude:
      return {1.0, 0.0};
    case Prescription::plasma: {
      const double ck = PhysicalConstants::c * k;
      const double wp = m.omega_p();
      const double s = std::hypot(ck, wp);
      return {1.0, wp * wp / ((s + ck) * (s + ck))};
    }
    case Prescription::impedance_ir: {
      double r = 0, om = 0;
      impedance_zero_te(m.omega_p(), PhysicalConstants::c * k, r, om);
      return {1.0, r};
    }
  }
  return {1.0, 1.0};
}

ReflectionPair impedance_reflection(const MaterialModel& m, const WaveContext& ctx) {
  if (!(ctx.xi() > 0.0)) {
    throw DomainError("impedance_reflection: xi must be > 0 (xi = 0 uses zero_freq_limit)");
  }
  const double z = impedance_imag_axis(m, ctx.xi());
  const double cq = PhysicalConstants::c * ctx.q();
  const double xi = ctx.xi();
  return {(cq - xi * z) / (cq + xi * z), std::abs(xi - cq * z) / (xi + cq * z)};
}

PlateResponse PlateResponse::at_frequency(const MaterialModel& m, double xi, double z) {
  if (!(xi > 0.0)) throw DomainError("plate response: xi must be > 0");
  PlateResponse r;
  const double t = 2.0 * xi * z / PhysicalConstants::c;
  switch (m.kind()) {
    case MaterialKind::ideal_metal:
      r.kind_ = Kind::constant;
      break;
    case MaterialKind::impedance:
      r.kind_ = Kind::impedance;
      r.t_ = t;
      r.impedance_ = impedance_imag_axis(m, xi);
      break;
    default:
      r.kind_ = Kind::fresnel;
      r.t_ = t;
      r.eps_minus_1_ = eps_minus_one(m, xi);
      break;
  }
  return r;
}

PlateResponse PlateResponse::at_zero_frequency(const MaterialModel& m, Prescription p, double z) {
  check_compatible(m, p);
  PlateResponse r;
  r.kind_ = Kind::constant;
  if (m.kind() == MaterialKind::ideal_metal) return r;
  if (m.is_vacuum()) {
    r.fixed_tm_ = r.fixed_te_ = 0.0;
    return r;
  }
  switch (p) {
    case Prescription::schwinger_ideal:
    case Prescription::impedance_skin:
      break;
    case Prescription::drude:
      r.fixed_te_ = 0.0;
      break;
    case Prescription::plasma:
      r.kind_ = Kind::plasma_zero;
      r.w_ = 2.0 * z * m.omega_p() / PhysicalConstants::c;
      break;
    case Prescription::impedance_ir:
      r.kind_ = Kind::impedance_zero;
      r.w_ = 2.0 * z * m.omega_p() / PhysicalConstants::c;
      break;
  }
  return r;
}

bool PlateResponse::vanishes() const noexcept {
  return (kind_ == Kind::constant && fixed_tm_ == 0.0 && fixed_te_ == 0.0) ||
         (kind_ == Kind::fresnel && eps_minus_1_ == 0.0);
}

void PlateResponse::evaluate(std::span<const double> y, std::span<double> r_tm,
                             std::span<double> r_te, std::span<double> om_tm,
                             std::span<double> om_te) const {
  const std::size_t n = y.size();
  switch (kind_) {
    case Kind::constant:
      std::fill_n(r_tm.begin(), n, fixed_tm_);
      std::fill_n(r_te.begin(), n, fixed_te_);
      std::fill_n(om_tm.begin(), n, 1.0 - fixed_tm_);
      std::fill_n(om_te.begin(), n, 1.0 - fixed_te_);
      return;
    case Kind::fresnel:
      simd::fresnel(y, eps_minus_1_, t_ * t_, r_tm, r_te, om_tm, om_te);
      return;
    case Kind::plasma_zero: {
      const double w2 = w_ * w_;
      for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sqrt(y[i] * y[i] + w2);
        const double d = s + y[i];
        r_tm[i] = 1.0;
        om_tm[i] = 0.0;
        r_te[i] = w2 / (d * d);
        om_te[i] = 2.0 * y[i] / d;
      }
      return;
    }
    case Kind::impedance_zero:
      for (std::size_t i = 0; i < n; ++i) {
        r_tm[i] = 1.0;
        om_tm[i] = 0.0;
        impedance_zero_te(w_, y[i], r_te[i], om_te[i]);
      }
      return;
    case Kind::impedance:
      for (std::size_t i = 0; i < n; ++i) {
        const double tz = t_ * impedance_;
        const double yz = y[i] * impedance_;
        const double d_tm = y[i] + tz;
        const double d_te = t_ + yz;
        r_tm[i] = (y[i] - tz) / d_tm;
        om_tm[i] = 2.0 * tz / d_tm;
        r_te[i] = std::abs(t_ - yz) / d_te;
        om_te[i] = (t_ >= yz ? 2.0 * yz : 2.0 * t_) / d_te;
      }
      return;
  }
}

}  // namespace casimir
