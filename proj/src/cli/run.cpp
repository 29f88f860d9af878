#include "casimir/cli/run.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "casimir/cli/parallel.hpp"
#include "casimir/datasets.hpp"
#include "casimir/error.hpp"
#include "casimir/geometry.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/oscillator.hpp"
#include "casimir/simd/kernels.hpp"
#include "casimir/yukawa.hpp"

namespace casimir::cli {

namespace {

constexpr double kNm = 1e-9;
constexpr const char* kDefaultLambdaSweep = "lambda_m:1e-9:1e-4:51:log";

struct PlatePoint {
  double z_nm = 0.0;
  double T = 0.0;
  std::optional<double> gamma_ev;
};

class Runner {
public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg), threads_(thread_count()) {
    if (!cfg.optical_table.empty()) {
      table_ = std::make_shared<const OpticalTable>(read_optical_table(cfg.optical_table));
    }
  }

  CurveOutput execute() {
    const std::string what = cfg_.command == "sweep" ? cfg_.quantity : cfg_.command;
    if (cfg_.command == "sweep" && (what == "constrain" || what == "oscillator" || what == "kk" ||
                                    what == "sweep")) {
      throw ValidationError("sweep --quantity must be one of pressure|free-energy|entropy|"
                            "classical|force");
    }
    CurveOutput curve;
    if (what == "constrain") {
      curve = constrain_curve();
    } else if (what == "oscillator") {
      curve = oscillator_curve();
    } else if (what == "kk") {
      curve = kk_curve();
    } else if (what == "pressure" || what == "free-energy" || what == "entropy" ||
               what == "classical" || what == "force") {
      curve = plate_curve(what);
    } else {
      throw ValidationError("unknown quantity '" + what + "'");
    }
    curve.metadata = metadata(curve.metadata);
    return curve;
  }

private:
  const RunConfig& cfg_;
  unsigned threads_;
  std::shared_ptr<const OpticalTable> table_;
  std::vector<std::string> warnings_;

  std::optional<SweepSpec> sweep_spec(std::initializer_list<std::string_view> allowed) const {
    if (cfg_.sweep.empty()) return std::nullopt;
    auto s = SweepSpec::parse(cfg_.sweep);
    for (auto a : allowed) {
      if (s.var == a) return s;
    }
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
    throw ValidationError("command '" + cfg_.command + "' cannot sweep '" + s.var +
                          "' (expected " + list + ")");
  }

  PlateConfig plates(double z, std::optional<double> gamma_ev) const {
    const auto m1 = resolve_material(cfg_.material, table_, gamma_ev);
    const auto m2 =
        cfg_.material2.empty() ? m1 : resolve_material(cfg_.material2, table_, gamma_ev);
    Prescription p;
    if (cfg_.prescription.empty()) {
      p = natural_prescription(m1.kind() == MaterialKind::ideal_metal ? m2 : m1);
    } else {
      p = parse_prescription(cfg_.prescription);
    }
    PlateConfig pc{m1, m2, z, p};
    pc.validate();
    return pc;
  }

  ThermalState thermal(double T) const {
    ThermalState ts;
    ts.T = T;
    ts.tolerances = cfg_.tolerances;
    return ts;
  }

  std::optional<RoughnessProfile> roughness() const {
    if (cfg_.roughness_nm.empty()) return std::nullopt;
    const std::string& spec = cfg_.roughness_nm;
    if (spec.find('@') == std::string::npos) {
      const auto layers = parse_layers(spec);  // a bare number parses as one density
      return RoughnessProfile::symmetric(layers.layers().front().density * kNm);
    }
    std::vector<double> h;
    std::vector<double> w;
    std::size_t start = 0;
    while (start <= spec.size()) {
      const auto end = std::min(spec.find(',', start), spec.size());
      const auto item = spec.substr(start, end - start);
      const auto at = item.find('@');
      try {
        h.push_back(std::stod(item.substr(0, at)) * kNm);
        w.push_back(std::stod(item.substr(at + 1)));
      } catch (const std::exception&) {
        throw ValidationError("roughness entry '" + item + "': expected offset_nm@weight");
      }
      start = end + 1;
    }
    return RoughnessProfile(std::move(h), std::move(w));
  }

  CurveOutput plate_curve(const std::string& quantity) {
    std::vector<PlatePoint> points;
    const auto sweep = sweep_spec({"z_nm", "T", "gamma_eV"});
    if (!sweep) {
      points.push_back({cfg_.z_nm, cfg_.T, std::nullopt});
    } else {
      const auto grid = sweep->grid();
      for (double v : grid.points()) {
        PlatePoint p{cfg_.z_nm, cfg_.T, std::nullopt};
        if (sweep->var == "z_nm") p.z_nm = v;
        if (sweep->var == "T") p.T = v;
        if (sweep->var == "gamma_eV") p.gamma_ev = v;
        points.push_back(p);
      }
    }
    const auto rough = quantity == "pressure" ? roughness() : std::nullopt;
    const double R = cfg_.R_um * 1e-6;

    struct Values {
      double main = 0.0;
      double extra = 0.0;
    };
    auto eval = [&](std::size_t i) {
      const auto& pt = points[i];
      const double z = pt.z_nm * kNm;
      const auto pc = plates(z, pt.gamma_ev);
      const auto ts = thermal(pt.T);
      Values v;
      if (quantity == "pressure") {
        v.main = pressure(pc, ts);
        if (rough) v.extra = rough_pressure(pc, ts, *rough);
      } else if (quantity == "free-energy") {
        v.main = free_energy(pc, ts).value;
      } else if (quantity == "entropy") {
        v.main = entropy(pc, pt.T, cfg_.tolerances);
      } else if (quantity == "classical") {
        v.main = classical_term(pc, ts);
      } else {
        const auto f = pfa_sphere_force(SphereConfig{R, z}, pc, ts);
        v.main = f.value;
        v.extra = f.rel_error_bound;
      }
      return v;
    };
    const auto values = parallel_map<Values>(points.size(), eval, threads_);

    CurveOutput curve;
    Column z{"z", "nm", {}}, T{"T", "K", {}}, gamma{"gamma", "eV", {}};
    for (const auto& p : points) {
      z.values.push_back(p.z_nm);
      T.values.push_back(p.T);
      if (p.gamma_ev) gamma.values.push_back(*p.gamma_ev);
    }
    curve.columns = {z, T};
    if (!gamma.values.empty()) curve.columns.push_back(gamma);
    Column main, extra;
    if (quantity == "pressure") {
      main = {"P", "Pa", {}};
      extra = {"P_rough", "Pa", {}};
    } else if (quantity == "free-energy") {
      main = {"F", "J/m^2", {}};
    } else if (quantity == "entropy") {
      main = {"S", "J/(K m^2)", {}};
    } else if (quantity == "classical") {
      main = {"P_classical", "Pa", {}};
    } else {
      main = {"F_sphere", "N", {}};
      extra = {"pfa_error_bound", "1", {}};
      for (const auto& p : points) {
        if (SphereConfig{R, p.z_nm * kNm}.beyond_pfa_range()) {
          warnings_.push_back("z/R = " + std::to_string(p.z_nm * kNm / R) +
                              " exceeds 0.1 at z = " + std::to_string(p.z_nm) +
                              " nm; proximity-force estimate is crude");
        }
      }
    }
    for (const auto& v : values) {
      main.values.push_back(v.main);
      extra.values.push_back(v.extra);
    }
    curve.columns.push_back(main);
    if (quantity == "force" || rough) curve.columns.push_back(extra);

    const auto sample = plates(points.front().z_nm * kNm, points.front().gamma_ev);
    curve.metadata["material_1"] = sample.material_1.describe();
    curve.metadata["material_2"] = sample.material_2.describe();
    curve.metadata["prescription"] = std::string(to_string(sample.zero_freq));
    return curve;
  }

  CurveOutput constrain_curve() {
    if (cfg_.band.empty()) throw ValidationError("constrain: --band is required");
    const auto band = read_band(cfg_.band);
    const auto p1 = parse_layers(cfg_.layers);
    const auto p2 = cfg_.layers2.empty() ? p1 : parse_layers(cfg_.layers2);
    const auto sweep = sweep_spec({"lambda_m"}).value_or(SweepSpec::parse(kDefaultLambdaSweep));
    const auto grid = sweep.grid();
    const auto rows = parallel_map<ConstraintRow>(
        grid.size(),
        [&](std::size_t i) {
          return constrain(band, p1, p2, Grid({grid[i]}, grid.scale())).front();
        },
        threads_);
    CurveOutput curve;
    Column lambda{"lambda", "m", {}}, alpha{"alpha_max", "1", {}}, z{"z_star", "m", {}};
    for (const auto& r : rows) {
      lambda.values.push_back(r.lambda);
      alpha.values.push_back(r.alpha_max);
      z.values.push_back(r.z_star);
    }
    curve.columns = {lambda, alpha, z};
    curve.metadata["excluded_region"] = "alpha above alpha_max";
    return curve;
  }

  Grid dz_grid() const {
    std::vector<std::string> parts;
    std::size_t start = 0;
    const std::string& s = cfg_.dz_nm;
    while (true) {
      const auto pos = s.find(':', start);
      parts.push_back(s.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3) throw ValidationError("--dz-nm must be min:max:n");
    const auto spec = SweepSpec::parse("dz:" + parts[0] + ":" + parts[1] + ":" + parts[2]);
    const auto g = spec.grid();
    std::vector<double> m(g.points().begin(), g.points().end());
    for (double& v : m) v *= kNm;
    return Grid(std::move(m), GridScale::linear);
  }

  OscillatorConfig oscillator(double z0_nm) const {
    OscillatorConfig o;
    o.K = cfg_.K;
    o.R = cfg_.R_um * 1e-6;
    o.m_eff = cfg_.m_eff;
    o.z0 = z0_nm * kNm;
    o.plates = plates(o.z0, std::nullopt);
    o.thermal = thermal(cfg_.T);
    return o;
  }

  CurveOutput oscillator_curve() {
    const auto grid = dz_grid();
    const auto sweep = sweep_spec({"z0_nm"});
    CurveOutput curve;
    if (!sweep) {
      const auto r = oscillator_analysis(oscillator(cfg_.z0_nm), grid);
      Column dz{"dz", "nm", {}}, s{"separation", "nm", {}}, u{"U", "J", {}};
      for (std::size_t i = 0; i < r.dz.size(); ++i) {
        dz.values.push_back(r.dz[i] / kNm);
        s.values.push_back(r.separation[i] / kNm);
        u.values.push_back(r.energy[i]);
      }
      curve.columns = {dz, s, u};
      Json stationary = Json::array();
      for (const auto& sp : r.stationary) {
        stationary.push_back(Json{{"dz_nm", sp.dz / kNm},
                                  {"kind", to_string(sp.kind)},
                                  {"curvature_N_per_m", sp.curvature},
                                  {"curvature_three_point", sp.curvature_check},
                                  {"at_contact", sp.at_contact}});
      }
      Json analysis{{"bistable", r.bistable},
                    {"empty", r.empty},
                    {"omega_free_rad_s", r.omega_free},
                    {"omega_local_rad_s", r.omega_local ? Json(*r.omega_local) : Json(nullptr)},
                    {"local_min_dz_nm",
                     r.local_min_dz ? Json(*r.local_min_dz / kNm) : Json(nullptr)},
                    {"stationary", stationary}};
      curve.metadata["analysis"] = analysis;
      return curve;
    }
    const auto z0 = sweep->grid();
    const auto results = parallel_map<OscillatorResult>(
        z0.size(), [&](std::size_t i) { return oscillator_analysis(oscillator(z0[i]), grid); },
        threads_);
    Column zc{"z0", "nm", {}}, bist{"bistable", "1", {}}, minima{"minima", "1", {}},
        wl{"omega_local", "rad/s", {}}, wf{"omega_free", "rad/s", {}};
    for (std::size_t i = 0; i < z0.size(); ++i) {
      const auto& r = results[i];
      zc.values.push_back(z0[i]);
      bist.values.push_back(r.bistable ? 1.0 : 0.0);
      double n = 0;
      for (const auto& sp : r.stationary) n += sp.kind == StationaryKind::minimum ? 1.0 : 0.0;
      minima.values.push_back(n);
      wl.values.push_back(r.omega_local.value_or(std::nan("")));
      wf.values.push_back(r.omega_free);
    }
    curve.columns = {zc, bist, minima, wl, wf};
    return curve;
  }

  CurveOutput kk_curve() {
    const auto m = resolve_material(cfg_.material, table_);
    if (m.kind() != MaterialKind::tabulated) {
      throw ValidationError("kk: --material must be tabulated[...] with --optical-table");
    }
    const auto sweep = sweep_spec({"xi_rad_s"});
    if (!sweep) throw ValidationError("kk: --sweep xi_rad_s:min:max:n[:scale] is required");
    const auto grid = sweep->grid();
    const auto eps = parallel_map<double>(
        grid.size(), [&](std::size_t i) { return eps_imag_axis(m, grid[i]); }, threads_);
    CurveOutput curve;
    curve.columns = {Column{"xi", "rad/s", {grid.points().begin(), grid.points().end()}},
                     Column{"eps", "1", eps}};
    curve.metadata["material_1"] = m.describe();
    return curve;
  }

  Json metadata(const Json& extra) const {
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, constants_hash());
    Json meta{{"tool", "casimir"},
              {"version", kVersion},
              {"constants_hash", hash},
              {"kernels", std::string(simd::active_kernels().name)},
              {"config", cfg_.to_json()}};
    for (const auto& [k, v] : extra.items()) meta[k] = v;
    meta["warnings"] = warnings_;
    return meta;
  }
};

struct Override {
  CLI::Option* option;
  std::function<void(RunConfig&)> apply;
};

template <class T>
void bind_flag(CLI::App& app, std::vector<Override>& ov, RunConfig& flags, const std::string& name,
          T RunConfig::*member, const std::string& help) {
  auto* o = app.add_option(name, flags.*member, help);
  ov.push_back({o, [member, &flags](RunConfig& c) { c.*member = flags.*member; }});
}

void bind_tolerance(CLI::App& app, std::vector<Override>& ov, RunConfig& flags,
                    const std::string& name, double Tolerances::*member, const std::string& help) {
  auto* o = app.add_option(name, flags.tolerances.*member, help);
  ov.push_back(
      {o, [member, &flags](RunConfig& c) { c.tolerances.*member = flags.tolerances.*member; }});
}

}  // namespace

CurveOutput run(const RunConfig& cfg) {
  cfg.validate();
  return Runner(cfg).execute();
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir and Lifshitz force calculator"};
  app.set_version_flag("--version", std::string("casimir ") + kVersion);
  RunConfig flags;
  std::vector<Override> ov;
  std::string config_path;
  std::string command;
  std::vector<std::string> commands(std::begin(kCommands), std::end(kCommands));

  app.add_option("command", command, "Computation to run")->check(CLI::IsMember(commands));
  app.add_option("--config", config_path, "JSON run configuration; flags override its keys")
      ->check(CLI::ExistingFile);
  bind_flag(app, ov, flags, "--material", &RunConfig::material,
       "ideal|vacuum|gold-plasma|gold-drude|gold-impedance|plasma:<eV>|drude:<eV>:<eV>|"
       "impedance:<eV>|tabulated[:drude:<eV>:<eV>|:plasma:<eV>]");
  bind_flag(app, ov, flags, "--material2", &RunConfig::material2, "Second plate (default: --material)");
  bind_flag(app, ov, flags, "--prescription", &RunConfig::prescription,
       "schwinger|drude|plasma|impedance-ir|impedance-skin");
  bind_flag(app, ov, flags, "--z-nm", &RunConfig::z_nm, "Plate separation in nm");
  bind_flag(app, ov, flags, "--T", &RunConfig::T, "Temperature in K (0 uses the continuous integral)");
  bind_flag(app, ov, flags, "--sweep", &RunConfig::sweep,
       "var:min:max:n[:lin|log], var in z_nm|T|gamma_eV|lambda_m|xi_rad_s|z0_nm");
  bind_flag(app, ov, flags, "--quantity", &RunConfig::quantity,
       "Quantity for the sweep command: pressure|free-energy|entropy|classical|force");
  bind_flag(app, ov, flags, "--format", &RunConfig::format, "csv|json");
  bind_flag(app, ov, flags, "--out", &RunConfig::out, "Output file (default: stdout)");
  bind_flag(app, ov, flags, "--optical-table", &RunConfig::optical_table,
       "CSV with omega_rad_s|energy_eV,im_eps");
  bind_flag(app, ov, flags, "--band", &RunConfig::band, "CSV with z_nm,delta_mPa");
  bind_flag(app, ov, flags, "--layers", &RunConfig::layers,
       "Plate layers rho@thickness_nm,...,rho in kg/m^3");
  bind_flag(app, ov, flags, "--layers2", &RunConfig::layers2, "Second plate layers (default: --layers)");
  bind_flag(app, ov, flags, "--R-um", &RunConfig::R_um, "Sphere radius in um");
  bind_flag(app, ov, flags, "--K", &RunConfig::K, "Spring constant in N/m");
  bind_flag(app, ov, flags, "--m-eff", &RunConfig::m_eff, "Oscillator effective mass in kg");
  bind_flag(app, ov, flags, "--z0-nm", &RunConfig::z0_nm, "Unloaded sphere-plate separation in nm");
  bind_flag(app, ov, flags, "--dz-nm", &RunConfig::dz_nm, "Displacement grid min:max:n in nm");
  bind_flag(app, ov, flags, "--roughness-nm", &RunConfig::roughness_nm,
       "Height profile: a (for +-a) or offset@weight,... in nm");
  bind_tolerance(app, ov, flags, "--rel-quad", &Tolerances::rel_quad, "Quadrature tolerance");
  bind_tolerance(app, ov, flags, "--rel-sum-tail", &Tolerances::rel_sum_tail,
                 "Matsubara truncation tolerance");
  bind_tolerance(app, ov, flags, "--rel-deriv", &Tolerances::rel_deriv, "Derivative tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
    for (const auto& o : ov) {
      if (o.option->count() > 0) o.apply(cfg);
    }
    if (!command.empty()) cfg.command = command;
    const auto curve = run(cfg);
    for (const auto& w : curve.metadata["warnings"]) err << "warning: " << w.get<std::string>() << "\n";
    const auto bytes = emit(curve, parse_format(cfg.format));
    if (cfg.out.empty()) {
      out << bytes;
    } else {
      write_atomic(cfg.out, bytes);
    }
    return kOk;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::logic_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace casimir::cli
