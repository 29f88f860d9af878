#include "casimir/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "casimir/error.hpp"

namespace casimir::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

double number(std::string_view text, std::string_view what) {
  double v = 0.0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ValidationError(std::string(what) + ": cannot parse '" + std::string(text) + "'");
  }
  return v;
}

template <class T>
void read(const Json& j, const char* key, T& field) {
  if (!j.contains(key)) return;
  try {
    field = j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

SweepSpec SweepSpec::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4 && parts.size() != 5) {
    throw ValidationError("sweep '" + std::string(text) + "': expected var:min:max:n[:scale]");
  }
  SweepSpec s;
  s.var = std::string(parts[0]);
  s.min = number(parts[1], "sweep min");
  s.max = number(parts[2], "sweep max");
  const double n = number(parts[3], "sweep count");
  if (n != static_cast<int>(n) || n < 1 || n > 100000) {
    throw ValidationError("sweep count must be an integer in [1, 100000]");
  }
  s.n = static_cast<int>(n);
  if (parts.size() == 5) s.scale = parse_grid_scale(parts[4]);
  if (s.n == 1 && s.min != s.max) throw ValidationError("a one-point sweep needs min == max");
  return s;
}

Grid SweepSpec::grid() const {
  if (n == 1) return Grid({min}, scale);
  try {
    return make_grid(min, max, n, scale);
  } catch (const DomainError& e) {
    throw ValidationError(std::string("sweep: ") + e.what());
  }
}

Json RunConfig::to_json() const {
  return Json{{"command", command},
              {"material", material},
              {"material2", material2},
              {"prescription", prescription},
              {"z_nm", z_nm},
              {"T", T},
              {"sweep", sweep},
              {"quantity", quantity},
              {"format", format},
              {"out", out},
              {"optical_table", optical_table},
              {"band", band},
              {"layers", layers},
              {"layers2", layers2},
              {"R_um", R_um},
              {"K", K},
              {"m_eff", m_eff},
              {"z0_nm", z0_nm},
              {"dz_nm", dz_nm},
              {"roughness_nm", roughness_nm},
              {"rel_quad", tolerances.rel_quad},
              {"rel_sum_tail", tolerances.rel_sum_tail},
              {"rel_deriv", tolerances.rel_deriv}};
}

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  RunConfig c;
  const Json known = c.to_json();
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ValidationError("unknown config key '" + key + "'");
  }
  read(j, "command", c.command);
  read(j, "material", c.material);
  read(j, "material2", c.material2);
  read(j, "prescription", c.prescription);
  read(j, "z_nm", c.z_nm);
  read(j, "T", c.T);
  read(j, "sweep", c.sweep);
  read(j, "quantity", c.quantity);
  read(j, "format", c.format);
  read(j, "out", c.out);
  read(j, "optical_table", c.optical_table);
  read(j, "band", c.band);
  read(j, "layers", c.layers);
  read(j, "layers2", c.layers2);
  read(j, "R_um", c.R_um);
  read(j, "K", c.K);
  read(j, "m_eff", c.m_eff);
  read(j, "z0_nm", c.z0_nm);
  read(j, "dz_nm", c.dz_nm);
  read(j, "roughness_nm", c.roughness_nm);
  read(j, "rel_quad", c.tolerances.rel_quad);
  read(j, "rel_sum_tail", c.tolerances.rel_sum_tail);
  read(j, "rel_deriv", c.tolerances.rel_deriv);
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config '" + path + "'");
  try {
    return from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw ValidationError("config '" + path + "': " + e.what());
  }
}

void RunConfig::validate() const {
  if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands)) {
    throw ValidationError("unknown command '" + command + "'");
  }
  parse_format(format);
  if (command == "sweep" && sweep.empty()) throw ValidationError("sweep: --sweep is required");
  if (command == "sweep" && quantity.empty()) {
    throw ValidationError("sweep: --quantity is required");
  }
  if (!sweep.empty()) SweepSpec::parse(sweep);
  tolerances.validate();
}

MaterialModel resolve_material(std::string_view spec, std::shared_ptr<const OpticalTable> table,
                               std::optional<double> gamma_ev) {
  const auto parts = split(spec, ':');
  const auto name = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) {
      throw ValidationError("material '" + std::string(spec) + "': missing parameter");
    }
    return number(parts[i], "material parameter");
  };
  auto expect = [&](std::size_t n) {
    if (parts.size() != n) {
      throw ValidationError("material '" + std::string(spec) + "': wrong number of parameters");
    }
  };
  auto ev = [](double e) { return ev_to_rad_per_s(e); };
  auto gamma = [&](double fallback_ev) { return ev(gamma_ev.value_or(fallback_ev)); };

  if (name == "ideal" || name == "ideal-metal") {
    expect(1);
    return MaterialModel::ideal_metal();
  }
  if (name == "vacuum") {
    expect(1);
    return MaterialModel::vacuum();
  }
  if (name == "gold-plasma") {
    expect(1);
    return presets::gold_plasma();
  }
  if (name == "gold-drude") {
    expect(1);
    return MaterialModel::drude(ev(presets::kGoldPlasmaEv), gamma(presets::kGoldGammaEv));
  }
  if (name == "gold-impedance") {
    expect(1);
    return presets::gold_impedance();
  }
  if (name == "plasma") {
    expect(2);
    return MaterialModel::plasma(ev(arg(1)));
  }
  if (name == "drude") {
    expect(3);
    return MaterialModel::drude(ev(arg(1)), gamma(arg(2)));
  }
  if (name == "impedance") {
    expect(2);
    return MaterialModel::impedance(ev(arg(1)));
  }
  if (name == "tabulated") {
    if (!table) throw ValidationError("material 'tabulated' needs --optical-table");
    if (parts.size() == 1) return MaterialModel::tabulated(table, LowFrequencyExtension::none());
    if (parts[1] == "drude") {
      expect(4);
      return MaterialModel::tabulated(table,
                                      LowFrequencyExtension::drude(ev(arg(2)), gamma(arg(3))));
    }
    if (parts[1] == "plasma") {
      expect(3);
      return MaterialModel::tabulated(table, LowFrequencyExtension::plasma(ev(arg(2))));
    }
  }
  throw ValidationError("unknown material '" + std::string(spec) + "'");
}

}  // namespace casimir::cli
