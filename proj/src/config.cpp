#include "rgscope/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rgscope/errors.hpp"

namespace rgscope {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for '" + key + "': " + v);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  const double x = parse_real(key, v);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    throw ConfigError("config: '" + key + "' must be an integer");
  return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("config: empty entry in list for '" + key + "'");
    out.push_back(parse_real(key, item));
  }
  if (out.empty()) throw ConfigError("config: empty list for '" + key + "'");
  return out;
}

void set_policy_field(RGPolicy& policy, const std::string& key,
                      const std::string& value) {
  if (key == "L") {
    policy.L = parse_real(key, value);
  } else if (key == "beta_mode") {
    if (value == "fixed")
      policy.beta_mode = BetaMode::Fixed;
    else if (value == "marginal")
      policy.beta_mode = BetaMode::Marginal;
    else
      throw ConfigError("config: beta_mode must be 'fixed' or 'marginal'");
  } else if (key == "beta") {
    policy.beta_fixed = parse_real(key, value);
  } else if (key == "rescale_mode") {
    if (value == "mesh_shrink")
      policy.rescale_mode = RescaleMode::MeshShrink;
    else if (value == "fixed_mesh_interp")
      policy.rescale_mode = RescaleMode::FixedMeshInterp;
    else
      throw ConfigError(
          "config: rescale_mode must be 'mesh_shrink' or 'fixed_mesh_interp'");
  } else if (key == "dt_safety") {
    policy.dt_safety = parse_real(key, value);
  } else if (key == "tol") {
    policy.tol = parse_real(key, value);
  } else if (key == "max_iter") {
    policy.max_iter = parse_int(key, value);
  } else {
    throw ConfigError("config: unknown policy key '" + key + "'");
  }
}

void set_initial_field(InitialSpec& init, const std::string& key,
                       const std::string& value) {
  if (key == "shape") {
    if (value != "bump")
      throw ConfigError("config: only the 'bump' initial shape is supported");
    init.shape = value;
  } else if (key == "height") {
    init.height = parse_real(key, value);
  } else if (key == "mass") {
    init.mass = parse_real(key, value);
  } else if (key == "width") {
    init.width = parse_real(key, value);
  } else if (key == "dx") {
    init.dx = parse_real(key, value);
  } else {
    throw ConfigError("config: unknown initial key '" + key + "'");
  }
}

void set_homog_field(HomogSpec& homog, const std::string& key,
                     const std::string& value) {
  if (key == "d_mean") {
    homog.d_mean = parse_real(key, value);
  } else if (key == "d_cos_amp") {
    homog.d_cos_amp = parse_real(key, value);
  } else if (key == "d_cos_freq") {
    homog.d_cos_freq = parse_real(key, value);
  } else if (key == "f_const") {
    homog.f_const = parse_real(key, value);
  } else if (key == "quad_n") {
    homog.quad_n = parse_int(key, value);
  } else if (key == "eps_list") {
    homog.eps_list = parse_list(key, value);
  } else {
    throw ConfigError("config: unknown homog key '" + key + "'");
  }
}

}  // namespace

void set_equation_field(EquationParams& eq, const std::string& key,
                        double value) {
  if (key == "chi") {
    eq.chi = value;
  } else if (key == "p") {
    eq.p = value;
  } else if (key == "delta") {
    eq.delta = value;
  } else if (key == "r") {
    eq.r = value;
  } else if (key == "eps") {
    eq.eps = value;
  } else if (key == "mu") {
    eq.mu = value;
  } else if (key == "omega") {
    eq.omega = value;
  } else if (key == "lambda") {
    eq.lambda = value;
  } else if (key == "a") {
    eq.a = value;
  } else if (key == "b") {
    eq.b = static_cast<int>(value);
    if (static_cast<double>(eq.b) != value)
      throw ConfigError("config: 'b' must be an integer");
  } else if (key == "c") {
    eq.c = static_cast<int>(value);
    if (static_cast<double>(eq.c) != value)
      throw ConfigError("config: 'c' must be an integer");
  } else if (key == "m") {
    if (value != 1.0) throw ConfigError("config: m is fixed to 1");
  } else {
    throw ConfigError("config: unknown equation key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  RunConfig cfg;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config: malformed section header at line " +
                          std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected 'key = value' at line " +
                        std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: empty key or value at line " +
                        std::to_string(lineno));
    if (section == "equation") {
      set_equation_field(cfg.equation, key, parse_real(key, value));
    } else if (section == "policy") {
      set_policy_field(cfg.policy, key, value);
    } else if (section == "initial") {
      set_initial_field(cfg.initial, key, value);
    } else if (section == "sweep") {
      cfg.sweep.push_back({key, parse_list(key, value)});
    } else if (section == "homog") {
      set_homog_field(cfg.homog, key, value);
    } else if (section == "output") {
      if (key == "dir")
        cfg.out_dir = value;
      else
        throw ConfigError("config: unknown output key '" + key + "'");
    } else {
      throw ConfigError("config: key outside a known section at line " +
                        std::to_string(lineno));
    }
  }
  return cfg;
}

Field1D build_initial(const InitialSpec& spec) {
  if (spec.shape != "bump")
    throw ConfigError("config: only the 'bump' initial shape is supported");
  if (spec.mass != 0.0)
    return bump_with_mass(spec.mass, spec.width, spec.dx, 1.0);
  return bump_field(spec.height, spec.width, spec.dx, 1.0);
}

std::string resolve_out_dir(const RunConfig& config) {
  const char* env = std::getenv("RGSCOPE_OUT");
  if (env && *env) return env;
  return config.out_dir;
}

}  // namespace rgscope
