#ifndef RGSCOPE_CONFIG_HPP
#define RGSCOPE_CONFIG_HPP

#include <string>
#include <vector>

#include "rgscope/field.hpp"
#include "rgscope/params.hpp"

namespace rgscope {

struct InitialSpec {
  std::string shape = "bump";
  double height = 1.0;
  double mass = 0.0;  // when nonzero, overrides height
  double width = 5.0;
  double dx = 0.05;
};

struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

struct HomogSpec {
  double d_mean = 1.0;
  double d_cos_amp = 0.0;
  double d_cos_freq = 1.0;  // periods of cos per unit length
  double f_const = 1.0;
  int quad_n = 1024;
  std::vector<double> eps_list = {0.1, 0.05, 0.025, 0.0125};
};

struct RunConfig {
  EquationParams equation;
  RGPolicy policy;
  InitialSpec initial;
  HomogSpec homog;
  std::vector<SweepAxis> sweep;
  std::string out_dir = "rgscope_out";
};

/// Flat `key = value` file with [equation], [policy], [initial], [sweep],
/// [homog] and [output] sections; `#` starts a comment.  Sweep keys name
/// equation fields and take comma-separated value lists.  Throws ConfigError.
RunConfig parse_config(const std::string& path);

/// Assign one equation field by config key name; throws ConfigError on an
/// unknown key.
void set_equation_field(EquationParams& eq, const std::string& key,
                        double value);

/// Initial condition described by the [initial] section, at t = 1.
Field1D build_initial(const InitialSpec& spec);

/// Output directory, honoring the RGSCOPE_OUT environment override.
std::string resolve_out_dir(const RunConfig& config);

}  // namespace rgscope

#endif
