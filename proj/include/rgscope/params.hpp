#ifndef RGSCOPE_PARAMS_HPP
#define RGSCOPE_PARAMS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rgscope/field.hpp"

namespace rgscope {

/// Coefficients of one member of the equation family
///
///   u_t = chi (t^p + delta t^r) [1 + eps H(-u_xx)] [1 + mu cos(omega x)] u_xx
///         + lambda u^a u_x^b u_xx^c
struct EquationParams {
  double chi = 1.0;
  double p = 0.0;
  double delta = 0.0;
  double r = 0.0;
  double eps = 0.0;
  double mu = 0.0;
  double omega = 1.0;
  int m = 1;  // fixed to 1 throughout
  double lambda = 0.0;
  double a = 0.0;
  int b = 0;
  int c = 0;

  /// True when a is non-integer, which restricts runs to nonnegative
  /// solutions.
  bool sign_restricted() const {
    return lambda != 0.0 && a != std::floor(a);
  }

  bool has_nonlinearity() const { return lambda != 0.0; }

  /// Throws InvalidParams on violated invariants.
  void validate() const;
};

enum class BetaMode { Fixed, Marginal };
enum class RescaleMode { MeshShrink, FixedMeshInterp };

struct RGPolicy {
  double L = 1.4;
  BetaMode beta_mode = BetaMode::Fixed;
  double beta_fixed = 0.5;  // used in Fixed mode
  RescaleMode rescale_mode = RescaleMode::FixedMeshInterp;
  double dt_safety = 0.8;
  double tol = 1e-4;
  int max_iter = 100;

  void validate(const EquationParams& params) const;
};

struct IterationRecord {
  int n = 0;
  double alpha_n = 0.0;
  double beta_n = 0.0;
  double A_n = 0.0;
  double B_n = 0.0;
  double rel_diff_l1 = 0.0;
  double rel_diff_linf = 0.0;
  EquationParams params;  // snapshot after renormalization
};

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of least-squares fit
  int n_points = 0;
};

struct RunReport {
  std::vector<IterationRecord> records;
  std::optional<Field1D> final_profile;
  double alpha_hat = 0.0;
  bool converged = false;
  std::string error;  // nonempty when a run aborted; partial records retained
  int sign_clamp_warnings = 0;
  std::optional<SlopeFit> slope_fit;
  std::optional<SlopeFit> loglog_fit;
};

}  // namespace rgscope

#endif
