#ifndef RGSCOPE_INTEGRATOR_HPP
#define RGSCOPE_INTEGRATOR_HPP

#include "rgscope/field.hpp"
#include "rgscope/params.hpp"

namespace rgscope {

struct StabilityBounds {
  double dt_max = 0.0;
  double dx_max = 0.0;  // +inf unless lambda != 0 and b > 0
  double K_lo = 0.0;
  double K_hi = 0.0;
};

/// Value of chi (t^p + delta t^r) [1 + eps H(-uxx)] [1 + mu cos(omega x)],
/// with H(v) = 1 for v > 0 and H(0) = 0.
double diffusion_coefficient(const EquationParams& params, double x, double t,
                             double uxx);

/// Sufficient explicit-scheme bounds over the time window [t_lo, t_hi].
/// K_hi / K_lo bound the diffusion coefficient over the window and all x,
/// taking both Heaviside branches.  For lambda != 0 the bound assumes
/// |u|, |u_x|, |u_xx| <= 1.
StabilityBounds stability_bounds(const EquationParams& params, double dx,
                                 double t_lo, double t_hi);

/// One explicit Euler step with the three-point Laplacian and centered first
/// differences.  The output grid gains one zero node on each side.
Field1D euler_step(const Field1D& u, const EquationParams& params, double dt);

/// March from u.t() to t_end with uniform steps no larger than
/// dt_safety * dt_max (step count rounded up so the final time is hit
/// exactly).  Exact-zero tails are trimmed as the support expands; sample
/// values match the plain euler_step chain to round-off.
Field1D evolve(const Field1D& u, const EquationParams& params, double t_end,
               double dt_safety, int* sign_clamp_warnings = nullptr);

}  // namespace rgscope

#endif
