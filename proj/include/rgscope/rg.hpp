#ifndef RGSCOPE_RG_HPP
#define RGSCOPE_RG_HPP

#include "rgscope/field.hpp"
#include "rgscope/params.hpp"

namespace rgscope {

/// Decay exponent read off at the origin: -ln(u(0, L)) / ln(L), so that the
/// rescaled iterate has value 1 at the center.
double alpha_from_origin(const Field1D& u_at_L, double L);

/// Spreading exponent for the iteration.  Fixed mode returns the policy
/// value; Marginal solves 1 - (b+2c) beta + (1-a-b-c) alpha = 0.
double beta_select(const RGPolicy& policy, const EquationParams& params,
                   double alpha_n);

/// f_n(x) = L^alpha u(L^beta x, L), returned at t = 1.
///
/// MeshShrink keeps the samples and relabels the mesh (dx' = L^-beta dx);
/// FixedMeshInterp keeps the node count and spacing and fills values by
/// linear interpolation, zero where the source argument leaves the support.
Field1D rescale_field(const Field1D& u_at_L, double alpha_n, double beta_n,
                      double L, RescaleMode mode);

/// Coefficient flow induced by the rescaling.
EquationParams renormalize_params(const EquationParams& params, double alpha_n,
                                  double beta_n, double L);

struct Prefactors {
  double A_n = 0.0;
  double B_n = 0.0;
};

/// A_n = L^(n alpha_n - sum alpha_i), B_n = L^(n beta_n - sum beta_i).
Prefactors prefactors(const std::vector<double>& alpha_history,
                      const std::vector<double>& beta_history, double L);

/// Full iteration: evolve to t = L, extract exponents, rescale, accumulate
/// prefactors, renormalize the coefficients; stops when the L1 relative
/// difference between successive iterates drops below policy.tol or at
/// max_iter.  Errors abort the run with partial records retained.
RunReport rg_run(const Field1D& f0, const EquationParams& params0,
                 const RGPolicy& policy);

}  // namespace rgscope

#endif
