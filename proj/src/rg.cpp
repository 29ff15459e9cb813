#include "rgscope/rg.hpp"

#include <cmath>
#include <utility>

#include "rgscope/errors.hpp"
#include "rgscope/integrator.hpp"

namespace rgscope {

double alpha_from_origin(const Field1D& u_at_L, double L) {
  const double u0 = u_at_L.origin_value();
  if (!(u0 > 0.0))
    throw NonPositiveOrigin("alpha_from_origin: u(0, L) must be positive");
  return -std::log(u0) / std::log(L);
}

double beta_select(const RGPolicy& policy, const EquationParams& params,
                   double alpha_n) {
  if (policy.beta_mode == BetaMode::Fixed) return policy.beta_fixed;
  const double denom = params.b + 2.0 * params.c;
  if (denom == 0.0)
    throw DegenerateMarginal("beta_select: marginal mode needs b + 2c > 0");
  return (1.0 + (1.0 - params.a - params.b - params.c) * alpha_n) / denom;
}

Field1D rescale_field(const Field1D& u_at_L, double alpha_n, double beta_n,
                      double L, RescaleMode mode) {
  const double amp = std::pow(L, alpha_n);
  if (mode == RescaleMode::MeshShrink) {
    std::vector<double> v(u_at_L.values());
    for (double& x : v) x *= amp;
    v.front() = 0.0;
    v.back() = 0.0;
    return Field1D(u_at_L.dx() * std::pow(L, -beta_n), u_at_L.center(),
                   std::move(v), 1.0);
  }
  const double stretch = std::pow(L, beta_n);
  const auto n = static_cast<std::ptrdiff_t>(u_at_L.size());
  std::vector<double> v(static_cast<std::size_t>(n));
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const double x_src = stretch * u_at_L.x_at(j);
    v[static_cast<std::size_t>(j)] = amp * u_at_L.interpolate(x_src);
  }
  v.front() = 0.0;
  v.back() = 0.0;
  return Field1D(u_at_L.dx(), u_at_L.center(), std::move(v), 1.0);
}

EquationParams renormalize_params(const EquationParams& params, double alpha_n,
                                  double beta_n, double L) {
  EquationParams out = params;
  out.chi = params.chi * std::pow(L, 1.0 + params.p - 2.0 * beta_n);
  if (params.delta != 0.0) out.delta = params.delta * std::pow(L, params.r - params.p);
  out.omega = params.omega * std::pow(L, beta_n);
  if (params.lambda != 0.0)
    out.lambda =
        params.lambda *
        std::pow(L, 1.0 - (params.b + 2.0 * params.c) * beta_n -
                        (params.a + params.b + params.c - 1.0) * alpha_n);
  return out;
}

Prefactors prefactors(const std::vector<double>& alpha_history,
                      const std::vector<double>& beta_history, double L) {
  if (alpha_history.empty() || beta_history.empty())
    throw InvalidParams("prefactors: histories must be nonempty");
  const auto n = static_cast<double>(alpha_history.size());
  double sum_a = 0.0;
  for (double a : alpha_history) sum_a += a;
  double sum_b = 0.0;
  for (double b : beta_history) sum_b += b;
  Prefactors out;
  out.A_n = std::pow(L, n * alpha_history.back() - sum_a);
  out.B_n = std::pow(L, n * beta_history.back() - sum_b);
  return out;
}

RunReport rg_run(const Field1D& f0, const EquationParams& params0,
                 const RGPolicy& policy) {
  RunReport report;
  try {
    params0.validate();
    policy.validate(params0);
    if (f0.t() != 1.0) throw InvalidParams("rg_run: f0 must be given at t = 1");
  } catch (const std::exception& e) {
    report.error = e.what();
    return report;
  }

  Field1D f = f0;
  EquationParams params = params0;
  std::vector<double> alpha_hist, beta_hist;
  alpha_hist.reserve(static_cast<std::size_t>(policy.max_iter));
  beta_hist.reserve(static_cast<std::size_t>(policy.max_iter));

  for (int n = 1; n <= policy.max_iter; ++n) {
    try {
      const Field1D u =
          evolve(f, params, policy.L, policy.dt_safety, &report.sign_clamp_warnings);
      const double alpha = alpha_from_origin(u, policy.L);
      const double beta = beta_select(policy, params, alpha);
      Field1D fn = rescale_field(u, alpha, beta, policy.L, policy.rescale_mode);
      if (policy.rescale_mode == RescaleMode::MeshShrink) fn = fn.trimmed();
      alpha_hist.push_back(alpha);
      beta_hist.push_back(beta);
      const Prefactors pf = prefactors(alpha_hist, beta_hist, policy.L);
      params = renormalize_params(params, alpha, beta, policy.L);

      IterationRecord rec;
      rec.n = n;
      rec.alpha_n = alpha;
      rec.beta_n = beta;
      rec.A_n = pf.A_n;
      rec.B_n = pf.B_n;
      rec.rel_diff_l1 = rel_diff_l1(fn, f);
      rec.rel_diff_linf = rel_diff_linf(fn, f);
      rec.params = params;
      report.records.push_back(rec);

      f = std::move(fn);
      report.alpha_hat = alpha;
      if (rec.rel_diff_l1 < policy.tol) {
        report.converged = true;
        break;
      }
    } catch (const std::exception& e) {
      report.error = e.what();
      break;
    }
  }
  report.final_profile = std::move(f);
  return report;
}

}  // namespace rgscope
