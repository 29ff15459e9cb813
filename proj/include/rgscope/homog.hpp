#ifndef RGSCOPE_HOMOG_HPP
#define RGSCOPE_HOMOG_HPP

#include <functional>
#include <utility>
#include <vector>

namespace rgscope {

/// Dirichlet problem -(D(x/eps) u')' = f on [-1, 1], u(+-1) = 0, with D
/// positive and 1-periodic.
struct HomogProblem {
  std::function<double(double)> D;
  std::function<double(double)> f;
  int quad_n = 1024;

  /// Throws on non-positive D (sampled over one period) or quad_n < 64.
  void validate() const;
};

/// Harmonic mean of D over one period: (integral of 1/D)^-1.
double effective_coefficient(const std::function<double(double)>& D,
                             int quad_n = 1024);

/// Explicit solution u^eps as a sampler on [-1, 1].  The integration
/// constants come from the same quadrature tables, so u^eps(+-1) vanishes to
/// round-off.  The panel count grows like 10/eps automatically.
std::function<double(double)> solve_eps(const HomogProblem& problem,
                                        double eps);

/// Homogenized solution u^0 with D replaced by the effective coefficient.
std::function<double(double)> solve_homogenized(const HomogProblem& problem);

/// Sup distance between u^eps and u^0 on a fixed grid, per eps.
std::vector<std::pair<double, double>> convergence_curve(
    const HomogProblem& problem, const std::vector<double>& eps_list);

/// Discrepancy between the oscillatory integral of F(x/eps, x) over [a, b]
/// and the integral of its periodic average, per eps.
std::vector<std::pair<double, double>> mean_value_check(
    const std::function<double(double, double)>& F, double a, double b,
    const std::vector<double>& eps_list);

}  // namespace rgscope

#endif
