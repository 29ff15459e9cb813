#include "rgscope/homog.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "rgscope/errors.hpp"

namespace rgscope {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

double midpoint(const std::function<double(double)>& g, double a, double b,
                int n) {
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += g(a + (i + 0.5) * h);
  return s * h;
}

/// Panel count for integrands oscillating at scale eps; even so that 0 is a
/// panel boundary of [-1, 1].
int scaled_panels(int quad_n, double eps) {
  auto n = static_cast<long long>(std::ceil(10.0 / eps));
  n = std::max<long long>(n, quad_n);
  n = std::min<long long>(n, 50'000'000);
  if (n % 2) ++n;
  return static_cast<int>(n);
}

/// Cumulative integrals over [-1, 1] used by the explicit solution formula.
/// cum_*[k] holds the integral from -1 to the k-th panel boundary; values in
/// between come from linear interpolation (exact for the midpoint rule's
/// piecewise-constant surrogate).
struct SolutionTable {
  double h = 0.0;
  std::vector<double> cum_invd;  // integral of 1/D^eps (or 1/D*)
  std::vector<double> cum_finvd; // integral of F/D^eps
  double c1 = 0.0;
  double c2 = 0.0;

  double lookup(const std::vector<double>& cum, double x) const {
    const double s = std::clamp((x + 1.0) / h, 0.0,
                                static_cast<double>(cum.size() - 1));
    const double fl = std::floor(s);
    const auto k = static_cast<std::size_t>(fl);
    const double w = s - fl;
    if (w == 0.0) return cum[k];
    return (1.0 - w) * cum[k] + w * cum[k + 1];
  }

  double eval(double x) const {
    const std::size_t mid = (cum_invd.size() - 1) / 2;  // boundary at x = 0
    const double i_invd = lookup(cum_invd, x) - cum_invd[mid];
    const double i_finvd = lookup(cum_finvd, x) - cum_finvd[mid];
    return c2 + c1 * i_invd - i_finvd;
  }
};

std::shared_ptr<SolutionTable> build_table(
    const std::function<double(double)>& invd,
    const std::function<double(double)>& f, int n) {
  auto tab = std::make_shared<SolutionTable>();
  const double h = 2.0 / n;
  tab->h = h;

  // F(t) = integral of f from 0 to t, by cumulative trapezoid at half steps
  std::vector<double> fcum(static_cast<std::size_t>(2 * n + 1));
  {
    std::vector<double> fv(fcum.size());
    for (std::size_t k = 0; k < fv.size(); ++k)
      fv[k] = f(-1.0 + 0.5 * h * static_cast<double>(k));
    fcum[0] = 0.0;
    for (std::size_t k = 1; k < fcum.size(); ++k)
      fcum[k] = fcum[k - 1] + 0.25 * h * (fv[k - 1] + fv[k]);
    const double at0 = fcum[static_cast<std::size_t>(n)];
    for (double& v : fcum) v -= at0;
  }

  tab->cum_invd.assign(static_cast<std::size_t>(n + 1), 0.0);
  tab->cum_finvd.assign(static_cast<std::size_t>(n + 1), 0.0);
  double s_sgn_invd = 0.0, s_sgn_finvd = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = -1.0 + (i + 0.5) * h;
    const double w = invd(t);
    if (!std::isfinite(w) || !(w > 0.0))
      throw NonPositiveCoefficient("homog: 1/D must stay positive and finite");
    const double ft = fcum[static_cast<std::size_t>(2 * i + 1)];
    tab->cum_invd[static_cast<std::size_t>(i + 1)] =
        tab->cum_invd[static_cast<std::size_t>(i)] + h * w;
    tab->cum_finvd[static_cast<std::size_t>(i + 1)] =
        tab->cum_finvd[static_cast<std::size_t>(i)] + h * ft * w;
    s_sgn_invd += h * sgn(t) * w;
    s_sgn_finvd += h * sgn(t) * ft * w;
  }
  const double i_invd = tab->cum_invd.back();
  const double i_finvd = tab->cum_finvd.back();
  tab->c1 = i_finvd / i_invd;
  tab->c2 = 0.5 * (s_sgn_finvd - tab->c1 * s_sgn_invd);
  return tab;
}

}  // namespace

void HomogProblem::validate() const {
  if (!D || !f) throw InvalidParams("HomogProblem: D and f must be set");
  if (quad_n < 64) throw InvalidParams("HomogProblem: quad_n must be >= 64");
  const int n = 4096;
  for (int i = 0; i < n; ++i) {
    const double v = D((i + 0.5) / n);
    if (!std::isfinite(v) || !(v > 0.0))
      throw NonPositiveCoefficient("HomogProblem: D must be positive on [0, 1]");
  }
}

double effective_coefficient(const std::function<double(double)>& D,
                             int quad_n) {
  auto invd = [&](double x) {
    const double v = D(x);
    if (!std::isfinite(v) || !(v > 0.0))
      throw NonPositiveCoefficient(
          "effective_coefficient: D must be positive on [0, 1]");
    return 1.0 / v;
  };
  // midpoint at n and 2n panels, Richardson-combined
  const double i1 = midpoint(invd, 0.0, 1.0, quad_n);
  const double i2 = midpoint(invd, 0.0, 1.0, 2 * quad_n);
  const double refined = (4.0 * i2 - i1) / 3.0;
  return 1.0 / refined;
}

std::function<double(double)> solve_eps(const HomogProblem& problem,
                                        double eps) {
  problem.validate();
  if (!(eps > 0.0)) throw InvalidParams("solve_eps: eps must be positive");
  const int n = scaled_panels(problem.quad_n, eps);
  auto D = problem.D;
  auto invd = [D, eps](double t) { return 1.0 / D(t / eps); };
  auto tab = build_table(invd, problem.f, n);
  return [tab](double x) { return tab->eval(x); };
}

std::function<double(double)> solve_homogenized(const HomogProblem& problem) {
  problem.validate();
  const double dstar = effective_coefficient(problem.D, problem.quad_n);
  int n = std::max(problem.quad_n, 4096);
  if (n % 2) ++n;
  auto invd = [dstar](double) { return 1.0 / dstar; };
  auto tab = build_table(invd, problem.f, n);
  return [tab](double x) { return tab->eval(x); };
}

std::vector<std::pair<double, double>> convergence_curve(
    const HomogProblem& problem, const std::vector<double>& eps_list) {
  for (std::size_t i = 0; i + 1 < eps_list.size(); ++i)
    if (!(eps_list[i] > eps_list[i + 1]))
      throw InvalidParams("convergence_curve: eps_list must be decreasing");
  auto u0 = solve_homogenized(problem);
  const int grid = 400;
  std::vector<std::pair<double, double>> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    auto ue = solve_eps(problem, eps);
    double sup = 0.0;
    for (int i = 0; i <= grid; ++i) {
      const double x = -1.0 + 2.0 * i / grid;
      sup = std::max(sup, std::abs(ue(x) - u0(x)));
    }
    out.emplace_back(eps, sup);
  }
  return out;
}

std::vector<std::pair<double, double>> mean_value_check(
    const std::function<double(double, double)>& F, double a, double b,
    const std::vector<double>& eps_list) {
  if (!(b > a)) throw InvalidParams("mean_value_check: need a < b");
  // integral of the periodic average Fbar(x) = integral of F(y, x) over y
  auto fbar = [&](double x) {
    return midpoint([&](double y) { return F(y, x); }, 0.0, 1.0, 2048);
  };
  const double rhs = midpoint(fbar, a, b, 2048);
  std::vector<std::pair<double, double>> out;
  out.reserve(eps_list.size());
  for (double eps : eps_list) {
    if (!(eps > 0.0))
      throw InvalidParams("mean_value_check: eps must be positive");
    const int n = scaled_panels(1024, eps);
    const double lhs =
        midpoint([&](double x) { return F(x / eps, x); }, a, b, n);
    out.emplace_back(eps, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace rgscope
