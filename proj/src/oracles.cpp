#include "rgscope/oracles.hpp"

#include <cmath>
#include <vector>

#include "rgscope/errors.hpp"

namespace rgscope {

namespace {

/// Kernel convolution with elapsed diffusion time s.  The requested grid is
/// padded with one zero sentinel per side so the result is a valid field.
Field1D heat_convolve(const Field1D& f, double s, double dx,
                      std::ptrdiff_t center, std::size_t n_nodes,
                      double t_stamp) {
  if (!(s > 0.0)) throw InvalidParams("heat_solution: needs positive elapsed time");
  const double norm = 1.0 / std::sqrt(4.0 * M_PI * s);
  const double inv4s = 1.0 / (4.0 * s);
  const double radius = 8.0 * std::sqrt(2.0 * s);  // 8 kernel standard deviations
  const auto nf = static_cast<std::ptrdiff_t>(f.size());
  std::vector<double> out(n_nodes + 2, 0.0);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const double x = (static_cast<double>(i) - static_cast<double>(center)) * dx;
    double acc = 0.0;
    for (std::ptrdiff_t j = 0; j < nf; ++j) {
      const double y = f.x_at(j);
      const double d = x - y;
      if (std::abs(d) > radius) continue;
      acc += std::exp(-d * d * inv4s) * f.values()[static_cast<std::size_t>(j)];
    }
    out[i + 1] = norm * acc * f.dx();
  }
  return Field1D(dx, center + 1, std::move(out), t_stamp);
}

}  // namespace

Field1D heat_solution(const Field1D& f, double t, double dx,
                      std::ptrdiff_t center, std::size_t n_nodes) {
  return heat_convolve(f, t - f.t(), dx, center, n_nodes, t);
}

Field1D heat_solution(const Field1D& f, double t) {
  return heat_solution(f, t, f.dx(), f.center(), f.size());
}

double gaussian_profile(ProfileKind kind, double param, double x) {
  switch (kind) {
    case ProfileKind::Star:
      return std::exp(-x * x / 4.0);
    case ProfileKind::P:
      if (!(param >= 0.0)) throw InvalidParams("gaussian_profile: p must be >= 0");
      return std::exp(-(param + 1.0) * x * x / 4.0);
    default:
      if (!(param > 0.0))
        throw InvalidParams("gaussian_profile: sigma must be positive");
      return std::exp(-x * x / (4.0 * param));
  }
}

Field1D timedep_linear_solution(const Field1D& f,
                                const std::function<double(double)>& K,
                                double t) {
  if (!(t > f.t()))
    throw InvalidParams("timedep_linear_solution: t must exceed f.t()");
  // composite Simpson for tau = integral of K over [f.t(), t]
  const int n = 2048;
  const double h = (t - f.t()) / n;
  double tau = K(f.t()) + K(t);
  for (int i = 1; i < n; ++i) {
    const double s = f.t() + i * h;
    const double k = K(s);
    if (!(k > 0.0))
      throw InvalidParams("timedep_linear_solution: K must stay positive");
    tau += (i % 2 ? 4.0 : 2.0) * k;
  }
  tau *= h / 3.0;
  return heat_convolve(f, tau, f.dx(), f.center(), f.size(), t);
}

double barenblatt_alpha_first_order(double eps) {
  if (!(eps >= 0.0))
    throw InvalidParams("barenblatt_alpha_first_order: eps must be >= 0");
  return 0.5 + eps / std::sqrt(2.0 * M_PI * std::exp(1.0));
}

}  // namespace rgscope
