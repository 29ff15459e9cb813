#include "rgscope/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "rgscope/errors.hpp"

namespace rgscope {

double d_F(double a, int b, int c) { return a + 2.0 * b + 3.0 * c - 3.0; }

double eta_F(double a, int b, int c, double p) {
  if (!(p >= 0.0)) throw InvalidParams("eta_F: p must be nonnegative");
  return a + 2.0 * b + 3.0 * c - (p + 3.0) / (p + 1.0);
}

double a_critical(double p) {
  if (!(p >= 0.0)) throw InvalidParams("a_critical: p must be nonnegative");
  return (p + 3.0) / (p + 1.0);
}

double alpha_theory(double p, double a) {
  if (!(a > 1.0)) throw InvalidParams("alpha_theory: a must exceed 1");
  if (!(p >= 0.0)) throw InvalidParams("alpha_theory: p must be nonnegative");
  return std::max((1.0 + p) / 2.0, 1.0 / (a - 1.0));
}

Regime classify_regime(double p, double a) {
  if (!(a > 1.0)) throw InvalidParams("classify_regime: a must exceed 1");
  const double ac = a_critical(p);
  if (std::abs(a - ac) <= 1e-12) return Regime::Critical;
  return a > ac ? Regime::Linear : Regime::Nonlinear;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Linear:
      return "linear";
    case Regime::Critical:
      return "critical";
    default:
      return "nonlinear";
  }
}

namespace {

SlopeFit least_squares(const std::vector<double>& xs,
                       const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw TooFewPoints("least_squares: degenerate abscissae");
  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.n_points = static_cast<int>(xs.size());
  return fit;
}

}  // namespace

SlopeFit profile_slope(const Field1D& phi, double cutoff) {
  if (!(cutoff > 0.0 && cutoff < 1.0))
    throw InvalidParams("profile_slope: cutoff must lie in (0, 1)");
  if (std::abs(phi.origin_value() - 1.0) > 1e-9)
    throw InvalidParams("profile_slope: profile must be normalized to 1 at x=0");
  std::vector<double> xs, ys;
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(phi.size()); ++j) {
    const double v = phi.values()[static_cast<std::size_t>(j)];
    if (v < cutoff) continue;
    const double x = phi.x_at(j);
    xs.push_back(x * x / 4.0);
    ys.push_back(-std::log(v));
  }
  if (xs.size() < 8)
    throw TooFewPoints("profile_slope: fewer than 8 nodes above the cutoff");
  return least_squares(xs, ys);
}

SlopeFit loglog_prefactor_fit(const std::vector<IterationRecord>& records,
                              double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0))
    throw InvalidParams("loglog_prefactor_fit: tail_fraction must lie in (0, 1]");
  if (records.size() < 10)
    throw TooFewPoints("loglog_prefactor_fit: need at least 10 records");
  const auto total = records.size();
  auto start = total - static_cast<std::size_t>(
                           std::ceil(tail_fraction * static_cast<double>(total)));
  std::vector<double> xs, ys;
  for (std::size_t i = start; i < total; ++i) {
    const IterationRecord& r = records[i];
    if (!(r.A_n > 0.0))
      throw InvalidParams("loglog_prefactor_fit: prefactors must be positive");
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.A_n));
  }
  if (xs.size() < 2)
    throw TooFewPoints("loglog_prefactor_fit: tail has fewer than 2 records");
  return least_squares(xs, ys);
}

}  // namespace rgscope
