#include <cmath>

#include <doctest.h>

#include "rgscope/diagnostics.hpp"
#include "rgscope/errors.hpp"
#include "rgscope/field.hpp"
#include "rgscope/oracles.hpp"

using namespace rgscope;

namespace {

Field1D gaussian_profile_field(double k, double dx, double half_width) {
  const auto half = static_cast<std::ptrdiff_t>(std::ceil(half_width / dx));
  std::vector<double> v(static_cast<std::size_t>(2 * half + 1), 0.0);
  for (std::ptrdiff_t j = 1; j < 2 * half; ++j) {
    const double x = static_cast<double>(j - half) * dx;
    v[static_cast<std::size_t>(j)] = std::exp(-k * x * x / 4.0);
  }
  return Field1D(dx, half, std::move(v), 1.0);
}

}  // namespace

TEST_CASE("scaling dimensions and critical exponent formulas") {
  CHECK(d_F(3.0, 0, 0) == doctest::Approx(0.0));
  CHECK(d_F(3.0, 1, 0) == doctest::Approx(2.0));
  CHECK(d_F(1.0, 1, 1) == doctest::Approx(3.0));
  CHECK(eta_F(3.0, 0, 0, 0.0) == doctest::Approx(0.0));
  CHECK(eta_F(7.0 / 3.0, 0, 0, 0.5) == doctest::Approx(0.0));
  CHECK(a_critical(0.0) == doctest::Approx(3.0));
  CHECK(a_critical(0.5) == doctest::Approx(7.0 / 3.0));
  CHECK(a_critical(1.0) == doctest::Approx(2.0));
}

TEST_CASE("theoretical decay exponent takes the larger branch") {
  CHECK(alpha_theory(0.5, 3.0) == doctest::Approx(0.75));       // linear side
  CHECK(alpha_theory(0.5, 2.2) == doctest::Approx(1.0 / 1.2));  // nonlinear
  CHECK(alpha_theory(0.5, 7.0 / 3.0) == doctest::Approx(0.75));  // critical
  CHECK_THROWS_AS(alpha_theory(0.5, 1.0), InvalidParams);
}

TEST_CASE("regime classification matches the critical curve") {
  CHECK(classify_regime(0.5, 3.0) == Regime::Linear);
  CHECK(classify_regime(0.5, 2.0) == Regime::Nonlinear);
  CHECK(classify_regime(0.5, 7.0 / 3.0) == Regime::Critical);
  CHECK(classify_regime(0.3, a_critical(0.3)) == Regime::Critical);
  CHECK(regime_name(Regime::Linear) == "linear");
  CHECK(regime_name(Regime::Critical) == "critical");
  CHECK(regime_name(Regime::Nonlinear) == "nonlinear");
}

TEST_CASE("profile slope is exact on Gaussians") {
  for (double k : {0.5, 1.0, 1.5, 2.0}) {
    const Field1D phi = gaussian_profile_field(k, 0.05, 10.0);
    const SlopeFit fit = profile_slope(phi);
    CHECK(fit.slope == doctest::Approx(k).epsilon(1e-10));
    CHECK(std::abs(fit.intercept) < 1e-10);
    CHECK(fit.residual < 1e-10);
  }
  // slope does not depend on the mesh
  const SlopeFit coarse = profile_slope(gaussian_profile_field(1.0, 0.2, 10.0));
  CHECK(coarse.slope == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("profile slope requires a normalized center and enough nodes") {
  const Field1D off(0.1, 2, {0.0, 0.5, 0.9, 0.5, 0.0}, 1.0);
  CHECK_THROWS_AS(profile_slope(off), InvalidParams);
  const Field1D tiny(0.1, 2, {0.0, 0.5, 1.0, 0.5, 0.0}, 1.0);
  CHECK_THROWS_AS(profile_slope(tiny), TooFewPoints);
}

TEST_CASE("log-log fit recovers a power-law prefactor decay") {
  std::vector<IterationRecord> records;
  for (int n = 1; n <= 40; ++n) {
    IterationRecord r;
    r.n = n;
    r.A_n = 2.7 * std::pow(static_cast<double>(n), -0.75);
    records.push_back(r);
  }
  const SlopeFit fit = loglog_prefactor_fit(records);
  CHECK(fit.slope == doctest::Approx(-0.75).epsilon(1e-10));
  CHECK(fit.intercept == doctest::Approx(std::log(2.7)).epsilon(1e-10));

  std::vector<IterationRecord> few(records.begin(), records.begin() + 5);
  CHECK_THROWS_AS(loglog_prefactor_fit(few), TooFewPoints);
}
