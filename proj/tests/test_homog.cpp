#include <cmath>

#include <doctest.h>

#include "rgscope/errors.hpp"
#include "rgscope/homog.hpp"

using namespace rgscope;

TEST_CASE("effective coefficient is the harmonic mean") {
  CHECK(effective_coefficient([](double) { return 2.5; }) ==
        doctest::Approx(2.5).epsilon(1e-12));
  // integral of 1/(1 + m cos) over a period is 1/sqrt(1 - m^2), so the
  // harmonic mean of 1 + 0.8 cos(2 pi x) is sqrt(1 - 0.64) = 0.6
  const auto periodic = [](double x) {
    return 1.0 + 0.8 * std::cos(2.0 * M_PI * x);
  };
  CHECK(std::abs(effective_coefficient(periodic, 4096) - 0.6) < 1e-6);
  // two-valued 1 / 2 checkerboard: harmonic mean 4/3
  const auto steps = [](double x) {
    const double frac = x - std::floor(x);
    return frac < 0.5 ? 1.0 : 2.0;
  };
  CHECK(effective_coefficient(steps, 4096) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("harmonic mean never exceeds the arithmetic mean") {
  const auto D = [](double x) { return 2.0 + std::sin(2.0 * M_PI * x); };
  const double harmonic = effective_coefficient(D, 4096);
  CHECK(harmonic < 2.0);  // arithmetic mean is exactly 2
  CHECK(harmonic > 0.0);
}

TEST_CASE("effective coefficient ignores a phase shift") {
  const auto base = [](double x) {
    return 1.3 + 0.5 * std::cos(2.0 * M_PI * x);
  };
  const auto shifted = [](double x) {
    return 1.3 + 0.5 * std::cos(2.0 * M_PI * (x + 0.37));
  };
  CHECK(std::abs(effective_coefficient(base, 4096) -
                 effective_coefficient(shifted, 4096)) < 1e-10);
}

TEST_CASE("constant coefficients give the parabola (1 - x^2) / 2") {
  HomogProblem prob;
  prob.D = [](double) { return 1.0; };
  prob.f = [](double) { return 1.0; };
  auto u = solve_homogenized(prob);
  for (double x : {-1.0, -0.5, 0.0, 0.3, 0.9, 1.0})
    CHECK(std::abs(u(x) - 0.5 * (1.0 - x * x)) < 1e-7);
}

TEST_CASE("oscillatory solution vanishes at the boundary to round-off") {
  HomogProblem prob;
  prob.D = [](double x) { return 1.0 + 0.8 * std::cos(2.0 * M_PI * x); };
  prob.f = [](double x) { return 1.0 + 0.2 * x; };
  auto u = solve_eps(prob, 0.05);
  CHECK(std::abs(u(-1.0)) < 1e-8);
  CHECK(std::abs(u(1.0)) < 1e-8);
  auto u0 = solve_homogenized(prob);
  CHECK(std::abs(u0(-1.0)) < 1e-8);
  CHECK(std::abs(u0(1.0)) < 1e-8);
}

TEST_CASE("oscillatory solution approaches the homogenized one") {
  HomogProblem prob;
  prob.D = [](double x) { return 1.0 + 0.8 * std::cos(2.0 * M_PI * x); };
  prob.f = [](double) { return 1.0; };
  // enough panels per oscillation period for the quadrature tables
  prob.quad_n = 200000;
  auto ue = solve_eps(prob, 1e-3);
  auto u0 = solve_homogenized(prob);
  double sup = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double x = -1.0 + i / 100.0;
    sup = std::max(sup, std::abs(ue(x) - u0(x)));
  }
  CHECK(sup < 0.01);
}

TEST_CASE("zero forcing gives the zero solution") {
  HomogProblem prob;
  prob.D = [](double x) { return 1.5 + 0.5 * std::sin(2.0 * M_PI * x); };
  prob.f = [](double) { return 0.0; };
  auto u = solve_eps(prob, 0.1);
  for (double x : {-1.0, -0.4, 0.0, 0.7, 1.0}) CHECK(std::abs(u(x)) < 1e-12);
}

TEST_CASE("convergence curve decreases with eps") {
  HomogProblem prob;
  prob.D = [](double x) { return 1.0 + 0.8 * std::cos(2.0 * M_PI * x); };
  prob.f = [](double) { return 1.0; };
  const auto curve = convergence_curve(prob, {0.1, 0.05, 0.025});
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].second > curve[1].second);
  CHECK(curve[1].second > curve[2].second);
  CHECK_THROWS_AS(convergence_curve(prob, {0.05, 0.1}), InvalidParams);
}

TEST_CASE("oscillatory integrals approach the periodic average") {
  const auto F = [](double y, double x) {
    return (1.0 + x) * std::cos(2.0 * M_PI * y) * std::cos(2.0 * M_PI * y);
  };
  // periodic average of cos^2 is 1/2, so the limit is integral of (1+x)/2
  const auto out = mean_value_check(F, 0.0, 1.0, {0.1, 0.01});
  REQUIRE(out.size() == 2);
  CHECK(out[1].second < out[0].second + 1e-12);
  CHECK(out[1].second < 1e-3);
}

TEST_CASE("problem validation rejects bad input") {
  HomogProblem prob;
  prob.D = [](double x) { return std::cos(2.0 * M_PI * x); };  // hits zero
  prob.f = [](double) { return 1.0; };
  CHECK_THROWS_AS(prob.validate(), NonPositiveCoefficient);
  prob.D = [](double) { return 1.0; };
  prob.quad_n = 10;
  CHECK_THROWS_AS(prob.validate(), InvalidParams);
  CHECK_THROWS_AS(solve_eps({[](double) { return 1.0; },
                             [](double) { return 1.0; }, 1024},
                            0.0),
                  InvalidParams);
}
