#include <cmath>

#include <doctest.h>

#include "rgscope/errors.hpp"
#include "rgscope/field.hpp"
#include "rgscope/integrator.hpp"

using namespace rgscope;

namespace {

Field1D kernel_field(double t, double dx, double half_width) {
  const auto half = static_cast<std::ptrdiff_t>(std::ceil(half_width / dx));
  std::vector<double> v(static_cast<std::size_t>(2 * half + 1), 0.0);
  for (std::ptrdiff_t j = 1; j < 2 * half; ++j) {
    const double x = static_cast<double>(j - half) * dx;
    v[static_cast<std::size_t>(j)] =
        std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * M_PI * t);
  }
  return Field1D(dx, half, std::move(v), t);
}

}  // namespace

TEST_CASE("diffusion coefficient branches") {
  EquationParams q;
  q.p = 1.0;
  q.delta = 0.5;
  q.r = 0.0;
  q.eps = 0.2;
  q.mu = 0.5;
  q.omega = 2.0;
  // H(0) = 0: eps inactive at uxx = 0
  const double base = (2.0 + 0.5) * (1.0 + 0.5 * std::cos(2.0 * 1.0));
  CHECK(diffusion_coefficient(q, 1.0, 2.0, 0.0) == doctest::Approx(base));
  CHECK(diffusion_coefficient(q, 1.0, 2.0, -1.0) ==
        doctest::Approx(base * 1.2));
  CHECK(diffusion_coefficient(q, 1.0, 2.0, 1.0) == doctest::Approx(base));
  EquationParams neg;
  neg.delta = -2.0;
  neg.r = 0.0;
  neg.p = 1.0;
  CHECK_THROWS_AS(diffusion_coefficient(neg, 0.0, 1.0, 0.0),
                  NonPositiveCoefficient);
}

TEST_CASE("stability bounds for the linear equation") {
  EquationParams q;
  q.p = 1.0;
  const StabilityBounds sb = stability_bounds(q, 0.1, 1.0, 1.4);
  CHECK(sb.K_lo == doctest::Approx(1.0));
  CHECK(sb.K_hi == doctest::Approx(1.4));
  CHECK(sb.dt_max == doctest::Approx(0.1 * 0.1 / (2.0 * 1.4)));

  EquationParams qm;
  qm.mu = 0.5;
  qm.eps = 0.2;
  const StabilityBounds sm = stability_bounds(qm, 0.1, 1.0, 1.0);
  CHECK(sm.K_lo == doctest::Approx(0.5));
  CHECK(sm.K_hi == doctest::Approx(1.8));
}

TEST_CASE("stability bounds with the nonlinear term") {
  EquationParams q;
  q.lambda = 0.1;
  q.a = 3.0;
  q.b = 1;
  q.c = 0;
  const StabilityBounds sb = stability_bounds(q, 0.1, 1.0, 1.0);
  CHECK(sb.dx_max == doctest::Approx(20.0));
  CHECK(sb.dt_max == doctest::Approx(0.01 / (0.01 * 0.3 + 2.0)));

  EquationParams bad = q;
  bad.c = 11;  // c|lambda| > K_lo
  CHECK_THROWS_AS(stability_bounds(bad, 0.1, 1.0, 1.0),
                  UnstableConfiguration);
}

TEST_CASE("euler step spreads a single node by the three-point average") {
  const double h = 0.8;
  const Field1D u(1.0, 1, {0.0, h, 0.0}, 1.0);
  EquationParams heat;
  const Field1D out = euler_step(u, heat, 0.5);
  REQUIRE(out.size() == 5);
  CHECK(out.center() == 2);
  CHECK(out.values()[0] == 0.0);
  CHECK(out.values()[1] == doctest::Approx(h / 2.0));
  CHECK(out.values()[2] == doctest::Approx(0.0));
  CHECK(out.values()[3] == doctest::Approx(h / 2.0));
  CHECK(out.values()[4] == 0.0);
  CHECK(out.t() == doctest::Approx(1.5));
}

TEST_CASE("euler step conserves mass without transport or modulation") {
  EquationParams q;
  q.chi = 0.7;
  const Field1D u = bump_field(1.0, 3.0, 0.1, 1.0);
  const Field1D out = euler_step(u, q, 1e-3);
  CHECK(mass(out) == doctest::Approx(mass(u)).epsilon(1e-13));
}

TEST_CASE("euler step of the zero field stays zero and widens") {
  const Field1D u(0.1, 2, {0.0, 0.0, 0.0, 0.0, 0.0}, 1.0);
  EquationParams heat;
  const Field1D out = euler_step(u, heat, 1e-3);
  CHECK(out.size() == 7);
  for (double v : out.values()) CHECK(v == 0.0);
}

TEST_CASE("evolve matches the heat kernel oracle") {
  const Field1D f = kernel_field(1.0, 0.05, 14.0);
  EquationParams heat;
  const Field1D out = evolve(f, heat, 1.96, 0.8);
  CHECK(out.t() == 1.96);
  double err = 0.0;
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(out.size());
       ++j) {
    const double x = out.x_at(j);
    const double exact =
        std::exp(-x * x / (4.0 * 1.96)) / std::sqrt(4.0 * M_PI * 1.96);
    err = std::max(
        err, std::abs(out.values()[static_cast<std::size_t>(j)] - exact));
  }
  CHECK(err < 5e-4);
}

TEST_CASE("evolve respects the sup norm bound and positivity") {
  const Field1D u = bump_field(1.0, 2.0, 0.05, 1.0);
  EquationParams heat;
  const Field1D out = evolve(u, heat, 1.4, 0.8);
  CHECK(linf_norm(out) <= linf_norm(u));
  for (double v : out.values()) CHECK(v >= 0.0);
}

TEST_CASE("evolve of zero data is zero") {
  const Field1D u(0.1, 1, {0.0, 0.0, 0.0}, 1.0);
  EquationParams heat;
  const Field1D out = evolve(u, heat, 1.4, 0.8);
  for (double v : out.values()) CHECK(v == 0.0);
}

TEST_CASE("evolve agrees with the plain euler_step chain") {
  EquationParams q;
  q.mu = 0.3;
  q.omega = 2.0;
  q.lambda = 0.05;
  q.a = 3.0;
  q.b = 1;
  q.c = 0;
  const Field1D u = bump_field(0.8, 2.0, 0.1, 1.0);
  const double t_end = 1.1;
  const Field1D fast = evolve(u, q, t_end, 0.8);
  const StabilityBounds sb = stability_bounds(q, u.dx(), 1.0, t_end);
  const auto n = static_cast<long long>(std::ceil(0.1 / (0.8 * sb.dt_max)));
  const double h = 0.1 / static_cast<double>(n);
  Field1D slow = u;
  for (long long s = 0; s < n; ++s) slow = euler_step(slow, q, h);
  CHECK(rel_diff_linf(slow, fast) < 1e-13);
}

TEST_CASE("persistent negatives with non-integer exponent abort") {
  EquationParams q;
  q.lambda = 1.0;
  q.a = 0.5;
  const Field1D u(0.1, 2, {0.0, -0.1, -0.2, -0.1, 0.0}, 1.0);
  CHECK_THROWS_AS(euler_step(u, q, 1e-4), SignViolation);
}

TEST_CASE("non-finite samples raise an overflow error") {
  const Field1D u = bump_field(1.0, 2.0, 0.1, 1.0);
  EquationParams heat;
  CHECK_THROWS_AS(euler_step(u, heat, 1e307), NumericOverflow);
}
