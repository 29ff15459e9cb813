#include <cmath>

#include <doctest.h>

#include "rgscope/errors.hpp"
#include "rgscope/field.hpp"

using namespace rgscope;

TEST_CASE("field construction validates its input") {
  CHECK_THROWS_AS(Field1D(0.0, 1, {0.0, 1.0, 0.0}, 1.0), InvalidField);
  CHECK_THROWS_AS(Field1D(0.1, 0, {0.0, 0.0}, 1.0), InvalidField);
  CHECK_THROWS_AS(Field1D(0.1, 5, {0.0, 1.0, 0.0}, 1.0), InvalidField);
  CHECK_THROWS_AS(Field1D(0.1, 1, {0.5, 1.0, 0.0}, 1.0), InvalidField);
  CHECK_THROWS_AS(Field1D(0.1, 1, {0.0, NAN, 0.0}, 1.0), InvalidField);
}

TEST_CASE("node positions and origin value") {
  const Field1D f(0.5, 2, {0.0, 1.0, 2.0, 1.0, 0.0}, 1.0);
  CHECK(f.x_at(0) == -1.0);
  CHECK(f.x_at(2) == 0.0);
  CHECK(f.x_at(4) == 1.0);
  CHECK(f.origin_value() == 2.0);
  CHECK(mass(f) == doctest::Approx(0.5 * 4.0));
  CHECK(linf_norm(f) == 2.0);
}

TEST_CASE("linear interpolation hits nodes exactly and is zero outside") {
  const Field1D f(0.5, 2, {0.0, 1.0, 2.0, 1.0, 0.0}, 1.0);
  CHECK(f.interpolate(0.0) == 2.0);
  CHECK(f.interpolate(-0.5) == 1.0);
  CHECK(f.interpolate(0.25) == doctest::Approx(1.5));
  CHECK(f.interpolate(5.0) == 0.0);
  CHECK(f.interpolate(-5.0) == 0.0);
}

TEST_CASE("trimming drops exact-zero tails and keeps one sentinel") {
  const Field1D f(1.0, 4, {0.0, 0.0, 0.0, 1.0, 2.0, 1.0, 0.0, 0.0}, 1.0);
  const Field1D g = f.trimmed();
  CHECK(g.size() == 5);
  CHECK(g.values().front() == 0.0);
  CHECK(g.values().back() == 0.0);
  CHECK(g.origin_value() == 2.0);
  CHECK(g.x_at(g.center()) == 0.0);
  CHECK(mass(g) == mass(f));
}

TEST_CASE("bump fields have the requested mass") {
  const Field1D b = bump_field(2.0, 3.0, 0.05, 1.0);
  CHECK(mass(b) ==
        doctest::Approx(2.0 * 3.0 * unit_bump_integral()).epsilon(1e-4));
  const Field1D m = bump_with_mass(3.5, 4.0, 0.05, 1.0);
  CHECK(mass(m) == doctest::Approx(3.5).epsilon(1e-4));
  CHECK(m.values().front() == 0.0);
  CHECK(m.values().back() == 0.0);
}

TEST_CASE("relative differences align fields at the center node") {
  const Field1D f(1.0, 2, {0.0, 1.0, 2.0, 1.0, 0.0}, 1.0);
  CHECK(rel_diff_l1(f, f) == 0.0);
  CHECK(rel_diff_linf(f, f) == 0.0);
  std::vector<double> doubled = {0.0, 2.0, 4.0, 2.0, 0.0};
  const Field1D g(1.0, 2, std::move(doubled), 1.0);
  CHECK(rel_diff_l1(f, g) == doctest::Approx(1.0));
  // same samples on a wider zero-padded grid compare equal
  const Field1D wide(1.0, 4, {0.0, 0.0, 0.0, 1.0, 2.0, 1.0, 0.0, 0.0}, 1.0);
  CHECK(rel_diff_l1(f, wide) == 0.0);
}
