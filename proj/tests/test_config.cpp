#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>

#include "rgscope/config.hpp"
#include "rgscope/errors.hpp"
#include "rgscope/sweep.hpp"

using namespace rgscope;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = "rgscope_test_cfg_" + std::to_string(counter++) + ".cfg";
    std::ofstream out(path);
    out << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("config files round-trip through the parser") {
  const TempFile tmp(
      "# heat run with a time-dependent coefficient\n"
      "[equation]\n"
      "chi = 1.0\n"
      "p = 0.5    # comment after a value\n"
      "lambda = -0.1\n"
      "a = 2.5\n"
      "b = 1\n"
      "c = 1\n"
      "\n"
      "[policy]\n"
      "L = 1.5\n"
      "beta_mode = fixed\n"
      "beta = 0.75\n"
      "rescale_mode = mesh_shrink\n"
      "dt_safety = 0.5\n"
      "tol = 1e-6\n"
      "max_iter = 40\n"
      "\n"
      "[initial]\n"
      "height = 2.0\n"
      "width = 4.0\n"
      "dx = 0.1\n"
      "\n"
      "[output]\n"
      "dir = out_here\n");
  const RunConfig cfg = parse_config(tmp.path);
  CHECK(cfg.equation.p == 0.5);
  CHECK(cfg.equation.lambda == -0.1);
  CHECK(cfg.equation.a == 2.5);
  CHECK(cfg.equation.b == 1);
  CHECK(cfg.equation.c == 1);
  CHECK(cfg.policy.L == 1.5);
  CHECK(cfg.policy.beta_mode == BetaMode::Fixed);
  CHECK(cfg.policy.beta_fixed == 0.75);
  CHECK(cfg.policy.rescale_mode == RescaleMode::MeshShrink);
  CHECK(cfg.policy.max_iter == 40);
  CHECK(cfg.initial.height == 2.0);
  CHECK(cfg.initial.dx == 0.1);
  CHECK(cfg.out_dir == "out_here");
}

TEST_CASE("parser rejects malformed input with the offending line") {
  const TempFile no_section("chi = 1.0\n");
  CHECK_THROWS_AS(parse_config(no_section.path), ConfigError);
  const TempFile bad_number("[equation]\nchi = banana\n");
  CHECK_THROWS_AS(parse_config(bad_number.path), ConfigError);
  const TempFile no_equals("[equation]\nchi 1.0\n");
  CHECK_THROWS_AS(parse_config(no_equals.path), ConfigError);
  const TempFile unknown_key("[equation]\nzeta = 1.0\n");
  CHECK_THROWS_AS(parse_config(unknown_key.path), ConfigError);
  const TempFile frac_b("[equation]\nb = 1.5\n");
  CHECK_THROWS_AS(parse_config(frac_b.path), ConfigError);
  const TempFile wrong_m("[equation]\nm = 2\n");
  CHECK_THROWS_AS(parse_config(wrong_m.path), ConfigError);
  CHECK_THROWS_AS(parse_config("no_such_file.cfg"), ConfigError);
  try {
    parse_config(no_equals.path);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("equation parameters enforce their invariants") {
  EquationParams q;
  q.mu = 1.2;
  CHECK_THROWS_AS(q.validate(), InvalidParams);
  try {
    q.validate();
  } catch (const InvalidParams& e) {
    CHECK(std::string(e.what()).find("mu") != std::string::npos);
  }
  q.mu = 0.0;
  q.chi = -1.0;
  CHECK_THROWS_AS(q.validate(), InvalidParams);
  q.chi = 1.0;
  q.lambda = 0.5;
  q.a = -1.0;
  CHECK_THROWS_AS(q.validate(), InvalidParams);
}

TEST_CASE("policy validation catches bad knobs") {
  EquationParams q;
  RGPolicy policy;
  policy.L = 1.0;
  CHECK_THROWS_AS(policy.validate(q), InvalidParams);
  policy.L = 1.4;
  policy.dt_safety = 1.5;
  CHECK_THROWS_AS(policy.validate(q), InvalidParams);
  policy.dt_safety = 0.8;
  policy.max_iter = 0;
  CHECK_THROWS_AS(policy.validate(q), InvalidParams);
}

TEST_CASE("initial condition builder honors mass and height") {
  InitialSpec spec;
  spec.height = 2.0;
  spec.width = 4.0;
  spec.dx = 0.05;
  const Field1D byheight = build_initial(spec);
  CHECK(byheight.t() == 1.0);
  CHECK(byheight.origin_value() == doctest::Approx(2.0));
  spec.mass = 3.0;
  const Field1D bymass = build_initial(spec);
  CHECK(mass(bymass) == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("sweep lists parse and run in grid order") {
  const TempFile tmp(
      "[policy]\n"
      "tol = 1e-3\n"
      "max_iter = 12\n"
      "[initial]\n"
      "width = 3.0\n"
      "dx = 0.15\n"
      "[sweep]\n"
      "p = 0.0, 0.5\n"
      "chi = 1.0, 2.0, 0.5\n");
  const RunConfig cfg = parse_config(tmp.path);
  REQUIRE(cfg.sweep.size() == 2);
  CHECK(cfg.sweep[0].key == "p");
  CHECK(cfg.sweep[1].values.size() == 3);
  const auto rows = run_sweep(cfg, 1);
  REQUIRE(rows.size() == 6);
  // first axis outermost: p repeats in blocks of three
  CHECK(rows[0].params[0].second == 0.0);
  CHECK(rows[2].params[0].second == 0.0);
  CHECK(rows[3].params[0].second == 0.5);
  CHECK(rows[4].params[1].second == 2.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].index == i);
    CHECK(rows[i].error.empty());
  }
}

TEST_CASE("a sweep without axes is a configuration error") {
  RunConfig cfg;
  CHECK_THROWS_AS(run_sweep(cfg, 1), ConfigError);
}

TEST_CASE("output directory honors the environment override") {
  RunConfig cfg;
  cfg.out_dir = "from_config";
  unsetenv("RGSCOPE_OUT");
  CHECK(resolve_out_dir(cfg) == "from_config");
  setenv("RGSCOPE_OUT", "from_env", 1);
  CHECK(resolve_out_dir(cfg) == "from_env");
  unsetenv("RGSCOPE_OUT");
}
