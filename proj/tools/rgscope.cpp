#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgscope/config.hpp"
#include "rgscope/diagnostics.hpp"
#include "rgscope/errors.hpp"
#include "rgscope/homog.hpp"
#include "rgscope/io.hpp"
#include "rgscope/rg.hpp"
#include "rgscope/sweep.hpp"
#include "rgscope/validate.hpp"

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitMaxIter = 2;
constexpr int kExitConfig = 64;

std::string prepare_out_dir(const rgscope::RunConfig& cfg) {
  const std::string dir = rgscope::resolve_out_dir(cfg);
  std::filesystem::create_directories(dir);
  return dir;
}

int cmd_run(const std::string& config_path) {
  rgscope::RunConfig cfg = rgscope::parse_config(config_path);
  cfg.equation.validate();
  cfg.policy.validate(cfg.equation);
  const rgscope::Field1D f0 = rgscope::build_initial(cfg.initial);
  rgscope::RunReport report = rg_run(f0, cfg.equation, cfg.policy);
  if (report.final_profile) {
    try {
      report.slope_fit = rgscope::profile_slope(*report.final_profile);
    } catch (const std::exception&) {
    }
  }
  try {
    report.loglog_fit = rgscope::loglog_prefactor_fit(report.records);
  } catch (const std::exception&) {
  }
  const std::string out = prepare_out_dir(cfg);
  rgscope::write_records_csv(out + "/records.csv", report.records);
  if (report.final_profile)
    rgscope::write_profile_csv(out + "/profile.csv", *report.final_profile);
  rgscope::write_report_json(out + "/report.json", report);
  std::cout << "alpha_hat = " << rgscope::format_number(report.alpha_hat)
            << "\niterations = " << report.records.size()
            << "\nconverged = " << (report.converged ? "yes" : "no") << "\n";
  if (!report.error.empty()) {
    std::cerr << "error: " << report.error << "\n";
    return kExitNumeric;
  }
  return report.converged ? kExitConverged : kExitMaxIter;
}

int cmd_sweep(const std::string& config_path, int jobs) {
  rgscope::RunConfig cfg = rgscope::parse_config(config_path);
  const std::vector<rgscope::SweepRow> rows = rgscope::run_sweep(cfg, jobs);
  std::vector<std::string> keys;
  for (const rgscope::SweepAxis& axis : cfg.sweep) keys.push_back(axis.key);
  const std::string out = prepare_out_dir(cfg);
  rgscope::write_sweep_csv(out + "/sweep.csv", keys, rows);
  std::cout << "sweep points = " << rows.size() << "\n";
  return kExitConverged;
}

int cmd_homog(const std::string& config_path) {
  rgscope::RunConfig cfg = rgscope::parse_config(config_path);
  const rgscope::HomogSpec& h = cfg.homog;
  rgscope::HomogProblem prob;
  prob.D = [h](double x) {
    return h.d_mean + h.d_cos_amp * std::cos(2.0 * M_PI * h.d_cos_freq * x);
  };
  prob.f = [h](double) { return h.f_const; };
  prob.quad_n = h.quad_n;
  prob.validate();
  const double dstar = rgscope::effective_coefficient(prob.D, prob.quad_n);
  std::cout << "D* = " << rgscope::format_number(dstar) << "\n";
  std::vector<double> eps = h.eps_list;
  std::sort(eps.begin(), eps.end(), std::greater<>());
  const auto curve = rgscope::convergence_curve(prob, eps);
  auto F = [&prob](double y, double x) { return prob.f(x) / prob.D(y); };
  const auto mvc = rgscope::mean_value_check(F, -1.0, 1.0, eps);
  const std::string out = prepare_out_dir(cfg);
  rgscope::write_pairs_csv(out + "/convergence.csv", "eps", "sup_error", curve);
  rgscope::write_pairs_csv(out + "/mean_value.csv", "eps", "discrepancy", mvc);
  std::ofstream rep(out + "/effective.txt");
  rep << rgscope::format_number(dstar) << "\n";
  return kExitConverged;
}

int cmd_validate(const std::vector<std::string>& only, int jobs) {
  const auto results = rgscope::run_acceptance(only, jobs, std::cout);
  return rgscope::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"renormalization-group analysis of 1d diffusive decay"};
  app.require_subcommand(1);

  std::string run_cfg, sweep_cfg, homog_cfg;
  int jobs = 1;
  std::vector<std::string> only;

  auto* run = app.add_subcommand("run", "single RG iteration run");
  run->add_option("config", run_cfg, "config file")->required();
  auto* sweep = app.add_subcommand("sweep", "parameter sweep of RG runs");
  sweep->add_option("config", sweep_cfg, "config file")->required();
  sweep->add_option("--jobs", jobs, "concurrent sweep points");
  auto* homog = app.add_subcommand("homog", "homogenization study");
  homog->add_option("config", homog_cfg, "config file")->required();
  auto* validate = app.add_subcommand("validate", "acceptance suite");
  validate->add_option("--only", only, "run only the named checks");
  validate->add_option("--jobs", jobs, "concurrent runs inside checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_cfg);
    if (sweep->parsed()) return cmd_sweep(sweep_cfg, jobs);
    if (homog->parsed()) return cmd_homog(homog_cfg);
    return cmd_validate(only, jobs);
  } catch (const rgscope::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const rgscope::InvalidParams& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const rgscope::InvalidField& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
