#include "rgscope/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "rgscope/errors.hpp"

namespace rgscope {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  return out;
}

nlohmann::json fit_json(const std::optional<SlopeFit>& fit) {
  if (!fit) return nullptr;
  return {{"slope", fit->slope},
          {"intercept", fit->intercept},
          {"residual", fit->residual},
          {"n_points", fit->n_points}};
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_records_csv(const std::string& path,
                       const std::vector<IterationRecord>& records) {
  auto out = open_out(path);
  out << "n,alpha_n,beta_n,A_n,B_n,rel_diff_l1,rel_diff_linf,"
         "lambda_n,chi_n,omega_n,delta_n\n";
  for (const IterationRecord& r : records) {
    out << r.n << ',' << format_number(r.alpha_n) << ','
        << format_number(r.beta_n) << ',' << format_number(r.A_n) << ','
        << format_number(r.B_n) << ',' << format_number(r.rel_diff_l1) << ','
        << format_number(r.rel_diff_linf) << ','
        << format_number(r.params.lambda) << ',' << format_number(r.params.chi)
        << ',' << format_number(r.params.omega) << ','
        << format_number(r.params.delta) << '\n';
  }
}

void write_profile_csv(const std::string& path, const Field1D& phi) {
  auto out = open_out(path);
  out << "x,phi\n";
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(phi.size()); ++j)
    out << format_number(phi.x_at(j)) << ','
        << format_number(phi.values()[static_cast<std::size_t>(j)]) << '\n';
}

void write_report_json(const std::string& path, const RunReport& report) {
  nlohmann::json j;
  j["alpha_hat"] = report.alpha_hat;
  j["converged"] = report.converged;
  j["iterations"] = report.records.size();
  j["error"] = report.error;
  j["sign_clamp_warnings"] = report.sign_clamp_warnings;
  j["slope_fit"] = fit_json(report.slope_fit);
  j["loglog_fit"] = fit_json(report.loglog_fit);
  if (!report.records.empty()) {
    const IterationRecord& last = report.records.back();
    j["A_last"] = last.A_n;
    j["B_last"] = last.B_n;
    j["beta_last"] = last.beta_n;
    j["rel_diff_l1_last"] = last.rel_diff_l1;
    j["params_last"] = {{"chi", last.params.chi},
                        {"lambda", last.params.lambda},
                        {"omega", last.params.omega},
                        {"delta", last.params.delta}};
  }
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

void write_sweep_csv(const std::string& path,
                     const std::vector<std::string>& axis_keys,
                     const std::vector<SweepRow>& rows) {
  auto out = open_out(path);
  out << "index";
  for (const std::string& k : axis_keys) out << ',' << k;
  out << ",alpha_hat,alpha_theory,loglog_slope,regime,converged,error\n";
  for (const SweepRow& r : rows) {
    out << r.index;
    for (const auto& kv : r.params) out << ',' << format_number(kv.second);
    out << ',' << format_number(r.alpha_hat) << ','
        << (r.has_theory ? format_number(r.alpha_th) : "") << ','
        << (r.has_loglog ? format_number(r.loglog_slope) : "") << ','
        << r.regime << ',' << (r.converged ? 1 : 0) << ',' << r.error << '\n';
  }
}

void write_pairs_csv(const std::string& path, const std::string& col_a,
                     const std::string& col_b,
                     const std::vector<std::pair<double, double>>& rows) {
  auto out = open_out(path);
  out << col_a << ',' << col_b << '\n';
  for (const auto& [a, b] : rows)
    out << format_number(a) << ',' << format_number(b) << '\n';
}

}  // namespace rgscope
