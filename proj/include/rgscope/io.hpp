#ifndef RGSCOPE_IO_HPP
#define RGSCOPE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "rgscope/field.hpp"
#include "rgscope/params.hpp"

namespace rgscope {

/// Shortest round-trippable decimal form (17 significant digits).
std::string format_number(double v);

void write_records_csv(const std::string& path,
                       const std::vector<IterationRecord>& records);

void write_profile_csv(const std::string& path, const Field1D& phi);

void write_report_json(const std::string& path, const RunReport& report);

/// One sweep grid point; params holds the varied key/value pairs in axis
/// order.
struct SweepRow {
  std::size_t index = 0;
  std::vector<std::pair<std::string, double>> params;
  double alpha_hat = 0.0;
  double alpha_th = 0.0;
  bool has_theory = false;
  std::string regime;
  double loglog_slope = 0.0;
  bool has_loglog = false;
  bool converged = false;
  std::string error;
};

void write_sweep_csv(const std::string& path,
                     const std::vector<std::string>& axis_keys,
                     const std::vector<SweepRow>& rows);

void write_pairs_csv(const std::string& path, const std::string& col_a,
                     const std::string& col_b,
                     const std::vector<std::pair<double, double>>& rows);

}  // namespace rgscope

#endif
