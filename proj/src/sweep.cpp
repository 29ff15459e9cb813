#include "rgscope/sweep.hpp"

#include <atomic>
#include <thread>

#include "rgscope/diagnostics.hpp"
#include "rgscope/errors.hpp"
#include "rgscope/rg.hpp"

namespace rgscope {

namespace {

SweepRow run_point(const RunConfig& config, std::size_t index) {
  SweepRow row;
  row.index = index;
  EquationParams eq = config.equation;
  std::size_t rem = index;
  // decode the grid index, first axis outermost
  std::size_t block = 1;
  for (const SweepAxis& axis : config.sweep) block *= axis.values.size();
  for (const SweepAxis& axis : config.sweep) {
    block /= axis.values.size();
    const double v = axis.values[rem / block];
    rem %= block;
    try {
      set_equation_field(eq, axis.key, v);
    } catch (const std::exception& e) {
      row.error = e.what();
      return row;
    }
    row.params.emplace_back(axis.key, v);
  }
  try {
    const Field1D f0 = build_initial(config.initial);
    const RunReport report = rg_run(f0, eq, config.policy);
    row.alpha_hat = report.alpha_hat;
    row.converged = report.converged;
    row.error = report.error;
    if (eq.a > 1.0) {
      row.alpha_th = alpha_theory(eq.p, eq.a);
      row.has_theory = true;
      row.regime = regime_name(classify_regime(eq.p, eq.a));
    }
    try {
      row.loglog_slope = loglog_prefactor_fit(report.records).slope;
      row.has_loglog = true;
    } catch (const std::exception&) {
      row.has_loglog = false;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& config, int jobs) {
  if (config.sweep.empty())
    throw ConfigError("sweep: config defines no sweep axes");
  std::size_t total = 1;
  for (const SweepAxis& axis : config.sweep) total *= axis.values.size();
  std::vector<SweepRow> rows(total);
  std::atomic<std::size_t> next{0};
  const int n_workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      rows[i] = run_point(config, i);
    }
  };
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return rows;
}

}  // namespace rgscope
