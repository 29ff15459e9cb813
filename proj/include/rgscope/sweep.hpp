#ifndef RGSCOPE_SWEEP_HPP
#define RGSCOPE_SWEEP_HPP

#include "rgscope/config.hpp"
#include "rgscope/io.hpp"

namespace rgscope {

/// Runs one rg_run per point of the Cartesian sweep grid (first axis
/// outermost).  Rows come back ordered by grid index; per-point failures are
/// recorded in the row and do not stop the sweep.  jobs bounds the number of
/// concurrent points.
std::vector<SweepRow> run_sweep(const RunConfig& config, int jobs = 1);

}  // namespace rgscope

#endif
