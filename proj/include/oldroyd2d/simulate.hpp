/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_SIMULATE_HPP
#define OLDROYD2D_SIMULATE_HPP

#include <string>
#include <vector>

#include "oldroyd2d/run_config.hpp"
#include "oldroyd2d/sim_io.hpp"

namespace oldb {

// Exit codes: 0 completed, 2 completed but the BKM accumulator flagged the
// run suspect, 3 CFL failure.
struct RunOutcome {
    int exit_code = 0;
    std::string message;
    History history;
    std::string series_path;
    std::string report_path;
};

// Runs a configured simulation: writes series.csv, report.json and
// checkpoints under the resolved output directory. resume_from, when
// nonempty, loads the state from a checkpoint instead of the init family
// and continues to stepper.t_end.
RunOutcome simulate(const RunConfig& cfg, const std::string& resume_from = "");

// Recomputes every series-derived quantity (accumulators, envelope ratios,
// identity residual, fit) from series.csv alone and writes/returns a report.
// Fit window values < 0 select the automatic window.
std::string diagnose(const std::string& series_path, double fit_t_lo = -1.0,
                     double fit_t_hi = -1.0);

struct SweepRow {
    std::string value;
    int exit_code = 0;
    bool conditions_pass = false;
    double envelope_max = 0.0;
    double decay_exponent = 0.0;
    bool bkm_suspect = false;
    std::string error;
};

// Runs one variant per value of the (numeric) config key `axis`, each in its
// own subdirectory, concurrently; per-run failures are recorded and the
// sweep continues. Writes sweep.csv under the base output directory.
std::vector<SweepRow> sweep(const RunConfig& base, const std::string& axis,
                            const std::vector<std::string>& values);

DecayFit fit_series(const std::string& series_path, double t_lo, double t_hi);

}  // namespace oldb

#endif
