/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

// Command-line front end: simulate / diagnose / sweep / fit.
//
// Exit codes: 0 success, 1 usage or runtime error, 2 BKM suspect flag,
// 3 CFL failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "oldroyd2d/simulate.hpp"

namespace {

bool parse_window(const std::string& w, double& lo, double& hi) {
    const auto colon = w.find(':');
    if (colon == std::string::npos)
        return false;
    try {
        lo = std::stod(w.substr(0, colon));
        hi = std::stod(w.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oldroyd2d: pseudo-spectral 2-D Oldroyd-B simulator and diagnostics"};
    app.require_subcommand(1);

    std::string config_path, series_path, window, axis, values_csv, resume_path;

    auto* sim = app.add_subcommand("simulate", "run a configured simulation");
    sim->add_option("--config", config_path, "run configuration file")->required();
    sim->add_option("--resume", resume_path, "continue from a checkpoint");

    auto* diag = app.add_subcommand("diagnose", "recompute a report from series.csv");
    diag->add_option("--series", series_path, "series.csv path")->required();
    diag->add_option("--window", window, "fit window t_lo:t_hi");

    auto* sw = app.add_subcommand("sweep", "run one variant per axis value");
    sw->add_option("--config", config_path, "base configuration file")->required();
    sw->add_option("--axis", axis, "numeric config key to vary")->required();
    sw->add_option("--values", values_csv, "comma-separated values")->required();

    auto* fit = app.add_subcommand("fit", "fit a decay exponent to a series");
    fit->add_option("--series", series_path, "series.csv path")->required();
    fit->add_option("--window", window, "fit window t_lo:t_hi")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            const oldb::RunConfig cfg = oldb::parse_config_file(config_path);
            const oldb::RunOutcome out = oldb::simulate(cfg, resume_path);
            if (!out.message.empty())
                std::cerr << out.message << "\n";
            std::cout << "series:  " << out.series_path << "\n"
                      << "report:  " << out.report_path << "\n"
                      << "samples: " << out.history.size() << "\n";
            return out.exit_code;
        }
        if (diag->parsed()) {
            double lo = -1.0, hi = -1.0;
            if (!window.empty() && !parse_window(window, lo, hi)) {
                std::cerr << "bad --window, expected t_lo:t_hi\n";
                return 1;
            }
            std::cout << oldb::diagnose(series_path, lo, hi);
            return 0;
        }
        if (sw->parsed()) {
            const oldb::RunConfig cfg = oldb::parse_config_file(config_path);
            const auto rows = oldb::sweep(cfg, axis, split_csv(values_csv));
            int failures = 0;
            for (const auto& r : rows) {
                std::printf("%-14s exit=%d cond=%d env=%.6g exp=%.6g%s%s\n", r.value.c_str(),
                            r.exit_code, r.conditions_pass ? 1 : 0, r.envelope_max,
                            r.decay_exponent, r.bkm_suspect ? " [bkm-suspect]" : "",
                            r.error.empty() ? "" : (" error: " + r.error).c_str());
                if (r.exit_code == 1)
                    ++failures;
            }
            return failures == static_cast<int>(rows.size()) && !rows.empty() ? 1 : 0;
        }
        if (fit->parsed()) {
            double lo = 0.0, hi = 0.0;
            if (!parse_window(window, lo, hi)) {
                std::cerr << "bad --window, expected t_lo:t_hi\n";
                return 1;
            }
            const oldb::DecayFit f = oldb::fit_series(series_path, lo, hi);
            std::printf("exponent = %.12g\nr_squared = %.12g\n", f.exponent, f.r_squared);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
