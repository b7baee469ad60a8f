/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_RUN_CONFIG_HPP
#define OLDROYD2D_RUN_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

#include "oldroyd2d/dynamics.hpp"
#include "oldroyd2d/init_data.hpp"

namespace oldb {

// Flat dotted-key configuration for a run. Parsed from text of the form
//   stepper.dt = 1e-3
// with '#' comments; every value is validated and rejections name the
// offending key.
struct RunConfig {
    std::string model = "corotational";  // corotational | general
    double a = 1.0;
    double mu = 1.0;
    double nu = 0.0;
    double alpha = 1.0;  // ignored for the co-rotational model
    double b = 0.0;      // ignored for the co-rotational model

    int grid_n = 64;
    double grid_box_len = 2.0 * 3.14159265358979323846;

    StepperConfig stepper;

    int record_every = 10;      // steps between samples
    int checkpoint_every = 0;   // steps between checkpoints; 0 = final only

    std::string init_family = "zero";  // zero|taylor_green|random|remark12|remark15
    double init_A = 1.0;
    double init_eps = 0.5;
    double init_amplitude = 1e-2;
    std::uint64_t init_seed = 1;

    std::string output_dir = "out";
    double smallness_c = 0.05;
    double log_constant_C = 2.718281828459045;
    double sobolev_s = 3.0;
    double fit_t_lo = -1.0;  // < 0: window chosen automatically
    double fit_t_hi = -1.0;

    ModelParams make_params() const;
    GridPtr make_grid() const;
    State make_state(GridPtr grid) const;

    // Resolved output directory (the OLDB_OUTPUT_ROOT environment variable,
    // when set, is prepended to relative paths).
    std::string resolved_output_dir() const;

    void validate() const;

    // Serialization of the key/value view (used for the series header and
    // the sweep axis mechanism).
    std::map<std::string, std::string> as_keyvalues() const;
    void set_key(const std::string& key, const std::string& value);
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace oldb

#endif
