/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oldb {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' has non-numeric value '" + v + "'");
    }
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: key '" + key + "' has non-integer value '" + v + "'");
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void RunConfig::set_key(const std::string& key, const std::string& value) {
    if (key == "model")
        model = value;
    else if (key == "params.a")
        a = parse_double(key, value);
    else if (key == "params.mu")
        mu = parse_double(key, value);
    else if (key == "params.nu")
        nu = parse_double(key, value);
    else if (key == "params.alpha")
        alpha = parse_double(key, value);
    else if (key == "params.b")
        b = parse_double(key, value);
    else if (key == "grid.n")
        grid_n = static_cast<int>(parse_int(key, value));
    else if (key == "grid.box_len")
        grid_box_len = parse_double(key, value);
    else if (key == "stepper.dt")
        stepper.dt = parse_double(key, value);
    else if (key == "stepper.t_end")
        stepper.t_end = parse_double(key, value);
    else if (key == "stepper.cfl_safety")
        stepper.cfl_safety = parse_double(key, value);
    else if (key == "sampling.record_every")
        record_every = static_cast<int>(parse_int(key, value));
    else if (key == "sampling.checkpoint_every")
        checkpoint_every = static_cast<int>(parse_int(key, value));
    else if (key == "init.family")
        init_family = value;
    else if (key == "init.A")
        init_A = parse_double(key, value);
    else if (key == "init.eps")
        init_eps = parse_double(key, value);
    else if (key == "init.amplitude")
        init_amplitude = parse_double(key, value);
    else if (key == "init.seed")
        init_seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "output_dir")
        output_dir = value;
    else if (key == "smallness_c")
        smallness_c = parse_double(key, value);
    else if (key == "log_constant_C")
        log_constant_C = parse_double(key, value);
    else if (key == "sobolev_s")
        sobolev_s = parse_double(key, value);
    else if (key == "fit.t_lo")
        fit_t_lo = parse_double(key, value);
    else if (key == "fit.t_hi")
        fit_t_hi = parse_double(key, value);
    else
        throw std::invalid_argument("config: unknown key '" + key + "'");
}

std::map<std::string, std::string> RunConfig::as_keyvalues() const {
    std::map<std::string, std::string> kv;
    kv["model"] = model;
    kv["params.a"] = fmt(a);
    kv["params.mu"] = fmt(mu);
    kv["params.nu"] = fmt(nu);
    kv["params.alpha"] = fmt(alpha);
    kv["params.b"] = fmt(b);
    kv["grid.n"] = std::to_string(grid_n);
    kv["grid.box_len"] = fmt(grid_box_len);
    kv["stepper.dt"] = fmt(stepper.dt);
    kv["stepper.t_end"] = fmt(stepper.t_end);
    kv["stepper.cfl_safety"] = fmt(stepper.cfl_safety);
    kv["sampling.record_every"] = std::to_string(record_every);
    kv["sampling.checkpoint_every"] = std::to_string(checkpoint_every);
    kv["init.family"] = init_family;
    kv["init.A"] = fmt(init_A);
    kv["init.eps"] = fmt(init_eps);
    kv["init.amplitude"] = fmt(init_amplitude);
    kv["init.seed"] = std::to_string(init_seed);
    kv["output_dir"] = output_dir;
    kv["smallness_c"] = fmt(smallness_c);
    kv["log_constant_C"] = fmt(log_constant_C);
    kv["sobolev_s"] = fmt(sobolev_s);
    kv["fit.t_lo"] = fmt(fit_t_lo);
    kv["fit.t_hi"] = fmt(fit_t_hi);
    return kv;
}

void RunConfig::validate() const {
    if (model != "corotational" && model != "general")
        throw std::invalid_argument("config: model must be 'corotational' or 'general'");
    if (a < 0.0)
        throw std::invalid_argument("config: params.a must be >= 0");
    if (mu < 0.0)
        throw std::invalid_argument("config: params.mu must be >= 0");
    if (nu < 0.0)
        throw std::invalid_argument("config: params.nu must be >= 0");
    if (model == "general" && !(alpha > 0.0))
        throw std::invalid_argument("config: params.alpha must be > 0 for the general model");
    if (b < -1.0 || b > 1.0)
        throw std::invalid_argument("config: params.b must lie in [-1, 1]");
    if (grid_n < 16 || grid_n % 2 != 0)
        throw std::invalid_argument("config: grid.n must be even and >= 16");
    if (!(grid_box_len > 0.0))
        throw std::invalid_argument("config: grid.box_len must be > 0");
    if (!(stepper.dt > 0.0))
        throw std::invalid_argument("config: stepper.dt must be > 0");
    if (!(stepper.t_end > 0.0))
        throw std::invalid_argument("config: stepper.t_end must be > 0");
    if (!(stepper.cfl_safety > 0.0 && stepper.cfl_safety <= 1.0))
        throw std::invalid_argument("config: stepper.cfl_safety must lie in (0, 1]");
    if (record_every < 1)
        throw std::invalid_argument("config: sampling.record_every must be >= 1");
    if (checkpoint_every < 0)
        throw std::invalid_argument("config: sampling.checkpoint_every must be >= 0");
    if (init_family != "zero" && init_family != "taylor_green" && init_family != "random" &&
        init_family != "remark12" && init_family != "remark15")
        throw std::invalid_argument("config: init.family '" + init_family + "' is not known");
    if (output_dir.empty())
        throw std::invalid_argument("config: output_dir must not be empty");
    if (!(smallness_c > 0.0))
        throw std::invalid_argument("config: smallness_c must be > 0");
    if (!(log_constant_C > 1.0))
        throw std::invalid_argument("config: log_constant_C must exceed 1");
    if (!(sobolev_s > 2.0))
        throw std::invalid_argument("config: sobolev_s must exceed 2");
}

ModelParams RunConfig::make_params() const {
    if (model == "corotational")
        return ModelParams::corotation(a, mu, nu);
    return ModelParams::general(a, mu, nu, alpha, b);
}

GridPtr RunConfig::make_grid() const {
    return FrequencyGrid::make(grid_n, grid_box_len);
}

State RunConfig::make_state(GridPtr grid) const {
    if (init_family == "zero")
        return zero_state(std::move(grid));
    if (init_family == "taylor_green")
        return taylor_green(std::move(grid));
    if (init_family == "random")
        return random_small(std::move(grid), init_seed, init_amplitude);
    if (init_family == "remark12")
        return remark12_family(init_A, init_eps, std::move(grid));
    if (init_family == "remark15")
        return remark15_family(init_eps, std::move(grid));
    throw std::invalid_argument("config: init.family '" + init_family + "' is not known");
}

std::string RunConfig::resolved_output_dir() const {
    const char* root = std::getenv("OLDB_OUTPUT_ROOT");
    if (root && root[0] != '\0' && !output_dir.empty() && output_dir[0] != '/')
        return std::string(root) + "/" + output_dir;
    return output_dir;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not of the form 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " has an empty key or value");
        cfg.set_key(key, value);
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace oldb
