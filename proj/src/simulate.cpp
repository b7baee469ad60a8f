/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/simulate.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "oldroyd2d/norms.hpp"
#include "oldroyd2d/spectral_ops.hpp"

namespace oldb {

namespace {

using nlohmann::json;

double trapezoid_increment(const DiagnosticsRecord& prev, const DiagnosticsRecord& cur) {
    const double a = prev.linf_omega * prev.linf_omega;
    const double b = cur.linf_omega * cur.linf_omega;
    return 0.5 * (cur.t - prev.t) * (a + b);
}

json envelope_json(const History& history, const ModelParams& params) {
    json env;
    for (const auto& [label, p] : {std::pair<const char*, double>{"p2", 2.0},
                                   {"p4", 4.0},
                                   {"pinf", kInf}}) {
        const auto r = exp_decay_envelope_check(history, params, p);
        env[label] = r ? json(*r) : json(nullptr);
    }
    return env;
}

json condition_json(const ConditionReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    return {{"theorem", rep.theorem_id},
            {"c_used", rep.c_used},
            {"log_constant_C", rep.log_constant_C},
            {"sobolev_s", rep.sobolev_s},
            {"all_pass", rep.all_pass()},
            {"checks", checks}};
}

json fit_json(const History& history, double t_lo, double t_hi) {
    try {
        const DecayFit fit = fit_decay_exponent(history, t_lo, t_hi);
        return {{"t_lo", t_lo}, {"t_hi", t_hi}, {"exponent", fit.exponent},
                {"r_squared", fit.r_squared}};
    } catch (const std::exception& e) {
        return {{"t_lo", t_lo}, {"t_hi", t_hi}, {"error", e.what()}};
    }
}

void auto_fit_window(const History& history, double& t_lo, double& t_hi) {
    if (history.empty())
        return;
    const double t0 = history.front().t;
    const double t1 = history.back().t;
    if (t_lo < 0.0)
        t_lo = t0 + 0.125 * (t1 - t0);
    if (t_hi < 0.0)
        t_hi = t1;
}

ModelParams params_from_meta(const std::map<std::string, std::string>& meta) {
    auto get = [&meta](const char* key, double fallback) {
        const auto it = meta.find(key);
        return it == meta.end() ? fallback : std::stod(it->second);
    };
    const auto it = meta.find("model");
    const bool coro = it == meta.end() || it->second == "corotational";
    if (coro)
        return ModelParams::corotation(get("params.a", 1.0), get("params.mu", 1.0),
                                       get("params.nu", 0.0));
    return ModelParams::general(get("params.a", 1.0), get("params.mu", 1.0),
                                get("params.nu", 0.0), get("params.alpha", 1.0),
                                get("params.b", 0.0));
}

json series_report(const History& history, const ModelParams& params, double fit_t_lo,
                   double fit_t_hi) {
    json rep;
    const auto resid = energy_identity_residual(history, params);
    rep["energy_identity_residual"] = resid ? json(*resid) : json(nullptr);
    rep["envelope_ratio"] = envelope_json(history, params);
    rep["h1_dissipation_worst"] =
        history.size() >= 2 ? json(h1_dissipation_check(history)) : json(nullptr);
    rep["bkm"] = {{"accumulated", history.size() >= 2 ? bkm_accumulate(history) : 0.0},
                  {"suspect", bkm_suspect(history)}};
    auto_fit_window(history, fit_t_lo, fit_t_hi);
    rep["decay_fit"] = fit_json(history, fit_t_lo, fit_t_hi);
    return rep;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

}  // namespace

RunOutcome simulate(const RunConfig& cfg, const std::string& resume_from) {
    cfg.validate();
    const ModelParams params = cfg.make_params();
    const GridPtr grid = cfg.make_grid();
    const LPPartition lp = LPPartition::build(grid);

    State state = resume_from.empty() ? cfg.make_state(grid) : read_checkpoint(resume_from);
    if (!resume_from.empty() && !state.grid()->same(*grid))
        throw std::runtime_error("resume: checkpoint grid does not match config grid");

    const SpectralVectorField u0 = state.u;
    const SpectralSymTensorField tau0 = state.tau;

    namespace fs = std::filesystem;
    const std::string outdir = cfg.resolved_output_dir();
    fs::create_directories(outdir);

    RunOutcome outcome;
    outcome.series_path = outdir + "/series.csv";
    outcome.report_path = outdir + "/report.json";

    auto meta = cfg.as_keyvalues();
    meta.erase("output_dir");  // series stay byte-comparable across directories
    SeriesWriter writer(outcome.series_path, meta);
    DiagnosticsRecord rec = sample_record(state, params, lp);
    rec.bkm_accum = 0.0;
    writer.write(rec);
    outcome.history.push_back(rec);

    // running stress energy identity (co-rotational): e^{2a(t-t0)}|tau|^2
    // + 2 mu int e^{2a(s-t0)}|grad tau|^2 ds against |tau(t0)|^2
    const double ident_t0 = rec.t;
    const double ident_base = rec.l2_tau * rec.l2_tau;
    double ident_integral = 0.0;
    double ident_prev_g = [&] {
        const double g = grad_l2_from(rec.h1_tau, rec.l2_tau);
        return g * g;
    }();
    auto fill_identity = [&](DiagnosticsRecord& r, const DiagnosticsRecord& prev) {
        if (!params.corotational || ident_base == 0.0)
            return;
        const double g = grad_l2_from(r.h1_tau, r.l2_tau);
        const double weighted = std::exp(2.0 * params.a * (r.t - ident_t0)) * g * g;
        ident_integral += 0.5 * (r.t - prev.t) * (weighted + ident_prev_g);
        ident_prev_g = weighted;
        const double lhs = std::exp(2.0 * params.a * (r.t - ident_t0)) * r.l2_tau * r.l2_tau +
                           2.0 * params.mu * ident_integral;
        r.energy_identity_residual = std::abs(lhs - ident_base) / ident_base;
    };

    const double t_start = state.t;
    const long long total_steps =
        static_cast<long long>(std::llround((cfg.stepper.t_end - t_start) / cfg.stepper.dt));

    bool cfl_failed = false;
    for (long long s = 1; s <= total_steps && !cfl_failed; ++s) {
        try {
            state = step(state, params, cfg.stepper);
        } catch (const CflError& e) {
            outcome.exit_code = 3;
            outcome.message = e.what();
            cfl_failed = true;
            break;
        }
        const bool last = s == total_steps;
        if (s % cfg.record_every == 0 || last) {
            DiagnosticsRecord r = sample_record(state, params, lp);
            r.bkm_accum = outcome.history.back().bkm_accum +
                          trapezoid_increment(outcome.history.back(), r);
            fill_identity(r, outcome.history.back());
            writer.write(r);
            outcome.history.push_back(r);
        }
        if (cfg.checkpoint_every > 0 && s % cfg.checkpoint_every == 0) {
            char name[64];
            std::snprintf(name, sizeof(name), "/checkpoint_%08lld.ckpt", s);
            write_checkpoint(outdir + name, state);
        }
    }
    write_checkpoint(outdir + "/checkpoint_final.ckpt", state);

    json rep = series_report(outcome.history, params, cfg.fit_t_lo, cfg.fit_t_hi);
    rep["config"] = json(cfg.as_keyvalues());

    {
        json conds;
        conds["thm1_1"] = condition_json(check_theorem_conditions(
            u0, tau0, params, cfg.smallness_c, "thm1_1", &lp,
            ConditionOptions{cfg.log_constant_C, cfg.sobolev_s}));
        conds["thm1_2"] = condition_json(check_theorem_conditions(
            u0, tau0, params, cfg.smallness_c, "thm1_2", &lp,
            ConditionOptions{cfg.log_constant_C, cfg.sobolev_s}));
        rep["conditions"] = conds;
    }

    if (!cfl_failed && rep["bkm"]["suspect"].get<bool>())
        outcome.exit_code = 2;
    rep["exit_code"] = outcome.exit_code;
    if (!outcome.message.empty())
        rep["error"] = outcome.message;

    write_text(outcome.report_path, rep.dump(2) + "\n");
    return outcome;
}

std::string diagnose(const std::string& series_path, double fit_t_lo, double fit_t_hi) {
    const SeriesData data = read_series(series_path);
    if (data.history.empty())
        throw std::runtime_error("diagnose: series has no samples");
    const ModelParams params = params_from_meta(data.meta);

    json rep = series_report(data.history, params, fit_t_lo, fit_t_hi);

    // the stored accumulator must be reconstructible bit-for-bit
    double acc = 0.0;
    bool exact = true;
    for (std::size_t i = 1; i < data.history.size(); ++i) {
        acc += trapezoid_increment(data.history[i - 1], data.history[i]);
        if (acc != data.history[i].bkm_accum)
            exact = false;
    }
    rep["bkm"]["stored_matches_recomputed"] = exact;
    return rep.dump(2) + "\n";
}

std::vector<SweepRow> sweep(const RunConfig& base, const std::string& axis,
                            const std::vector<std::string>& values) {
    {
        // axis must name a numeric key
        RunConfig probe = base;
        try {
            probe.set_key(axis, "1");
        } catch (const std::exception&) {
            throw std::invalid_argument("sweep: axis '" + axis + "' is not a config key");
        }
        if (axis == "model" || axis == "init.family" || axis == "output_dir")
            throw std::invalid_argument("sweep: axis '" + axis + "' is not numeric");
    }
    if (values.empty())
        throw std::invalid_argument("sweep: no values given");

    namespace fs = std::filesystem;
    const std::string root = base.resolved_output_dir();
    fs::create_directories(root);

    std::vector<SweepRow> rows(values.size());
    std::mutex mu;
    std::size_t next = 0;

    auto worker = [&]() {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= values.size())
                    return;
                i = next++;
            }
            SweepRow row;
            row.value = values[i];
            try {
                RunConfig cfg = base;
                cfg.set_key(axis, values[i]);
                std::string tag = axis + "_" + values[i];
                for (char& c : tag)
                    if (!std::isalnum(static_cast<unsigned char>(c)))
                        c = '_';
                cfg.output_dir = base.output_dir + "/" + tag;
                const RunOutcome out = simulate(cfg);
                row.exit_code = out.exit_code;
                row.bkm_suspect = out.exit_code == 2;

                std::ifstream rin(out.report_path);
                const json rep = json::parse(rin);
                row.conditions_pass = rep["conditions"]["thm1_1"]["all_pass"].get<bool>();
                double env = 0.0;
                for (const char* k : {"p2", "p4", "pinf"})
                    if (!rep["envelope_ratio"][k].is_null())
                        env = std::max(env, rep["envelope_ratio"][k].get<double>());
                row.envelope_max = env;
                row.decay_exponent = rep["decay_fit"].contains("exponent")
                                         ? rep["decay_fit"]["exponent"].get<double>()
                                         : std::nan("");
            } catch (const std::exception& e) {
                row.exit_code = 1;
                row.error = e.what();
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                rows[i] = std::move(row);
            }
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t nthreads = std::min<std::size_t>(hw, values.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    std::ofstream out(root + "/sweep.csv", std::ios::trunc);
    out << "value,exit_code,conditions_pass,envelope_max,decay_exponent,bkm_suspect,error\n";
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", r.envelope_max);
        out << r.value << "," << r.exit_code << "," << (r.conditions_pass ? 1 : 0) << "," << buf
            << ",";
        std::snprintf(buf, sizeof(buf), "%.17g", r.decay_exponent);
        out << buf << "," << (r.bkm_suspect ? 1 : 0) << "," << r.error << "\n";
    }
    return rows;
}

DecayFit fit_series(const std::string& series_path, double t_lo, double t_hi) {
    const SeriesData data = read_series(series_path);
    return fit_decay_exponent(data.history, t_lo, t_hi);
}

}  // namespace oldb
