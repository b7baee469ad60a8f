/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

// Acceptance suite: one function per criterion, each printing a PASS/FAIL
// line with the measured quantities. Run with no arguments for the full
// suite or with criterion numbers (e.g. "acceptance 3 7") for a subset.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oldroyd2d/diagnostics.hpp"
#include "oldroyd2d/init_data.hpp"
#include "test_support.hpp"

using namespace oldb;
using namespace oldb::test;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
};

double wall_seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

History collect(State s, const ModelParams& p, double dt, long long steps, int every,
                const LPPartition& lp) {
    History h;
    DiagnosticsRecord r0 = sample_record(s, p, lp);
    r0.bkm_accum = 0.0;
    h.push_back(r0);
    for (long long i = 1; i <= steps; ++i) {
        s = step_once(s, p, dt);
        if (i % every == 0 || i == steps) {
            DiagnosticsRecord r = sample_record(s, p, lp);
            const double a = h.back().linf_omega * h.back().linf_omega;
            const double b = r.linf_omega * r.linf_omega;
            r.bkm_accum = h.back().bkm_accum + 0.5 * (r.t - h.back().t) * (a + b);
            h.push_back(r);
        }
    }
    return h;
}

// --- C1: spectral identity R(D(u)) = Omega --------------------------------
bool c1_riesz_identity(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    auto grid = FrequencyGrid::make(64, 2.0 * kPi);
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const SpectralVectorField u = random_divfree(grid, seed * 1013 + 7, 10);
        const SpectralScalarField lhs = riesz_R(deformation(u));
        worst = std::max(worst, rel_l2_diff(lhs, vorticity_scalar(u)));
    }
    const double secs = wall_seconds(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "worst rel L2 error %.3e (<= 1e-12), %.2f s (< 5 s)", worst,
                  secs);
    detail = buf;
    return worst <= 1e-12 && secs < 5.0;
}

// --- C2: Littlewood-Paley partition of unity ------------------------------
bool c2_lp_partition(std::string& detail) {
    auto grid = FrequencyGrid::make(128, 2.0 * kPi);
    const LPPartition part = LPPartition::build(grid);

    double worst_sum = 0.0, sq_min = kInf, sq_max = 0.0;
    for (std::size_t id = 0; id < grid->size(); ++id) {
        double s = part.chi_values()[id];
        double sq = s * s;
        for (int j = 0; j <= part.j_max(); ++j) {
            const double v = part.phi_values(j)[id];
            s += v;
            sq += v * v;
        }
        worst_sum = std::max(worst_sum, std::abs(s - 1.0));
        sq_min = std::min(sq_min, sq);
        sq_max = std::max(sq_max, sq);
    }

    double worst_rec = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const SpectralScalarField f = random_scalar(grid, seed * 31, 40);
        SpectralScalarField rec(grid);
        for (int j = -1; j <= part.j_max(); ++j)
            axpy(rec, 1.0, block(f, j, part));
        worst_rec = std::max(worst_rec, rel_l2_diff(rec, f));
    }

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "partition residual %.3e, reconstruction %.3e (<= 1e-12), sq-sum in "
                  "[%.3f, %.3f]",
                  worst_sum, worst_rec, sq_min, sq_max);
    detail = buf;
    return worst_sum <= 1e-12 && worst_rec <= 1e-12 && sq_min >= 0.5 && sq_max <= 1.0 + 1e-15;
}

// --- C3 + C4: exact stress energy identity and decay envelopes ------------
struct C34State {
    double residual_coarse = kInf;
    double residual_fine = kInf;
    double envelope_worst = kInf;
    double seconds = 0.0;
    bool ran = false;
};
C34State& c34() {
    static C34State s;
    return s;
}

void run_c34() {
    if (c34().ran)
        return;
    const auto t0 = std::chrono::steady_clock::now();
    auto grid = FrequencyGrid::make(64, 8.0 * kPi);
    const LPPartition lp = LPPartition::build(grid);
    const ModelParams p = ModelParams::corotation(1.0, 1.0);
    const State s0 = random_small(grid, 2024, 1e-3);

    const History coarse = collect(s0, p, 1e-3, 1000, 1, lp);
    c34().residual_coarse = *energy_identity_residual(coarse, p);

    double env = 0.0;
    for (double q : {2.0, 4.0, kInf})
        env = std::max(env, *exp_decay_envelope_check(coarse, p, q));
    c34().envelope_worst = env;

    const History fine = collect(s0, p, 5e-4, 2000, 1, lp);
    c34().residual_fine = *energy_identity_residual(fine, p);

    c34().seconds = wall_seconds(t0);
    c34().ran = true;
}

bool c3_energy_identity(std::string& detail) {
    run_c34();
    const double ratio = c34().residual_coarse / c34().residual_fine;
    char buf[220];
    std::snprintf(buf, sizeof(buf),
                  "residual %.3e (<= 1e-6), refinement ratio %.2f (>= 3.5, second order), "
                  "%.0f s (< 120 s)",
                  c34().residual_coarse, ratio, c34().seconds);
    detail = buf;
    return c34().residual_coarse <= 1e-6 && ratio >= 3.5 && c34().seconds < 120.0;
}

bool c4_decay_envelope(std::string& detail) {
    run_c34();
    char buf[120];
    std::snprintf(buf, sizeof(buf), "max envelope ratio %.12f (<= 1 + 1e-6)",
                  c34().envelope_worst);
    detail = buf;
    return c34().envelope_worst <= 1.0 + 1e-6;
}

// --- C5: Euler reduction on the Taylor-Green vortex ------------------------
bool c5_euler_reduction(std::string& detail) {
    auto grid = FrequencyGrid::make(64, 2.0 * kPi);
    State s = taylor_green(grid);
    const ModelParams p = ModelParams::corotation(1.0, 1.0);  // tau stays 0, nu = 0
    const double e0 = norm_l2(s.u);
    const double w0 = norm_l2(vorticity_scalar(s.u));
    double drift_u = 0.0, drift_w = 0.0;
    for (int i = 0; i < 1000; ++i) {
        s = step_once(s, p, 1e-3);
        drift_u = std::max(drift_u, std::abs(norm_l2(s.u) - e0));
        drift_w = std::max(drift_w, std::abs(norm_l2(vorticity_scalar(s.u)) - w0));
    }
    char buf[140];
    std::snprintf(buf, sizeof(buf), "|u|_L2 drift %.3e, |omega|_L2 drift %.3e (<= 1e-8)", drift_u,
                  drift_w);
    detail = buf;
    return drift_u <= 1e-8 && drift_w <= 1e-8 && norm_l2(s.tau) == 0.0;
}

// --- C6: Gamma equation residual -------------------------------------------
bool c6_gamma_residual(std::string& detail) {
    auto grid = FrequencyGrid::make(64, 2.0 * kPi);
    const ModelParams p = ModelParams::corotation(1.0, 1.0);

    State s = random_small(grid, 31415, 1e-2);
    const double r_coarse = gamma_residual(s, p, 2e-3);
    const double r_fine = gamma_residual(s, p, 1e-3);
    const double ratio = r_coarse / r_fine;

    State taued(grid);
    taued.tau = random_tensor(grid, 8, 8);
    const double u0_resid = gamma_residual_instant(taued, p);

    char buf[180];
    std::snprintf(buf, sizeof(buf),
                  "Richardson ratio %.2f (>= 3.5), u = 0 residual %.3e (<= 1e-12)", ratio,
                  u0_resid);
    detail = buf;
    return ratio >= 3.5 && u0_resid <= 1e-12;
}

// --- C7: H1 dissipation inequality ------------------------------------------
bool c7_h1_dissipation(std::string& detail) {
    // criterion reading: "all params 1" includes nu = 1 (with nu = 0 the
    // unit-coefficient inequality is violated on slaved states; see the
    // project notes); alpha = b = 1 as in the general model
    const ModelParams p = ModelParams::general(1.0, 1.0, 1.0, 1.0, 1.0);
    const double delta = 1e-2;

    auto run = [&](int n) {
        auto grid = FrequencyGrid::make(n, 2.0 * kPi);
        const LPPartition lp = LPPartition::build(grid);
        const State s0 = random_small(grid, 777, delta);
        const History h = collect(s0, p, 2e-3, 1000, 2, lp);
        return h1_dissipation_check(h);
    };
    const double worst64 = run(64);
    const double worst128 = run(128);
    const double viol64 = std::max(0.0, worst64);
    const double viol128 = std::max(0.0, worst128);
    const double cap = 1e-4 * delta * delta;

    char buf[220];
    std::snprintf(buf, sizeof(buf),
                  "worst violation 64^2: %.3e, 128^2: %.3e (cap %.1e, non-increasing)", viol64,
                  viol128, cap);
    detail = buf;
    return viol64 <= cap && viol128 <= viol64 + 1e-15;
}

// --- C8: decay-rate fit ------------------------------------------------------
bool c8_decay_fit(std::string& detail) {
    // exact part: synthetic power law
    History synth;
    for (int i = 0; i <= 100; ++i) {
        DiagnosticsRecord r;
        r.t = 0.5 * i;
        const double v = 2.0 * std::pow(1.0 + r.t, -0.5) / std::sqrt(2.0);
        r.h1_u = v;
        r.h1_tau = v;
        synth.push_back(r);
    }
    const DecayFit exact = fit_decay_exponent(synth, 0.0, 50.0);
    const bool exact_ok = std::abs(exact.exponent + 0.5) <= 1e-8 &&
                          std::abs(exact.r_squared - 1.0) <= 1e-10;

    // torus proxy: localized small data, general model. Only the H1 norms
    // feed the fit, so the sampler skips the transform-heavy diagnostics.
    auto proxy = [&](int n, double box, double t_hi) {
        auto grid = FrequencyGrid::make(n, box);
        const ModelParams p = ModelParams::general(1.0, 1.0, 0.0, 1.0, 0.0);
        State s = remark12_family(0.05, 0.25, grid);
        History h;
        auto lean_sample = [&]() {
            DiagnosticsRecord r;
            r.t = s.t;
            r.h1_u = norm_hs(s.u, 1.0);
            r.h1_tau = norm_hs(s.tau, 1.0);
            h.push_back(r);
        };
        lean_sample();
        const double dt = 0.1;
        const long long steps = std::llround(t_hi / dt);
        for (long long i = 1; i <= steps; ++i) {
            s = step_once(s, p, dt);
            if (i % 4 == 0)
                lean_sample();
        }
        return fit_decay_exponent(h, 5.0, t_hi);
    };

    // pinned proxy run: 256^2, L = 64 pi, window [5, 40] far before the
    // box-scale decay time 1/(nu_eff k_min^2) ~ 2e3
    const DecayFit base = proxy(256, 64.0 * kPi, 40.0);

    // directional check: the box-scale truncation steepens the fit, and the
    // effect fades as L doubles, so the exponent moves toward -1/2 from
    // below. The window [5, 400] (still before the box-scale time) makes the
    // truncation visible; the window physics lives at |k| < 1, well inside
    // the 128^2 mask.
    const DecayFit dir_base = proxy(128, 64.0 * kPi, 400.0);
    const DecayFit dir_doubled = proxy(128, 128.0 * kPi, 400.0);
    const double dist_base = std::abs(dir_base.exponent + 0.5);
    const double dist_doubled = std::abs(dir_doubled.exponent + 0.5);

    char buf[300];
    std::snprintf(buf, sizeof(buf),
                  "synthetic %.10f; proxy L=64pi: %.4f (<= -0.25); long-window L=64pi: %.4f, "
                  "L=128pi: %.4f (|.+0.5|: %.4f -> %.4f, toward -0.5)",
                  exact.exponent, base.exponent, dir_base.exponent, dir_doubled.exponent,
                  dist_base, dist_doubled);
    detail = buf;
    return exact_ok && base.exponent <= -0.25 && dist_doubled < dist_base;
}

// --- C9: condition checkers ---------------------------------------------------
bool c9_condition_checkers(std::string& detail) {
    // kappa/lambda/beta arithmetic against hand-computed values
    struct Tuple {
        double a, mu, kappa, lambda, beta;
    };
    const Tuple tuples[] = {
        {4.0, 0.25, 0.25, 0.125, std::pow(4.0, 0.125)},
        {1.0, 1.0, 1.0, 1.0, 1.0},
        {0.25, 4.0, 0.25, 0.25, 0.0625},
        {9.0, 1.0, 1.0, 1.0, std::pow(9.0, 0.125)},
        {1.0, 1.0 / 16.0, 1.0 / 16.0, 1.0 / 1024.0, 1.0},
    };
    bool arithmetic_ok = true;
    for (const Tuple& t : tuples) {
        const DerivedConstants d = DerivedConstants::from(t.a, t.mu);
        arithmetic_ok = arithmetic_ok && std::abs(d.kappa - t.kappa) <= 1e-15 * t.kappa &&
                        std::abs(d.lambda - t.lambda) <= 1e-15 * t.lambda &&
                        std::abs(d.beta - t.beta) <= 1e-15 * t.beta;
    }

    // H0 closed form for an isotropic constant stress, a = mu = 1
    bool h0_ok = true;
    {
        auto grid = FrequencyGrid::make(64, 2.0 * kPi);
        const LPPartition lp = LPPartition::build(grid);
        const double c = 1e-3;
        State s(grid);
        s.tau.t11.coeff[0] = c;
        s.tau.t22.coeff[0] = c;
        const ModelParams p = ModelParams::corotation(1.0, 1.0);
        const ConditionReport rep = check_theorem_conditions(s.u, s.tau, p, 0.1, "thm1_2", &lp);
        const double l2 = c * std::sqrt(2.0) * 2.0 * kPi;
        const double linf = c * std::sqrt(2.0);
        const double l4 = linf * std::pow(grid->box_area(), 0.25);
        const double h0 = l2 * l2 * std::exp(6.0 + 6.0 * linf * linf + 3.0 * l2 * l2);
        const double expect_lhs = h0 * (linf + l4);  // b0inf1 of the constant = linf
        h0_ok = std::abs(rep.checks[2].lhs - expect_lhs) <= 1e-10 * expect_lhs;
    }

    // Remark-1.2 scan: all thm1_1 conditions pass while |(u0,tau0)|_{H3} > 10
    bool scan_found = false;
    double found_a = 0.0, found_eps = 0.0, found_h3 = 0.0;
    const ModelParams p = ModelParams::corotation(1.0, 1.0);
    for (double A : {12.0, 16.0, 24.0}) {
        for (double eps : {3e-4, 1e-4}) {
            auto grid = FrequencyGrid::make(64, 12.0 / eps);
            const State s = remark12_family(A, eps, grid);
            const ConditionReport rep =
                check_theorem_conditions(s.u, s.tau, p, 0.05, "thm1_1", nullptr);
            const double hu = norm_hs(s.u, 3.0);
            const double ht = norm_hs(s.tau, 3.0);
            const double h3 = std::sqrt(hu * hu + ht * ht);
            if (rep.all_pass() && h3 > 10.0) {
                scan_found = true;
                found_a = A;
                found_eps = eps;
                found_h3 = h3;
            }
        }
    }

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "constants arithmetic %s, H0 formula %s, scan found (A=%g, eps=%g, H3=%.1f)",
                  arithmetic_ok ? "ok" : "BAD", h0_ok ? "ok" : "BAD",
                  found_a, found_eps, found_h3);
    detail = buf;
    return arithmetic_ok && h0_ok && scan_found;
}

// --- C10: integrating-factor RK4 versus the matrix-exponential oracle ----------
bool c10_linear_oracle(std::string& detail) {
    auto grid = FrequencyGrid::make(32, 2.0 * kPi);
    const FrequencyGrid& g = *grid;
    const ModelParams p = ModelParams::general(1.0, 1.0, 0.0, 1.0, 0.0);

    const int m1 = 2, m2 = 1;
    Vec5 y = {Complex(0.4, -0.2) * 1e-6, Complex(0.1, 0.3) * 1e-6, Complex(0.5, -0.3) * 1e-6,
              Complex(0.1, 0.2) * 1e-6, Complex(-0.4, -0.1) * 1e-6};
    {
        const double k1 = g.k(m1), k2 = g.k(m2);
        const Complex kd = (k1 * y[0] + k2 * y[1]) / (k1 * k1 + k2 * k2);
        y[0] -= k1 * kd;
        y[1] -= k2 * kd;
    }

    const double t_final = 0.1;
    const Mat5 E = mat_exp(mode_matrix(g.k(m1), g.k(m2), p), t_final);
    const Vec5 expect = mat_apply(E, y);
    double scale = 0.0;
    for (int c = 0; c < 5; ++c)
        scale = std::max(scale, std::abs(expect[c]));

    auto run_err = [&](double dt) {
        State s(grid);
        set_mode(s, m1, m2, y);
        Vec5 conj_y;
        for (int c = 0; c < 5; ++c)
            conj_y[c] = std::conj(y[c]);
        set_mode(s, g.conj_index(m1), g.conj_index(m2), conj_y);
        const long long steps = std::llround(t_final / dt);
        for (long long i = 0; i < steps; ++i)
            s = step_once(s, p, dt);
        const Vec5 got = mode_of(s, m1, m2);
        double err = 0.0;
        for (int c = 0; c < 5; ++c)
            err = std::max(err, std::abs(got[c] - expect[c]));
        return err;
    };

    const double e_production = run_err(1e-3) / scale;
    const double ratio = run_err(4e-3) / run_err(2e-3);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "relative error %.3e at dt = 1e-3 (<= 1e-10), halving ratio %.1f (>= 12)",
                  e_production, ratio);
    detail = buf;
    return e_production <= 1e-10 && ratio >= 12.0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "spectral identity R(D(u)) = Omega", c1_riesz_identity},
        {2, "Littlewood-Paley partition of unity", c2_lp_partition},
        {3, "exact stress energy identity", c3_energy_identity},
        {4, "stress decay envelope", c4_decay_envelope},
        {5, "Euler reduction (Taylor-Green)", c5_euler_reduction},
        {6, "Gamma equation residual", c6_gamma_residual},
        {7, "H1 dissipation inequality", c7_h1_dissipation},
        {8, "decay-rate fit", c8_decay_fit},
        {9, "condition checkers", c9_condition_checkers},
        {10, "per-mode linear oracle", c10_linear_oracle},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i)
        wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] C%-2d %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    return failures;
}
