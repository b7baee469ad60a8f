/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_DIAGNOSTICS_HPP
#define OLDROYD2D_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "oldroyd2d/dynamics.hpp"
#include "oldroyd2d/littlewood_paley.hpp"

namespace oldb {

// One time sample of every monitored norm; these are exactly the columns of
// series.csv, in this order.
struct DiagnosticsRecord {
    double t = 0.0;
    double l2_u = 0.0, h1_u = 0.0;
    double l2_tau = 0.0, h1_tau = 0.0, h2_tau = 0.0;
    double linf_tau = 0.0, l4_tau = 0.0;
    double linf_omega = 0.0, l2_omega = 0.0;
    double linf_gamma = 0.0, b0inf1_gamma = 0.0;
    double besov_tau_b0inf1 = 0.0;
    double bkm_accum = 0.0;  // trapezoid of |Omega|_inf^2, nondecreasing

    // derived, not a CSV column
    double energy_identity_residual = 0.0;
};

using History = std::vector<DiagnosticsRecord>;

// Norms of the current state; bkm_accum and the identity residual are
// carried forward by the caller (see Series in sim_io).
DiagnosticsRecord sample_record(const State& state, const ModelParams& params,
                                const LPPartition& lp);

// |grad tau|_{L^2} recovered from the recorded norms; exact because
// H^1 squared = L^2 squared + |grad .|^2 with the (1+|k|^2) multiplier.
double grad_l2_from(double h1, double l2);

// Relative defect of the exact identity
//   e^{2at} |tau|_{L2}^2 + 2 mu int_0^t e^{2as} |grad tau|_{L2}^2 ds = |tau0|_{L2}^2
// at the last sample, trapezoid in time. Holds for the co-rotational model
// only; nullopt for the general model (the alpha D(u) source breaks it).
// A zero-stress run returns 0 by convention.
std::optional<double> energy_identity_residual(const History& history,
                                               const ModelParams& params);

// max over samples of |tau(t)|_{L^p} / (|tau0|_{L^p} e^{-at}) for
// p in {2, 4, inf}; nullopt when |tau0|_{L^p} = 0.
std::optional<double> exp_decay_envelope_check(const History& history, const ModelParams& params,
                                               double p);

// max over adjacent samples of
//   D(|（u,tau)|_{H1}^2)/Dt + |grad u|_{L2}^2 + |tau|_{H2}^2
// with midpoint (trapezoid) values for the dissipation terms. Positive means
// the discrete dissipation inequality is violated by that much; callers
// compare against their tolerance.
double h1_dissipation_check(const History& history);

// Final value of the trapezoid accumulator int_0^t |Omega|_inf^2 ds,
// recomputed from the series (bit-identical to the stored column).
double bkm_accumulate(const History& history);

// Suspect flag: the accumulator growth rate (the integrand) increases
// strictly monotonically across the last quarter of the samples.
bool bkm_suspect(const History& history);

struct ConditionCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

struct ConditionReport {
    std::string theorem_id;  // "thm1_1" or "thm1_2"
    std::vector<ConditionCheck> checks;
    double c_used = 0.0;
    double log_constant_C = 0.0;  // constant inside the thm1_1 logarithm
    double sobolev_s = 0.0;       // s used for the H^s norm in thm1_1
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

struct ConditionOptions {
    double log_constant_C = 2.718281828459045;  // defaults recorded in the report
    double sobolev_s = 3.0;
};

// Evaluates the smallness conditions of the global-existence theorems with
// measured norms and the derived constants kappa/lambda/beta; thm1_2 needs a
// partition for the Besov norms. Verdicts are conditional on the supplied
// constants c and C.
ConditionReport check_theorem_conditions(const SpectralVectorField& u0,
                                         const SpectralSymTensorField& tau0,
                                         const ModelParams& params, double c,
                                         const std::string& theorem,
                                         const LPPartition* lp = nullptr,
                                         const ConditionOptions& opts = {});

// Energy inside the shrinking frequency set S(t) = {k : |k|^2 <= C2/(1+t)}
// versus the total, Parseval-normalized (includes the mean mode).
struct SplitTally {
    double inside_energy = 0.0;
    double total_energy = 0.0;
};
SplitTally fourier_splitting_tally(const State& state, double t, double c2);

struct DecayFit {
    double exponent = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log |(u,tau)|_{H1} against log(1+t) over the
// window; needs >= 8 samples with positive norms.
DecayFit fit_decay_exponent(const History& history, double t_lo, double t_hi);

}  // namespace oldb

#endif
