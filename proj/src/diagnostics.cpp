/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "oldroyd2d/norms.hpp"
#include "oldroyd2d/spectral_ops.hpp"

namespace oldb {

DiagnosticsRecord sample_record(const State& state, const ModelParams& params,
                                const LPPartition& lp) {
    DiagnosticsRecord r;
    r.t = state.t;
    r.l2_u = norm_l2(state.u);
    r.h1_u = norm_hs(state.u, 1.0);
    r.l2_tau = norm_l2(state.tau);
    r.h1_tau = norm_hs(state.tau, 1.0);
    r.h2_tau = norm_hs(state.tau, 2.0);
    r.linf_tau = norm_lp(state.tau, kInf);
    r.l4_tau = norm_lp(state.tau, 4.0);

    const SpectralScalarField omega = vorticity_scalar(state.u);
    r.linf_omega = norm_lp(omega, kInf);
    r.l2_omega = norm_l2(omega);

    const SpectralScalarField gamma = gamma_field(state, params);
    r.linf_gamma = norm_lp(gamma, kInf);
    r.b0inf1_gamma = besov_norm(gamma, 0.0, kInf, 1.0, lp);
    r.besov_tau_b0inf1 = besov_norm(state.tau, 0.0, kInf, 1.0, lp);

    for (double v : {r.l2_u, r.h1_u, r.l2_tau, r.h1_tau, r.h2_tau, r.linf_tau, r.l4_tau,
                     r.linf_omega, r.l2_omega, r.linf_gamma, r.b0inf1_gamma, r.besov_tau_b0inf1})
        if (!std::isfinite(v))
            throw std::runtime_error("diagnostics: non-finite norm at t = " +
                                     std::to_string(state.t));
    return r;
}

double grad_l2_from(double h1, double l2) {
    const double d = h1 * h1 - l2 * l2;
    return d > 0.0 ? std::sqrt(d) : 0.0;
}

std::optional<double> energy_identity_residual(const History& history,
                                               const ModelParams& params) {
    if (history.empty())
        throw std::invalid_argument("energy_identity_residual: empty history");
    if (!params.corotational)
        return std::nullopt;  // identity requires the alpha D(u) source absent

    const double tau0_sq = history.front().l2_tau * history.front().l2_tau;
    if (tau0_sq == 0.0)
        return 0.0;

    const double a = params.a;
    double integral = 0.0;
    double prev_g = 0.0;
    double prev_t = history.front().t;
    auto weighted = [&](const DiagnosticsRecord& r) {
        const double grad = grad_l2_from(r.h1_tau, r.l2_tau);
        return std::exp(2.0 * a * (r.t - history.front().t)) * grad * grad;
    };
    prev_g = weighted(history.front());
    for (std::size_t i = 1; i < history.size(); ++i) {
        const double g = weighted(history[i]);
        integral += 0.5 * (history[i].t - prev_t) * (g + prev_g);
        prev_t = history[i].t;
        prev_g = g;
    }

    const DiagnosticsRecord& last = history.back();
    const double lhs = std::exp(2.0 * a * (last.t - history.front().t)) * last.l2_tau *
                           last.l2_tau +
                       2.0 * params.mu * integral;
    return std::abs(lhs - tau0_sq) / tau0_sq;
}

std::optional<double> exp_decay_envelope_check(const History& history, const ModelParams& params,
                                               double p) {
    if (history.empty())
        throw std::invalid_argument("exp_decay_envelope_check: empty history");
    if (p != 2.0 && p != 4.0 && p != kInf)
        throw std::invalid_argument("exp_decay_envelope_check: p must be 2, 4 or infinity");

    auto pick = [p](const DiagnosticsRecord& r) {
        if (p == 2.0)
            return r.l2_tau;
        if (p == 4.0)
            return r.l4_tau;
        return r.linf_tau;
    };
    const double base = pick(history.front());
    if (base == 0.0)
        return std::nullopt;
    const double t0 = history.front().t;
    double worst = 0.0;
    for (const auto& r : history)
        worst = std::max(worst, pick(r) / (base * std::exp(-params.a * (r.t - t0))));
    return worst;
}

double h1_dissipation_check(const History& history) {
    if (history.size() < 2)
        throw std::invalid_argument("h1_dissipation_check: need at least 2 samples");
    auto energy = [](const DiagnosticsRecord& r) { return r.h1_u * r.h1_u + r.h1_tau * r.h1_tau; };
    auto dissipation = [](const DiagnosticsRecord& r) {
        const double gu = grad_l2_from(r.h1_u, r.l2_u);
        return gu * gu + r.h2_tau * r.h2_tau;
    };
    double worst = -kInf;
    for (std::size_t i = 1; i < history.size(); ++i) {
        const double dt = history[i].t - history[i - 1].t;
        if (!(dt > 0.0))
            throw std::invalid_argument("h1_dissipation_check: samples not increasing in t");
        const double rate = (energy(history[i]) - energy(history[i - 1])) / dt;
        const double mid = 0.5 * (dissipation(history[i]) + dissipation(history[i - 1]));
        worst = std::max(worst, rate + mid);
    }
    return worst;
}

double bkm_accumulate(const History& history) {
    if (history.size() < 2)
        throw std::invalid_argument("bkm_accumulate: need at least 2 samples");
    double acc = 0.0;
    for (std::size_t i = 1; i < history.size(); ++i) {
        const double a = history[i - 1].linf_omega * history[i - 1].linf_omega;
        const double b = history[i].linf_omega * history[i].linf_omega;
        acc += 0.5 * (history[i].t - history[i - 1].t) * (a + b);
    }
    return acc;
}

bool bkm_suspect(const History& history) {
    if (history.size() < 4)
        return false;
    const std::size_t start = history.size() - history.size() / 4;
    if (history.size() - start < 3)
        return false;
    for (std::size_t i = start; i + 1 < history.size(); ++i) {
        const double a = history[i].linf_omega * history[i].linf_omega;
        const double b = history[i + 1].linf_omega * history[i + 1].linf_omega;
        if (!(b > a))
            return false;
    }
    return true;
}

namespace {

double pair_hs(const SpectralVectorField& u, const SpectralSymTensorField& tau, double s) {
    const double a = norm_hs(u, s);
    const double b = norm_hs(tau, s);
    return std::sqrt(a * a + b * b);
}

}  // namespace

ConditionReport check_theorem_conditions(const SpectralVectorField& u0,
                                         const SpectralSymTensorField& tau0,
                                         const ModelParams& params, double c,
                                         const std::string& theorem, const LPPartition* lp,
                                         const ConditionOptions& opts) {
    if (!(c > 0.0))
        throw std::invalid_argument("check_theorem_conditions: c must be > 0");
    const DerivedConstants dc = DerivedConstants::from(params);
    const double a = params.a;
    const double mu = params.mu;

    ConditionReport rep;
    rep.theorem_id = theorem;
    rep.c_used = c;
    rep.log_constant_C = opts.log_constant_C;
    rep.sobolev_s = opts.sobolev_s;

    auto add = [&rep](const std::string& name, double lhs, double rhs) {
        rep.checks.push_back({name, lhs, rhs, lhs <= rhs});
    };

    if (theorem == "thm1_1") {
        const double grad_u_l2 = norm_hs_dot(u0, 1.0);
        const double tau_h1 = norm_hs(tau0, 1.0);

        State s0(u0.grid());
        s0.u = u0;
        s0.tau = tau0;
        const double gamma_linf = norm_lp(gamma_field(s0, params), kInf);

        const double hs = pair_hs(u0, tau0, opts.sobolev_s);
        const double log_term = std::log(opts.log_constant_C + hs * hs);
        if (!(log_term > 0.0))
            throw std::invalid_argument("check_theorem_conditions: log constant too small");

        add("grad_u0_l2 <= c*kappa", grad_u_l2, c * dc.kappa);
        add("tau0_h1 <= c*sqrt(a*mu)*kappa", tau_h1, c * std::sqrt(a * mu) * dc.kappa);
        add("gamma0_linf <= c*a*mu", gamma_linf, c * a * mu);
        add("tau0_h1^2 <= c^2*a*kappa*(mu+1)*mu/log(C+hs^2)", tau_h1 * tau_h1,
            c * c * a * dc.kappa * (mu + 1.0) * mu / log_term);
        add("tau0_h1 <= c^2*lambda", tau_h1, c * c * dc.lambda);
        return rep;
    }

    if (theorem == "thm1_2") {
        if (lp == nullptr)
            throw std::invalid_argument("check_theorem_conditions: thm1_2 needs an LP partition");
        const SpectralVectorField gu1 = gradient(u0.u1);
        const SpectralVectorField gu2 = gradient(u0.u2);
        // || (grad u0, tau0) ||_{B^0_{inf,1}} as the root-sum-square of the
        // component Besov norms
        const double b_g11 = besov_norm(gu1.u1, 0.0, kInf, 1.0, *lp);
        const double b_g12 = besov_norm(gu1.u2, 0.0, kInf, 1.0, *lp);
        const double b_g21 = besov_norm(gu2.u1, 0.0, kInf, 1.0, *lp);
        const double b_g22 = besov_norm(gu2.u2, 0.0, kInf, 1.0, *lp);
        const double b_tau = besov_norm(tau0, 0.0, kInf, 1.0, *lp);
        const double b_pair = std::sqrt(b_g11 * b_g11 + b_g12 * b_g12 + b_g21 * b_g21 +
                                        b_g22 * b_g22 + b_tau * b_tau);

        const double tau_l4 = norm_lp(tau0, 4.0);
        const double tau_l2 = norm_l2(tau0);
        const double tau_linf = norm_lp(tau0, kInf);
        const double h1_pair = pair_hs(u0, tau0, 1.0);
        const double h0 = h1_pair * h1_pair *
                          std::exp(6.0 / (a * mu) + 6.0 / (a * mu) * tau_linf * tau_linf +
                                   3.0 / (mu * mu) * tau_l2 * tau_l2);

        add("(grad_u0,tau0)_b0inf1 <= c*beta", b_pair, c * dc.beta);
        add("tau0_l4 <= c*beta*min(sqrt(mu),1)", tau_l4,
            c * dc.beta * std::min(std::sqrt(mu), 1.0));
        add("H0*(tau0_b0inf1+tau0_l4) <= c*beta*min(mu^2*beta,mu,a*mu,beta)",
            h0 * (b_tau + tau_l4),
            c * dc.beta * std::min({mu * mu * dc.beta, mu, a * mu, dc.beta}));
        return rep;
    }

    throw std::invalid_argument("check_theorem_conditions: unknown theorem '" + theorem + "'");
}

SplitTally fourier_splitting_tally(const State& state, double t, double c2) {
    if (!(c2 > 0.0))
        throw std::invalid_argument("fourier_splitting_tally: C2 must be > 0");
    const FrequencyGrid& g = *state.grid();
    const double cutoff = c2 / (1.0 + t);
    SplitTally tally;
    const double area = g.box_area();
    for (std::size_t id = 0; id < g.size(); ++id) {
        const double e =
            area * (std::norm(state.u.u1.coeff[id]) + std::norm(state.u.u2.coeff[id]) +
                    std::norm(state.tau.t11.coeff[id]) + 2.0 * std::norm(state.tau.t12.coeff[id]) +
                    std::norm(state.tau.t22.coeff[id]));
        tally.total_energy += e;
        if (g.k_sq(id) <= cutoff)
            tally.inside_energy += e;
    }
    return tally;
}

DecayFit fit_decay_exponent(const History& history, double t_lo, double t_hi) {
    if (!(t_lo < t_hi))
        throw std::invalid_argument("fit_decay_exponent: empty window");
    std::vector<double> xs, ys;
    for (const auto& r : history) {
        if (r.t < t_lo || r.t > t_hi)
            continue;
        const double h1 = std::sqrt(r.h1_u * r.h1_u + r.h1_tau * r.h1_tau);
        if (!(h1 > 0.0))
            throw std::invalid_argument("fit_decay_exponent: nonpositive norm in window");
        xs.push_back(std::log1p(r.t));
        ys.push_back(std::log(h1));
    }
    if (xs.size() < 8)
        throw std::invalid_argument("fit_decay_exponent: need >= 8 samples in window, got " +
                                    std::to_string(xs.size()));

    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_decay_exponent: degenerate window");
    DecayFit fit;
    fit.exponent = sxy / sxx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

}  // namespace oldb
