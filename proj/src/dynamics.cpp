/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/dynamics.hpp"

#include <cmath>

#include "oldroyd2d/fft2d.hpp"
#include "oldroyd2d/norms.hpp"
#include "oldroyd2d/spectral_ops.hpp"

namespace oldb {

namespace {

// Exponential integrating factors for half and full steps, per mode.
struct StiffFactors {
    std::vector<double> u_half, u_full;
    std::vector<double> tau_half, tau_full;

    StiffFactors(const FrequencyGrid& g, const ModelParams& p, double dt) {
        const std::size_t total = g.size();
        u_half.resize(total);
        u_full.resize(total);
        tau_half.resize(total);
        tau_full.resize(total);
        for (std::size_t id = 0; id < total; ++id) {
            const double ksq = g.k_sq(id);
            const double eu = std::exp(-0.5 * dt * p.nu * ksq);
            const double et = std::exp(-0.5 * dt * (p.a + p.mu * ksq));
            u_half[id] = eu;
            u_full[id] = eu * eu;
            tau_half[id] = et;
            tau_full[id] = et * et;
        }
    }
};

void scale_by(SpectralScalarField& f, const std::vector<double>& m) {
    for (std::size_t id = 0; id < f.coeff.size(); ++id)
        f.coeff[id] *= m[id];
}

void scale_u(SpectralVectorField& u, const std::vector<double>& m) {
    scale_by(u.u1, m);
    scale_by(u.u2, m);
}

void scale_tau(SpectralSymTensorField& tau, const std::vector<double>& m) {
    scale_by(tau.t11, m);
    scale_by(tau.t12, m);
    scale_by(tau.t22, m);
}

}  // namespace

Flow rhs_explicit(const State& state, const ModelParams& params) {
    const GridPtr grid = state.grid();
    const FrequencyGrid& g = *grid;
    Fft2D& fft = fft_for(g.n());

    // Physical-space ingredients shared by all nonlinear terms.
    std::vector<double> u1, u2;
    fft.to_physical(state.u.u1.coeff, u1);
    fft.to_physical(state.u.u2.coeff, u2);

    const SpectralScalarField d1u1_s = partial(state.u.u1, 0);
    const SpectralScalarField d2u1_s = partial(state.u.u1, 1);
    const SpectralScalarField d1u2_s = partial(state.u.u2, 0);
    const SpectralScalarField d2u2_s = partial(state.u.u2, 1);
    std::vector<double> d1u1, d2u1, d1u2, d2u2;
    fft.to_physical(d1u1_s.coeff, d1u1);
    fft.to_physical(d2u1_s.coeff, d2u1);
    fft.to_physical(d1u2_s.coeff, d1u2);
    fft.to_physical(d2u2_s.coeff, d2u2);

    std::vector<double> t11, t12, t22;
    fft.to_physical(state.tau.t11.coeff, t11);
    fft.to_physical(state.tau.t12.coeff, t12);
    fft.to_physical(state.tau.t22.coeff, t22);

    const std::size_t total = g.size();
    std::vector<double> work1(total), work2(total), work3(total);

    // u.grad u
    for (std::size_t i = 0; i < total; ++i) {
        work1[i] = u1[i] * d1u1[i] + u2[i] * d2u1[i];
        work2[i] = u1[i] * d1u2[i] + u2[i] * d2u2[i];
    }
    SpectralVectorField conv_u(grid);
    fft.from_physical(work1, conv_u.u1.coeff);
    fft.from_physical(work2, conv_u.u2.coeff);
    dealias_inplace(conv_u);

    // u.grad tau, component by component
    SpectralSymTensorField conv_tau(grid);
    {
        std::vector<double> dta, dtb;
        auto advect_component = [&](const SpectralScalarField& comp, SpectralScalarField& out) {
            fft.to_physical(partial(comp, 0).coeff, dta);
            fft.to_physical(partial(comp, 1).coeff, dtb);
            for (std::size_t i = 0; i < total; ++i)
                work3[i] = u1[i] * dta[i] + u2[i] * dtb[i];
            fft.from_physical(work3, out.coeff);
        };
        advect_component(state.tau.t11, conv_tau.t11);
        advect_component(state.tau.t12, conv_tau.t12);
        advect_component(state.tau.t22, conv_tau.t22);
        dealias_inplace(conv_tau);
    }

    // Q(grad u, tau) from the velocity-gradient samples already in hand
    const double b = params.corotational ? 0.0 : params.b;
    SpectralSymTensorField q(grid);
    {
        std::vector<double> q11(total), q12(total), q22(total);
        for (std::size_t i = 0; i < total; ++i) {
            const double w = 0.5 * (d1u2[i] - d2u1[i]);
            const double e11 = d1u1[i];
            const double e12 = 0.5 * (d2u1[i] + d1u2[i]);
            const double e22 = d2u2[i];
            q11[i] = 2.0 * w * t12[i] + b * 2.0 * (e11 * t11[i] + e12 * t12[i]);
            q12[i] = w * (t22[i] - t11[i]) +
                     b * (e11 * t12[i] + e12 * t22[i] + t11[i] * e12 + t12[i] * e22);
            q22[i] = -2.0 * w * t12[i] + b * 2.0 * (e12 * t12[i] + e22 * t22[i]);
        }
        fft.from_physical(q11, q.t11.coeff);
        fft.from_physical(q12, q.t12.coeff);
        fft.from_physical(q22, q.t22.coeff);
        dealias_inplace(q);
    }

    Flow out;
    // du = P(-u.grad u + div tau)
    SpectralVectorField force = divergence(state.tau);
    axpy(force, -1.0, conv_u);
    out.du = leray_project(force);

    // dtau = -u.grad tau - Q + alpha D(u)
    out.dtau = SpectralSymTensorField(grid);
    axpy(out.dtau, -1.0, conv_tau);
    axpy(out.dtau, -1.0, q);
    if (!params.corotational && params.alpha != 0.0) {
        SpectralSymTensorField defo = deformation(state.u);
        axpy(out.dtau, params.alpha, defo);
    }
    return out;
}

Flow rhs(const State& state, const ModelParams& params) {
    Flow f = rhs_explicit(state, params);
    const FrequencyGrid& g = *state.grid();
    for (std::size_t id = 0; id < g.size(); ++id) {
        const double ksq = g.k_sq(id);
        f.du.u1.coeff[id] += -params.nu * ksq * state.u.u1.coeff[id];
        f.du.u2.coeff[id] += -params.nu * ksq * state.u.u2.coeff[id];
        const double lt = -(params.a + params.mu * ksq);
        f.dtau.t11.coeff[id] += lt * state.tau.t11.coeff[id];
        f.dtau.t12.coeff[id] += lt * state.tau.t12.coeff[id];
        f.dtau.t22.coeff[id] += lt * state.tau.t22.coeff[id];
    }
    return f;
}

double admissible_dt(const State& state, double cfl_safety) {
    const std::vector<double> umag = magnitude_physical(state.u);
    double umax = 0.0;
    for (double v : umag)
        umax = std::max(umax, v);
    return cfl_safety * state.grid()->dx() / std::max(1.0, umax);
}

State step_once(const State& state, const ModelParams& params, double dt) {
    const GridPtr grid = state.grid();
    const StiffFactors ef(*grid, params, dt);

    const Flow k1 = rhs_explicit(state, params);

    State s2(grid);
    s2.t = state.t + 0.5 * dt;
    s2.u = state.u;
    axpy(s2.u, 0.5 * dt, k1.du);
    scale_u(s2.u, ef.u_half);
    s2.tau = state.tau;
    axpy(s2.tau, 0.5 * dt, k1.dtau);
    scale_tau(s2.tau, ef.tau_half);
    const Flow k2 = rhs_explicit(s2, params);

    State s3(grid);
    s3.t = s2.t;
    s3.u = state.u;
    scale_u(s3.u, ef.u_half);
    axpy(s3.u, 0.5 * dt, k2.du);
    s3.tau = state.tau;
    scale_tau(s3.tau, ef.tau_half);
    axpy(s3.tau, 0.5 * dt, k2.dtau);
    const Flow k3 = rhs_explicit(s3, params);

    State s4(grid);
    s4.t = state.t + dt;
    s4.u = state.u;
    scale_u(s4.u, ef.u_full);
    SpectralVectorField k3u = k3.du;
    scale_u(k3u, ef.u_half);
    axpy(s4.u, dt, k3u);
    s4.tau = state.tau;
    scale_tau(s4.tau, ef.tau_full);
    SpectralSymTensorField k3t = k3.dtau;
    scale_tau(k3t, ef.tau_half);
    axpy(s4.tau, dt, k3t);
    const Flow k4 = rhs_explicit(s4, params);

    // y+ = E2 y + dt/6 (E2 k1 + 2 E (k2 + k3) + k4)
    State next(grid);
    next.t = state.t + dt;

    next.u = state.u;
    scale_u(next.u, ef.u_full);
    SpectralVectorField acc_u = k1.du;
    scale_u(acc_u, ef.u_full);
    SpectralVectorField mid_u = k2.du;
    axpy(mid_u, 1.0, k3.du);
    scale_u(mid_u, ef.u_half);
    axpy(acc_u, 2.0, mid_u);
    axpy(acc_u, 1.0, k4.du);
    axpy(next.u, dt / 6.0, acc_u);

    next.tau = state.tau;
    scale_tau(next.tau, ef.tau_full);
    SpectralSymTensorField acc_t = k1.dtau;
    scale_tau(acc_t, ef.tau_full);
    SpectralSymTensorField mid_t = k2.dtau;
    axpy(mid_t, 1.0, k3.dtau);
    scale_tau(mid_t, ef.tau_half);
    axpy(acc_t, 2.0, mid_t);
    axpy(acc_t, 1.0, k4.dtau);
    axpy(next.tau, dt / 6.0, acc_t);

    next.u = leray_project(next.u);
    return next;
}

State step(const State& state, const ModelParams& params, const StepperConfig& cfg) {
    if (!(cfg.dt > 0.0))
        throw std::invalid_argument("step: dt must be > 0");
    if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0))
        throw std::invalid_argument("step: cfl_safety must lie in (0, 1]");
    const double adm = admissible_dt(state, cfg.cfl_safety);
    if (cfg.dt > adm)
        throw CflError(adm, "step: CFL violation, admissible dt = " + std::to_string(adm));
    return step_once(state, params, cfg.dt);
}

SpectralScalarField gamma_field(const State& state, const ModelParams& params) {
    SpectralScalarField gamma = curl_scalar(state.u);
    for (auto& c : gamma.coeff)
        c *= params.mu;
    axpy(gamma, -1.0, riesz_R(state.tau));
    return gamma;
}

namespace {

// F1 + F2 + F3 - u.grad Gamma, the exact semi-discrete d_t Gamma.
SpectralScalarField gamma_rhs_terms(const State& state, const ModelParams& params,
                                    SpectralScalarField& advect_out) {
    const SpectralScalarField gamma = gamma_field(state, params);
    advect_out = transport_term(state.u, gamma);

    SpectralScalarField f1 = riesz_R(state.tau);
    for (auto& c : f1.coeff)
        c *= params.a;
    const SpectralScalarField f2 = riesz_R(q_bilinear(state.u, state.tau, params));
    SpectralScalarField f3 = riesz_R(transport_term(state.u, state.tau));
    axpy(f3, -1.0, transport_term(state.u, riesz_R(state.tau)));

    SpectralScalarField sum_f = f1;
    axpy(sum_f, 1.0, f2);
    axpy(sum_f, 1.0, f3);
    return sum_f;
}

}  // namespace

double gamma_residual(const State& state, const ModelParams& params, double dt_probe) {
    if (!params.corotational)
        throw std::invalid_argument("gamma_residual: co-rotational model required");
    if (!(dt_probe > 0.0))
        throw std::invalid_argument("gamma_residual: dt_probe must be > 0");

    const State fwd = step_once(state, params, dt_probe);
    const State bwd = step_once(state, params, -dt_probe);
    SpectralScalarField dgamma = gamma_field(fwd, params);
    axpy(dgamma, -1.0, gamma_field(bwd, params));
    for (auto& c : dgamma.coeff)
        c /= 2.0 * dt_probe;

    SpectralScalarField advect;
    const SpectralScalarField sum_f = gamma_rhs_terms(state, params, advect);

    SpectralScalarField resid = dgamma;
    axpy(resid, 1.0, advect);
    axpy(resid, -1.0, sum_f);
    return norm_l2(resid);
}

double gamma_residual_instant(const State& state, const ModelParams& params) {
    if (!params.corotational)
        throw std::invalid_argument("gamma_residual: co-rotational model required");

    const Flow f = rhs(state, params);
    State rate(state.grid());
    rate.u = f.du;
    rate.tau = f.dtau;
    const SpectralScalarField dgamma = gamma_field(rate, params);

    SpectralScalarField advect;
    const SpectralScalarField sum_f = gamma_rhs_terms(state, params, advect);

    SpectralScalarField resid = dgamma;
    axpy(resid, 1.0, advect);
    axpy(resid, -1.0, sum_f);
    return norm_l2(resid);
}

}  // namespace oldb
