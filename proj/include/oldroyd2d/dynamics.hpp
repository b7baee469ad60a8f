/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_DYNAMICS_HPP
#define OLDROYD2D_DYNAMICS_HPP

#include <stdexcept>
#include <string>

#include "oldroyd2d/field.hpp"
#include "oldroyd2d/fields_ops.hpp"
#include "oldroyd2d/model.hpp"

namespace oldb {

struct State {
    double t = 0.0;
    SpectralVectorField u;
    SpectralSymTensorField tau;

    State() = default;
    explicit State(GridPtr g) : u(g), tau(g) {}
    const GridPtr& grid() const { return u.grid(); }
};

struct StepperConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    double cfl_safety = 0.9;  // in (0, 1]; dt <= cfl_safety * dx / max(1, |u|_inf)
    // scheme is fixed: integrating-factor RK4 with exact per-mode treatment
    // of the diagonal linear part (-a - mu|k|^2 for tau, -nu|k|^2 for u).
};

struct CflError : std::runtime_error {
    double admissible_dt;
    CflError(double adm, const std::string& msg) : std::runtime_error(msg), admissible_dt(adm) {}
};

struct Flow {
    SpectralVectorField du;
    SpectralSymTensorField dtau;
};

// Full right-hand side of the model:
//   du   = P(-u.grad u + div tau) + nu Lap u
//   dtau = -u.grad tau - a tau - Q(grad u, tau) + alpha D(u) + mu Lap tau
// with alpha = b = 0 in the co-rotational case and the pressure eliminated
// by the Leray projection P. Advective and Q products are evaluated in
// physical space and dealiased.
Flow rhs(const State& state, const ModelParams& params);

// RHS minus the diagonal stiff part; this is what the integrating factor
// scheme treats explicitly.
Flow rhs_explicit(const State& state, const ModelParams& params);

// Advective CFL bound cfl_safety * dx / max(1, |u|_inf).
double admissible_dt(const State& state, double cfl_safety);

// One integrating-factor RK4 step of size cfg.dt. Throws CflError carrying
// the admissible step when the advective bound is violated. The velocity is
// re-projected after the step.
State step(const State& state, const ModelParams& params, const StepperConfig& cfg);

// Unchecked single step of arbitrary (possibly negative) size; used by the
// residual probes and checkpoint-free restarts of the acceptance studies.
State step_once(const State& state, const ModelParams& params, double dt);

// Structural quantity Gamma = mu*omega - R tau with omega = d1 u2 - d2 u1
// the full scalar curl. (With the stored half-curl convention for Omega this
// is mu*2*Omega - R tau; the full curl is what closes the Gamma evolution
// equation d_t Gamma + u.grad Gamma = a R tau + R Q + [R, u.grad] tau.)
SpectralScalarField gamma_field(const State& state, const ModelParams& params);

// L^2 norm of d_t Gamma + u.grad Gamma - F1 - F2 - F3 with F1 = a R tau,
// F2 = R Q(Omega, tau), F3 = R(u.grad tau) - u.grad(R tau), the time
// derivative formed by a centered probe of size dt_probe. O(dt_probe^2) +
// scheme error. Co-rotational models only.
double gamma_residual(const State& state, const ModelParams& params, double dt_probe);

// Same residual with d_t Gamma evaluated directly from the semi-discrete
// right-hand side (the dt_probe -> 0 limit); exact up to rounding.
double gamma_residual_instant(const State& state, const ModelParams& params);

}  // namespace oldb

#endif
