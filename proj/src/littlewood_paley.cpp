/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

#include "oldroyd2d/norms.hpp"

namespace oldb {

namespace {

// C^inf bump machinery: psi(t) = exp(-1/t) on t > 0.
double psi(double t) {
    return t > 0.0 ? std::exp(-1.0 / t) : 0.0;
}

// Smooth descent from 1 at s <= 0 to 0 at s >= 1.
double smooth_step_down(double s) {
    if (s <= 0.0)
        return 1.0;
    if (s >= 1.0)
        return 0.0;
    const double a = psi(1.0 - s);
    return a / (a + psi(s));
}

void check_besov_args(double p, double r) {
    if (p != 2.0 && p != kInf)
        throw std::invalid_argument("besov_norm: p must be 2 or infinity");
    if (r != 1.0 && r != 2.0 && r != kInf)
        throw std::invalid_argument("besov_norm: r must be 1, 2 or infinity");
}

template <typename Field>
double besov_impl(const Field& f, double s, double p, double r, const LPPartition& part) {
    check_besov_args(p, r);
    double acc = 0.0;
    double worst = 0.0;
    for (int j = -1; j <= part.j_max(); ++j) {
        const double bj = std::pow(2.0, j * s) * norm_lp(block(f, j, part), p);
        if (r == 1.0)
            acc += bj;
        else if (r == 2.0)
            acc += bj * bj;
        else
            worst = std::max(worst, bj);
    }
    if (r == 1.0)
        return acc;
    if (r == 2.0)
        return std::sqrt(acc);
    return worst;
}

void apply_multiplier(SpectralScalarField& f, const std::vector<double>& m) {
    for (std::size_t id = 0; id < f.coeff.size(); ++id)
        f.coeff[id] *= m[id];
}

}  // namespace

double lp_chi(double r) {
    // 1 on r <= 1, 0 on r >= 4/3, glued with the exp(-1/t) transition.
    return smooth_step_down((r - 1.0) * 3.0);
}

double lp_phi(double r) {
    return lp_chi(0.5 * r) - lp_chi(r);
}

LPPartition LPPartition::build(GridPtr grid) {
    LPPartition part;
    part.grid_ = std::move(grid);
    const FrequencyGrid& g = *part.grid_;

    if (g.k_max() <= 1.0)
        throw std::runtime_error("grid underresolved for LP");

    part.j_max_ = static_cast<int>(std::ceil(std::log2(g.k_max()))) + 1;

    // chi_level[j][id] = chi(2^{-j} |k|); phi_j = chi_{j+1} - chi_j telescopes
    // exactly because the halved radii are computed bitwise identically.
    const int levels = part.j_max_ + 2;
    std::vector<std::vector<double>> chi_level(levels);
    for (int j = 0; j < levels; ++j)
        chi_level[j].resize(g.size());
    for (std::size_t id = 0; id < g.size(); ++id) {
        const double r = std::sqrt(g.k_sq(id));
        for (int j = 0; j < levels; ++j)
            chi_level[j][id] = lp_chi(std::ldexp(r, -j));
    }

    part.chi_ = chi_level[0];
    part.phi_by_j_.resize(part.j_max_ + 1);
    for (int j = 0; j <= part.j_max_; ++j) {
        part.phi_by_j_[j].resize(g.size());
        for (std::size_t id = 0; id < g.size(); ++id)
            part.phi_by_j_[j][id] = chi_level[j + 1][id] - chi_level[j][id];
    }
    return part;
}

const std::vector<double>& LPPartition::multiplier(int j) const {
    if (j == -1)
        return chi_;
    return phi_by_j_.at(j);
}

SpectralScalarField block(const SpectralScalarField& f, int j, const LPPartition& part) {
    if (j < -1 || j > part.j_max())
        throw std::invalid_argument("block: j out of range [-1, j_max]");
    if (!f.grid->same(*part.grid()))
        throw std::invalid_argument("block: field and partition grids differ");
    SpectralScalarField out = f;
    apply_multiplier(out, part.multiplier(j));
    return out;
}

SpectralVectorField block(const SpectralVectorField& u, int j, const LPPartition& part) {
    SpectralVectorField out;
    out.u1 = block(u.u1, j, part);
    out.u2 = block(u.u2, j, part);
    return out;
}

SpectralSymTensorField block(const SpectralSymTensorField& tau, int j, const LPPartition& part) {
    SpectralSymTensorField out;
    out.t11 = block(tau.t11, j, part);
    out.t12 = block(tau.t12, j, part);
    out.t22 = block(tau.t22, j, part);
    return out;
}

double besov_norm(const SpectralScalarField& f, double s, double p, double r,
                  const LPPartition& part) {
    return besov_impl(f, s, p, r, part);
}

double besov_norm(const SpectralVectorField& u, double s, double p, double r,
                  const LPPartition& part) {
    return besov_impl(u, s, p, r, part);
}

double besov_norm(const SpectralSymTensorField& tau, double s, double p, double r,
                  const LPPartition& part) {
    return besov_impl(tau, s, p, r, part);
}

std::pair<double, double> log_interpolation_check(const SpectralScalarField& f, double s,
                                                  const LPPartition& part) {
    if (!(s > 1.0))
        throw std::invalid_argument("log_interpolation_check: s must exceed 1");
    const double lhs = besov_norm(f, 0.0, kInf, 1.0, part);
    const double b_inf_inf = besov_norm(f, 0.0, kInf, kInf, part);
    const double rhs_shape = b_inf_inf * std::log(std::exp(1.0) + norm_hs(f, s));
    return {lhs, rhs_shape};
}

}  // namespace oldb
