/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace oldb {

namespace {

double abs2(const Complex& c) {
    return c.real() * c.real() + c.imag() * c.imag();
}

// sum_k w(k) |fhat|^2 with a per-mode multiplier, times box area.
template <typename Weight>
double weighted_l2_sq(const SpectralScalarField& f, Weight w) {
    const FrequencyGrid& g = *f.grid;
    double s = 0.0;
    for (std::size_t id = 0; id < g.size(); ++id)
        s += w(g.k_sq(id)) * abs2(f.coeff[id]);
    return s * g.box_area();
}

double lp_from_samples(const std::vector<double>& mag, double p, const FrequencyGrid& g) {
    if (p == kInf) {
        double m = 0.0;
        for (double v : mag)
            m = std::max(m, v);
        return m;
    }
    // collocation quadrature with cell weight (L/n)^2
    double s = 0.0;
    for (double v : mag)
        s += std::pow(v, p);
    return std::pow(s * g.box_area() / static_cast<double>(g.size()), 1.0 / p);
}

void check_p(double p) {
    if (p != 2.0 && p != 4.0 && p != kInf)
        throw std::invalid_argument("norm_lp: p must be 2, 4 or infinity");
}

}  // namespace

double norm_l2(const SpectralScalarField& f) {
    return std::sqrt(weighted_l2_sq(f, [](double) { return 1.0; }));
}

double norm_l2(const SpectralVectorField& u) {
    return std::sqrt(weighted_l2_sq(u.u1, [](double) { return 1.0; }) +
                     weighted_l2_sq(u.u2, [](double) { return 1.0; }));
}

double norm_l2(const SpectralSymTensorField& tau) {
    auto one = [](double) { return 1.0; };
    return std::sqrt(weighted_l2_sq(tau.t11, one) + 2.0 * weighted_l2_sq(tau.t12, one) +
                     weighted_l2_sq(tau.t22, one));
}

std::vector<double> magnitude_physical(const SpectralScalarField& f) {
    std::vector<double> m = f.physical();
    for (double& v : m)
        v = std::abs(v);
    return m;
}

std::vector<double> magnitude_physical(const SpectralVectorField& u) {
    std::vector<double> a = u.u1.physical();
    const std::vector<double> b = u.u2.physical();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = std::hypot(a[i], b[i]);
    return a;
}

std::vector<double> magnitude_physical(const SpectralSymTensorField& tau) {
    std::vector<double> a = tau.t11.physical();
    const std::vector<double> b = tau.t12.physical();
    const std::vector<double> c = tau.t22.physical();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = std::sqrt(a[i] * a[i] + 2.0 * b[i] * b[i] + c[i] * c[i]);
    return a;
}

double norm_lp(const SpectralScalarField& f, double p) {
    check_p(p);
    if (p == 2.0)
        return norm_l2(f);
    return lp_from_samples(magnitude_physical(f), p, *f.grid);
}

double norm_lp(const SpectralVectorField& u, double p) {
    check_p(p);
    if (p == 2.0)
        return norm_l2(u);
    return lp_from_samples(magnitude_physical(u), p, *u.grid());
}

double norm_lp(const SpectralSymTensorField& tau, double p) {
    check_p(p);
    if (p == 2.0)
        return norm_l2(tau);
    return lp_from_samples(magnitude_physical(tau), p, *tau.grid());
}

double norm_hs(const SpectralScalarField& f, double s) {
    if (s < 0.0)
        throw std::invalid_argument("norm_hs: s must be >= 0");
    // multiplier (1+|k|^2)^{s/2} on coefficients, so weight (1+|k|^2)^s here
    return std::sqrt(weighted_l2_sq(f, [s](double ksq) { return std::pow(1.0 + ksq, s); }));
}

double norm_hs(const SpectralVectorField& u, double s) {
    const double a = norm_hs(u.u1, s);
    const double b = norm_hs(u.u2, s);
    return std::sqrt(a * a + b * b);
}

double norm_hs(const SpectralSymTensorField& tau, double s) {
    const double a = norm_hs(tau.t11, s);
    const double b = norm_hs(tau.t12, s);
    const double c = norm_hs(tau.t22, s);
    return std::sqrt(a * a + 2.0 * b * b + c * c);
}

double norm_hs_dot(const SpectralScalarField& f, double s) {
    return std::sqrt(
        weighted_l2_sq(f, [s](double ksq) { return ksq == 0.0 ? 0.0 : std::pow(ksq, s); }));
}

double norm_hs_dot(const SpectralVectorField& u, double s) {
    const double a = norm_hs_dot(u.u1, s);
    const double b = norm_hs_dot(u.u2, s);
    return std::sqrt(a * a + b * b);
}

double norm_hs_dot(const SpectralSymTensorField& tau, double s) {
    const double a = norm_hs_dot(tau.t11, s);
    const double b = norm_hs_dot(tau.t12, s);
    const double c = norm_hs_dot(tau.t22, s);
    return std::sqrt(a * a + 2.0 * b * b + c * c);
}

double norm_l2_collocation(const SpectralScalarField& f) {
    std::vector<double> phys = f.physical();
    double s = 0.0;
    for (double v : phys)
        s += v * v;
    return std::sqrt(s * f.grid->box_area() / static_cast<double>(f.grid->size()));
}

}  // namespace oldb
