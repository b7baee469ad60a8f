/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_TEST_SUPPORT_HPP
#define OLDROYD2D_TEST_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oldroyd2d/dynamics.hpp"
#include "oldroyd2d/norms.hpp"
#include "oldroyd2d/spectral_ops.hpp"

namespace oldb::test {

inline constexpr double kPi = std::numbers::pi;

// Deterministic splitmix64 draw in [-1, 1); identical on every platform.
inline double unit_draw(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
}

// Random real scalar field with Hermitian coefficients on modes
// max(|m1|,|m2|) <= band.
inline SpectralScalarField random_scalar(GridPtr grid, std::uint64_t seed, int band) {
    const FrequencyGrid& g = *grid;
    SpectralScalarField f(grid);
    std::uint64_t rng = seed;
    for (int m1 = -band; m1 <= band; ++m1)
        for (int m2 = -band; m2 <= band; ++m2) {
            if (m1 == 0 && m2 == 0)
                continue;
            if (m1 < 0 || (m1 == 0 && m2 < 0))
                continue;
            const int i = (m1 + g.n()) % g.n();
            const int j = (m2 + g.n()) % g.n();
            const Complex v(unit_draw(rng), unit_draw(rng));
            f.coeff[g.idx(i, j)] = v;
            f.coeff[g.conj_idx(i, j)] = std::conj(v);
        }
    return f;
}

// Random divergence-free velocity built from a random streamfunction.
inline SpectralVectorField random_divfree(GridPtr grid, std::uint64_t seed, int band) {
    const SpectralScalarField psi = random_scalar(grid, seed, band);
    SpectralVectorField u;
    u.u1 = scaled(partial(psi, 1), -1.0);
    u.u2 = partial(psi, 0);
    return u;
}

inline SpectralSymTensorField random_tensor(GridPtr grid, std::uint64_t seed, int band) {
    SpectralSymTensorField tau(grid);
    tau.t11 = random_scalar(grid, seed ^ 0x11, band);
    tau.t12 = random_scalar(grid, seed ^ 0x12, band);
    tau.t22 = random_scalar(grid, seed ^ 0x22, band);
    return tau;
}

inline double rel_l2_diff(const SpectralScalarField& a, const SpectralScalarField& b) {
    const double nb = norm_l2(b);
    const double d = norm_l2(diff(a, b));
    return nb == 0.0 ? d : d / nb;
}

// ---------------------------------------------------------------------------
// Per-mode linear oracle: at a single wavenumber k, the linearized system on
// y = (u1, u2, t11, t12, t22) reads y' = A y with
//   u'_i  = [P(i k . tau)]_i - nu |k|^2 u_i
//   t'_ab = -(a + mu |k|^2) t_ab + alpha (i/2)(k_b u_a + k_a u_b)
// The matrix exponential below (scaling and squaring + Taylor) solves it to
// machine precision, independently of the time stepper.
// ---------------------------------------------------------------------------
using Mat5 = std::array<std::array<std::complex<double>, 5>, 5>;
using Vec5 = std::array<std::complex<double>, 5>;

inline Mat5 mode_matrix(double k1, double k2, const ModelParams& p) {
    const std::complex<double> I(0.0, 1.0);
    const double ksq = k1 * k1 + k2 * k2;
    Mat5 A{};
    // div tau -> (i k, tau), then Leray projection (I - k k^T / |k|^2)
    const std::complex<double> f1[3] = {I * k1, I * k2, 0.0};       // (div tau)_1 on (t11,t12,t22)
    const std::complex<double> f2[3] = {0.0, I * k1, I * k2};       // (div tau)_2
    for (int c = 0; c < 3; ++c) {
        std::complex<double> g1 = f1[c], g2 = f2[c];
        if (ksq > 0.0) {
            const std::complex<double> kd = (k1 * g1 + k2 * g2) / ksq;
            g1 -= k1 * kd;
            g2 -= k2 * kd;
        }
        A[0][2 + c] = g1;
        A[1][2 + c] = g2;
    }
    A[0][0] = -p.nu * ksq;
    A[1][1] = -p.nu * ksq;

    const double alpha = p.corotational ? 0.0 : p.alpha;
    const double lt = -(p.a + p.mu * ksq);
    // D(u)_11 = i k1 u1, D_12 = (i/2)(k2 u1 + k1 u2), D_22 = i k2 u2
    A[2][0] = alpha * I * k1;
    A[2][2] = lt;
    A[3][0] = alpha * 0.5 * I * k2;
    A[3][1] = alpha * 0.5 * I * k1;
    A[3][3] = lt;
    A[4][1] = alpha * I * k2;
    A[4][4] = lt;
    return A;
}

inline Mat5 mat_mul(const Mat5& a, const Mat5& b) {
    Mat5 c{};
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) {
            const std::complex<double> aik = a[i][k];
            if (aik == 0.0)
                continue;
            for (int j = 0; j < 5; ++j)
                c[i][j] += aik * b[k][j];
        }
    return c;
}

inline Mat5 mat_exp(Mat5 a, double t) {
    double norm = 0.0;
    for (int i = 0; i < 5; ++i) {
        double row = 0.0;
        for (int j = 0; j < 5; ++j)
            row += std::abs(a[i][j]) * std::abs(t);
        norm = std::max(norm, row);
    }
    int squarings = 0;
    double scale = t;
    while (norm > 0.25) {
        norm *= 0.5;
        scale *= 0.5;
        ++squarings;
    }
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            a[i][j] *= scale;

    Mat5 result{};
    for (int i = 0; i < 5; ++i)
        result[i][i] = 1.0;
    Mat5 term = result;
    for (int k = 1; k <= 24; ++k) {
        term = mat_mul(term, a);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                term[i][j] /= static_cast<double>(k);
                result[i][j] += term[i][j];
            }
    }
    for (int s = 0; s < squarings; ++s)
        result = mat_mul(result, result);
    return result;
}

inline Vec5 mat_apply(const Mat5& a, const Vec5& v) {
    Vec5 out{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

// Reads the 5 coefficients of a state at FFT index (i, j).
inline Vec5 mode_of(const State& s, int i, int j) {
    const std::size_t id = s.grid()->idx(i, j);
    return {s.u.u1.coeff[id], s.u.u2.coeff[id], s.tau.t11.coeff[id], s.tau.t12.coeff[id],
            s.tau.t22.coeff[id]};
}

inline void set_mode(State& s, int i, int j, const Vec5& v) {
    const std::size_t id = s.grid()->idx(i, j);
    s.u.u1.coeff[id] = v[0];
    s.u.u2.coeff[id] = v[1];
    s.tau.t11.coeff[id] = v[2];
    s.tau.t12.coeff[id] = v[3];
    s.tau.t22.coeff[id] = v[4];
}

}  // namespace oldb::test

#endif
