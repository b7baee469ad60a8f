/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/init_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oldroyd2d/littlewood_paley.hpp"
#include "oldroyd2d/norms.hpp"
#include "oldroyd2d/spectral_ops.hpp"

namespace oldb {

namespace {

void require_localized(double eps, const FrequencyGrid& g) {
    const double half = 0.5 * eps * g.box_len();
    if (std::exp(-half * half) > 1e-12)
        throw std::invalid_argument("init: data not localized (need e^{-(eps L/2)^2} <= 1e-12)");
}

State finalize(State s) {
    s.u = leray_project(s.u);
    dealias_inplace(s.u);
    dealias_inplace(s.tau);
    return s;
}

// ||phi||_{L^2}^2 over R^2 for the radial annulus profile, by Simpson rule.
double phi_profile_l2_sq() {
    const double r_lo = 0.5, r_hi = 3.0;
    const int m = 4096;
    const double h = (r_hi - r_lo) / m;
    double s = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double r = r_lo + i * h;
        const double f = lp_phi(r) * lp_phi(r) * r;
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        s += w * f;
    }
    return 2.0 * std::numbers::pi * s * h / 3.0;
}

// Deterministic uniform double in [-1, 1) from a 64-bit generator state.
double unit_draw(std::uint64_t& x) {
    // splitmix64 step; avoids distribution classes whose output is
    // implementation-defined
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return 2.0 * (static_cast<double>(z >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

State remark12_family(double A, double eps, GridPtr grid) {
    if (!(A > 0.0))
        throw std::invalid_argument("remark12: amplitude A must be > 0");
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("remark12: eps must lie in (0, 1]");
    const FrequencyGrid& g = *grid;
    require_localized(eps, g);

    const int n = g.n();
    const double dx = g.dx();
    const double xc = 0.5 * g.box_len();
    std::vector<double> u1(g.size()), u2(g.size()), tr(g.size());
    for (int i = 0; i < n; ++i) {
        const double y1 = eps * (i * dx - xc);
        for (int j = 0; j < n; ++j) {
            const double y2 = eps * (j * dx - xc);
            const double gauss = std::exp(-(y1 * y1 + y2 * y2));
            const std::size_t id = g.idx(i, j);
            u1[id] = eps * A * y2 * gauss;
            u2[id] = -eps * A * y1 * gauss;
            tr[id] = eps * eps * A * gauss;
        }
    }

    State s(grid);
    s.u.u1 = SpectralScalarField::from_physical(grid, u1);
    s.u.u2 = SpectralScalarField::from_physical(grid, u2);
    s.tau.t11 = SpectralScalarField::from_physical(grid, tr);
    s.tau.t22 = s.tau.t11;
    return finalize(std::move(s));
}

int max_resolved_block(const FrequencyGrid& g) {
    // annulus N must fit inside the square dealias mask: (8/3) 2^N <= k_edge
    const double k_edge = g.k_min_nonzero() * (g.n() / 3);
    const double limit = 3.0 * k_edge / 8.0;
    if (limit < 2.0)
        return 0;
    return static_cast<int>(std::floor(std::log2(limit)));
}

int remark15_block_count(double eps, const FrequencyGrid&) {
    static const double phi_l2_sq = phi_profile_l2_sq();
    const double target = std::pow(eps, -11.0) / phi_l2_sq;
    double harmonic = 0.0;
    int best_n = 1;
    double best_gap = std::abs(1.0 - target);
    for (int k = 1; k <= 64; ++k) {
        harmonic += 1.0 / k;
        if (std::abs(harmonic - target) <= best_gap) {
            best_gap = std::abs(harmonic - target);
            best_n = k;
        }
        if (harmonic > target)
            break;
    }
    return best_n;
}

State remark15_family(double eps, GridPtr grid) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("remark15: eps must lie in (0, 1)");
    const FrequencyGrid& g = *grid;
    require_localized(eps, g);

    const int n_blocks = remark15_block_count(eps, g);
    const int n_max = max_resolved_block(g);
    if (n_blocks > n_max)
        throw std::invalid_argument("remark15: unresolvable N = " + std::to_string(n_blocks) +
                                    " (grid resolves blocks up to " + std::to_string(n_max) +
                                    ")");

    // h built directly in frequency space from the partition profile
    SpectralScalarField h(grid);
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
        const double k1 = g.nyquist(i) ? 0.0 : g.k(i);
        for (int j = 0; j < n; ++j) {
            const std::size_t id = g.idx(i, j);
            if (g.nyquist(i) || g.nyquist(j))
                continue;
            const double r = std::sqrt(g.k_sq(id));
            const double sgn = k1 > 0.0 ? 1.0 : (k1 < 0.0 ? -1.0 : 0.0);
            Complex v(0.0, 0.0);
            for (int k = 1; k <= n_blocks; ++k) {
                const double w = lp_phi(std::ldexp(r, -k));
                if (w != 0.0)
                    v += Complex(0.0, sgn * w) / (std::pow(2.0, 1.5 * k) * std::sqrt(double(k)));
            }
            h.coeff[id] = v;
        }
    }

    const double scale10 = std::pow(eps, 10.0);
    State s(grid);
    s.tau.t11 = scaled(h, scale10);
    s.tau.t22 = s.tau.t11;

    // velocity: eps^{-1/2} vortex profile at scale eps
    const double dx = g.dx();
    const double xc = 0.5 * g.box_len();
    std::vector<double> u1(g.size()), u2(g.size());
    const double amp = std::pow(eps, -0.5);
    for (int i = 0; i < n; ++i) {
        const double y1 = eps * (i * dx - xc);
        for (int j = 0; j < n; ++j) {
            const double y2 = eps * (j * dx - xc);
            const double gauss = std::exp(-(y1 * y1 + y2 * y2));
            const std::size_t id = g.idx(i, j);
            u1[id] = amp * y2 * gauss;
            u2[id] = -amp * y1 * gauss;
        }
    }
    s.u.u1 = SpectralScalarField::from_physical(grid, u1);
    s.u.u2 = SpectralScalarField::from_physical(grid, u2);
    return finalize(std::move(s));
}

State taylor_green(GridPtr grid) {
    const FrequencyGrid& g = *grid;
    const double ratio = g.box_len() / (2.0 * std::numbers::pi);
    if (std::abs(ratio - std::round(ratio)) > 1e-12 || std::round(ratio) < 1.0)
        throw std::invalid_argument("taylor_green: box_len must be a multiple of 2*pi");

    const int n = g.n();
    const double dx = g.dx();
    std::vector<double> u1(g.size()), u2(g.size());
    for (int i = 0; i < n; ++i) {
        const double x1 = i * dx;
        for (int j = 0; j < n; ++j) {
            const double x2 = j * dx;
            const std::size_t id = g.idx(i, j);
            u1[id] = std::sin(x1) * std::cos(x2);
            u2[id] = -std::cos(x1) * std::sin(x2);
        }
    }
    State s(grid);
    s.u.u1 = SpectralScalarField::from_physical(grid, u1);
    s.u.u2 = SpectralScalarField::from_physical(grid, u2);
    return finalize(std::move(s));
}

State zero_state(GridPtr grid) {
    return State(std::move(grid));
}

State random_small(GridPtr grid, std::uint64_t seed, double amplitude) {
    if (!(amplitude > 0.0))
        throw std::invalid_argument("random_small: amplitude must be > 0");
    const FrequencyGrid& g = *grid;
    const int band = 4;
    if (3 * band > g.n())
        throw std::invalid_argument("random_small: grid too small for the mode band");

    std::uint64_t rng = seed ^ 0x6f1d3b9a2c85e7ULL;

    SpectralScalarField psi(grid);
    SpectralSymTensorField tau(grid);
    auto set_pair = [&](SpectralScalarField& f, int i, int j, const Complex& v) {
        f.coeff[g.idx(i, j)] = v;
        f.coeff[g.conj_idx(i, j)] = std::conj(v);
    };
    // fixed lattice order so the draw sequence is reproducible
    for (int m1 = -band; m1 <= band; ++m1) {
        for (int m2 = -band; m2 <= band; ++m2) {
            if (m1 == 0 && m2 == 0)
                continue;
            // draw each Hermitian pair once, from its lexicographically
            // positive representative
            if (m1 < 0 || (m1 == 0 && m2 < 0))
                continue;
            const int i = (m1 + g.n()) % g.n();
            const int j = (m2 + g.n()) % g.n();
            set_pair(psi, i, j, Complex(unit_draw(rng), unit_draw(rng)));
            set_pair(tau.t11, i, j, Complex(unit_draw(rng), unit_draw(rng)));
            set_pair(tau.t12, i, j, Complex(unit_draw(rng), unit_draw(rng)));
            set_pair(tau.t22, i, j, Complex(unit_draw(rng), unit_draw(rng)));
        }
    }

    State s(grid);
    // u = perp-gradient of the streamfunction: exactly divergence-free
    s.u.u1 = scaled(partial(psi, 1), -1.0);
    s.u.u2 = partial(psi, 0);
    s.tau = tau;

    const double hu = norm_hs(s.u, 1.0);
    const double ht = norm_hs(s.tau, 1.0);
    const double current = std::sqrt(hu * hu + ht * ht);
    if (current == 0.0)
        throw std::runtime_error("random_small: degenerate draw");
    const double scale = amplitude / current;
    for (auto* f : {&s.u.u1, &s.u.u2, &s.tau.t11, &s.tau.t12, &s.tau.t22})
        for (auto& c : f->coeff)
            c *= scale;
    return s;
}

}  // namespace oldb
