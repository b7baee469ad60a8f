/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/spectral_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace oldb {

namespace {
constexpr Complex kI(0.0, 1.0);
}

SpectralScalarField partial(const SpectralScalarField& f, int axis) {
    if (axis != 0 && axis != 1)
        throw std::invalid_argument("partial: axis must be 0 or 1");
    const FrequencyGrid& g = *f.grid;
    SpectralScalarField out(f.grid);
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            const int mi = axis == 0 ? i : j;
            if (g.nyquist(mi)) {
                out.coeff[g.idx(i, j)] = 0.0;
                continue;
            }
            const double kk = g.k(mi);
            out.coeff[g.idx(i, j)] = kI * kk * f.coeff[g.idx(i, j)];
        }
    }
    return out;
}

SpectralVectorField gradient(const SpectralScalarField& f) {
    SpectralVectorField out;
    out.u1 = partial(f, 0);
    out.u2 = partial(f, 1);
    return out;
}

SpectralScalarField laplacian(const SpectralScalarField& f) {
    const FrequencyGrid& g = *f.grid;
    SpectralScalarField out(f.grid);
    for (std::size_t id = 0; id < g.size(); ++id)
        out.coeff[id] = -g.k_sq(id) * f.coeff[id];
    return out;
}

SpectralScalarField inverse_laplacian(const SpectralScalarField& f) {
    const FrequencyGrid& g = *f.grid;
    SpectralScalarField out(f.grid);
    for (std::size_t id = 0; id < g.size(); ++id) {
        const double ksq = g.k_sq(id);
        out.coeff[id] = ksq == 0.0 ? Complex(0.0) : f.coeff[id] / (-ksq);
    }
    return out;
}

SpectralVectorField leray_project(const SpectralVectorField& v) {
    const FrequencyGrid& g = *v.grid();
    SpectralVectorField out(v.grid());
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n(); ++j) {
            const double k2 = g.k(j);
            const std::size_t id = g.idx(i, j);
            const double ksq = g.k_sq(id);
            if (ksq == 0.0) {
                out.u1.coeff[id] = v.u1.coeff[id];
                out.u2.coeff[id] = v.u2.coeff[id];
                continue;
            }
            const Complex kdotv = (k1 * v.u1.coeff[id] + k2 * v.u2.coeff[id]) / ksq;
            out.u1.coeff[id] = v.u1.coeff[id] - k1 * kdotv;
            out.u2.coeff[id] = v.u2.coeff[id] - k2 * kdotv;
        }
    }
    return out;
}

SpectralVectorField divergence(const SpectralSymTensorField& tau) {
    const FrequencyGrid& g = *tau.grid();
    SpectralVectorField out(tau.grid());
    for (int i = 0; i < g.n(); ++i) {
        const bool ny1 = g.nyquist(i);
        const double k1 = ny1 ? 0.0 : g.k(i);
        for (int j = 0; j < g.n(); ++j) {
            const bool ny2 = g.nyquist(j);
            const double k2 = ny2 ? 0.0 : g.k(j);
            const std::size_t id = g.idx(i, j);
            out.u1.coeff[id] = kI * (k1 * tau.t11.coeff[id] + k2 * tau.t12.coeff[id]);
            out.u2.coeff[id] = kI * (k1 * tau.t12.coeff[id] + k2 * tau.t22.coeff[id]);
        }
    }
    return out;
}

SpectralScalarField curl_scalar(const SpectralVectorField& v) {
    const FrequencyGrid& g = *v.grid();
    SpectralScalarField out(v.grid());
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.nyquist(i) ? 0.0 : g.k(i);
        for (int j = 0; j < g.n(); ++j) {
            const double k2 = g.nyquist(j) ? 0.0 : g.k(j);
            const std::size_t id = g.idx(i, j);
            out.coeff[id] = kI * (k1 * v.u2.coeff[id] - k2 * v.u1.coeff[id]);
        }
    }
    return out;
}

SpectralScalarField riesz_R(const SpectralSymTensorField& tau) {
    const FrequencyGrid& g = *tau.grid();
    SpectralScalarField out(tau.grid());
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.nyquist(i) ? 0.0 : g.k(i);
        for (int j = 0; j < g.n(); ++j) {
            const double k2 = g.nyquist(j) ? 0.0 : g.k(j);
            const std::size_t id = g.idx(i, j);
            const double ksq = g.k_sq(id);
            if (ksq == 0.0) {
                out.coeff[id] = 0.0;
                continue;
            }
            const Complex kt1 = k1 * tau.t11.coeff[id] + k2 * tau.t12.coeff[id];
            const Complex kt2 = k1 * tau.t12.coeff[id] + k2 * tau.t22.coeff[id];
            out.coeff[id] = (k1 * kt2 - k2 * kt1) / ksq;
        }
    }
    return out;
}

void dealias_inplace(SpectralScalarField& f) {
    const FrequencyGrid& g = *f.grid;
    for (std::size_t id = 0; id < g.size(); ++id)
        if (!g.keep(id))
            f.coeff[id] = 0.0;
}

void dealias_inplace(SpectralVectorField& v) {
    dealias_inplace(v.u1);
    dealias_inplace(v.u2);
}

void dealias_inplace(SpectralSymTensorField& tau) {
    dealias_inplace(tau.t11);
    dealias_inplace(tau.t12);
    dealias_inplace(tau.t22);
}

SpectralScalarField dealias(const SpectralScalarField& f) {
    SpectralScalarField out = f;
    dealias_inplace(out);
    return out;
}

SpectralVectorField dealias(const SpectralVectorField& v) {
    SpectralVectorField out = v;
    dealias_inplace(out);
    return out;
}

SpectralSymTensorField dealias(const SpectralSymTensorField& tau) {
    SpectralSymTensorField out = tau;
    dealias_inplace(out);
    return out;
}

double divergence_defect(const SpectralVectorField& u) {
    const FrequencyGrid& g = *u.grid();
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        const double k1 = g.k(i);
        for (int j = 0; j < g.n(); ++j) {
            const double k2 = g.k(j);
            const std::size_t id = g.idx(i, j);
            const double kmag = std::sqrt(g.k_sq(id));
            const double umag = std::hypot(std::abs(u.u1.coeff[id]), std::abs(u.u2.coeff[id]));
            worst = std::max(worst, std::abs(k1 * u.u1.coeff[id] + k2 * u.u2.coeff[id]));
            scale = std::max(scale, kmag * umag);
        }
    }
    return scale == 0.0 ? 0.0 : worst / scale;
}

}  // namespace oldb
