/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oldroyd2d/fft2d.hpp"

namespace oldb {

std::vector<double> SpectralScalarField::physical() const {
    std::vector<double> phys;
    fft_for(grid->n()).to_physical(coeff, phys);
    return phys;
}

SpectralScalarField SpectralScalarField::from_physical(GridPtr g,
                                                       const std::vector<double>& phys) {
    SpectralScalarField f(std::move(g));
    fft_for(f.grid->n()).from_physical(phys, f.coeff);
    return f;
}

SpectralScalarField& axpy(SpectralScalarField& y, double a, const SpectralScalarField& x) {
    for (std::size_t i = 0; i < y.coeff.size(); ++i)
        y.coeff[i] += a * x.coeff[i];
    return y;
}

SpectralScalarField scaled(const SpectralScalarField& f, double a) {
    SpectralScalarField out = f;
    for (auto& c : out.coeff)
        c *= a;
    return out;
}

SpectralScalarField sum(const SpectralScalarField& a, const SpectralScalarField& b) {
    SpectralScalarField out = a;
    return axpy(out, 1.0, b);
}

SpectralScalarField diff(const SpectralScalarField& a, const SpectralScalarField& b) {
    SpectralScalarField out = a;
    return axpy(out, -1.0, b);
}

SpectralVectorField& axpy(SpectralVectorField& y, double a, const SpectralVectorField& x) {
    axpy(y.u1, a, x.u1);
    axpy(y.u2, a, x.u2);
    return y;
}

SpectralSymTensorField& axpy(SpectralSymTensorField& y, double a,
                             const SpectralSymTensorField& x) {
    axpy(y.t11, a, x.t11);
    axpy(y.t12, a, x.t12);
    axpy(y.t22, a, x.t22);
    return y;
}

double max_abs_coeff(const SpectralScalarField& f) {
    double m = 0.0;
    for (const auto& c : f.coeff)
        m = std::max(m, std::abs(c));
    return m;
}

double hermitian_defect(const SpectralScalarField& f) {
    const FrequencyGrid& g = *f.grid;
    double worst = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            const Complex a = f.coeff[g.idx(i, j)];
            const Complex b = f.coeff[g.conj_idx(i, j)];
            worst = std::max(worst, std::abs(b - std::conj(a)));
        }
    return worst;
}

double hermitian_defect_rel(const SpectralScalarField& f) {
    const double scale = max_abs_coeff(f);
    return scale == 0.0 ? 0.0 : hermitian_defect(f) / scale;
}

double hermitian_defect_rel(const SpectralVectorField& u) {
    return std::max(hermitian_defect_rel(u.u1), hermitian_defect_rel(u.u2));
}

double hermitian_defect_rel(const SpectralSymTensorField& tau) {
    return std::max({hermitian_defect_rel(tau.t11), hermitian_defect_rel(tau.t12),
                     hermitian_defect_rel(tau.t22)});
}

void symmetrize_hermitian(SpectralScalarField& f) {
    const FrequencyGrid& g = *f.grid;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            const std::size_t a = g.idx(i, j);
            const std::size_t b = g.conj_idx(i, j);
            if (a > b)
                continue;
            if (a == b) {
                f.coeff[a] = Complex(f.coeff[a].real(), 0.0);
            } else {
                const Complex avg = 0.5 * (f.coeff[a] + std::conj(f.coeff[b]));
                f.coeff[a] = avg;
                f.coeff[b] = std::conj(avg);
            }
        }
}

}  // namespace oldb
