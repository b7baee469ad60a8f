/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_FIELD_HPP
#define OLDROYD2D_FIELD_HPP

#include <complex>
#include <vector>

#include "oldroyd2d/grid.hpp"

namespace oldb {

using Complex = std::complex<double>;

// One real scalar field stored as complex Fourier amplitudes on a
// FrequencyGrid: f(x) = sum_k coeff(k) e^{i k.x}. Real fields keep the
// Hermitian symmetry coeff(-k) = conj(coeff(k)) up to rounding.
struct SpectralScalarField {
    GridPtr grid;
    std::vector<Complex> coeff;

    SpectralScalarField() = default;
    explicit SpectralScalarField(GridPtr g) : grid(std::move(g)), coeff(grid->size()) {}

    std::vector<double> physical() const;
    static SpectralScalarField from_physical(GridPtr g, const std::vector<double>& phys);
};

struct SpectralVectorField {
    SpectralScalarField u1, u2;

    SpectralVectorField() = default;
    explicit SpectralVectorField(GridPtr g) : u1(g), u2(g) {}
    const GridPtr& grid() const { return u1.grid; }
};

// Symmetric 2x2 tensor; the (2,1) entry is never stored, always read as t12.
struct SpectralSymTensorField {
    SpectralScalarField t11, t12, t22;

    SpectralSymTensorField() = default;
    explicit SpectralSymTensorField(GridPtr g) : t11(g), t12(g), t22(g) {}
    const GridPtr& grid() const { return t11.grid; }
};

// Elementwise helpers used by the time stepper and tests.
SpectralScalarField& axpy(SpectralScalarField& y, double a, const SpectralScalarField& x);
SpectralScalarField scaled(const SpectralScalarField& f, double a);
SpectralScalarField sum(const SpectralScalarField& a, const SpectralScalarField& b);
SpectralScalarField diff(const SpectralScalarField& a, const SpectralScalarField& b);

SpectralVectorField& axpy(SpectralVectorField& y, double a, const SpectralVectorField& x);
SpectralSymTensorField& axpy(SpectralSymTensorField& y, double a, const SpectralSymTensorField& x);

// Largest |coeff(-k) - conj(coeff(k))| over represented pairs, and the same
// normalized by the largest coefficient magnitude (0 for the zero field).
double hermitian_defect(const SpectralScalarField& f);
double hermitian_defect_rel(const SpectralScalarField& f);
double hermitian_defect_rel(const SpectralVectorField& u);
double hermitian_defect_rel(const SpectralSymTensorField& tau);

// Enforce coeff(-k) = conj(coeff(k)) exactly by averaging each pair.
void symmetrize_hermitian(SpectralScalarField& f);

double max_abs_coeff(const SpectralScalarField& f);

}  // namespace oldb

#endif
