/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_NORMS_HPP
#define OLDROYD2D_NORMS_HPP

#include <limits>

#include "oldroyd2d/field.hpp"

namespace oldb {

// L^2 and H^s norms are evaluated on coefficients (Parseval); L^4 and L^inf
// on collocation values of the pointwise magnitude. Vector magnitudes are
// euclidean; tensor magnitudes are Frobenius with the off-diagonal entry
// counted twice (tau21 is read as t12), which is what makes the stress
// energy identity and the L^p maximum principle hold exactly.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

double norm_l2(const SpectralScalarField& f);
double norm_l2(const SpectralVectorField& u);
double norm_l2(const SpectralSymTensorField& tau);

// p must be 2, 4 or kInf.
double norm_lp(const SpectralScalarField& f, double p);
double norm_lp(const SpectralVectorField& u, double p);
double norm_lp(const SpectralSymTensorField& tau, double p);

// Inhomogeneous Sobolev norm via the multiplier (1 + |k|^2)^{s/2}, s >= 0.
double norm_hs(const SpectralScalarField& f, double s);
double norm_hs(const SpectralVectorField& u, double s);
double norm_hs(const SpectralSymTensorField& tau, double s);

// Homogeneous seminorm |k|^s.
double norm_hs_dot(const SpectralScalarField& f, double s);
double norm_hs_dot(const SpectralVectorField& u, double s);
double norm_hs_dot(const SpectralSymTensorField& tau, double s);

// Pointwise magnitude samples on the collocation grid.
std::vector<double> magnitude_physical(const SpectralScalarField& f);
std::vector<double> magnitude_physical(const SpectralVectorField& u);
std::vector<double> magnitude_physical(const SpectralSymTensorField& tau);

// L^2 norm computed from collocation samples (trapezoid-free: the grid sum is
// exact for band-limited fields); used to cross-check Parseval.
double norm_l2_collocation(const SpectralScalarField& f);

}  // namespace oldb

#endif
