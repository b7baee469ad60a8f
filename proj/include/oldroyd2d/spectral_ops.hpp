/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_SPECTRAL_OPS_HPP
#define OLDROYD2D_SPECTRAL_OPS_HPP

#include "oldroyd2d/field.hpp"

namespace oldb {

// Spectral derivative along axis (0 or 1): coefficients i*k_axis*fhat.
// The unpaired Nyquist line is zeroed so the result stays Hermitian.
SpectralScalarField partial(const SpectralScalarField& f, int axis);

SpectralVectorField gradient(const SpectralScalarField& f);
SpectralScalarField laplacian(const SpectralScalarField& f);

// fhat / (-|k|^2), mode (0,0) mapped to 0 (defined modulo constants).
SpectralScalarField inverse_laplacian(const SpectralScalarField& f);

// Orthogonal projection onto divergence-free fields. Mode (0,0), the mean
// velocity, passes through unchanged.
SpectralVectorField leray_project(const SpectralVectorField& v);

// (div tau)_i = d_j tau_ij
SpectralVectorField divergence(const SpectralSymTensorField& tau);

// Scalar curl d1 v2 - d2 v1 of a vector field.
SpectralScalarField curl_scalar(const SpectralVectorField& v);

// R = laplacian^{-1} curl div acting on symmetric tensors. Per mode k != 0:
//   Rhat(k) = (k1*(k.tau)_2 - k2*(k.tau)_1) / |k|^2,   (k.tau)_j = k_i tau_ij,
// mode (0,0) mapped to 0. The sign is fixed by the identity R(D(u)) = Omega
// with Omega = (d1 u2 - d2 u1)/2 on divergence-free u.
SpectralScalarField riesz_R(const SpectralSymTensorField& tau);

// Two-thirds rule: zero every mode with max(|m1|,|m2|) > n/3.
SpectralScalarField dealias(const SpectralScalarField& f);
SpectralVectorField dealias(const SpectralVectorField& v);
SpectralSymTensorField dealias(const SpectralSymTensorField& tau);
void dealias_inplace(SpectralScalarField& f);
void dealias_inplace(SpectralVectorField& v);
void dealias_inplace(SpectralSymTensorField& tau);

// max_k |k.uhat(k)| / max_k |k||uhat(k)|, 0 for the zero field.
double divergence_defect(const SpectralVectorField& u);

}  // namespace oldb

#endif
