/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_FIELDS_OPS_HPP
#define OLDROYD2D_FIELDS_OPS_HPP

#include "oldroyd2d/field.hpp"
#include "oldroyd2d/model.hpp"

namespace oldb {

// Deformation tensor D(u) = (grad u + grad u^T)/2.
SpectralSymTensorField deformation(const SpectralVectorField& u);

// Scalar vorticity Omega = (d1 u2 - d2 u1)/2, the single independent entry
// of the antisymmetric tensor (grad u - grad u^T)/2 with the convention
// Om21 = +Omega, Om12 = -Omega.
SpectralScalarField vorticity_scalar(const SpectralVectorField& u);

// Q(grad u, tau) = tau Om - Om tau + b (D tau + tau D), evaluated pointwise
// in physical space, transformed back and dealiased. The co-rotational flag
// drops the b term (params enforce b = 0 there); the tensor algebra is the
// same code path for both models.
SpectralSymTensorField q_bilinear(const SpectralVectorField& u, const SpectralSymTensorField& tau,
                                  const ModelParams& params);

// Dealiased pseudo-spectral advection u.grad(f).
SpectralScalarField transport_term(const SpectralVectorField& u, const SpectralScalarField& f);
SpectralSymTensorField transport_term(const SpectralVectorField& u,
                                      const SpectralSymTensorField& tau);

}  // namespace oldb

#endif
