/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/fields_ops.hpp"

#include "oldroyd2d/spectral_ops.hpp"

namespace oldb {

SpectralSymTensorField deformation(const SpectralVectorField& u) {
    SpectralSymTensorField d(u.grid());
    d.t11 = partial(u.u1, 0);
    d.t22 = partial(u.u2, 1);
    SpectralScalarField d2u1 = partial(u.u1, 1);
    SpectralScalarField d1u2 = partial(u.u2, 0);
    d.t12 = scaled(sum(d2u1, d1u2), 0.5);
    return d;
}

SpectralScalarField vorticity_scalar(const SpectralVectorField& u) {
    return scaled(curl_scalar(u), 0.5);
}

SpectralSymTensorField q_bilinear(const SpectralVectorField& u, const SpectralSymTensorField& tau,
                                  const ModelParams& params) {
    const GridPtr grid = u.grid();
    const SpectralSymTensorField d = deformation(u);
    const SpectralScalarField om = vorticity_scalar(u);

    const std::vector<double> w = om.physical();
    const std::vector<double> d11 = d.t11.physical();
    const std::vector<double> d12 = d.t12.physical();
    const std::vector<double> d22 = d.t22.physical();
    const std::vector<double> t11 = tau.t11.physical();
    const std::vector<double> t12 = tau.t12.physical();
    const std::vector<double> t22 = tau.t22.physical();

    const double b = params.corotational ? 0.0 : params.b;
    const std::size_t total = grid->size();
    std::vector<double> q11(total), q12(total), q22(total);
    for (std::size_t i = 0; i < total; ++i) {
        // commutator tau*Om - Om*tau with Om = [[0, -w], [w, 0]]
        const double c11 = 2.0 * w[i] * t12[i];
        const double c12 = w[i] * (t22[i] - t11[i]);
        const double c22 = -2.0 * w[i] * t12[i];
        // symmetric part b (D tau + tau D)
        const double s11 = 2.0 * (d11[i] * t11[i] + d12[i] * t12[i]);
        const double s12 = d11[i] * t12[i] + d12[i] * t22[i] + t11[i] * d12[i] + t12[i] * d22[i];
        const double s22 = 2.0 * (d12[i] * t12[i] + d22[i] * t22[i]);
        q11[i] = c11 + b * s11;
        q12[i] = c12 + b * s12;
        q22[i] = c22 + b * s22;
    }

    SpectralSymTensorField q(grid);
    q.t11 = SpectralScalarField::from_physical(grid, q11);
    q.t12 = SpectralScalarField::from_physical(grid, q12);
    q.t22 = SpectralScalarField::from_physical(grid, q22);
    dealias_inplace(q);
    return q;
}

SpectralScalarField transport_term(const SpectralVectorField& u, const SpectralScalarField& f) {
    const GridPtr grid = u.grid();
    const std::vector<double> u1 = u.u1.physical();
    const std::vector<double> u2 = u.u2.physical();
    const std::vector<double> f1 = partial(f, 0).physical();
    const std::vector<double> f2 = partial(f, 1).physical();

    std::vector<double> adv(grid->size());
    for (std::size_t i = 0; i < adv.size(); ++i)
        adv[i] = u1[i] * f1[i] + u2[i] * f2[i];

    SpectralScalarField out = SpectralScalarField::from_physical(grid, adv);
    dealias_inplace(out);
    return out;
}

SpectralSymTensorField transport_term(const SpectralVectorField& u,
                                      const SpectralSymTensorField& tau) {
    SpectralSymTensorField out(u.grid());
    out.t11 = transport_term(u, tau.t11);
    out.t12 = transport_term(u, tau.t12);
    out.t22 = transport_term(u, tau.t22);
    return out;
}

}  // namespace oldb
