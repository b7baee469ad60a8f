/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_MODEL_HPP
#define OLDROYD2D_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oldb {

// Model constants of the coupled momentum/stress system
//   d_t u  + u.grad u + grad P = div tau + nu Lap u,   div u = 0
//   d_t tau + u.grad tau + a tau + Q(grad u, tau) = alpha D(u) + mu Lap tau
// with Q(grad u, tau) = tau Om - Om tau + b (D tau + tau D).
// The co-rotational variant drops the alpha D(u) source and the b term.
struct ModelParams {
    double a = 1.0;      // stress damping rate, >= 0
    double mu = 1.0;     // stress diffusivity, >= 0
    double nu = 0.0;     // fluid viscosity, >= 0
    double alpha = 1.0;  // velocity->stress coupling; 0 in the co-rotational model
    double b = 0.0;      // slip parameter in [-1, 1]; 0 in the co-rotational model
    bool corotational = false;

    static ModelParams corotation(double a, double mu, double nu = 0.0) {
        ModelParams p;
        p.a = a;
        p.mu = mu;
        p.nu = nu;
        p.alpha = 0.0;
        p.b = 0.0;
        p.corotational = true;
        p.validate();
        return p;
    }

    static ModelParams general(double a, double mu, double nu, double alpha, double b) {
        ModelParams p{a, mu, nu, alpha, b, false};
        p.validate();
        return p;
    }

    void validate() const {
        if (a < 0.0 || mu < 0.0 || nu < 0.0)
            throw std::invalid_argument("params: a, mu, nu must be nonnegative");
        if (b < -1.0 || b > 1.0)
            throw std::invalid_argument("params: b must lie in [-1, 1]");
        if (corotational && (alpha != 0.0 || b != 0.0))
            throw std::invalid_argument("params: corotational requires alpha = 0 and b = 0");
        if (!corotational && !(alpha > 0.0))
            throw std::invalid_argument("params: general model requires alpha > 0");
    }
};

// Smallness-condition constants derived from (a, mu), recomputed on demand.
struct DerivedConstants {
    double kappa;    // min{a, mu}
    double lambda;   // min{a^1/2, a^3/2 mu, (a mu)^3/2, a, mu, a mu^5/2, mu^3/2}
    double beta;     // min{a^1/8, a^2}
    double gamma_c;  // min{a^1/4, a}
    double eta;      // min{a^1/8, a^3/2}

    static DerivedConstants from(const ModelParams& p) { return from(p.a, p.mu); }

    static DerivedConstants from(double a, double mu) {
        DerivedConstants d;
        d.kappa = std::min(a, mu);
        d.lambda = std::min({std::sqrt(a), std::pow(a, 1.5) * mu, std::pow(a * mu, 1.5), a, mu,
                             a * std::pow(mu, 2.5), std::pow(mu, 1.5)});
        d.beta = std::min(std::pow(a, 0.125), a * a);
        d.gamma_c = std::min(std::pow(a, 0.25), a);
        d.eta = std::min(std::pow(a, 0.125), std::pow(a, 1.5));
        return d;
    }
};

}  // namespace oldb

#endif
