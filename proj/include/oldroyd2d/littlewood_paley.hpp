/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_LITTLEWOOD_PALEY_HPP
#define OLDROYD2D_LITTLEWOOD_PALEY_HPP

#include <utility>
#include <vector>

#include "oldroyd2d/field.hpp"

namespace oldb {

// Dyadic partition of unity sampled on the discrete frequency grid:
//   chi(xi) + sum_{j>=0} phi(2^{-j} xi) = 1,
// built from a smooth radial cutoff chi (identically 1 for |xi| <= 1,
// vanishing for |xi| >= 4/3, exp(-1/t) glue in between) and
// phi(xi) = chi(xi/2) - chi(xi), so supp phi(2^{-j}.) lies in the annulus
// 2^j <= |xi| <= (8/3) 2^j and blocks two apart never overlap. The partition
// sum telescopes exactly, also in floating point.
//
// Immutable after construction; block() and besov_norm() are pure.
class LPPartition {
  public:
    static LPPartition build(GridPtr grid);

    const GridPtr& grid() const { return grid_; }
    int j_max() const { return j_max_; }
    const std::vector<double>& chi_values() const { return chi_; }
    const std::vector<double>& phi_values(int j) const { return phi_by_j_.at(j); }

    // Multiplier for block j (j = -1 selects chi).
    const std::vector<double>& multiplier(int j) const;

  private:
    GridPtr grid_;
    int j_max_ = 0;
    std::vector<double> chi_;
    std::vector<std::vector<double>> phi_by_j_;
};

// Smooth cutoff profile used by the partition; exposed for the initial-data
// family that builds annulus-supported data from the same profile.
double lp_chi(double r);
double lp_phi(double r);

// Frequency block Delta_j f, j in {-1, ..., j_max}.
SpectralScalarField block(const SpectralScalarField& f, int j, const LPPartition& part);
SpectralVectorField block(const SpectralVectorField& u, int j, const LPPartition& part);
SpectralSymTensorField block(const SpectralSymTensorField& tau, int j, const LPPartition& part);

// Besov norm || (2^{js} ||Delta_j f||_{L^p})_j ||_{l^r}; p in {2, inf},
// r in {1, 2, inf}.
double besov_norm(const SpectralScalarField& f, double s, double p, double r,
                  const LPPartition& part);
double besov_norm(const SpectralVectorField& u, double s, double p, double r,
                  const LPPartition& part);
double besov_norm(const SpectralSymTensorField& tau, double s, double p, double r,
                  const LPPartition& part);

// Returns (||f||_{B0_inf_1}, ||f||_{B0_inf_inf} * ln(e + ||f||_{H^s})); the
// logarithmic-interpolation constant is not computable, so the pair is
// reported for ratio monitoring rather than asserted.
std::pair<double, double> log_interpolation_check(const SpectralScalarField& f, double s,
                                                  const LPPartition& part);

}  // namespace oldb

#endif
