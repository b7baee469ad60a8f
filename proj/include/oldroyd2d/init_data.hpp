/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_INIT_DATA_HPP
#define OLDROYD2D_INIT_DATA_HPP

#include <cstdint>

#include "oldroyd2d/dynamics.hpp"

namespace oldb {

// Scaled Gaussian vortex family
//   u0 = eps * phi0(eps (x - xc)),   phi0(y) = A (y2 e^{-|y|^2}, -y1 e^{-|y|^2})
//   tau0 = eps^2 * A e^{-|eps (x - xc)|^2} Id
// centered at the box midpoint. The analytic field is divergence-free; the
// projection applied here is a rounding-level correction. Requires the tail
// to clear the periodic boundary: e^{-(eps L / 2)^2} <= 1e-12, else throws
// "data not localized".
State remark12_family(double A, double eps, GridPtr grid);

// Dyadic-block stress family: tau0 = eps^10 h(x) Id where
//   h = sum_{k=1}^{N} 2^{-3k/2} k^{-1/2} h_k,   hhat_k(xi) = i sign(xi_1) phi(2^{-k} xi)
// built from the partition profile phi (the odd sign factor keeps h real),
// with N chosen so that sum_{k<=N} 1/k tracks eps^{-11} ||phi||_{L^2}^{-2};
// u0 = eps^{-1/2} phi0(eps (x - xc)) with the unit vortex profile. Throws if
// the required N exceeds the blocks the grid resolves.
State remark15_family(double eps, GridPtr grid);

// Taylor-Green vortex u = (sin x1 cos x2, -cos x1 sin x2), tau = 0; the box
// length must be a multiple of 2*pi.
State taylor_green(GridPtr grid);

State zero_state(GridPtr grid);

// Seeded band-limited random state (modes with max(|m1|,|m2|) <= 4, mean
// zero, u built from a streamfunction so it is exactly divergence-free),
// jointly normalized so ||(u0, tau0)||_{H^1} = amplitude. Same seed, same
// state, bit for bit.
State random_small(GridPtr grid, std::uint64_t seed, double amplitude);

// Number of harmonic terms remark15_family would use on this grid, and the
// largest block index the grid resolves inside the dealias mask.
int remark15_block_count(double eps, const FrequencyGrid& grid);
int max_resolved_block(const FrequencyGrid& grid);

}  // namespace oldb

#endif
