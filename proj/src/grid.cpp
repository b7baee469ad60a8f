/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oldb {

FrequencyGrid::FrequencyGrid(int n, double box_len) : n_(n), box_len_(box_len) {
    k1_base_ = 2.0 * std::numbers::pi / box_len_;
    k_.resize(n_);
    for (int i = 0; i < n_; ++i)
        k_[i] = k1_base_ * mode(i);

    k_sq_.resize(size());
    keep_.resize(size());
    k_max_ = 0.0;
    for (int i = 0; i < n_; ++i) {
        const int m1 = std::abs(mode(i));
        for (int j = 0; j < n_; ++j) {
            const int m2 = std::abs(mode(j));
            const std::size_t id = idx(i, j);
            k_sq_[id] = k_[i] * k_[i] + k_[j] * k_[j];
            // keep iff max(|m1|,|m2|) <= n/3, evaluated in exact integer arithmetic
            keep_[id] = (3 * std::max(m1, m2) <= n_) ? 1 : 0;
            k_max_ = std::max(k_max_, k_sq_[id]);
        }
    }
    k_max_ = std::sqrt(k_max_);
}

std::shared_ptr<const FrequencyGrid> FrequencyGrid::make(int n, double box_len) {
    if (n < 16 || n % 2 != 0)
        throw std::invalid_argument("grid: n must be even and >= 16, got " + std::to_string(n));
    if (!(box_len > 0.0))
        throw std::invalid_argument("grid: box_len must be > 0");
    return std::shared_ptr<const FrequencyGrid>(new FrequencyGrid(n, box_len));
}

}  // namespace oldb
