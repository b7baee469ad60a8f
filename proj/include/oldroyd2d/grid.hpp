/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_GRID_HPP
#define OLDROYD2D_GRID_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace oldb {

// Square periodic frequency grid of side box_len with n collocation points
// per axis. Mode (i,j) of the coefficient array carries the wavenumber
// k = (2*pi/box_len) * (m1(i), m2(j)) with m in {-n/2, ..., n/2-1} in the
// usual FFT index ordering. The dealias mask keeps modes with
// max(|m1|,|m2|) <= n/3 (two-thirds rule).
class FrequencyGrid {
  public:
    static std::shared_ptr<const FrequencyGrid> make(int n, double box_len);

    int n() const { return n_; }
    double box_len() const { return box_len_; }
    double dx() const { return box_len_ / n_; }
    double box_area() const { return box_len_ * box_len_; }
    std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    int mode(int i) const { return i < n_ / 2 ? i : i - n_; }
    int conj_index(int i) const { return i == 0 ? 0 : n_ - i; }
    std::size_t conj_idx(int i, int j) const { return idx(conj_index(i), conj_index(j)); }

    // Wavenumber component along an axis for the given index.
    double k(int i) const { return k_[i]; }
    double k_sq(std::size_t id) const { return k_sq_[id]; }
    double k_sq(int i, int j) const { return k_sq_[idx(i, j)]; }
    bool keep(std::size_t id) const { return keep_[id] != 0; }
    bool nyquist(int i) const { return 2 * i == n_; }

    double k_max() const { return k_max_; }
    double k_min_nonzero() const { return k1_base_; }  // = 2*pi/L

    bool same(const FrequencyGrid& other) const {
        return n_ == other.n_ && box_len_ == other.box_len_;
    }

  private:
    FrequencyGrid(int n, double box_len);

    int n_;
    double box_len_;
    double k1_base_;
    double k_max_;
    std::vector<double> k_;
    std::vector<double> k_sq_;
    std::vector<std::uint8_t> keep_;
};

using GridPtr = std::shared_ptr<const FrequencyGrid>;

}  // namespace oldb

#endif
