/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#ifndef OLDROYD2D_FFT2D_HPP
#define OLDROYD2D_FFT2D_HPP

#include <complex>
#include <vector>

namespace oldb {

// Complex-to-complex 2-D FFT pair on an n x n grid, wrapping FFTW.
//
// Coefficient convention: f(x) = sum_k fhat(k) e^{i k.x}, so
//   forward  : fhat = FFT(f) / n^2
//   backward : f    = IFFT(fhat)        (unnormalized FFTW backward)
// Plans use FFTW_ESTIMATE so that plan selection (and hence rounding) is
// reproducible across runs. One Fft2D instance is not thread-safe; use
// fft_for(n) to get a thread-local instance.
class Fft2D {
  public:
    explicit Fft2D(int n);
    ~Fft2D();

    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    int n() const { return n_; }

    // fhat (n^2 complex) -> physical real samples (row-major, real part taken)
    void to_physical(const std::vector<std::complex<double>>& coeff,
                     std::vector<double>& phys);

    // physical real samples -> fhat, scaled by 1/n^2
    void from_physical(const std::vector<double>& phys,
                       std::vector<std::complex<double>>& coeff);

  private:
    int n_;
    void* plan_fwd_;
    void* plan_bwd_;
    std::complex<double>* buf_in_;
    std::complex<double>* buf_out_;
};

// Thread-local FFT instance for the given grid size.
Fft2D& fft_for(int n);

}  // namespace oldb

#endif
