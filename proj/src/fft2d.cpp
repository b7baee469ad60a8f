/*
 * This file is part of oldroyd2d, distributed under the terms of the
 * Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0).
 */

#include "oldroyd2d/fft2d.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace oldb {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution of distinct
// plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft2D::Fft2D(int n) : n_(n) {
    const std::size_t total = static_cast<std::size_t>(n) * n;
    buf_in_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * total));
    buf_out_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * total));
    if (!buf_in_ || !buf_out_)
        throw std::bad_alloc();

    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_), FFTW_FORWARD,
                                 FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_), FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
    if (!plan_fwd_ || !plan_bwd_)
        throw std::runtime_error("fft2d: plan creation failed");
}

Fft2D::~Fft2D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

void Fft2D::to_physical(const std::vector<std::complex<double>>& coeff,
                        std::vector<double>& phys) {
    const std::size_t total = static_cast<std::size_t>(n_) * n_;
    if (coeff.size() != total)
        throw std::invalid_argument("fft2d: coefficient size mismatch");
    std::memcpy(buf_in_, coeff.data(), total * sizeof(std::complex<double>));
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    phys.resize(total);
    for (std::size_t i = 0; i < total; ++i)
        phys[i] = buf_out_[i].real();
}

void Fft2D::from_physical(const std::vector<double>& phys,
                          std::vector<std::complex<double>>& coeff) {
    const std::size_t total = static_cast<std::size_t>(n_) * n_;
    if (phys.size() != total)
        throw std::invalid_argument("fft2d: sample size mismatch");
    for (std::size_t i = 0; i < total; ++i)
        buf_in_[i] = std::complex<double>(phys[i], 0.0);
    fftw_execute(static_cast<fftw_plan>(plan_fwd_));
    const double scale = 1.0 / static_cast<double>(total);
    coeff.resize(total);
    for (std::size_t i = 0; i < total; ++i)
        coeff[i] = buf_out_[i] * scale;
}

Fft2D& fft_for(int n) {
    thread_local std::map<int, std::unique_ptr<Fft2D>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<Fft2D>(n)).first;
    return *it->second;
}

}  // namespace oldb
