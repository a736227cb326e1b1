#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace gse {

// In-place complex FFT plan. Power-of-two sizes run iterative Cooley-Tukey;
// everything else goes through Bluestein's chirp-z reduction to a
// power-of-two convolution, so any length (e.g. 320) is supported.
template <typename T>
class FftPlan {
 public:
  explicit FftPlan(size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("fft size must be > 0");
    pow2_ = (n & (n - 1)) == 0;
    if (pow2_) {
      init_pow2(n);
    } else {
      init_bluestein(n);
    }
  }

  size_t size() const { return n_; }

  // Unnormalized forward transform, X[k] = sum_j x[j] e^{-2*pi*i*j*k/n}.
  void forward(std::complex<T>* data) const { transform(data, false); }

  // Inverse transform including the 1/n factor.
  void inverse(std::complex<T>* data) const {
    for (size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
    transform(data, false);
    const T scale = T(1) / static_cast<T>(n_);
    for (size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]) * scale;
  }

  // Inverse without the 1/n normalization (adjoint of forward).
  void inverse_unnormalized(std::complex<T>* data) const {
    for (size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
    transform(data, false);
    for (size_t i = 0; i < n_; ++i) data[i] = std::conj(data[i]);
  }

 private:
  void init_pow2(size_t n) {
    rev_.resize(n);
    size_t log2n = 0;
    while ((size_t(1) << log2n) < n) ++log2n;
    for (size_t i = 0; i < n; ++i) {
      size_t r = 0;
      for (size_t b = 0; b < log2n; ++b)
        if (i & (size_t(1) << b)) r |= size_t(1) << (log2n - 1 - b);
      rev_[i] = r;
    }
    twiddle_.resize(n / 2);
    for (size_t k = 0; k < n / 2; ++k) {
      double a = -2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
      twiddle_[k] = std::complex<T>(static_cast<T>(std::cos(a)), static_cast<T>(std::sin(a)));
    }
  }

  void init_bluestein(size_t n) {
    m_ = 1;
    while (m_ < 2 * n - 1) m_ <<= 1;
    sub_ = std::make_unique<FftPlan<T>>(m_);
    chirp_.resize(n);
    for (size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the phase argument small and exact.
      uint64_t k2 = (static_cast<uint64_t>(k) * k) % (2 * n);
      double a = -M_PI * static_cast<double>(k2) / static_cast<double>(n);
      chirp_[k] = std::complex<T>(static_cast<T>(std::cos(a)), static_cast<T>(std::sin(a)));
    }
    std::vector<std::complex<T>> b(m_, std::complex<T>(0, 0));
    b[0] = std::conj(chirp_[0]);
    for (size_t k = 1; k < n; ++k) {
      b[k] = std::conj(chirp_[k]);
      b[m_ - k] = std::conj(chirp_[k]);
    }
    sub_->forward(b.data());
    chirp_fft_ = std::move(b);
  }

  void transform(std::complex<T>* data, bool /*unused*/) const {
    if (pow2_) {
      transform_pow2(data);
    } else {
      transform_bluestein(data);
    }
  }

  void transform_pow2(std::complex<T>* data) const {
    const size_t n = n_;
    for (size_t i = 0; i < n; ++i) {
      size_t j = rev_[i];
      if (i < j) std::swap(data[i], data[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
      const size_t half = len >> 1;
      const size_t step = n / len;
      for (size_t base = 0; base < n; base += len) {
        for (size_t k = 0; k < half; ++k) {
          const std::complex<T> w = twiddle_[k * step];
          const std::complex<T> u = data[base + k];
          const std::complex<T> v = data[base + k + half] * w;
          data[base + k] = u + v;
          data[base + k + half] = u - v;
        }
      }
    }
  }

  void transform_bluestein(std::complex<T>* data) const {
    std::vector<std::complex<T>> a(m_, std::complex<T>(0, 0));
    for (size_t k = 0; k < n_; ++k) a[k] = data[k] * chirp_[k];
    sub_->forward(a.data());
    for (size_t k = 0; k < m_; ++k) a[k] *= chirp_fft_[k];
    sub_->inverse(a.data());
    for (size_t k = 0; k < n_; ++k) data[k] = a[k] * chirp_[k];
  }

  size_t n_;
  bool pow2_ = true;
  std::vector<size_t> rev_;
  std::vector<std::complex<T>> twiddle_;
  // Bluestein state.
  size_t m_ = 0;
  std::vector<std::complex<T>> chirp_;
  std::vector<std::complex<T>> chirp_fft_;
  std::unique_ptr<FftPlan<T>> sub_;
};

}  // namespace gse
