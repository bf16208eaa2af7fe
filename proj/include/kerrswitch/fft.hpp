#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace kerr {

/// In-place complex FFT of fixed length backed by FFTW.
///
/// Conventions follow the optics literature: to_spectrum computes
/// A(w) = sum_t a(t) exp(+i w t) (unnormalised) and to_time is its exact
/// inverse including the 1/n factor. With this sign, a delay by s multiplies
/// the spectrum by exp(+i w s) and dispersion enters as exp(+i beta2 w^2 z / 2).
///
/// Each instance owns its aligned scratch buffer and plans; instances are not
/// shared across threads. Plan creation is serialised internally.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;

  std::size_t size() const noexcept { return n_; }
  std::span<std::complex<double>> buffer() noexcept;

  void to_spectrum();
  void to_time();

 private:
  struct Plans;
  std::size_t n_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace kerr
