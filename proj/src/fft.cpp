#include "kerrswitch/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace kerr {

namespace {
// FFTW's planner is not re-entrant; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct Fft::Plans {
  fftw_complex* data = nullptr;
  fftw_plan forward = nullptr;   // exp(-i ...), used for to_time
  fftw_plan backward = nullptr;  // exp(+i ...), used for to_spectrum

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (data) fftw_free(data);
  }
};

Fft::Fft(std::size_t n) : n_(n), plans_(std::make_unique<Plans>()) {
  std::lock_guard lock(planner_mutex());
  plans_->data = fftw_alloc_complex(n);
  const int len = static_cast<int>(n);
  plans_->forward =
      fftw_plan_dft_1d(len, plans_->data, plans_->data, FFTW_FORWARD, FFTW_ESTIMATE);
  plans_->backward =
      fftw_plan_dft_1d(len, plans_->data, plans_->data, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft::~Fft() = default;
Fft::Fft(Fft&&) noexcept = default;
Fft& Fft::operator=(Fft&&) noexcept = default;

std::span<std::complex<double>> Fft::buffer() noexcept {
  return {reinterpret_cast<std::complex<double>*>(plans_->data), n_};
}

void Fft::to_spectrum() { fftw_execute(plans_->backward); }

void Fft::to_time() {
  fftw_execute(plans_->forward);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : buffer()) v *= scale;
}

}  // namespace kerr
