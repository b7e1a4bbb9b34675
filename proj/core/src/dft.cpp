#include "latticekit/dft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

namespace latticekit {

namespace {

// Only fftw_execute is thread safe; planning is serialised.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::complex<double>> transform(std::span<const std::complex<double>> in, int sign) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;
  std::vector<std::complex<double>> buffer(in.begin(), in.end());
  auto* src = reinterpret_cast<fftw_complex*>(buffer.data());
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard lock(plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), src, dst, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x) {
  return transform(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_inverse(std::span<const std::complex<double>> X) {
  auto out = transform(X, FFTW_BACKWARD);
  const double scale = out.empty() ? 1.0 : 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<std::complex<double>> dft_forward_real(std::span<const double> x) {
  std::vector<std::complex<double>> c(x.begin(), x.end());
  return dft_forward(c);
}

}  // namespace latticekit
