#pragma once

#include <complex>
#include <span>
#include <vector>

namespace latticekit {

/// X[c] = Σ_k x[k] e^{-2πi k c / n}, any length n >= 1.
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x);
/// x[k] = (1/n) Σ_c X[c] e^{2πi k c / n}.
std::vector<std::complex<double>> dft_inverse(std::span<const std::complex<double>> X);

std::vector<std::complex<double>> dft_forward_real(std::span<const double> x);

}  // namespace latticekit
