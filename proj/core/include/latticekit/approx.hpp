#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "latticekit/korobov.hpp"

namespace latticekit {

/// Nodes t_k = frac(k z / n), k = 0..n-1, stored row-major.
struct LatticeSampler {
  std::uint64_t n{0};
  std::size_t d{0};
  std::vector<std::uint64_t> z;
  std::vector<double> points;

  std::span<const double> point(std::size_t k) const { return {points.data() + k * d, d}; }
};

LatticeSampler lattice_points(std::uint64_t n, std::span<const std::uint64_t> z);

/// Σ_i c_i e^{2πi h_i·x}.
struct TrigPolynomial {
  std::size_t d{0};
  std::vector<std::pair<FrequencyIndex, std::complex<double>>> terms;

  std::complex<double> operator()(std::span<const double> x) const;
};

/// e^{2πi h·x} with the phase reduced modulo 1 in extended precision.
std::complex<double> fourier_mode(const FrequencyIndex& h, std::span<const double> x);

/// Approximated Fourier coefficients on A_d(M); coefficients[i] belongs to
/// index_set.entries[i].
struct Approximant {
  IndexSet index_set;
  std::vector<std::complex<double>> coefficients;

  /// Zero when h is not retained.
  std::complex<double> coefficient(const FrequencyIndex& h) const;
};

/// (1/n) Σ_k f(t_k) e^{-2πi h·t_k} for every h ∈ A_d(M), read off a single
/// length-n DFT at bin (h·z) mod n.
Approximant approximate(const LatticeSampler& sampler, std::span<const double> samples,
                        const SpaceParams& params, double M);
Approximant approximate(const LatticeSampler& sampler,
                        std::span<const std::complex<double>> samples, const SpaceParams& params,
                        double M);
Approximant approximate(const LatticeSampler& sampler,
                        std::span<const std::complex<double>> samples, IndexSet index_set);

/// Real value of the approximant; throws NumericalError when the imaginary
/// part exceeds 1e-10 relative to Σ|c_h|.
double evaluate(const Approximant& approx, std::span<const double> x);
std::complex<double> evaluate_complex(const Approximant& approx, std::span<const double> x);

struct KernelInterpolant {
  SpaceParams params;
  LatticeSampler sampler;
  std::vector<double> a;
};

/// Solves the circulant system G a = samples with G[k,k'] = K(t_k, t_k').
/// Throws NumericalError when an eigenvalue of G is below 1e-12 of the largest.
KernelInterpolant kernel_interpolant(const SpaceParams& params, const LatticeSampler& sampler,
                                     std::span<const double> samples);

/// Σ_k a_k K(x, t_k).
double evaluate(const KernelInterpolant& interp, std::span<const double> x);

/// ‖f‖² = Σ_h |f̂(h)|² r(h); infinite when a mode has zero weight.
double korobov_norm(const SpaceParams& params, const TrigPolynomial& f);

/// Exact L2 error by Parseval over the union of the two supports.
double measure_l2_error(const TrigPolynomial& f, const Approximant& approx);

struct QuadratureEstimate {
  double error{0.0};
  std::size_t grid{0};
};

/// Tensor midpoint-grid estimate of ‖f - A(f)‖_{L2} with grid^d nodes (<= 1e7).
QuadratureEstimate measure_l2_error(const std::function<double(std::span<const double>)>& f,
                                    const Approximant& approx, std::size_t grid);

}  // namespace latticekit
