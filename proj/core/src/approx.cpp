#include "latticekit/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "latticekit/dft.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % n);
}

void check_point(std::size_t d, std::span<const double> x) {
  if (x.size() != d) throw InvalidParameter("point dimension does not match");
}

std::size_t bin_of(const FrequencyIndex& h, std::span<const std::uint64_t> z, std::uint64_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t c = 0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const std::int64_t hj = (h.h[j] % nn + nn) % nn;
    c = (c + static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(hj), z[j] % n, n))) % nn;
  }
  return static_cast<std::size_t>(c);
}

}  // namespace

LatticeSampler lattice_points(std::uint64_t n, std::span<const std::uint64_t> z) {
  if (n < 1) throw InvalidParameter("n must be positive");
  if (z.empty()) throw InvalidParameter("generating vector must be non-empty");
  LatticeSampler s;
  s.n = n;
  s.d = z.size();
  s.z.assign(z.begin(), z.end());
  s.points.resize(n * s.d);
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < s.d; ++j) {
      const std::uint64_t r = mulmod(k, z[j], n);
      s.points[k * s.d + j] = static_cast<double>(r) / static_cast<double>(n);
    }
  }
  return s;
}

std::complex<double> fourier_mode(const FrequencyIndex& h, std::span<const double> x) {
  long double phase = 0.0L;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (h.h[j] == 0) continue;
    phase = frac(phase + frac(static_cast<long double>(h.h[j]) * x[j]));
  }
  const long double angle = 2.0L * std::numbers::pi_v<long double> * phase;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::complex<double> TrigPolynomial::operator()(std::span<const double> x) const {
  check_point(d, x);
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [h, c] : terms) sum += c * fourier_mode(h, x);
  return sum;
}

std::complex<double> Approximant::coefficient(const FrequencyIndex& h) const {
  const auto it = std::lower_bound(index_set.entries.begin(), index_set.entries.end(), h);
  if (it == index_set.entries.end() || *it != h) return {0.0, 0.0};
  return coefficients[static_cast<std::size_t>(it - index_set.entries.begin())];
}

Approximant approximate(const LatticeSampler& sampler,
                        std::span<const std::complex<double>> samples, IndexSet index_set) {
  if (samples.size() != sampler.n) throw InvalidParameter("expected one sample per lattice node");
  if (index_set.d != sampler.d && !index_set.entries.empty()) {
    throw InvalidParameter("index set dimension does not match the lattice");
  }
  auto F = dft_forward(samples);
  const double scale = 1.0 / static_cast<double>(sampler.n);
  Approximant out;
  out.coefficients.reserve(index_set.entries.size());
  for (const auto& h : index_set.entries) {
    out.coefficients.push_back(F[bin_of(h, sampler.z, sampler.n)] * scale);
  }
  out.index_set = std::move(index_set);
  return out;
}

Approximant approximate(const LatticeSampler& sampler,
                        std::span<const std::complex<double>> samples, const SpaceParams& params,
                        double M) {
  if (params.d != sampler.d) throw InvalidParameter("space dimension does not match the lattice");
  return approximate(sampler, samples, enumerate_index_set(params, M));
}

Approximant approximate(const LatticeSampler& sampler, std::span<const double> samples,
                        const SpaceParams& params, double M) {
  std::vector<std::complex<double>> c(samples.begin(), samples.end());
  return approximate(sampler, std::span<const std::complex<double>>(c), params, M);
}

std::complex<double> evaluate_complex(const Approximant& approx, std::span<const double> x) {
  if (approx.index_set.entries.empty()) return {0.0, 0.0};
  check_point(approx.index_set.d, x);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < approx.coefficients.size(); ++i) {
    sum += approx.coefficients[i] * fourier_mode(approx.index_set.entries[i], x);
  }
  return sum;
}

double evaluate(const Approximant& approx, std::span<const double> x) {
  const std::complex<double> v = evaluate_complex(approx, x);
  double mass = 0.0;
  for (const auto& c : approx.coefficients) mass += std::abs(c);
  if (std::abs(v.imag()) > 1e-10 * std::max(1.0, mass)) {
    throw NumericalError("approximant is not real: coefficients are not conjugate symmetric");
  }
  return v.real();
}

KernelInterpolant kernel_interpolant(const SpaceParams& params, const LatticeSampler& sampler,
                                     std::span<const double> samples) {
  if (params.d != sampler.d) throw InvalidParameter("space dimension does not match the lattice");
  if (samples.size() != sampler.n) throw InvalidParameter("expected one sample per lattice node");
  const std::size_t n = sampler.n;
  const std::vector<double> origin(sampler.d, 0.0);
  std::vector<double> col0(n);
  for (std::size_t k = 0; k < n; ++k) col0[k] = kernel_value(params, sampler.point(k), origin);

  const auto eig = dft_forward_real(col0);
  double largest = 0.0;
  for (const auto& e : eig) largest = std::max(largest, std::abs(e));
  for (const auto& e : eig) {
    if (!(std::abs(e) > 1e-12 * largest)) {
      throw NumericalError("kernel Gram matrix is numerically singular on this lattice");
    }
  }
  auto rhs = dft_forward_real(samples);
  for (std::size_t c = 0; c < n; ++c) rhs[c] /= eig[c];
  const auto sol = dft_inverse(rhs);

  KernelInterpolant out;
  out.params = params;
  out.sampler = sampler;
  out.a.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.a[k] = sol[k].real();
  return out;
}

double evaluate(const KernelInterpolant& interp, std::span<const double> x) {
  check_point(interp.sampler.d, x);
  CompensatedSum<double> sum;
  for (std::size_t k = 0; k < interp.a.size(); ++k) {
    if (interp.a[k] == 0.0) continue;
    sum.add(interp.a[k] * kernel_value(interp.params, x, interp.sampler.point(k)));
  }
  return sum.value();
}

double korobov_norm(const SpaceParams& params, const TrigPolynomial& f) {
  CompensatedSum<long double> sum;
  for (const auto& [h, c] : f.terms) {
    const double mag = std::norm(c);
    if (mag == 0.0) continue;
    const double r = r_value(params, h);
    if (std::isinf(r)) return r;
    sum.add(static_cast<long double>(mag) * r);
  }
  return static_cast<double>(std::sqrt(sum.value()));
}

double measure_l2_error(const TrigPolynomial& f, const Approximant& approx) {
  std::vector<std::pair<FrequencyIndex, std::complex<double>>> diff;
  diff.reserve(f.terms.size() + approx.coefficients.size());
  for (const auto& t : f.terms) diff.push_back(t);
  for (std::size_t i = 0; i < approx.coefficients.size(); ++i) {
    diff.emplace_back(approx.index_set.entries[i], -approx.coefficients[i]);
  }
  std::stable_sort(diff.begin(), diff.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  CompensatedSum<long double> sum;
  for (std::size_t i = 0; i < diff.size();) {
    std::complex<long double> c{0.0L, 0.0L};
    std::size_t j = i;
    for (; j < diff.size() && diff[j].first == diff[i].first; ++j) {
      c += std::complex<long double>(diff[j].second.real(), diff[j].second.imag());
    }
    sum.add(std::norm(c));
    i = j;
  }
  return static_cast<double>(std::sqrt(sum.value()));
}

QuadratureEstimate measure_l2_error(const std::function<double(std::span<const double>)>& f,
                                    const Approximant& approx, std::size_t grid) {
  const std::size_t d = approx.index_set.d;
  if (grid < 1 || d < 1) throw InvalidParameter("quadrature needs grid >= 1 and d >= 1");
  long double total = 1.0L;
  for (std::size_t j = 0; j < d; ++j) total *= static_cast<long double>(grid);
  if (total > 1e7L) throw CapacityError("quadrature grid exceeds 1e7 nodes");
  const auto count = static_cast<std::size_t>(total);
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> x(d, 0.0);
  CompensatedSum<long double> sum;
  for (std::size_t node = 0; node < count; ++node) {
    for (std::size_t j = 0; j < d; ++j) x[j] = static_cast<double>(idx[j]) / static_cast<double>(grid);
    const double e = f(x) - evaluate_complex(approx, x).real();
    sum.add(static_cast<long double>(e) * e);
    for (std::size_t j = 0; j < d && ++idx[j] == grid; ++j) idx[j] = 0;
  }
  return {static_cast<double>(std::sqrt(sum.value() / total)), grid};
}

}  // namespace latticekit
