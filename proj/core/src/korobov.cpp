#include "latticekit/korobov.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

bool is_even_integer(double alpha) {
  return std::floor(alpha) == alpha && std::fmod(alpha, 2.0) == 0.0;
}

// 2 Σ_{h=1}^{H} cos(2πhx) h^{-α}, with H chosen so that the neglected tail
// 2 Σ_{h>H} h^{-α} <= 2 H^{1-α}/(α-1) stays below 1e-12.
long double omega_series(double alpha, long double x) {
  const long double a = alpha;
  const auto H = static_cast<std::int64_t>(
      std::ceil(std::pow(2.0e12L / (a - 1.0L), 1.0L / (a - 1.0L))));
  const long double c1 = std::cos(2.0L * kPi * x);
  long double prev = 1.0L;  // cos(0)
  long double cur = c1;
  CompensatedSum<long double> sum;
  for (std::int64_t h = 1; h <= H; ++h) {
    sum.add(cur * std::pow(static_cast<long double>(h), -a));
    const long double next = 2.0L * c1 * cur - prev;
    prev = cur;
    cur = next;
  }
  return 2.0L * sum.value();
}

// Σ_{h≥1} cos(2πhx)/h^s = (2π)^s [ζ(1-s, x) + ζ(1-s, 1-x)] / (4 Γ(s) cos(πs/2)),
// valid for 0 < x < 1 away from odd integer s.
long double omega_hurwitz(double alpha, long double x) {
  const long double s = alpha;
  const long double num = std::pow(2.0L * kPi, s) *
                          (hurwitz_zeta(1.0L - s, x) + hurwitz_zeta(1.0L - s, 1.0L - x));
  const long double den = 4.0L * std::tgamma(s) * std::cos(kPi * s / 2.0L);
  return 2.0L * num / den;
}

// Odd integer α = 2m+1 from the expansion of Re Li_α(e^{iθ}) about θ = 0,
// θ = 2π min(x, 1-x) <= π:
//   (-1)^m θ^{2m}/(2m)! (H_{2m} - ln θ) + Σ_{k even, k≠2m} (-1)^{k/2} ζ(α-k) θ^k/k!,
// with ζ(-n) = -B_{n+1}/(n+1) once α - k < 0. The terms decay like 2^{-k}.
long double omega_odd(unsigned alpha, long double x) {
  const unsigned m = (alpha - 1) / 2;
  const long double theta = 2.0L * kPi * std::min(x, 1.0L - x);
  const long double log_theta = std::log(theta);
  CompensatedSum<long double> sum;
  long double power = 1.0L;  // θ^k / k!
  for (unsigned k = 0; k <= 400; k += 2) {
    if (k > 0) power *= theta * theta / (static_cast<long double>(k - 1) * k);
    const long double sign = (k / 2) % 2 == 0 ? 1.0L : -1.0L;
    long double term;
    if (k == 2 * m) {
      long double harmonic = 0.0L;
      for (unsigned j = 1; j <= 2 * m; ++j) harmonic += 1.0L / j;
      term = sign * power * (harmonic - log_theta);
    } else if (k < 2 * m) {
      term = sign * power * riemann_zeta(static_cast<long double>(alpha - k));
    } else {
      const unsigned n = k - alpha;
      term = sign * power * (-bernoulli_number(n + 1) / static_cast<long double>(n + 1));
    }
    sum.add(term);
    if (k > 2 * m + 8 && std::fabs(term) < 1e-22L * std::fabs(sum.value())) break;
  }
  return 2.0L * sum.value();
}

}  // namespace

SpaceParams::SpaceParams(std::size_t d_, double alpha_, WeightModel weights_)
    : d(d_), alpha(alpha_), weights(std::move(weights_)) {
  if (d < 1) throw InvalidParameter("d must be at least 1");
  if (!(alpha > 1.0) || !std::isfinite(alpha)) throw InvalidParameter("alpha must exceed 1");
  if (weights.dimension() < d) {
    throw InvalidParameter("weight model covers fewer coordinates than d");
  }
}

CoordinateMask FrequencyIndex::support_mask() const {
  CoordinateMask m = 0;
  for (std::size_t j = 0; j < h.size() && j < 64; ++j) {
    if (h[j] != 0) m |= CoordinateMask{1} << j;
  }
  return m;
}

std::vector<std::size_t> FrequencyIndex::support() const {
  std::vector<std::size_t> u;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (h[j] != 0) u.push_back(j);
  }
  return u;
}

bool IndexSet::contains(const FrequencyIndex& h) const {
  return std::binary_search(entries.begin(), entries.end(), h);
}

double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f = 0.0;
  if (f < 0.0) f = 0.0;
  return f;
}

long double frac(long double x) {
  long double f = x - std::floor(x);
  if (f >= 1.0L) f = 0.0L;
  if (f < 0.0L) f = 0.0L;
  return f;
}

double r_value(const SpaceParams& params, const FrequencyIndex& h) {
  const auto u = h.support();
  const double g = params.weights.weight(std::span<const std::size_t>(u));
  if (g == 0.0) return std::numeric_limits<double>::infinity();
  double p = 1.0;
  for (std::size_t j : u) p *= std::pow(std::fabs(static_cast<double>(h.h[j])), params.alpha);
  return p / g;
}

double r_reciprocal(const SpaceParams& params, const FrequencyIndex& h) {
  const auto u = h.support();
  double p = params.weights.weight(std::span<const std::size_t>(u));
  for (std::size_t j : u) p *= std::pow(std::fabs(static_cast<double>(h.h[j])), -params.alpha);
  return p;
}

long double omega_ld(double alpha, long double x) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw InvalidParameter("omega requires alpha > 1");
  }
  x = frac(x);
  if (x == 0.0L) return 2.0L * riemann_zeta(alpha);
  if (is_even_integer(alpha) && alpha <= 20.0) {
    const auto k = static_cast<unsigned>(alpha / 2.0);
    const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
    const long double scale =
        std::exp(static_cast<long double>(2 * k) * std::log(2.0L * kPi) - log_factorial(2 * k));
    return sign * scale * bernoulli_polynomial(2 * k, x);
  }
  if (std::floor(alpha) == alpha && std::fmod(alpha, 2.0) == 1.0 && alpha <= 41.0) return omega_odd(static_cast<unsigned>(alpha), x);
  if (alpha < 2.0 || std::fabs(std::cos(std::numbers::pi * alpha / 2.0)) >= 0.05) {
    return omega_hurwitz(alpha, x);
  }
  return omega_series(alpha, x);
}

double omega(double alpha, double x) {
  return static_cast<double>(omega_ld(alpha, static_cast<long double>(x)));
}

double kernel_value(const SpaceParams& params, std::span<const double> x,
                    std::span<const double> y) {
  if (x.size() < params.d || y.size() < params.d) {
    throw InvalidParameter("kernel points must have d coordinates");
  }
  std::vector<long double> w(params.d);
  for (std::size_t j = 0; j < params.d; ++j) {
    w[j] = omega_ld(params.alpha, frac(static_cast<long double>(x[j]) - y[j]));
  }
  const SubsetWeights beta = SubsetWeights::from(params.weights);
  return static_cast<double>(beta.weighted_product_sum(w));
}

namespace {

class IndexCollector {
 public:
  IndexCollector(const SpaceParams& params, double M, std::size_t cap)
      : params_(params), M_(M), cap_(cap) {}

  void add(const std::vector<std::int64_t>& h) {
    FrequencyIndex idx{h};
    if (!(r_value(params_, idx) <= M_)) return;
    if (out_.size() >= cap_) {
      throw CapacityError("index set exceeds the cap of " + std::to_string(cap_) + " entries",
                          out_.size());
    }
    out_.push_back(std::move(idx));
  }

  // Adds every sign pattern of h over the given support.
  void add_signed(std::vector<std::int64_t>& h, const std::vector<std::size_t>& supp,
                  std::size_t i = 0) {
    if (i == supp.size()) {
      add(h);
      return;
    }
    add_signed(h, supp, i + 1);
    h[supp[i]] = -h[supp[i]];
    add_signed(h, supp, i + 1);
    h[supp[i]] = -h[supp[i]];
  }

  std::vector<FrequencyIndex> take() { return std::move(out_); }

 private:
  const SpaceParams& params_;
  double M_;
  std::size_t cap_;
  std::vector<FrequencyIndex> out_;
};

constexpr double kSlack = 1.0 + 1e-12;

// Product weights: depth-first over coordinates with a running value of
// ∏ |h_j|^α/γ_j. suffix_min[j] is the smallest factor any choice on
// coordinates j.. can contribute (1 for h = 0, or 1/γ_j if γ_j > 1).
void product_dfs(const std::vector<double>& gamma, double alpha, double M,
                 const std::vector<double>& suffix_min, std::size_t j, double value,
                 std::vector<std::int64_t>& h, std::vector<std::size_t>& supp,
                 IndexCollector& out) {
  const std::size_t d = h.size();
  if (value * suffix_min[j] > M * kSlack) return;
  if (j == d) {
    out.add_signed(h, supp);
    return;
  }
  product_dfs(gamma, alpha, M, suffix_min, j + 1, value, h, supp, out);
  if (gamma[j] == 0.0) return;
  supp.push_back(j);
  for (std::int64_t k = 1;; ++k) {
    const double v = value * std::pow(static_cast<double>(k), alpha) / gamma[j];
    if (v * suffix_min[j + 1] > M * kSlack) break;
    h[j] = k;
    product_dfs(gamma, alpha, M, suffix_min, j + 1, v, h, supp, out);
  }
  h[j] = 0;
  supp.pop_back();
}

// Positive tuples over supp with ∏ k_j^α <= budget.
void tuple_dfs(double alpha, double budget, std::size_t i, double value,
               const std::vector<std::size_t>& supp, std::vector<std::int64_t>& h,
               IndexCollector& out) {
  if (i == supp.size()) {
    out.add_signed(h, supp);
    return;
  }
  for (std::int64_t k = 1;; ++k) {
    const double v = value * std::pow(static_cast<double>(k), alpha);
    if (v > budget * kSlack) break;
    h[supp[i]] = k;
    tuple_dfs(alpha, budget, i + 1, v, supp, h, out);
  }
  h[supp[i]] = 0;
}

}  // namespace

IndexSet enumerate_index_set(const SpaceParams& params, double M, std::size_t cap) {
  if (!std::isfinite(M)) throw InvalidParameter("M must be finite");
  IndexSet set;
  set.M = M;
  set.d = params.d;
  const std::size_t d = params.d;
  IndexCollector out(params, M, cap);
  std::vector<std::int64_t> h(d, 0);
  if (params.weights.kind() == WeightKind::Product) {
    std::vector<double> gamma(params.weights.gamma().begin(),
                              params.weights.gamma().begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<double> suffix_min(d + 1, 1.0);
    for (std::size_t j = d; j-- > 0;) {
      const double f = gamma[j] > 1.0 ? 1.0 / gamma[j] : 1.0;
      suffix_min[j] = suffix_min[j + 1] * f;
    }
    std::vector<std::size_t> supp;
    product_dfs(gamma, params.alpha, M, suffix_min, 0, 1.0, h, supp, out);
  } else {
    if (d > kMaxEnumerationDimension) {
      throw CapacityError("index sets for non-product weights are limited to d <= " +
                          std::to_string(kMaxEnumerationDimension));
    }
    for (CoordinateMask mask = 0; mask < (CoordinateMask{1} << d); ++mask) {
      const double g = params.weights.weight(mask);
      if (g * M * kSlack < 1.0) continue;
      std::vector<std::size_t> supp;
      for (std::size_t j = 0; j < d; ++j) {
        if ((mask >> j) & 1U) supp.push_back(j);
      }
      tuple_dfs(params.alpha, g * M, 0, 1.0, supp, h, out);
    }
  }
  set.entries = out.take();
  std::sort(set.entries.begin(), set.entries.end());
  return set;
}

std::pair<long double, long double> weighted_power_sums(const WeightModel& weights,
                                                        std::size_t d, double q,
                                                        long double c) {
  const long double ql = q;
  auto pw = [ql](long double g) { return g == 0.0L ? 0.0L : std::pow(g, ql); };
  switch (weights.kind()) {
    case WeightKind::Product: {
      long double prod = 1.0L;
      CompensatedSum<long double> ratio;
      for (std::size_t j = 0; j < d; ++j) {
        const long double x = pw(weights.gamma()[j]) * c;
        prod *= 1.0L + x;
        ratio.add(x / (1.0L + x));
      }
      return {prod, prod * ratio.value()};
    }
    case WeightKind::Pod: {
      std::vector<long double> e(d + 1, 0.0L);
      e[0] = 1.0L;
      for (std::size_t j = 0; j < d; ++j) {
        const long double x = pw(weights.gamma()[j]) * c;
        for (std::size_t l = j + 1; l >= 1; --l) e[l] += x * e[l - 1];
      }
      CompensatedSum<long double> plain;
      CompensatedSum<long double> sized;
      for (std::size_t l = 0; l <= d; ++l) {
        const long double t = pw(weights.order_factors()[l]) * e[l];
        plain.add(t);
        sized.add(static_cast<long double>(l) * t);
      }
      return {plain.value(), sized.value()};
    }
    case WeightKind::Spod:
    case WeightKind::Explicit: {
      if (d > kMaxEnumerationDimension) {
        throw CapacityError("weighted subset sums for " + to_string(weights.kind()) +
                            " weights are limited to d <= " +
                            std::to_string(kMaxEnumerationDimension));
      }
      CompensatedSum<long double> plain;
      CompensatedSum<long double> sized;
      for (CoordinateMask mask = 0; mask < (CoordinateMask{1} << d); ++mask) {
        const int size = std::popcount(mask);
        const long double t = pw(weights.weight(mask)) * std::pow(c, static_cast<long double>(size));
        plain.add(t);
        sized.add(static_cast<long double>(size) * t);
      }
      return {plain.value(), sized.value()};
    }
  }
  return {0.0L, 0.0L};
}

double c1_constant(const SpaceParams& params, double q) {
  if (!(q * params.alpha > 1.0)) throw InvalidParameter("q must exceed 1/alpha");
  const long double c = 2.0L * riemann_zeta(static_cast<long double>(params.alpha) * q);
  return static_cast<double>(weighted_power_sums(params.weights, params.d, q, c).first);
}

double c2_constant(const SpaceParams& params, double tau) {
  if (!(tau * params.alpha > 1.0) || !(tau < 1.0)) {
    throw InvalidParameter("tau must lie in (1/alpha, 1)");
  }
  const long double g1 = params.weights.singleton(0);
  const long double a = params.alpha;
  const long double t = tau;
  const long double c1 = c1_constant(params, tau);
  return static_cast<double>(std::pow(g1, (t - 1.0L) / (a * t)) * (t / (1.0L - t)) *
                             std::pow(c1, 1.0L / t));
}

std::pair<double, double> cardinality_bounds(const SpaceParams& params, double M, double q) {
  if (!(q * params.alpha > 1.0)) throw InvalidParameter("q must exceed 1/alpha");
  const double upper = std::pow(M, q) * c1_constant(params, q);
  double lower = 0.0;
  if (M >= 1.0) lower = std::pow(params.weights.singleton(0) * M, 1.0 / params.alpha);
  return {lower, upper};
}

double truncation_tail_bound(const SpaceParams& params, double M, double tau) {
  if (!(M >= 1.0)) throw InvalidParameter("the truncation bound requires M >= 1");
  if (!(tau * params.alpha > 1.0) || !(tau < 1.0)) {
    throw InvalidParameter("tau must lie in (1/alpha, 1)");
  }
  return c2_constant(params, tau) * std::pow(M, -(1.0 - tau) / (params.alpha * tau));
}

void write_index_set(std::ostream& out, const IndexSet& set) {
  for (const auto& idx : set.entries) {
    for (std::size_t j = 0; j < idx.h.size(); ++j) {
      if (j) out << ' ';
      out << idx.h[j];
    }
    out << '\n';
  }
}

}  // namespace latticekit
