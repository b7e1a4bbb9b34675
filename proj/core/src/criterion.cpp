#include "latticekit/criterion.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

CriterionContext::CriterionContext(std::uint64_t n, SpaceParams params)
    : n_(n), params_(std::move(params)) {
  if (n_ < 2) throw InvalidParameter("n must be at least 2");
  omega_.assign(static_cast<std::size_t>(n_), 0.0L);
  // Fill the lower half and mirror, so omega_[i] == omega_[n - i] bit for bit.
  for (std::uint64_t i = 0; i <= n_ / 2; ++i) {
    omega_[i] = omega_ld(params_.alpha, static_cast<long double>(i) / static_cast<long double>(n_));
  }
  for (std::uint64_t i = n_ / 2 + 1; i < n_; ++i) omega_[i] = omega_[n_ - i];
  zeta2a_ = 2.0L * riemann_zeta(2.0L * static_cast<long double>(params_.alpha));
}

namespace {

void check_units(const CriterionContext& ctx, std::span<const std::uint64_t> z) {
  for (std::uint64_t zj : z) {
    if (zj == 0 || zj >= ctx.n() || std::gcd(zj, ctx.n()) != 1) {
      throw InvalidParameter("generating vector components must be units modulo n");
    }
  }
}

}  // namespace

double full_pair(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                 const SubsetWeights& beta) {
  check_units(ctx, z);
  const std::uint64_t n = ctx.n();
  std::vector<long double> w(z.size());
  CompensatedSum<long double> sum;
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < z.size(); ++j) w[j] = ctx.omega_at(k, z[j]);
    const long double D = beta.weighted_product_sum(w);
    sum.add(D * D);
  }
  return static_cast<double>(sum.value() / static_cast<long double>(n));
}

long double theta_ld(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                     const SubsetWeights& beta) {
  if (z.empty()) throw InvalidParameter("theta needs s >= 1");
  check_units(ctx, z);
  const std::size_t s = z.size();
  const std::uint64_t n = ctx.n();
  const SubsetWeights shifted = beta.with_coordinate(s - 1);
  std::vector<long double> w(s);
  const std::span<const long double> prefix(w.data(), s - 1);
  CompensatedSum<long double> sum;
  CompensatedSum<long double> scale;
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < s; ++j) w[j] = ctx.omega_at(k, z[j]);
    const long double D = beta.weighted_product_sum(w);
    const long double E = beta.weighted_product_sum(prefix);
    const long double F = shifted.weighted_product_sum(prefix);
    sum.add(D * D - E * E - ctx.zeta2a() * F * F);
    scale.add(D * D + E * E + ctx.zeta2a() * F * F);
  }
  const long double nn = static_cast<long double>(n);
  const long double value = sum.value() / nn;
  if (value < 0.0L) {
    const long double magnitude = scale.value() / nn;
    if (value < -1e-12L * magnitude) {
      std::ostringstream msg;
      msg << "theta is significantly negative (" << static_cast<double>(value)
          << " against scale " << static_cast<double>(magnitude) << ")";
      throw NumericalError(msg.str());
    }
    log_warning("clamping a rounding-level negative theta to zero");
    return 0.0L;
  }
  return value;
}

double theta(const CriterionContext& ctx, std::span<const std::uint64_t> z,
             const SubsetWeights& beta) {
  return static_cast<double>(theta_ld(ctx, z, beta));
}

namespace {

// Explicit w-enumeration over subsets of the trailing coordinates {s..d-1}.
long double t_explicit(const CriterionContext& ctx, std::size_t d,
                       std::span<const std::uint64_t> z, const WeightModel& weights) {
  const std::size_t s = z.size();
  if (d > 64 || d - s > kMaxEnumerationDimension) {
    throw CapacityError("explicit-path T_s enumerates at most 2^20 trailing subsets");
  }
  SubsetWeights beta = SubsetWeights::from(weights);
  CompensatedSum<long double> total;
  const CoordinateMask count = CoordinateMask{1} << (d - s);
  for (CoordinateMask w = 0; w < count; ++w) {
    beta.extra = w << s;
    const long double c = std::pow(ctx.zeta2a(), static_cast<long double>(std::popcount(w)));
    total.add(c * theta_ld(ctx, z, beta));
  }
  return total.value();
}

}  // namespace

double t_component(const CriterionContext& ctx, std::size_t d, std::span<const std::uint64_t> z) {
  const std::size_t s = z.size();
  if (s < 1 || s > d) throw InvalidParameter("t_component requires 1 <= s <= d");
  const WeightModel& weights = ctx.params().weights;
  if (weights.dimension() < d) throw InvalidParameter("weights cover fewer than d coordinates");
  const long double zeta2 = ctx.zeta2a();
  switch (weights.kind()) {
    case WeightKind::Product: {
      const SubsetWeights beta = SubsetWeights::from(weights);
      long double factor = 1.0L;
      for (std::size_t j = s; j < d; ++j) {
        const long double g = weights.gamma()[j];
        factor *= 1.0L + zeta2 * g * g;
      }
      return static_cast<double>(theta_ld(ctx, z, beta) * factor);
    }
    case WeightKind::Pod: {
      // e_m of γ_j^2 over the trailing coordinates.
      const std::size_t rest = d - s;
      std::vector<long double> e(rest + 1, 0.0L);
      e[0] = 1.0L;
      for (std::size_t j = s; j < d; ++j) {
        const long double g = weights.gamma()[j];
        for (std::size_t m = j - s + 1; m >= 1; --m) e[m] += g * g * e[m - 1];
      }
      SubsetWeights beta = SubsetWeights::from(weights);
      CompensatedSum<long double> total;
      for (std::size_t m = 0; m <= rest; ++m) {
        if (e[m] == 0.0L) continue;
        beta.order.assign(s + 1, 0.0L);
        for (std::size_t l = 0; l <= s; ++l) beta.order[l] = weights.order_factors()[l + m];
        total.add(std::pow(zeta2, static_cast<long double>(m)) * e[m] * theta_ld(ctx, z, beta));
      }
      return static_cast<double>(total.value());
    }
    case WeightKind::Spod: {
      const std::size_t rest = d - s;
      if (rest > kMaxEnumerationDimension) {
        throw CapacityError("SPOD T_s enumerates at most 2^20 trailing subsets");
      }
      const unsigned sigma = weights.sigma();
      const auto& Gamma = weights.order_factors();
      SubsetWeights beta = SubsetWeights::from(weights);
      CompensatedSum<long double> total;
      for (CoordinateMask w = 0; w < (CoordinateMask{1} << rest); ++w) {
        // Coefficients of ∏_{j∈w} Σ_ν γ_{j,ν} x^ν.
        std::vector<long double> c{1.0L};
        for (std::size_t i = 0; i < rest; ++i) {
          if (!((w >> i) & 1U)) continue;
          const auto& g = weights.gamma_nu()[s + i];
          std::vector<long double> next(c.size() + sigma, 0.0L);
          for (std::size_t a = 0; a < c.size(); ++a) {
            for (unsigned nu = 1; nu <= sigma; ++nu) next[a + nu] += c[a] * g[nu - 1];
          }
          c = std::move(next);
        }
        beta.order.assign(sigma * s + 1, 0.0L);
        for (std::size_t L = 0; L <= sigma * s; ++L) {
          long double acc = 0.0L;
          for (std::size_t a = 0; a < c.size(); ++a) acc += Gamma[L + a] * c[a];
          beta.order[L] = acc;
        }
        total.add(std::pow(zeta2, static_cast<long double>(std::popcount(w))) *
                  theta_ld(ctx, z, beta));
      }
      return static_cast<double>(total.value());
    }
    case WeightKind::Explicit:
      return static_cast<double>(t_explicit(ctx, d, z, weights));
  }
  return 0.0;
}

double t_component_enumerated(const CriterionContext& ctx, std::size_t d,
                              std::span<const std::uint64_t> z) {
  const std::size_t s = z.size();
  if (s < 1 || s > d) throw InvalidParameter("t_component requires 1 <= s <= d");
  const WeightModel& weights = ctx.params().weights;
  if (weights.kind() == WeightKind::Explicit) {
    return static_cast<double>(t_explicit(ctx, d, z, weights));
  }
  return static_cast<double>(t_explicit(ctx, d, z, weights.materialize(d)));
}

CriterionReport s_criterion(const CriterionContext& ctx, std::span<const std::uint64_t> z) {
  const std::size_t d = ctx.d();
  if (z.size() != d) throw InvalidParameter("generating vector length must equal d");
  CriterionReport report;
  CompensatedSum<long double> total;
  for (std::size_t s = 1; s <= d; ++s) {
    const double t = t_component(ctx, d, z.first(s));
    report.t_values.push_back(t);
    total.add(t);
  }
  report.S = static_cast<double>(total.value());
  return report;
}

}  // namespace latticekit
