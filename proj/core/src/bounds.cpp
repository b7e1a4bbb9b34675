#include "latticekit/bounds.hpp"

#include <cmath>
#include <limits>

#include "latticekit/cbc.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_lambda(double alpha, double lambda) {
  if (!(lambda > 1.0 / alpha && lambda <= 1.0)) {
    throw InvalidParameter("lambda must lie in (1/alpha, 1]");
  }
}

void check_tau_v1(double alpha, double tau) {
  if (!(tau > 1.0 / alpha && tau < 1.0)) throw InvalidParameter("tau must lie in (1/alpha, 1)");
}

void check_tau_v2(double alpha, double tau) {
  if (!(alpha > 2.0)) throw InvalidParameter("the transformed L-infinity bound needs alpha > 2");
  if (!(tau > 1.0 / alpha && tau < 0.5)) {
    throw InvalidParameter("tau must lie in (1/alpha, 1/2)");
  }
}

void check_positive_s(double S) {
  if (!(S > 0.0) || !std::isfinite(S)) throw InvalidParameter("criterion value must be positive");
}

long double kappa(double alpha, double lambda) {
  return std::pow(2.0L, 2.0L * alpha * lambda + 1.0L) + 1.0L;
}

// (Σ_u γ_u^λ c^{|u|}, Σ_{u≠∅} |u| γ_u^λ c^{|u|}) with c = 2ζ(αλ).
std::pair<long double, long double> power_sums(const SpaceParams& params, double lambda) {
  const long double c = 2.0L * riemann_zeta(static_cast<long double>(params.alpha) * lambda);
  return weighted_power_sums(params.weights, params.d, lambda, c);
}

double phi_of(std::uint64_t n) {
  if (n < 2) throw InvalidParameter("n must be at least 2");
  return static_cast<double>(euler_phi(n));
}

}  // namespace

double suapp_bound(const SpaceParams& params, std::uint64_t n, double lambda) {
  check_lambda(params.alpha, lambda);
  const auto [plain, sized] = power_sums(params, lambda);
  const long double inner = kappa(params.alpha, lambda) / phi_of(n) * sized * plain;
  return static_cast<double>(std::pow(inner, 1.0L / lambda));
}

double l2_rate_bound(const SpaceParams& params, std::uint64_t n, double lambda) {
  check_lambda(params.alpha, lambda);
  const auto [plain, sized] = power_sums(params, lambda);
  // max(|u|,1) differs from |u| only at u = ∅, whose term is 1.
  const long double weighted = sized + 1.0L;
  const long double l = lambda;
  return static_cast<double>(std::sqrt(2.0L) * std::pow(kappa(params.alpha, lambda), 1.0L / (4 * l)) *
                             std::pow(static_cast<long double>(phi_of(n)), -1.0L / (4 * l)) *
                             std::pow(weighted, 1.0L / (2 * l)));
}

BoundReport l2_error_bound(double S) {
  check_positive_s(S);
  BoundReport r;
  r.S = S;
  r.M = static_cast<double>(1.0L / std::sqrt(static_cast<long double>(S)));
  r.bound = static_cast<double>(std::sqrt(2.0L) * std::pow(static_cast<long double>(S), 0.25L));
  r.lambda = kNaN;
  r.tau = kNaN;
  r.q = kNaN;
  return r;
}

double linf_v1_two_term(const SpaceParams& params, double S, double tau, double M) {
  check_tau_v1(params.alpha, tau);
  const long double a = params.alpha;
  const long double t = tau;
  const long double c1 = c1_constant(params, tau);
  const long double c2 = c2_constant(params, tau);
  const long double m = M;
  return static_cast<double>(std::sqrt(c2 * std::pow(m, -(1 - t) / (a * t)) +
                                       3 * std::pow(m, t + 1) * c1 * S));
}

BoundReport linf_error_bound_v1(const SpaceParams& params, double S, double tau) {
  check_tau_v1(params.alpha, tau);
  check_positive_s(S);
  const long double a = params.alpha;
  const long double t = tau;
  const long double c1 = c1_constant(params, tau);
  const long double c2 = c2_constant(params, tau);
  const long double M = std::pow(c2 / (3 * c1 * S), a * t / (a * t * t + a * t - t + 1));
  if (!(M >= 1.0L)) {
    throw BoundNotApplicable("balancing M = " + std::to_string(static_cast<double>(M)) +
                             " is below 1; n is too small for this tau");
  }
  const long double exponent = (1 - t) / (2 * (1 - t + a * t + a * t * t));
  const long double base = 3 * std::pow(c2, a * t * (1 + t) / (1 - t)) * c1 * S;
  BoundReport r;
  r.S = S;
  r.M = static_cast<double>(M);
  r.bound = static_cast<double>(std::sqrt(2.0L) * std::pow(base, exponent));
  r.lambda = kNaN;
  r.tau = tau;
  r.q = tau;
  return r;
}

BoundReport linf_error_bound_v1(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                                double tau) {
  return linf_error_bound_v1(ctx.params(), s_criterion_fast(ctx, z).S, tau);
}

double linf_v2_two_term(const SpaceParams& params, double S_tilde, double tau, double M) {
  check_tau_v2(params.alpha, tau);
  const long double a = params.alpha;
  const long double t = tau;
  const long double c2 = c2_constant(params, tau);
  const long double m = M;
  const long double st = S_tilde;
  return static_cast<double>(std::sqrt(c2 * std::pow(m, -(1 - t) / (a * t)) + 3 * m * st * st));
}

BoundReport linf_error_bound_v2(const SpaceParams& params, double S_tilde, double tau) {
  check_tau_v2(params.alpha, tau);
  check_positive_s(S_tilde);
  const long double a = params.alpha;
  const long double t = tau;
  const long double c2 = c2_constant(params, tau);
  const long double st = S_tilde;
  const long double M = std::pow(c2 / (3 * st * st), a * t / (a * t - t + 1));
  if (!(M >= 1.0L)) {
    throw BoundNotApplicable("balancing M = " + std::to_string(static_cast<double>(M)) +
                             " is below 1; n is too small for this tau");
  }
  const long double exponent = (1 - t) / (2 * (1 - t + a * t));
  const long double base = 3 * std::pow(c2, a * t / (1 - t)) * st * st;
  BoundReport r;
  r.S = S_tilde;
  r.M = static_cast<double>(M);
  r.bound = static_cast<double>(std::sqrt(2.0L) * std::pow(base, exponent));
  r.lambda = kNaN;
  r.tau = tau;
  r.q = kNaN;
  return r;
}

BoundReport linf_error_bound_v2(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                                double tau) {
  check_tau_v2(ctx.alpha(), tau);
  return linf_error_bound_v2(ctx.params(), transformed_criterion(ctx, z), tau);
}

double c3_constant(const SpaceParams& params, double tau) {
  check_tau_v1(params.alpha, tau);
  const long double a = params.alpha;
  const long double t = tau;
  const long double g1 = params.weights.singleton(0);
  if (!(g1 > 0.0L)) throw InvalidParameter("the L-infinity constants need gamma_{1} > 0");
  const long double k = kappa(params.alpha, tau);
  const long double head = 3 * std::pow(g1, -t - 1) * std::pow(k, 1 / t) *
                           std::pow(t / (1 - t), a * t * (1 + t) / (1 - t));
  const long double head_exp = (1 - t) / (2 * (1 - t + a * t + a * t * t));
  const auto [plain, sized] = power_sums(params, tau);
  const long double tail_exp =
      (1 / (2 * t)) * (1 + (1 - t * t) / (1 + (a - 1) * t + a * t * t));
  return static_cast<double>(std::sqrt(2.0L) * std::pow(head, head_exp) *
                             std::pow(sized + 1.0L, tail_exp));
}

double c4_constant(const SpaceParams& params, double tau) {
  check_tau_v2(params.alpha, tau);
  const long double a = params.alpha;
  const long double t = tau;
  const long double g1 = params.weights.singleton(0);
  if (!(g1 > 0.0L)) throw InvalidParameter("the L-infinity constants need gamma_{1} > 0");
  const long double k = kappa(params.alpha, tau);
  const long double denom = 2 * (1 - t + a * t);
  const long double head = std::pow(3 / g1 * std::pow(k, 1 / t), (1 - t) / denom) *
                           std::pow(t / (1 - t), a * t / denom);
  const auto [plain, sized] = power_sums(params, tau);
  const long double tail_exp = (1 / (2 * t)) * (1 + (1 - t) / (a * t + 1 - t));
  return static_cast<double>(std::sqrt(2.0L) * head * std::pow(sized + 1.0L, tail_exp));
}

double linf_v1_rate_bound(const SpaceParams& params, std::uint64_t n, double tau) {
  const long double a = params.alpha;
  const long double t = tau;
  const long double r1 = (1 - t) / (2 * t * (1 - t + a * t + a * t * t));
  return static_cast<double>(c3_constant(params, tau) * std::pow(static_cast<long double>(phi_of(n)), -r1));
}

double linf_v2_rate_bound(const SpaceParams& params, std::uint64_t n, double tau) {
  const long double a = params.alpha;
  const long double t = tau;
  const long double r2 = (1 - t) / (2 * t * (1 - t + a * t));
  return static_cast<double>(c4_constant(params, tau) * std::pow(static_cast<long double>(phi_of(n)), -r2));
}

double embedded_penalty_bound(std::uint64_t p, unsigned m1, unsigned m2, double alpha,
                              double lambda) {
  if (!is_prime(p)) throw InvalidParameter("p must be prime");
  if (m2 < m1) throw InvalidParameter("m2 must be at least m1");
  check_lambda(alpha, lambda);
  const long double ratio = std::pow(static_cast<long double>(p), alpha * lambda - 1.0L);
  CompensatedSum<long double> sum;
  for (unsigned m = m1; m <= m2; ++m) sum.add(std::pow(ratio, static_cast<long double>(m)));
  const long double pp = static_cast<long double>(p);
  return static_cast<double>(std::pow(pp / (pp - 1) * sum.value(), 1.0L / lambda));
}

std::vector<double> log_grid(double lo, double hi, bool include_hi, std::size_t count) {
  if (!(lo > 0.0 && hi > lo) || count == 0) throw InvalidParameter("invalid grid range");
  std::vector<double> out;
  out.reserve(count);
  const double span = std::log(hi / lo);
  for (std::size_t i = 0; i < count; ++i) {
    const double frac_pos = include_hi ? static_cast<double>(i + 1) / static_cast<double>(count)
                                       : (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    out.push_back(i + 1 == count && include_hi ? hi : lo * std::exp(span * frac_pos));
  }
  return out;
}

std::optional<BoundReport> best_suapp_bound(const SpaceParams& params, std::uint64_t n) {
  std::optional<BoundReport> best;
  for (double lambda : log_grid(1.0 / params.alpha, 1.0, true)) {
    const double b = suapp_bound(params, n, lambda);
    if (!std::isfinite(b)) continue;
    if (!best || b < best->bound) {
      BoundReport r;
      r.S = kNaN;
      r.M = kNaN;
      r.bound = b;
      r.lambda = lambda;
      r.tau = kNaN;
      r.q = kNaN;
      best = r;
    }
  }
  return best;
}

std::optional<BoundReport> best_linf_v1(const SpaceParams& params, double S) {
  std::optional<BoundReport> best;
  for (double tau : log_grid(1.0 / params.alpha, 1.0, false)) {
    try {
      const BoundReport r = linf_error_bound_v1(params, S, tau);
      if (std::isfinite(r.bound) && (!best || r.bound < best->bound)) best = r;
    } catch (const BoundNotApplicable&) {
    }
  }
  return best;
}

std::optional<BoundReport> best_linf_v2(const SpaceParams& params, double S_tilde) {
  std::optional<BoundReport> best;
  for (double tau : log_grid(1.0 / params.alpha, 0.5, false)) {
    try {
      const BoundReport r = linf_error_bound_v2(params, S_tilde, tau);
      if (std::isfinite(r.bound) && (!best || r.bound < best->bound)) best = r;
    } catch (const BoundNotApplicable&) {
    }
  }
  return best;
}

double transformed_criterion(const CriterionContext& ctx, std::span<const std::uint64_t> z) {
  auto [weights, half_alpha] = sqrt_half_transform(ctx.params().weights, ctx.alpha());
  const CriterionContext tctx(ctx.n(), SpaceParams(ctx.d(), half_alpha, std::move(weights)));
  return s_criterion_fast(tctx, z).S;
}

}  // namespace latticekit
