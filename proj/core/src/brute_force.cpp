#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "latticekit/criterion.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

// Bounds on σ(r) = Σ_{k≠0, k≡r (mod n)} |k|^{-a} for every residue r. Terms
// with |k| <= R are summed directly; the remainder of each arithmetic
// progression is bracketed using convexity of t^{-a}.
struct ResidueClassSums {
  std::vector<long double> lo;
  std::vector<long double> hi;
};

// Bounds on Σ_{i>=0} f(k0 + i n) for f(t) = t^{-a}, k0 > n/2.
std::pair<long double, long double> progression_tail(long double k0, long double n, long double a) {
  const long double x = k0 - n / 2.0L;
  const long double integral = std::pow(x, 1.0L - a) / (n * (a - 1.0L));
  const long double f1 = a * std::pow(x, -a - 1.0L);
  const long double f2 = a * (a + 1.0L) * std::pow(x, -a - 2.0L);
  const long double midpoint_error = n * n / 24.0L * (f2 + f1 / n);
  return {std::max(0.0L, integral - midpoint_error), integral};
}

ResidueClassSums residue_class_sums(std::uint64_t n, long double a, std::uint64_t R) {
  std::vector<CompensatedSum<long double>> partial(n);
  for (std::uint64_t k = R; k >= 1; --k) {
    const long double t = std::pow(static_cast<long double>(k), -a);
    partial[k % n].add(t);
    partial[(n - k % n) % n].add(t);
  }
  ResidueClassSums out;
  out.lo.resize(n);
  out.hi.resize(n);
  const long double nn = static_cast<long double>(n);
  for (std::uint64_t r = 0; r < n; ++r) {
    const long double base = partial[r].value();
    long double lo = base;
    long double hi = base;
    // Positive k ≡ r and positive |k| ≡ -r (the negative half-line).
    for (std::uint64_t target : {r, (n - r) % n}) {
      std::uint64_t k0 = R + 1 + ((target + n - (R + 1) % n) % n);
      auto [tl, th] = progression_tail(static_cast<long double>(k0), nn, a);
      lo += tl;
      hi += th;
    }
    out.lo[r] = lo;
    out.hi[r] = hi;
  }
  return out;
}

std::vector<long double> cyclic_convolve(const std::vector<long double>& x,
                                         const std::vector<long double>& y) {
  const std::size_t n = x.size();
  std::vector<long double> out(n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0.0L) continue;
    for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += x[i] * y[j];
  }
  return out;
}

// B_c = Σ_{h: h·z ≡ c} 1/r(h), one vector per bound direction.
std::vector<long double> class_totals(const CriterionContext& ctx,
                                      std::span<const std::uint64_t> z,
                                      const std::vector<long double>& sigma) {
  const std::uint64_t n = ctx.n();
  const std::size_t d = z.size();
  const WeightModel& weights = ctx.params().weights;
  std::vector<std::vector<long double>> v(d, std::vector<long double>(n, 0.0L));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::uint64_t r = 0; r < n; ++r) v[j][(r * z[j]) % n] = sigma[r];
  }
  const CoordinateMask count = CoordinateMask{1} << d;
  std::vector<std::vector<long double>> conv(count);
  conv[0].assign(n, 0.0L);
  conv[0][0] = 1.0L;
  std::vector<long double> B(n, 0.0L);
  for (CoordinateMask mask = 0; mask < count; ++mask) {
    if (mask != 0) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(mask));
      conv[mask] = cyclic_convolve(conv[mask & ~(CoordinateMask{1} << top)], v[top]);
    }
    const long double g = weights.weight(mask);
    if (g == 0.0L) continue;
    for (std::uint64_t c = 0; c < n; ++c) B[c] += g * conv[mask][c];
  }
  return B;
}

void check_brute_force_scale(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                             std::uint64_t radius) {
  if (z.size() != ctx.d()) throw InvalidParameter("generating vector length must equal d");
  if (ctx.d() > 3) throw CapacityError("brute-force evaluation is limited to d <= 3");
  if (radius < ctx.n()) throw InvalidParameter("brute-force radius must be at least n");
  for (std::uint64_t zj : z) {
    if (zj == 0 || zj >= ctx.n() || std::gcd(zj, ctx.n()) != 1) {
      throw InvalidParameter("generating vector components must be units modulo n");
    }
  }
}

BoundedValue make_bounded(long double lo, long double hi) {
  lo = std::max(lo, 0.0L);
  hi = std::max(hi, lo);
  BoundedValue out;
  out.lower = static_cast<double>(lo);
  out.upper = static_cast<double>(hi);
  out.estimate = static_cast<double>((lo + hi) / 2.0L);
  out.tail = static_cast<double>(hi - lo);
  return out;
}

}  // namespace

BoundedValue brute_force_s(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                           std::uint64_t radius) {
  check_brute_force_scale(ctx, z, radius);
  const std::uint64_t n = ctx.n();
  const long double a = ctx.alpha();
  const ResidueClassSums single = residue_class_sums(n, a, radius);
  const ResidueClassSums twice = residue_class_sums(n, 2.0L * a, radius);
  const auto B_lo = class_totals(ctx, z, single.lo);
  const auto B_hi = class_totals(ctx, z, single.hi);

  // Diagonal h = m: Σ_h r(h)^{-2} = Σ_u γ_u^2 Z^{|u|}, Z = Σ_{k≠0} |k|^{-2α}.
  CompensatedSum<long double> z_lo;
  CompensatedSum<long double> z_hi;
  for (std::uint64_t r = 0; r < n; ++r) {
    z_lo.add(twice.lo[r]);
    z_hi.add(twice.hi[r]);
  }
  CompensatedSum<long double> diag_lo;
  CompensatedSum<long double> diag_hi;
  for (CoordinateMask mask = 0; mask < (CoordinateMask{1} << z.size()); ++mask) {
    const long double g = ctx.params().weights.weight(mask);
    const auto k = static_cast<long double>(std::popcount(mask));
    diag_lo.add(g * g * std::pow(z_lo.value(), k));
    diag_hi.add(g * g * std::pow(z_hi.value(), k));
  }

  CompensatedSum<long double> sq_lo;
  CompensatedSum<long double> sq_hi;
  for (std::uint64_t c = 0; c < n; ++c) {
    sq_lo.add(B_lo[c] * B_lo[c]);
    sq_hi.add(B_hi[c] * B_hi[c]);
  }
  return make_bounded(sq_lo.value() - diag_hi.value(), sq_hi.value() - diag_lo.value());
}

BoundedValue brute_force_s_certified(const CriterionContext& ctx,
                                     std::span<const std::uint64_t> z, double rel_tol) {
  std::uint64_t radius = std::max<std::uint64_t>(ctx.n(), 1024);
  for (int attempt = 0; attempt < 24; ++attempt) {
    const BoundedValue v = brute_force_s(ctx, z, radius);
    if (v.tail < rel_tol * v.estimate || v.upper == 0.0) return v;
    radius *= 2;
  }
  throw NumericalError("brute-force evaluation did not reach the requested tail tolerance");
}

BoundedValue e_criterion(const CriterionContext& ctx, std::span<const std::uint64_t> z, double M) {
  if (z.size() != ctx.d()) throw InvalidParameter("generating vector length must equal d");
  if (ctx.d() > 3) throw CapacityError("E is evaluated only for d <= 3");
  const IndexSet set = enumerate_index_set(ctx.params(), M, 100'000);
  if (set.entries.empty()) return {};
  const std::uint64_t n = ctx.n();
  std::uint64_t radius = std::max<std::uint64_t>(n, 1024);
  check_brute_force_scale(ctx, z, radius);
  const auto nn = static_cast<std::int64_t>(n);
  for (int attempt = 0;; ++attempt) {
    const ResidueClassSums single = residue_class_sums(n, ctx.alpha(), radius);
    const auto B_lo = class_totals(ctx, z, single.lo);
    const auto B_hi = class_totals(ctx, z, single.hi);
    CompensatedSum<long double> lo;
    CompensatedSum<long double> hi;
    for (const auto& h : set.entries) {
      std::int64_t c = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        c = (c + (h.h[j] % nn + nn) % nn * static_cast<std::int64_t>(z[j] % n)) % nn;
      }
      const long double own = r_reciprocal(ctx.params(), h);
      lo.add(B_lo[static_cast<std::size_t>(c)] - own);
      hi.add(B_hi[static_cast<std::size_t>(c)] - own);
    }
    BoundedValue v = make_bounded(lo.value(), hi.value());
    if (v.tail < 1e-8 * v.estimate || v.upper == 0.0 || attempt >= 20) return v;
    radius *= 2;
  }
}

}  // namespace latticekit
