#include "latticekit/cbc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n < 1) throw InvalidParameter("euler_phi requires n >= 1");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> units(std::uint64_t n) {
  if (n < 2) throw InvalidParameter("units requires n >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 1; z < n; ++z) {
    if (std::gcd(z, n) == 1) out.push_back(z);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

double GeneratingVector::S() const {
  CompensatedSum<long double> sum;
  for (double t : t_values) sum.add(t);
  return static_cast<double>(sum.value());
}

CriterionReport s_criterion_fast(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                                 unsigned threads) {
  CbcEngine engine(ctx, z.size(), threads);
  CriterionReport report;
  CompensatedSum<long double> total;
  for (std::uint64_t zj : z) {
    if (zj == 0 || zj >= ctx.n() || std::gcd(zj, ctx.n()) != 1) {
      throw InvalidParameter("generating vector components must be units modulo n");
    }
    const long double t = std::max(engine.evaluate(zj), 0.0L);
    report.t_values.push_back(static_cast<double>(t));
    total.add(t);
    engine.accept(zj);
  }
  report.S = static_cast<double>(total.value());
  return report;
}

namespace {

// Algorithm 1, keeping the attained minima in extended precision.
GeneratingVector construct(const CriterionContext& ctx, std::size_t d, unsigned threads,
                           std::vector<long double>* minima) {
  CbcEngine engine(ctx, d, threads);
  const std::uint64_t n = ctx.n();
  std::vector<std::uint64_t> half;
  for (std::uint64_t r = 1; r <= n / 2; ++r) {
    if (std::gcd(r, n) == 1) half.push_back(r);
  }
  GeneratingVector gv;
  gv.n = n;
  gv.d = d;
  std::vector<long double> values(half.size());
  for (std::size_t s = 0; s < d; ++s) {
    // T(n - r) = T(r) bit for bit, and the tie rule prefers the smaller
    // candidate, so scanning r <= n/2 gives the full-scan argmin.
    engine.evaluate_all(half, values);
    const std::size_t best = tie_break_argmin(values);
    gv.z.push_back(half[best]);
    gv.t_values.push_back(static_cast<double>(std::max(values[best], 0.0L)));
    if (minima != nullptr) minima->push_back(values[best]);
    engine.accept(half[best]);
  }
  return gv;
}

}  // namespace

GeneratingVector cbc_construct(const CriterionContext& ctx, std::size_t d, unsigned threads) {
  return construct(ctx, d, threads, nullptr);
}

double EmbeddedResult::max_x() const {
  double m = 0.0;
  for (double x : x_values) m = std::max(m, x);
  return m;
}

EmbeddedResult cbc_construct_embedded(std::uint64_t p, unsigned m1, unsigned m2,
                                      const SpaceParams& params, unsigned threads) {
  if (!is_prime(p)) throw InvalidParameter("p must be prime");
  if (m1 < 1 || m2 <= m1) throw InvalidParameter("embedded construction needs m2 > m1 >= 1");
  const double log_n = static_cast<double>(m2) * std::log2(static_cast<double>(p));
  if (log_n > 40.0) throw CapacityError("p^m2 is too large");
  const std::size_t d = params.d;

  EmbeddedResult result;
  result.p = p;
  result.m1 = m1;
  result.m2 = m2;
  result.d = d;

  std::vector<std::uint64_t> sizes;
  std::uint64_t pm = 1;
  for (unsigned m = 1; m <= m2; ++m) {
    pm *= p;
    if (m >= m1) sizes.push_back(pm);
  }
  const std::size_t levels = sizes.size();

  std::vector<CriterionContext> contexts;
  contexts.reserve(levels);
  for (std::uint64_t n : sizes) contexts.emplace_back(n, params);

  std::vector<std::vector<long double>> denominators(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    result.baselines.push_back(construct(contexts[i], d, threads, &denominators[i]));
    for (std::size_t s = 0; s < d; ++s) {
      if (!(denominators[i][s] > 0.0L)) {
        throw NumericalError("baseline criterion T_" + std::to_string(s + 1) + " for n = " +
                             std::to_string(sizes[i]) + " is not positive (degenerate weights)");
      }
    }
  }

  std::vector<CbcEngine> engines;
  engines.reserve(levels);
  for (std::size_t i = 0; i < levels; ++i) engines.emplace_back(contexts[i], d, threads);

  const std::uint64_t N = sizes.back();
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t z = 1; z <= N / 2; ++z) {
    if (z % p != 0) candidates.push_back(z);
  }
  result.per_m_t.assign(levels, {});
  std::vector<long double> ratios(candidates.size());
  for (std::size_t s = 0; s < d; ++s) {
    std::vector<std::vector<long double>> memo(levels);
    for (std::size_t i = 0; i < levels; ++i) memo[i] = engines[i].evaluate_units();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      long double worst = 0.0L;
      for (std::size_t i = 0; i < levels; ++i) {
        const long double num = memo[i][candidates[c] % sizes[i]];
        const long double den = denominators[i][s];
        worst = std::max(worst, num / den);
      }
      ratios[c] = worst;
    }
    const std::size_t best = tie_break_argmin(ratios);
    const std::uint64_t z = candidates[best];
    result.z_emb.push_back(z);
    result.x_values.push_back(static_cast<double>(ratios[best]));
    for (std::size_t i = 0; i < levels; ++i) {
      result.per_m_t[i].push_back(
          static_cast<double>(std::max(memo[i][z % sizes[i]], 0.0L)));
      engines[i].accept(z % sizes[i]);
    }
  }
  for (std::size_t i = 0; i < levels; ++i) {
    CompensatedSum<long double> sum;
    for (double t : result.per_m_t[i]) sum.add(t);
    result.per_m_s.push_back(static_cast<double>(sum.value()));
  }
  return result;
}

}  // namespace latticekit
