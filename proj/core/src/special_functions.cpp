#include "latticekit/special_functions.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "latticekit/errors.hpp"

namespace latticekit {

namespace {

// B_0 .. B_30 as exact rationals.
constexpr std::array<std::pair<long double, long double>, 31> kBernoulli = {{
    {1.0L, 1.0L},
    {-1.0L, 2.0L},
    {1.0L, 6.0L},
    {0.0L, 1.0L},
    {-1.0L, 30.0L},
    {0.0L, 1.0L},
    {1.0L, 42.0L},
    {0.0L, 1.0L},
    {-1.0L, 30.0L},
    {0.0L, 1.0L},
    {5.0L, 66.0L},
    {0.0L, 1.0L},
    {-691.0L, 2730.0L},
    {0.0L, 1.0L},
    {7.0L, 6.0L},
    {0.0L, 1.0L},
    {-3617.0L, 510.0L},
    {0.0L, 1.0L},
    {43867.0L, 798.0L},
    {0.0L, 1.0L},
    {-174611.0L, 330.0L},
    {0.0L, 1.0L},
    {854513.0L, 138.0L},
    {0.0L, 1.0L},
    {-236364091.0L, 2730.0L},
    {0.0L, 1.0L},
    {8553103.0L, 6.0L},
    {0.0L, 1.0L},
    {-23749461029.0L, 870.0L},
    {0.0L, 1.0L},
    {8615841276005.0L, 14322.0L},
}};

// Euler-Maclaurin for sum_{k>=0} (k + a)^{-s} with N explicit terms and
// Bernoulli corrections up to B_{2P}.
long double euler_maclaurin_zeta(long double s, long double a) {
  constexpr int N = 24;
  constexpr int P = 12;
  CompensatedSum<long double> sum;
  for (int k = 0; k < N; ++k) sum.add(std::pow(static_cast<long double>(k) + a, -s));
  const long double x = static_cast<long double>(N) + a;
  sum.add(std::pow(x, 1.0L - s) / (s - 1.0L));
  sum.add(0.5L * std::pow(x, -s));
  // term_j = B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * x^{-s-2j+1}
  long double rising = s;                  // s (s+1) ... (s+2j-2)
  long double factorial = 2.0L;            // (2j)!
  long double power = std::pow(x, -s - 1.0L);
  const long double inv_x2 = 1.0L / (x * x);
  for (int j = 1; j <= P; ++j) {
    sum.add(bernoulli_number(2 * j) / factorial * rising * power);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    factorial *= static_cast<long double>((2 * j + 1) * (2 * j + 2));
    power *= inv_x2;
  }
  return sum.value();
}

}  // namespace

long double bernoulli_number(unsigned k) {
  if (k < kBernoulli.size()) return kBernoulli[k].first / kBernoulli[k].second;
  if (k % 2 == 1) return 0.0L;
  // B_{2m} = (-1)^{m+1} 2 (2m)! zeta(2m) / (2 pi)^{2m}; zeta(2m) by direct
  // summation converges immediately for 2m > 30.
  long double zeta = 0.0L;
  for (int h = 40; h >= 1; --h) zeta += std::pow(static_cast<long double>(h), -static_cast<long double>(k));
  const long double log_mag = std::log(2.0L) + std::lgamma(static_cast<long double>(k) + 1.0L) +
                              std::log(zeta) -
                              static_cast<long double>(k) * std::log(2.0L * std::numbers::pi_v<long double>);
  const long double sign = ((k / 2) % 2 == 1) ? 1.0L : -1.0L;
  return sign * std::exp(log_mag);
}

long double bernoulli_polynomial(unsigned k, long double x) {
  // B_k(x) = sum_j C(k, j) B_j x^{k-j}, evaluated by Horner in x.
  long double result = 0.0L;
  long double binom = 1.0L;  // C(k, j)
  std::vector<long double> coeffs(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    coeffs[j] = binom * bernoulli_number(j);  // coefficient of x^{k-j}
    binom = binom * static_cast<long double>(k - j) / static_cast<long double>(j + 1);
  }
  for (unsigned j = 0; j <= k; ++j) result = result * x + coeffs[j];
  return result;
}

long double log_factorial(unsigned k) {
  return std::lgamma(static_cast<long double>(k) + 1.0L);
}

long double riemann_zeta(long double s) {
  if (!(s > 1.0L) || !std::isfinite(s)) {
    throw InvalidParameter("riemann_zeta requires s > 1");
  }
  static std::mutex mutex;
  static std::map<long double, long double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(s); it != cache.end()) return it->second;
  }
  const long double value = euler_maclaurin_zeta(s, 1.0L);
  std::lock_guard lock(mutex);
  cache.emplace(s, value);
  return value;
}

long double hurwitz_zeta(long double s, long double a) {
  if (s == 1.0L || !(a > 0.0L)) {
    throw InvalidParameter("hurwitz_zeta requires s != 1 and a > 0");
  }
  return euler_maclaurin_zeta(s, a);
}

}  // namespace latticekit
