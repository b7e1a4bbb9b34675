#pragma once

#include <cmath>

namespace latticekit {

/// Neumaier-compensated accumulator. The summation order is whatever order
/// add() is called in, so callers that need determinism fix the loop order.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) noexcept {
    const T t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  T value() const noexcept { return sum_ + comp_; }

 private:
  T sum_{0};
  T comp_{0};
};

/// Riemann zeta for real s > 1. Euler-Maclaurin summation with a Bernoulli
/// tail, accurate to long double precision; results are memoised per s.
long double riemann_zeta(long double s);

/// Hurwitz zeta ζ(s, a) for real s != 1 and a > 0, including the analytic
/// continuation to s < 1 (Euler-Maclaurin remains valid there).
long double hurwitz_zeta(long double s, long double a);

/// Bernoulli number B_k (B_1 = -1/2).
long double bernoulli_number(unsigned k);

/// Bernoulli polynomial B_k(x).
long double bernoulli_polynomial(unsigned k, long double x);

/// log(k!) via lgamma.
long double log_factorial(unsigned k);

}  // namespace latticekit
