#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "latticekit/korobov.hpp"

namespace latticekit {

/// Least-squares line through (log n, log S); the empirical rate is -slope.
struct RateFit {
  std::vector<double> log_n;
  std::vector<double> log_s;
  double slope{0.0};
  double intercept{0.0};
  /// Root-mean-square residual of the fit.
  double residual{0.0};
};

/// Needs at least three points with positive n and S.
RateFit fit_rate(std::span<const double> n, std::span<const double> S);

struct RatePoint {
  std::uint64_t n{0};
  double S{0.0};
};

struct RateExperiment {
  std::vector<RatePoint> points;
  RateFit fit;
};

/// Algorithm 1 at every n, then the fit of S against n. progress, when set,
/// is called after each n.
RateExperiment run_rate_experiment(const SpaceParams& params, std::span<const std::uint64_t> ns,
                                   unsigned threads = 0,
                                   const std::function<void(const RatePoint&)>& progress = {});

/// 2^lo .. 2^hi.
std::vector<std::uint64_t> powers_of_two(unsigned lo, unsigned hi);
/// The prime point counts used in the numerical experiments.
std::vector<std::uint64_t> experiment_primes();

}  // namespace latticekit
