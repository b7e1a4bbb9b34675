#include "latticekit/experiments.hpp"

#include <cmath>

#include "latticekit/cbc.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

RateFit fit_rate(std::span<const double> n, std::span<const double> S) {
  if (n.size() != S.size()) throw InvalidParameter("rate fit needs matching n and S lists");
  if (n.size() < 3) throw InvalidParameter("rate fit needs at least three points");
  RateFit fit;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] > 0.0) || !(S[i] > 0.0)) throw InvalidParameter("rate fit needs positive n and S");
    fit.log_n.push_back(std::log(n[i]));
    fit.log_s.push_back(std::log(S[i]));
  }
  const auto count = static_cast<long double>(n.size());
  CompensatedSum<long double> sx;
  CompensatedSum<long double> sy;
  for (std::size_t i = 0; i < n.size(); ++i) {
    sx.add(fit.log_n[i]);
    sy.add(fit.log_s[i]);
  }
  const long double mx = sx.value() / count;
  const long double my = sy.value() / count;
  CompensatedSum<long double> sxx;
  CompensatedSum<long double> sxy;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const long double dx = fit.log_n[i] - mx;
    sxx.add(dx * dx);
    sxy.add(dx * (fit.log_s[i] - my));
  }
  if (!(sxx.value() > 0.0L)) throw InvalidParameter("rate fit needs at least two distinct n");
  const long double slope = sxy.value() / sxx.value();
  const long double intercept = my - slope * mx;
  CompensatedSum<long double> rss;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const long double r = fit.log_s[i] - (intercept + slope * fit.log_n[i]);
    rss.add(r * r);
  }
  fit.slope = static_cast<double>(slope);
  fit.intercept = static_cast<double>(intercept);
  fit.residual = static_cast<double>(std::sqrt(rss.value() / count));
  return fit;
}

RateExperiment run_rate_experiment(const SpaceParams& params, std::span<const std::uint64_t> ns,
                                   unsigned threads,
                                   const std::function<void(const RatePoint&)>& progress) {
  RateExperiment out;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::uint64_t n : ns) {
    const CriterionContext ctx(n, params);
    const GeneratingVector gv = cbc_construct(ctx, params.d, threads);
    out.points.push_back({n, gv.S()});
    xs.push_back(static_cast<double>(n));
    ys.push_back(out.points.back().S);
    if (progress) progress(out.points.back());
  }
  out.fit = fit_rate(xs, ys);
  return out;
}

std::vector<std::uint64_t> powers_of_two(unsigned lo, unsigned hi) {
  if (hi < lo || hi > 40) throw InvalidParameter("invalid power-of-two range");
  std::vector<std::uint64_t> out;
  for (unsigned m = lo; m <= hi; ++m) out.push_back(std::uint64_t{1} << m);
  return out;
}

std::vector<std::uint64_t> experiment_primes() {
  return {503, 1009, 2003, 4001, 8009, 16007, 32003, 64007, 128021};
}

}  // namespace latticekit
