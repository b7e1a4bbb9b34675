#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "latticekit/weights.hpp"

namespace latticekit {

/// Weighted Korobov space. α is the decay exponent of the Fourier
/// coefficients: r(h) = γ_{supp(h)}^{-1} ∏ |h_j|^α. Some authors write 2α for
/// the same quantity; this library never does.
struct SpaceParams {
  std::size_t d{1};
  double alpha{2.0};
  WeightModel weights{WeightModel::product({1.0})};

  SpaceParams() = default;
  SpaceParams(std::size_t d, double alpha, WeightModel weights);
};

struct FrequencyIndex {
  std::vector<std::int64_t> h;

  CoordinateMask support_mask() const;
  std::vector<std::size_t> support() const;
  auto operator<=>(const FrequencyIndex&) const = default;
};

/// A_d(M) = {h : r(h) <= M} in lexicographic order.
struct IndexSet {
  double M{0.0};
  std::size_t d{0};
  std::vector<FrequencyIndex> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool contains(const FrequencyIndex& h) const;
};

/// x - floor(x), clamped into [0, 1).
double frac(double x);
long double frac(long double x);

/// r(h); +infinity when γ_{supp(h)} = 0.
double r_value(const SpaceParams& params, const FrequencyIndex& h);
/// 1/r(h) = γ_{supp(h)} ∏ |h_j|^{-α}, never dividing by a weight.
double r_reciprocal(const SpaceParams& params, const FrequencyIndex& h);

/// ω(α, x) = Σ_{h≠0} e^{2πihx} |h|^{-α}.
double omega(double alpha, double x);
long double omega_ld(double alpha, long double x);

/// K_d(x, y) = Σ_u γ_u ∏_{j∈u} ω(α, frac(x_j - y_j)).
double kernel_value(const SpaceParams& params, std::span<const double> x,
                    std::span<const double> y);

inline constexpr std::size_t kDefaultIndexSetCap = 10'000'000;

IndexSet enumerate_index_set(const SpaceParams& params, double M,
                             std::size_t cap = kDefaultIndexSetCap);

/// (Σ_u γ_u^q c^{|u|}, Σ_{u≠∅} |u| γ_u^q c^{|u|}) over u ⊆ {0..d-1}.
std::pair<long double, long double> weighted_power_sums(const WeightModel& weights,
                                                        std::size_t d, double q,
                                                        long double c);

/// C_1(q) = Σ_u γ_u^q [2ζ(αq)]^{|u|}.
double c1_constant(const SpaceParams& params, double q);
/// C_2(τ) = γ_{{1}}^{(τ-1)/(ατ)} · τ/(1-τ) · C_1(τ)^{1/τ}.
double c2_constant(const SpaceParams& params, double tau);

/// Lower and upper bounds on |A_d(M)|; lower is 0 when M < 1.
std::pair<double, double> cardinality_bounds(const SpaceParams& params, double M, double q);

/// Bound on Σ_{h∉A_d(M)} 1/r(h), valid for M >= 1 and τ ∈ (1/α, 1).
double truncation_tail_bound(const SpaceParams& params, double M, double tau);

/// One index per line, d whitespace-separated integers.
void write_index_set(std::ostream& out, const IndexSet& set);

}  // namespace latticekit
