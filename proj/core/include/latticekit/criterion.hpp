#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "latticekit/korobov.hpp"
#include "latticekit/weights.hpp"

namespace latticekit {

/// Immutable data shared by every criterion evaluation for one n:
/// omega_table[i] = ω(α, i/n) and zeta2a = 2ζ(2α).
class CriterionContext {
 public:
  CriterionContext(std::uint64_t n, SpaceParams params);

  std::uint64_t n() const noexcept { return n_; }
  const SpaceParams& params() const noexcept { return params_; }
  std::size_t d() const noexcept { return params_.d; }
  double alpha() const noexcept { return params_.alpha; }

  const std::vector<long double>& omega_table() const noexcept { return omega_; }
  long double omega_at(std::uint64_t k, std::uint64_t z) const noexcept {
    return omega_[static_cast<std::size_t>((k * z) % n_)];
  }
  long double zeta2a() const noexcept { return zeta2a_; }

 private:
  std::uint64_t n_;
  SpaceParams params_;
  std::vector<long double> omega_;
  long double zeta2a_;
};

/// (1/n) Σ_k D_k², D_k = Σ_{u ⊆ {1:s}} β_u ∏_{j∈u} ω((k z_j mod n)/n), s = z.size().
double full_pair(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                 const SubsetWeights& beta);

/// θ_{n,s,α}(z; β) for s = z.size() >= 1.
double theta(const CriterionContext& ctx, std::span<const std::uint64_t> z,
             const SubsetWeights& beta);
long double theta_ld(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                     const SubsetWeights& beta);

/// T_{n,d,s}(z_1..z_s) for s = z.size(), evaluated from θ with the weight
/// kind's own path.
double t_component(const CriterionContext& ctx, std::size_t d, std::span<const std::uint64_t> z);

/// Same quantity through the explicit w-enumeration path, whatever the
/// weight kind (d - s <= 20).
double t_component_enumerated(const CriterionContext& ctx, std::size_t d,
                              std::span<const std::uint64_t> z);

struct CriterionReport {
  double S{0.0};
  std::vector<double> t_values;
};

/// S = Σ_s T_s for z of length d = ctx.d().
CriterionReport s_criterion(const CriterionContext& ctx, std::span<const std::uint64_t> z);

/// Interval evaluation of a positive lattice sum: estimate is the midpoint,
/// tail the full width of [lower, upper].
struct BoundedValue {
  double estimate{0.0};
  double tail{0.0};
  double lower{0.0};
  double upper{0.0};
};

/// Direct evaluation of S from its definition, summing |k| <= radius in each
/// coordinate with certified bounds on the remainder. d <= 3, radius >= n.
BoundedValue brute_force_s(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                           std::uint64_t radius);

/// brute_force_s with the radius doubled from max(n, 1024) until
/// tail < rel_tol * estimate.
BoundedValue brute_force_s_certified(const CriterionContext& ctx,
                                     std::span<const std::uint64_t> z, double rel_tol = 1e-8);

/// E = Σ_{h∈A_d(M)} Σ_{ℓ≠0, ℓ·z≡0} 1/r(h+ℓ). Validation scale only
/// (d <= 3, |A_d(M)| <= 1e5).
BoundedValue e_criterion(const CriterionContext& ctx, std::span<const std::uint64_t> z, double M);

}  // namespace latticekit
