#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latticekit/criterion.hpp"
#include "latticekit/korobov.hpp"

namespace latticekit {

/// A chosen M together with the resulting worst-case error bound and the
/// free parameters used. Unused parameters are NaN.
struct BoundReport {
  double S{0.0};
  double M{0.0};
  double bound{0.0};
  double lambda{0.0};
  double tau{0.0};
  double q{0.0};
};

/// Upper bound on S guaranteed by Algorithm 1:
/// [κ/φ(n) (Σ_{u≠∅} |u| γ_u^λ c^{|u|}) (Σ_u γ_u^λ c^{|u|})]^{1/λ},
/// c = 2ζ(αλ), κ = 2^{2αλ+1} + 1, λ ∈ (1/α, 1].
double suapp_bound(const SpaceParams& params, std::uint64_t n, double lambda);

/// √2 κ^{1/(4λ)} φ(n)^{-1/(4λ)} (Σ_u max(|u|,1) γ_u^λ c^{|u|})^{1/(2λ)}.
double l2_rate_bound(const SpaceParams& params, std::uint64_t n, double lambda);

/// M = S^{-1/2}, bound = √2 S^{1/4} = (1/M + M S)^{1/2}.
BoundReport l2_error_bound(double S);

/// L∞ bound with sum(T) <= M |A_d(M)| S and q = τ. Throws BoundNotApplicable
/// when the balancing M is below 1.
BoundReport linf_error_bound_v1(const SpaceParams& params, double S, double tau);
BoundReport linf_error_bound_v1(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                                double tau);
/// (C_2 M^{-(1-τ)/(ατ)} + 3 M^{τ+1} C_1(τ) S)^{1/2} for an arbitrary M.
double linf_v1_two_term(const SpaceParams& params, double S, double tau, double M);

/// L∞ bound through S̃ = S_{n,d,α/2,√γ}(z); requires α > 2 and τ ∈ (1/α, 1/2).
BoundReport linf_error_bound_v2(const SpaceParams& params, double S_tilde, double tau);
BoundReport linf_error_bound_v2(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                                double tau);
/// (C_2 M^{-(1-τ)/(ατ)} + 3 M S̃^2)^{1/2}.
double linf_v2_two_term(const SpaceParams& params, double S_tilde, double tau, double M);

/// Constants of the L∞ convergence statements.
double c3_constant(const SpaceParams& params, double tau);
double c4_constant(const SpaceParams& params, double tau);
/// C_3 φ(n)^{-r_1} and C_4 φ(n)^{-r_2}.
double linf_v1_rate_bound(const SpaceParams& params, std::uint64_t n, double tau);
double linf_v2_rate_bound(const SpaceParams& params, std::uint64_t n, double tau);

/// Order of the penalty of an embedded sequence:
/// ((p/(p-1)) Σ_{m=m1}^{m2} (p^{αλ-1})^m)^{1/λ}.
double embedded_penalty_bound(std::uint64_t p, unsigned m1, unsigned m2, double alpha,
                              double lambda);

/// 20 log-spaced points strictly inside (lo, hi), optionally including hi.
std::vector<double> log_grid(double lo, double hi, bool include_hi, std::size_t count = 20);

/// Smallest bound over the grid, skipping parameters where the bound does
/// not apply. Empty when no grid point applies.
std::optional<BoundReport> best_suapp_bound(const SpaceParams& params, std::uint64_t n);
std::optional<BoundReport> best_linf_v1(const SpaceParams& params, double S);
std::optional<BoundReport> best_linf_v2(const SpaceParams& params, double S_tilde);

/// S_{n,d,α/2,√γ}(z).
double transformed_criterion(const CriterionContext& ctx, std::span<const std::uint64_t> z);

}  // namespace latticekit
