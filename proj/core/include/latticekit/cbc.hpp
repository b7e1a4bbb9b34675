#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "latticekit/criterion.hpp"
#include "latticekit/korobov.hpp"

namespace latticekit {

std::uint64_t euler_phi(std::uint64_t n);
/// {1 <= z <= n-1 : gcd(z, n) = 1}, ascending.
std::vector<std::uint64_t> units(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Incremental evaluator of T_{n,d,s}(z_1..z_{s-1}, candidate) for the next
/// coordinate s. Writing D_k = A_k + ω_k(z_s) B_k for the kernel sums at
/// node k, T_s is linear in the per-node quantities
///   P_k = 2 Σ_w [2ζ(2α)]^{|w|} A_k^w B_k^w,  Q_k = Σ_w [2ζ(2α)]^{|w|} (B_k^w)^2,
/// so each candidate costs O(n) once P and Q are known. P and Q are rebuilt
/// after every accepted coordinate from a per-node state whose shape depends
/// on the weight kind.
class CbcEngine {
 public:
  /// threads = 0 uses the hardware concurrency.
  CbcEngine(const CriterionContext& ctx, std::size_t d, unsigned threads = 0);
  ~CbcEngine();
  CbcEngine(CbcEngine&&) noexcept;
  CbcEngine& operator=(CbcEngine&&) noexcept;

  const CriterionContext& context() const noexcept;
  std::size_t dimension() const noexcept;
  /// Number of coordinates accepted so far.
  std::size_t accepted() const noexcept;
  const std::vector<std::uint64_t>& prefix() const noexcept;

  /// T_s for z_s = candidate, s = accepted() + 1.
  long double evaluate(std::uint64_t candidate) const;

  /// evaluate() for every candidate; values[i] belongs to candidates[i].
  /// Results do not depend on the thread count.
  void evaluate_all(std::span<const std::uint64_t> candidates, std::span<long double> values) const;

  /// T_s at every unit r of n, returned as a table indexed by r (entries at
  /// non-units are zero). Only r <= n/2 is evaluated; T(n-r) = T(r) exactly.
  std::vector<long double> evaluate_units() const;

  void accept(std::uint64_t z);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Argmin with the library's tie rule: scan ascending and move only on an
/// improvement larger than 1e-13 relative.
std::size_t tie_break_argmin(std::span<const long double> values);

struct GeneratingVector {
  std::uint64_t n{0};
  std::size_t d{0};
  std::vector<std::uint64_t> z;
  std::vector<double> t_values;

  double S() const;
};

/// S(z) with the per-coordinate terms evaluated by a CbcEngine; agrees with
/// s_criterion but costs O(n d) for product weights.
CriterionReport s_criterion_fast(const CriterionContext& ctx, std::span<const std::uint64_t> z,
                                 unsigned threads = 1);

GeneratingVector cbc_construct(const CriterionContext& ctx, std::size_t d, unsigned threads = 0);

struct EmbeddedResult {
  std::uint64_t p{2};
  unsigned m1{1};
  unsigned m2{2};
  std::size_t d{0};
  std::vector<std::uint64_t> z_emb;
  /// baselines[i] is the Algorithm 1 vector for n = p^{m1+i}.
  std::vector<GeneratingVector> baselines;
  std::vector<double> x_values;
  /// per_m_t[i][s] = T_{p^{m1+i},d,s}(z_emb).
  std::vector<std::vector<double>> per_m_t;
  /// S_{p^m}(z_emb) for each m.
  std::vector<double> per_m_s;

  double max_x() const;
};

EmbeddedResult cbc_construct_embedded(std::uint64_t p, unsigned m1, unsigned m2,
                                      const SpaceParams& params, unsigned threads = 0);

}  // namespace latticekit
