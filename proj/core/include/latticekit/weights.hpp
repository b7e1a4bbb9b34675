#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latticekit {

/// Bit j set <=> coordinate j (zero-based) belongs to the subset.
using CoordinateMask = std::uint64_t;

enum class WeightKind { Explicit, Product, Pod, Spod };

enum class WeightFamily { Product, Pod, Spod };

std::string to_string(WeightKind kind);

/// Subset weights γ_u for u ⊆ {0, ..., d-1}. Coordinates are zero-based
/// throughout the library; γ_∅ = 1 for every variant.
///
/// Product:  γ_u = ∏_{j∈u} γ_j
/// POD:      γ_u = Γ_{|u|} ∏_{j∈u} γ_j,                       Γ_0 = 1
/// SPOD:     γ_u = Σ_{ν∈{1..σ}^{|u|}} Γ_{|ν|} ∏_{j∈u} γ_{j,ν_j}, Γ_0 = 1
/// Explicit: a table indexed by subset (d <= 64).
///
/// Immutable after construction.
class WeightModel {
 public:
  static WeightModel product(std::vector<double> gamma);
  /// order_factors holds Γ_0..Γ_d.
  static WeightModel pod(std::vector<double> order_factors, std::vector<double> gamma);
  /// order_factors holds Γ_0..Γ_{σd}; gamma_nu[j][ν-1] = γ_{j,ν}.
  static WeightModel spod(unsigned sigma, std::vector<double> order_factors,
                          std::vector<std::vector<double>> gamma_nu);
  /// The table must contain the empty set mapped to 1.
  static WeightModel explicit_table(std::size_t d, std::map<CoordinateMask, double> table);

  WeightKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return d_; }

  double weight(std::span<const std::size_t> u) const;
  double weight(CoordinateMask u) const;

  /// γ_{j} for the singleton {j}.
  double singleton(std::size_t j) const { return weight(CoordinateMask{1} << j); }

  // Variant parameters. Accessors for the wrong variant return empty data.
  const std::vector<double>& gamma() const noexcept { return gamma_; }
  const std::vector<double>& order_factors() const noexcept { return order_; }
  unsigned sigma() const noexcept { return sigma_; }
  const std::vector<std::vector<double>>& gamma_nu() const noexcept { return gamma_nu_; }
  const std::map<CoordinateMask, double>& table() const noexcept { return table_; }

  /// Same weights restricted to the first d coordinates (d <= dimension()).
  WeightModel truncated(std::size_t d) const;

  /// Explicit model holding weight(u) for every u ⊆ {0..d-1}; d <= 20.
  WeightModel materialize(std::size_t d) const;

  bool operator==(const WeightModel&) const = default;

 private:
  WeightModel() = default;
  void validate() const;

  WeightKind kind_{WeightKind::Product};
  std::size_t d_{0};
  std::vector<double> gamma_;
  std::vector<double> order_;
  unsigned sigma_{0};
  std::vector<std::vector<double>> gamma_nu_;
  std::map<CoordinateMask, double> table_;
};

/// The three weight families used in the numerical experiments:
///   product γ_j = j^{-1.5α};
///   POD     Γ_ℓ = ℓ!/a^ℓ, γ_j = a j^{-1.5α};
///   SPOD    σ = α/2, Γ_ℓ = ℓ!/a^ℓ, γ_{j,ν} = a (2 j^{-1.5α})^ν;
/// with j one-based in the formulas and a = (d!)^{1/d}. α must be a positive
/// even integer.
WeightModel named_weight_family(WeightFamily family, std::size_t d, double alpha);

/// Weights √γ_u paired with smoothness α/2 (requires α > 2). Product models
/// stay product; every other variant becomes an explicit table over the
/// model's dimension.
std::pair<WeightModel, double> sqrt_half_transform(const WeightModel& model, double alpha);

/// Largest dimension for which subset enumeration is attempted.
inline constexpr std::size_t kMaxEnumerationDimension = 20;

/// A subset-weight family β_u without the β_∅ = 1 normalisation. Used for
/// the shifted and restricted weight sequences that appear when a criterion
/// is split over coordinates. Parameters are held in long double.
///
/// Product:  β_u = scale ∏ γ_j
/// POD:      β_u = Γ_{|u|} ∏ γ_j
/// SPOD:     β_u = Σ_ν Γ_{|ν|} ∏ γ_{j,ν_j}
/// Explicit: β_u = table[u ∪ extra]
struct SubsetWeights {
  WeightKind kind{WeightKind::Product};
  long double scale{1.0L};
  std::vector<long double> gamma;
  std::vector<long double> order;
  unsigned sigma{0};
  std::vector<std::vector<long double>> gamma_nu;
  const std::map<CoordinateMask, double>* table{nullptr};
  CoordinateMask extra{0};

  static SubsetWeights from(const WeightModel& model);

  /// Σ_{u ⊆ {0..s-1}} β_u ∏_{j∈u} values[j] with s = values.size().
  long double weighted_product_sum(std::span<const long double> values) const;

  /// β_u for a subset of the first coordinates.
  long double value(CoordinateMask u) const;

  /// The family u ↦ β_{u ∪ {j}} for subsets u of {0..j-1}.
  SubsetWeights with_coordinate(std::size_t j) const;
};

}  // namespace latticekit
