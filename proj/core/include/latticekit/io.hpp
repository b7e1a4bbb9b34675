#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latticekit/approx.hpp"
#include "latticekit/cbc.hpp"
#include "latticekit/weights.hpp"

namespace latticekit {

/// %.17g, the shortest format that always round-trips a double.
std::string format_real(double x);

/// Deterministic text form of a weight model (17 significant digits).
std::string canonical_weight_text(const WeightModel& model);
/// FNV-1a 64-bit hash of canonical_weight_text, 16 lowercase hex digits.
std::string weight_hash(const WeightModel& model);

/// A weight block read from a `key = value` config. d and alpha are present
/// when the block sets them.
struct WeightConfig {
  WeightModel model;
  std::optional<std::size_t> d;
  std::optional<double> alpha;
};

/// Keys: kind (product | pod | spod | explicit | product-paper | pod-paper |
/// spod-paper), d, alpha, gamma, order, sigma, gamma_nu (rows separated by
/// ';'), and for explicit tables one `weight[j1,j2,...] = value` per subset
/// with zero-based coordinates. '#' starts a comment.
WeightConfig parse_weight_config(std::istream& in);
WeightConfig read_weight_config_file(const std::string& path);
void write_weight_config(std::ostream& out, const WeightModel& model, double alpha);

/// `product-paper`, `pod-paper`, `spod-paper` or `file:<path>`; file models
/// are truncated to d.
WeightModel resolve_weight_spec(const std::string& spec, std::size_t d, double alpha);

struct VectorFile {
  std::uint64_t n{0};
  std::size_t d{0};
  double alpha{0.0};
  std::string weights_hash;
  std::vector<std::uint64_t> z;
  // Present for embedded sequences only.
  std::optional<std::uint64_t> p;
  std::optional<unsigned> m1;
  std::optional<unsigned> m2;
  std::vector<double> x_values;
};

void write_vector_file(std::ostream& out, const GeneratingVector& gv, double alpha,
                       const WeightModel& weights);
void write_embedded_file(std::ostream& out, const EmbeddedResult& result, double alpha,
                         const WeightModel& weights);
/// Throws ParseError with a line number on malformed input, and
/// WeightHashMismatch when expected is given and does not match the file.
VectorFile read_vector_file(std::istream& in, const WeightModel* expected = nullptr);

/// n,d,s,T_s,cumulative_S
void write_criterion_csv(std::ostream& out, std::uint64_t n, std::span<const double> t_values);
/// h1..hd,re,im
void write_approximant_csv(std::ostream& out, const Approximant& approx);
/// quantity,value,lambda,tau
struct BoundRow {
  std::string quantity;
  double value{0.0};
  double lambda{0.0};
  double tau{0.0};
};
void write_bounds_csv(std::ostream& out, std::span<const BoundRow> rows);
/// s,X_s
void write_xratio_csv(std::ostream& out, std::span<const double> x_values);
/// m,n,S_embedded,S_baseline,max_X
void write_embedded_levels_csv(std::ostream& out, const EmbeddedResult& result);

}  // namespace latticekit
