#include "latticekit/weights.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

void check_nonneg(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InvalidParameter(std::string(what) + " must be finite and nonnegative");
  }
}

}  // namespace

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Explicit: return "explicit";
    case WeightKind::Product: return "product";
    case WeightKind::Pod: return "pod";
    case WeightKind::Spod: return "spod";
  }
  return "unknown";
}

WeightModel WeightModel::product(std::vector<double> gamma) {
  WeightModel m;
  m.kind_ = WeightKind::Product;
  m.d_ = gamma.size();
  m.gamma_ = std::move(gamma);
  m.validate();
  return m;
}

WeightModel WeightModel::pod(std::vector<double> order_factors, std::vector<double> gamma) {
  WeightModel m;
  m.kind_ = WeightKind::Pod;
  m.d_ = gamma.size();
  m.order_ = std::move(order_factors);
  m.gamma_ = std::move(gamma);
  m.validate();
  return m;
}

WeightModel WeightModel::spod(unsigned sigma, std::vector<double> order_factors,
                              std::vector<std::vector<double>> gamma_nu) {
  WeightModel m;
  m.kind_ = WeightKind::Spod;
  m.sigma_ = sigma;
  m.d_ = gamma_nu.size();
  m.order_ = std::move(order_factors);
  m.gamma_nu_ = std::move(gamma_nu);
  m.validate();
  return m;
}

WeightModel WeightModel::explicit_table(std::size_t d, std::map<CoordinateMask, double> table) {
  WeightModel m;
  m.kind_ = WeightKind::Explicit;
  m.d_ = d;
  m.table_ = std::move(table);
  m.validate();
  return m;
}

void WeightModel::validate() const {
  switch (kind_) {
    case WeightKind::Product:
      for (double g : gamma_) check_nonneg(g, "gamma_j");
      break;
    case WeightKind::Pod:
      if (order_.size() != d_ + 1) {
        throw InvalidParameter("POD weights need order factors Gamma_0..Gamma_d");
      }
      for (double g : gamma_) check_nonneg(g, "gamma_j");
      for (double g : order_) check_nonneg(g, "Gamma_l");
      if (order_[0] != 1.0) throw InvalidParameter("Gamma_0 must equal 1");
      break;
    case WeightKind::Spod:
      if (sigma_ < 1) throw InvalidParameter("SPOD sigma must be >= 1");
      if (order_.size() < sigma_ * d_ + 1) {
        throw InvalidParameter("SPOD weights need order factors Gamma_0..Gamma_{sigma*d}");
      }
      for (double g : order_) check_nonneg(g, "Gamma_l");
      if (order_[0] != 1.0) throw InvalidParameter("Gamma_0 must equal 1");
      for (const auto& row : gamma_nu_) {
        if (row.size() != sigma_) {
          throw InvalidParameter("SPOD gamma_{j,nu} needs exactly sigma entries per coordinate");
        }
        for (double g : row) check_nonneg(g, "gamma_{j,nu}");
      }
      break;
    case WeightKind::Explicit: {
      if (d_ > 64) throw InvalidParameter("explicit weights support at most 64 coordinates");
      auto it = table_.find(0);
      if (it == table_.end() || it->second != 1.0) {
        throw InvalidParameter("explicit weights must map the empty set to 1");
      }
      for (const auto& [mask, value] : table_) {
        if (d_ < 64 && (mask >> d_) != 0) {
          throw OutOfRange("explicit weight references a coordinate beyond d");
        }
        check_nonneg(value, "gamma_u");
      }
      break;
    }
  }
}

double WeightModel::weight(std::span<const std::size_t> u) const {
  std::vector<std::size_t> coords(u.begin(), u.end());
  std::sort(coords.begin(), coords.end());
  if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
    throw InvalidParameter("coordinate subset contains a repeated index");
  }
  if (!coords.empty() && coords.back() >= d_) {
    throw OutOfRange("coordinate " + std::to_string(coords.back() + 1) +
                     " exceeds dimension " + std::to_string(d_));
  }
  switch (kind_) {
    case WeightKind::Product: {
      double w = 1.0;
      for (std::size_t j : coords) w *= gamma_[j];
      return w;
    }
    case WeightKind::Pod: {
      double w = order_[coords.size()];
      for (std::size_t j : coords) w *= gamma_[j];
      return w;
    }
    case WeightKind::Spod: {
      // Coefficients of prod_{j in u} (sum_nu gamma_{j,nu} x^nu); then sum Gamma_L c_L.
      std::vector<long double> poly{1.0L};
      for (std::size_t j : coords) {
        std::vector<long double> next(poly.size() + sigma_, 0.0L);
        for (std::size_t a = 0; a < poly.size(); ++a) {
          if (poly[a] == 0.0L) continue;
          for (unsigned nu = 1; nu <= sigma_; ++nu) {
            next[a + nu] += poly[a] * gamma_nu_[j][nu - 1];
          }
        }
        poly = std::move(next);
      }
      CompensatedSum<long double> sum;
      for (std::size_t L = 0; L < poly.size(); ++L) sum.add(poly[L] * order_[L]);
      return static_cast<double>(sum.value());
    }
    case WeightKind::Explicit: {
      CoordinateMask mask = 0;
      for (std::size_t j : coords) mask |= CoordinateMask{1} << j;
      auto it = table_.find(mask);
      if (it == table_.end()) throw MissingWeight("explicit weights have no entry for the requested subset");
      return it->second;
    }
  }
  return 0.0;
}

double WeightModel::weight(CoordinateMask u) const {
  std::vector<std::size_t> coords;
  for (std::size_t j = 0; j < 64; ++j) {
    if ((u >> j) & 1U) coords.push_back(j);
  }
  return weight(std::span<const std::size_t>(coords));
}

WeightModel WeightModel::truncated(std::size_t d) const {
  if (d > d_) throw InvalidParameter("cannot truncate weights to a larger dimension");
  switch (kind_) {
    case WeightKind::Product:
      return product(std::vector<double>(gamma_.begin(), gamma_.begin() + d));
    case WeightKind::Pod:
      return pod(std::vector<double>(order_.begin(), order_.begin() + d + 1),
                 std::vector<double>(gamma_.begin(), gamma_.begin() + d));
    case WeightKind::Spod:
      return spod(sigma_, std::vector<double>(order_.begin(), order_.begin() + sigma_ * d + 1),
                  std::vector<std::vector<double>>(gamma_nu_.begin(), gamma_nu_.begin() + d));
    case WeightKind::Explicit: {
      std::map<CoordinateMask, double> t;
      for (const auto& [mask, value] : table_) {
        if (d >= 64 || (mask >> d) == 0) t.emplace(mask, value);
      }
      return explicit_table(d, std::move(t));
    }
  }
  return *this;
}

WeightModel WeightModel::materialize(std::size_t d) const {
  if (d > d_) throw InvalidParameter("cannot materialize beyond the model dimension");
  if (d > kMaxEnumerationDimension) {
    throw CapacityError("subset enumeration is limited to d <= " +
                        std::to_string(kMaxEnumerationDimension));
  }
  std::map<CoordinateMask, double> t;
  const CoordinateMask count = CoordinateMask{1} << d;
  for (CoordinateMask mask = 0; mask < count; ++mask) t.emplace_hint(t.end(), mask, weight(mask));
  return explicit_table(d, std::move(t));
}

WeightModel named_weight_family(WeightFamily family, std::size_t d, double alpha) {
  if (d < 1) throw InvalidParameter("d must be at least 1");
  if (!(alpha >= 2.0) || std::floor(alpha) != alpha || std::fmod(alpha, 2.0) != 0.0) {
    throw InvalidParameter("named weight families require a positive even integer alpha");
  }
  const double log_a = static_cast<double>(log_factorial(static_cast<unsigned>(d))) /
                       static_cast<double>(d);
  const double a = std::exp(log_a);
  auto decay = [alpha](std::size_t j) {
    return std::pow(static_cast<double>(j + 1), -1.5 * alpha);
  };
  auto order_factors = [log_a](std::size_t max_order) {
    std::vector<double> g(max_order + 1);
    for (std::size_t l = 0; l <= max_order; ++l) {
      g[l] = std::exp(static_cast<double>(log_factorial(static_cast<unsigned>(l))) -
                      static_cast<double>(l) * log_a);
    }
    g[0] = 1.0;
    return g;
  };
  switch (family) {
    case WeightFamily::Product: {
      std::vector<double> gamma(d);
      for (std::size_t j = 0; j < d; ++j) gamma[j] = decay(j);
      return WeightModel::product(std::move(gamma));
    }
    case WeightFamily::Pod: {
      std::vector<double> gamma(d);
      for (std::size_t j = 0; j < d; ++j) gamma[j] = a * decay(j);
      return WeightModel::pod(order_factors(d), std::move(gamma));
    }
    case WeightFamily::Spod: {
      const auto sigma = static_cast<unsigned>(alpha / 2.0);
      std::vector<std::vector<double>> gamma_nu(d, std::vector<double>(sigma));
      for (std::size_t j = 0; j < d; ++j) {
        for (unsigned nu = 1; nu <= sigma; ++nu) {
          gamma_nu[j][nu - 1] = a * std::pow(2.0 * decay(j), static_cast<double>(nu));
        }
      }
      return WeightModel::spod(sigma, order_factors(sigma * d), std::move(gamma_nu));
    }
  }
  throw InvalidParameter("unknown weight family");
}

std::pair<WeightModel, double> sqrt_half_transform(const WeightModel& model, double alpha) {
  if (!(alpha > 2.0)) throw InvalidParameter("the square-root transform requires alpha > 2");
  if (model.kind() == WeightKind::Product) {
    std::vector<double> gamma = model.gamma();
    for (double& g : gamma) g = std::sqrt(g);
    return {WeightModel::product(std::move(gamma)), alpha / 2.0};
  }
  const std::size_t d = model.dimension();
  if (d > kMaxEnumerationDimension) {
    throw CapacityError("square-root transform of non-product weights is limited to d <= " +
                        std::to_string(kMaxEnumerationDimension));
  }
  std::map<CoordinateMask, double> t;
  const CoordinateMask count = CoordinateMask{1} << d;
  for (CoordinateMask mask = 0; mask < count; ++mask) {
    t.emplace_hint(t.end(), mask, std::sqrt(model.weight(mask)));
  }
  return {WeightModel::explicit_table(d, std::move(t)), alpha / 2.0};
}

SubsetWeights SubsetWeights::from(const WeightModel& model) {
  SubsetWeights w;
  w.kind = model.kind();
  w.gamma.assign(model.gamma().begin(), model.gamma().end());
  w.order.assign(model.order_factors().begin(), model.order_factors().end());
  w.sigma = model.sigma();
  for (const auto& row : model.gamma_nu()) w.gamma_nu.emplace_back(row.begin(), row.end());
  if (model.kind() == WeightKind::Explicit) w.table = &model.table();
  return w;
}

long double SubsetWeights::weighted_product_sum(std::span<const long double> values) const {
  const std::size_t s = values.size();
  switch (kind) {
    case WeightKind::Product: {
      long double p = scale;
      for (std::size_t j = 0; j < s; ++j) p *= 1.0L + gamma[j] * values[j];
      return p;
    }
    case WeightKind::Pod: {
      if (order.size() < s + 1) throw InvalidParameter("POD order factors too short");
      std::vector<long double> e(s + 1, 0.0L);
      e[0] = 1.0L;
      for (std::size_t j = 0; j < s; ++j) {
        const long double g = gamma[j] * values[j];
        for (std::size_t l = j + 1; l >= 1; --l) e[l] += g * e[l - 1];
      }
      CompensatedSum<long double> sum;
      for (std::size_t l = 0; l <= s; ++l) sum.add(order[l] * e[l]);
      return sum.value();
    }
    case WeightKind::Spod: {
      if (order.size() < sigma * s + 1) throw InvalidParameter("SPOD order factors too short");
      std::vector<long double> c(sigma * s + 1, 0.0L);
      c[0] = 1.0L;
      std::size_t degree = 0;
      for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t a = degree + 1; a-- > 0;) {
          if (c[a] == 0.0L) continue;
          const long double base = c[a] * values[j];
          for (unsigned nu = 1; nu <= sigma; ++nu) c[a + nu] += base * gamma_nu[j][nu - 1];
        }
        degree += sigma;
      }
      CompensatedSum<long double> sum;
      for (std::size_t l = 0; l <= degree; ++l) sum.add(order[l] * c[l]);
      return sum.value();
    }
    case WeightKind::Explicit: {
      if (s > kMaxEnumerationDimension) {
        throw CapacityError("explicit weights: subset enumeration limited to " +
                            std::to_string(kMaxEnumerationDimension) + " coordinates");
      }
      const CoordinateMask count = CoordinateMask{1} << s;
      std::vector<long double> prod(count);
      prod[0] = 1.0L;
      CompensatedSum<long double> sum;
      for (CoordinateMask mask = 0; mask < count; ++mask) {
        if (mask != 0) {
          const auto low = static_cast<std::size_t>(std::countr_zero(mask));
          prod[mask] = prod[mask & (mask - 1)] * values[low];
        }
        sum.add(value(mask) * prod[mask]);
      }
      return sum.value();
    }
  }
  return 0.0L;
}

long double SubsetWeights::value(CoordinateMask u) const {
  switch (kind) {
    case WeightKind::Product: {
      long double p = scale;
      for (std::size_t j = 0; u != 0; ++j, u >>= 1) {
        if (u & 1U) p *= gamma[j];
      }
      return p;
    }
    case WeightKind::Pod: {
      long double p = order[static_cast<std::size_t>(std::popcount(u))];
      for (std::size_t j = 0; u != 0; ++j, u >>= 1) {
        if (u & 1U) p *= gamma[j];
      }
      return p;
    }
    case WeightKind::Spod: {
      std::vector<long double> c{1.0L};
      for (std::size_t j = 0; u != 0; ++j, u >>= 1) {
        if (!(u & 1U)) continue;
        std::vector<long double> next(c.size() + sigma, 0.0L);
        for (std::size_t a = 0; a < c.size(); ++a) {
          for (unsigned nu = 1; nu <= sigma; ++nu) next[a + nu] += c[a] * gamma_nu[j][nu - 1];
        }
        c = std::move(next);
      }
      CompensatedSum<long double> sum;
      for (std::size_t l = 0; l < c.size(); ++l) sum.add(order[l] * c[l]);
      return sum.value();
    }
    case WeightKind::Explicit: {
      auto it = table->find(u | extra);
      if (it == table->end()) throw MissingWeight("explicit weights have no entry for the requested subset");
      return it->second;
    }
  }
  return 0.0L;
}

SubsetWeights SubsetWeights::with_coordinate(std::size_t j) const {
  SubsetWeights w = *this;
  switch (kind) {
    case WeightKind::Product:
      w.scale = scale * gamma[j];
      break;
    case WeightKind::Pod:
      w.order.assign(order.size() - 1, 0.0L);
      for (std::size_t l = 0; l + 1 < order.size(); ++l) w.order[l] = gamma[j] * order[l + 1];
      break;
    case WeightKind::Spod:
      w.order.assign(order.size() - sigma, 0.0L);
      for (std::size_t l = 0; l < w.order.size(); ++l) {
        long double acc = 0.0L;
        for (unsigned nu = 1; nu <= sigma; ++nu) acc += gamma_nu[j][nu - 1] * order[l + nu];
        w.order[l] = acc;
      }
      break;
    case WeightKind::Explicit:
      w.extra = extra | (CoordinateMask{1} << j);
      break;
  }
  return w;
}

}  // namespace latticekit
