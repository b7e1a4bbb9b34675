#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

#include "latticekit/cbc.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

constexpr std::size_t kExplicitStateLimit = std::size_t{1} << 24;

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

struct CbcEngine::Impl {
  const CriterionContext* ctx;
  std::size_t d;
  unsigned threads;
  std::size_t n;
  WeightKind kind;
  std::vector<std::uint64_t> prefix;

  std::vector<long double> P;
  std::vector<long double> Q;

  // Product: running product A_k = ∏_{j<s} (1 + γ_j ω_k(z_j)).
  std::vector<long double> prod_state;
  // POD: e_{ℓ,k}, ℓ = 0..accepted, stored row-major by ℓ.
  std::vector<long double> pod_state;
  // SPOD: coefficients a_{L,k} of ∏_{j<s} (1 + ω_k(z_j) g_j(x)), row-major by L.
  std::vector<long double> spod_state;
  // Explicit: G_k[Y] over subsets Y of the not-yet-accepted coordinates,
  // bit 0 being the next coordinate; row-major by k.
  std::vector<long double> explicit_state;
  std::size_t explicit_width{0};

  std::vector<long double> gamma;
  std::vector<long double> order;
  std::vector<std::vector<long double>> gamma_nu;
  unsigned sigma{0};

  Impl(const CriterionContext& c, std::size_t dim, unsigned t)
      : ctx(&c), d(dim), threads(resolve_threads(t)), n(static_cast<std::size_t>(c.n())) {
    const WeightModel& w = c.params().weights;
    if (d < 1) throw InvalidParameter("d must be at least 1");
    if (w.dimension() < d) throw InvalidParameter("weights cover fewer than d coordinates");
    kind = w.kind();
    gamma.assign(w.gamma().begin(), w.gamma().end());
    order.assign(w.order_factors().begin(), w.order_factors().end());
    sigma = w.sigma();
    for (const auto& row : w.gamma_nu()) gamma_nu.emplace_back(row.begin(), row.end());
    switch (kind) {
      case WeightKind::Product:
        prod_state.assign(n, 1.0L);
        break;
      case WeightKind::Pod:
        pod_state.assign(n, 1.0L);
        break;
      case WeightKind::Spod:
        spod_state.assign(n, 1.0L);
        break;
      case WeightKind::Explicit: {
        if (d > 40 || (n << d) > kExplicitStateLimit || (n << d) >> d != n) {
          throw CapacityError("explicit-weight CBC state n*2^d exceeds " +
                              std::to_string(kExplicitStateLimit));
        }
        explicit_width = std::size_t{1} << d;
        std::vector<long double> initial(explicit_width);
        for (std::size_t Y = 0; Y < explicit_width; ++Y) initial[Y] = w.weight(CoordinateMask{Y});
        explicit_state.resize(n * explicit_width);
        for (std::size_t k = 0; k < n; ++k) {
          std::copy(initial.begin(), initial.end(), explicit_state.begin() + k * explicit_width);
        }
        break;
      }
    }
    rebuild();
  }

  long double omega(std::size_t k, std::uint64_t z) const { return ctx->omega_at(k, z); }

  void rebuild() {
    P.assign(n, 0.0L);
    Q.assign(n, 0.0L);
    if (prefix.size() >= d) return;
    switch (kind) {
      case WeightKind::Product: rebuild_product(); break;
      case WeightKind::Pod: rebuild_pod(); break;
      case WeightKind::Spod: rebuild_spod(); break;
      case WeightKind::Explicit: rebuild_explicit(); break;
    }
  }

  void rebuild_product() {
    const std::size_t c = prefix.size();
    const long double z2 = ctx->zeta2a();
    long double F = 1.0L;
    for (std::size_t j = c + 1; j < d; ++j) F *= 1.0L + z2 * gamma[j] * gamma[j];
    const long double g = gamma[c];
    for (std::size_t k = 0; k < n; ++k) {
      const long double a2 = prod_state[k] * prod_state[k] * F;
      P[k] = 2.0L * g * a2;
      Q[k] = g * g * a2;
    }
  }

  void rebuild_pod() {
    const std::size_t c = prefix.size();
    const long double z2 = ctx->zeta2a();
    const std::size_t rest = d - 1 - c;
    // c_m = [2ζ(2α)]^m e_m(γ_{c+1}^2, ..., γ_{d-1}^2)
    std::vector<long double> cm(rest + 1, 0.0L);
    cm[0] = 1.0L;
    for (std::size_t j = c + 1; j < d; ++j) {
      const long double x = z2 * gamma[j] * gamma[j];
      for (std::size_t m = j - c; m >= 1; --m) cm[m] += x * cm[m - 1];
    }
    const long double g = gamma[c];
    std::vector<long double> A(rest + 2);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t m = 0; m <= rest + 1; ++m) {
        long double acc = 0.0L;
        for (std::size_t l = 0; l <= c; ++l) acc += order[l + m] * pod_state[l * n + k];
        A[m] = acc;
      }
      long double p = 0.0L;
      long double q = 0.0L;
      for (std::size_t m = 0; m <= rest; ++m) {
        p += cm[m] * A[m] * A[m + 1];
        q += cm[m] * A[m + 1] * A[m + 1];
      }
      P[k] = 2.0L * g * p;
      Q[k] = g * g * q;
    }
  }

  // b = a * g_c for node k, degree σ(c+1).
  void spod_b(std::size_t k, std::vector<long double>& b) const {
    const std::size_t c = prefix.size();
    const std::size_t deg_a = sigma * c;
    std::fill(b.begin(), b.end(), 0.0L);
    for (std::size_t L = 0; L <= deg_a; ++L) {
      const long double a = spod_state[L * n + k];
      for (unsigned nu = 1; nu <= sigma; ++nu) b[L + nu] += a * gamma_nu[c][nu - 1];
    }
  }

  void rebuild_spod() {
    const std::size_t c = prefix.size();
    const long double z2 = ctx->zeta2a();
    const std::size_t deg_a = sigma * c;
    const std::size_t deg_b = sigma * (c + 1);
    const std::size_t R = sigma * (d - 1 - c);
    // H_{x,y}: coefficients of ∏_{j>c} (1 + 2ζ(2α) g_j(x) g_j(y)).
    std::vector<long double> H((R + 1) * (R + 1), 0.0L);
    H[0] = 1.0L;
    std::size_t deg = 0;
    for (std::size_t j = c + 1; j < d; ++j) {
      std::vector<long double> next = H;
      for (std::size_t x = 0; x <= deg; ++x) {
        for (std::size_t y = 0; y <= deg; ++y) {
          const long double h = H[x * (R + 1) + y];
          if (h == 0.0L) continue;
          for (unsigned nu = 1; nu <= sigma; ++nu) {
            for (unsigned mu = 1; mu <= sigma; ++mu) {
              next[(x + nu) * (R + 1) + y + mu] +=
                  z2 * h * gamma_nu[j][nu - 1] * gamma_nu[j][mu - 1];
            }
          }
        }
      }
      H = std::move(next);
      deg += sigma;
    }
    // W_{L,L'} = Σ_{x,y} Γ_{L+x} Γ_{L'+y} H_{x,y}, via X_{L,y} = Σ_x Γ_{L+x} H_{x,y}.
    const std::size_t B = deg_b + 1;
    std::vector<long double> X(B * (R + 1), 0.0L);
    for (std::size_t L = 0; L < B; ++L) {
      for (std::size_t y = 0; y <= R; ++y) {
        long double acc = 0.0L;
        for (std::size_t x = 0; x <= R; ++x) acc += order[L + x] * H[x * (R + 1) + y];
        X[L * (R + 1) + y] = acc;
      }
    }
    std::vector<long double> W(B * B, 0.0L);
    for (std::size_t L = 0; L < B; ++L) {
      for (std::size_t L2 = 0; L2 < B; ++L2) {
        long double acc = 0.0L;
        for (std::size_t y = 0; y <= R; ++y) acc += X[L * (R + 1) + y] * order[L2 + y];
        W[L * B + L2] = acc;
      }
    }
    std::vector<long double> b(B);
    std::vector<long double> Wb(B);
    for (std::size_t k = 0; k < n; ++k) {
      spod_b(k, b);
      for (std::size_t L = 0; L < B; ++L) {
        long double acc = 0.0L;
        for (std::size_t L2 = 1; L2 < B; ++L2) acc += W[L * B + L2] * b[L2];
        Wb[L] = acc;
      }
      long double p = 0.0L;
      long double q = 0.0L;
      for (std::size_t L = 0; L <= deg_a; ++L) p += spod_state[L * n + k] * Wb[L];
      for (std::size_t L = 1; L < B; ++L) q += b[L] * Wb[L];
      P[k] = 2.0L * p;
      Q[k] = q;
    }
  }

  void rebuild_explicit() {
    const long double z2 = ctx->zeta2a();
    const std::size_t width = explicit_width;
    std::vector<long double> cw(width / 2);
    for (std::size_t half = 0; half < width / 2; ++half) {
      cw[half] = std::pow(z2, static_cast<long double>(std::popcount(half)));
    }
    for (std::size_t k = 0; k < n; ++k) {
      const long double* G = explicit_state.data() + k * width;
      long double p = 0.0L;
      long double q = 0.0L;
      for (std::size_t half = 0; half < width / 2; ++half) {
        const long double e = G[half << 1];
        const long double f = G[(half << 1) | 1];
        p += cw[half] * e * f;
        q += cw[half] * f * f;
      }
      P[k] = 2.0L * p;
      Q[k] = q;
    }
  }

  long double evaluate(std::uint64_t z) const {
    if (prefix.size() >= d) throw InvalidParameter("all coordinates have been accepted");
    const long double z2 = ctx->zeta2a();
    const auto& table = ctx->omega_table();
    const std::uint64_t nn = n;
    const std::uint64_t step = z % nn;
    std::uint64_t idx = 0;
    CompensatedSum<long double> sum;
    for (std::size_t k = 0; k < n; ++k) {
      const long double w = table[idx];
      sum.add(w * P[k] + (w * w - z2) * Q[k]);
      idx += step;
      if (idx >= nn) idx -= nn;
    }
    return sum.value() / static_cast<long double>(n);
  }

  void accept(std::uint64_t z) {
    if (prefix.size() >= d) throw InvalidParameter("all coordinates have been accepted");
    if (z == 0 || z >= n || std::gcd<std::uint64_t>(z, n) != 1) {
      throw InvalidParameter("accepted component must be a unit modulo n");
    }
    const std::size_t c = prefix.size();
    switch (kind) {
      case WeightKind::Product:
        for (std::size_t k = 0; k < n; ++k) prod_state[k] *= 1.0L + gamma[c] * omega(k, z);
        break;
      case WeightKind::Pod: {
        std::vector<long double> next((c + 2) * n, 0.0L);
        for (std::size_t k = 0; k < n; ++k) {
          const long double x = gamma[c] * omega(k, z);
          next[k] = pod_state[k];
          for (std::size_t l = 1; l <= c + 1; ++l) {
            const long double keep = l <= c ? pod_state[l * n + k] : 0.0L;
            next[l * n + k] = keep + x * pod_state[(l - 1) * n + k];
          }
        }
        pod_state = std::move(next);
        break;
      }
      case WeightKind::Spod: {
        const std::size_t deg_a = sigma * c;
        const std::size_t deg_b = sigma * (c + 1);
        std::vector<long double> next((deg_b + 1) * n, 0.0L);
        std::vector<long double> b(deg_b + 1);
        for (std::size_t k = 0; k < n; ++k) {
          spod_b(k, b);
          const long double w = omega(k, z);
          for (std::size_t L = 0; L <= deg_b; ++L) {
            const long double a = L <= deg_a ? spod_state[L * n + k] : 0.0L;
            next[L * n + k] = a + w * b[L];
          }
        }
        spod_state = std::move(next);
        break;
      }
      case WeightKind::Explicit: {
        const std::size_t width = explicit_width / 2;
        std::vector<long double> next(n * width);
        for (std::size_t k = 0; k < n; ++k) {
          const long double w = omega(k, z);
          const long double* G = explicit_state.data() + k * explicit_width;
          long double* out = next.data() + k * width;
          for (std::size_t Y = 0; Y < width; ++Y) out[Y] = G[Y << 1] + w * G[(Y << 1) | 1];
        }
        explicit_state = std::move(next);
        explicit_width = width;
        break;
      }
    }
    prefix.push_back(z);
    rebuild();
  }
};

CbcEngine::CbcEngine(const CriterionContext& ctx, std::size_t d, unsigned threads)
    : impl_(std::make_unique<Impl>(ctx, d, threads)) {}
CbcEngine::~CbcEngine() = default;
CbcEngine::CbcEngine(CbcEngine&&) noexcept = default;
CbcEngine& CbcEngine::operator=(CbcEngine&&) noexcept = default;

const CriterionContext& CbcEngine::context() const noexcept { return *impl_->ctx; }
std::size_t CbcEngine::dimension() const noexcept { return impl_->d; }
std::size_t CbcEngine::accepted() const noexcept { return impl_->prefix.size(); }
const std::vector<std::uint64_t>& CbcEngine::prefix() const noexcept { return impl_->prefix; }

long double CbcEngine::evaluate(std::uint64_t candidate) const {
  return impl_->evaluate(candidate);
}

void CbcEngine::evaluate_all(std::span<const std::uint64_t> candidates,
                             std::span<long double> values) const {
  if (values.size() != candidates.size()) {
    throw InvalidParameter("value buffer must match the candidate list");
  }
  if (impl_->prefix.size() >= impl_->d) {
    throw InvalidParameter("all coordinates have been accepted");
  }
  const std::size_t count = candidates.size();
  const std::size_t workers =
      std::min<std::size_t>(impl_->threads, std::max<std::size_t>(1, count / 64));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) values[i] = impl_->evaluate(candidates[i]);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([this, candidates, values, begin, end] {
      for (std::size_t i = begin; i < end; ++i) values[i] = impl_->evaluate(candidates[i]);
    });
  }
}

std::vector<long double> CbcEngine::evaluate_units() const {
  const std::uint64_t n = impl_->n;
  std::vector<std::uint64_t> half;
  for (std::uint64_t r = 1; r <= n / 2; ++r) {
    if (std::gcd(r, n) == 1) half.push_back(r);
  }
  std::vector<long double> vals(half.size());
  evaluate_all(half, vals);
  std::vector<long double> table(n, 0.0L);
  for (std::size_t i = 0; i < half.size(); ++i) {
    table[half[i]] = vals[i];
    table[n - half[i]] = vals[i];
  }
  return table;
}

void CbcEngine::accept(std::uint64_t z) { impl_->accept(z); }

std::size_t tie_break_argmin(std::span<const long double> values) {
  if (values.empty()) throw InvalidParameter("argmin of an empty candidate list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[best] - 1e-13L * std::fabs(values[best])) best = i;
  }
  return best;
}

}  // namespace latticekit
