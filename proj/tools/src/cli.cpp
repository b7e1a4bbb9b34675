#include "latticekit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latticekit/approx.hpp"
#include "latticekit/bounds.hpp"
#include "latticekit/cbc.hpp"
#include "latticekit/criterion.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/experiments.hpp"
#include "latticekit/io.hpp"

namespace latticekit::cli {

namespace {

// "-" means standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InvalidParameter("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct SpaceOptions {
  std::size_t d{0};
  double alpha{2.0};
  std::string weights{"product-paper"};
  unsigned threads{0};
};

SpaceParams make_params(const SpaceOptions& o) {
  if (o.d < 1) throw InvalidParameter("--d must be at least 1");
  if (!(o.alpha > 1.0)) throw InvalidParameter("--alpha must exceed 1");
  return SpaceParams(o.d, o.alpha, resolve_weight_spec(o.weights, o.d, o.alpha));
}

void add_space_options(CLI::App* cmd, SpaceOptions& o, bool d_required) {
  auto* d = cmd->add_option("--d", o.d, "Dimension");
  if (d_required) d->required();
  cmd->add_option("--alpha", o.alpha, "Smoothness alpha (decay |h|^-alpha)")->capture_default_str();
  cmd->add_option("--weights", o.weights,
                  "product-paper | pod-paper | spod-paper | file:<path>")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

// A lattice given either as a vector file or inline as --n and --z.
struct LatticeInput {
  std::string vector_path;
  std::uint64_t n{0};
  std::vector<std::uint64_t> z;
  SpaceOptions space;
};

struct LoadedLattice {
  SpaceParams params;
  std::uint64_t n{0};
  std::vector<std::uint64_t> z;
  std::optional<VectorFile> file;
};

void add_lattice_options(CLI::App* cmd, LatticeInput& in) {
  cmd->add_option("--vector", in.vector_path, "Generating-vector file");
  cmd->add_option("--n", in.n, "Number of points (overrides the file; components are reduced mod n)");
  cmd->add_option("--z", in.z, "Generating vector components")->delimiter(',');
  add_space_options(cmd, in.space, false);
}

LoadedLattice load_lattice(const LatticeInput& in) {
  LoadedLattice out;
  if (!in.vector_path.empty()) {
    if (!in.z.empty()) throw InvalidParameter("give either --vector or --z, not both");
    std::ifstream f(in.vector_path);
    if (!f) throw InvalidParameter("cannot open '" + in.vector_path + "'");
    SpaceOptions space = in.space;
    VectorFile probe = read_vector_file(f);
    space.d = probe.d;
    space.alpha = probe.alpha;
    out.params = make_params(space);
    if (weight_hash(out.params.weights) != probe.weights_hash) {
      throw WeightHashMismatch("vector file was built for weights " + probe.weights_hash +
                               ", --weights " + space.weights + " hashes to " +
                               weight_hash(out.params.weights));
    }
    out.n = in.n != 0 ? in.n : probe.n;
    for (auto zj : probe.z) out.z.push_back(zj % out.n);
    out.file = std::move(probe);
  } else {
    if (in.n == 0 || in.z.empty()) throw InvalidParameter("need --vector or both --n and --z");
    SpaceOptions space = in.space;
    if (space.d != 0 && space.d != in.z.size()) throw InvalidParameter("--d disagrees with --z");
    space.d = in.z.size();
    out.params = make_params(space);
    out.n = in.n;
    out.z = in.z;
  }
  if (out.n < 2) throw InvalidParameter("n must be at least 2");
  return out;
}

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

// Built-in real test functions, each a finite trigonometric polynomial.
std::function<double(std::span<const double>)> builtin_function(const std::string& name) {
  const double two_pi = 2.0 * std::numbers::pi;
  if (name == "cos-product") {
    return [two_pi](std::span<const double> x) {
      double v = 1.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double w = 1.0 / static_cast<double>((j + 1) * (j + 1));
        v *= 1.0 + w * std::cos(two_pi * x[j]);
      }
      return v;
    };
  }
  if (name == "sin-sum") {
    return [two_pi](std::span<const double> x) {
      double v = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        v += std::sin(two_pi * x[j]) / static_cast<double>(j + 1);
      }
      return v;
    };
  }
  throw InvalidParameter("unknown test function '" + name + "' (cos-product, sin-sum)");
}

int cmd_construct(std::uint64_t n, const SpaceOptions& space, const std::string& out,
                  const std::string& csv) {
  if (n < 2) throw InvalidParameter("--n must be at least 2");
  const SpaceParams params = make_params(space);
  const CriterionContext ctx(n, params);
  const GeneratingVector gv = cbc_construct(ctx, params.d, space.threads);
  Output vec(out);
  write_vector_file(vec.stream(), gv, params.alpha, params.weights);
  if (!csv.empty()) {
    Output c(csv);
    write_criterion_csv(c.stream(), n, gv.t_values);
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Lattice rules for function approximation in weighted Korobov spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "latticekit 0.1.0");

  // construct
  auto* construct = app.add_subcommand("construct", "Component-by-component construction for fixed n");
  std::uint64_t c_n = 0;
  SpaceOptions c_space;
  std::string c_out = "-";
  std::string c_csv;
  construct->add_option("--n", c_n, "Number of points")->required();
  add_space_options(construct, c_space, true);
  construct->add_option("--out", c_out, "Vector file ('-' for stdout)")->capture_default_str();
  construct->add_option("--csv", c_csv, "Criterion CSV (n,d,s,T_s,cumulative_S)");

  // construct-embedded
  auto* embedded = app.add_subcommand("construct-embedded",
                                      "Embedded lattice sequence for n = p^m, m1 <= m <= m2");
  std::uint64_t e_p = 2;
  unsigned e_m1 = 0;
  unsigned e_m2 = 0;
  SpaceOptions e_space;
  std::string e_out = "-";
  std::string e_csv;
  std::string e_levels;
  embedded->add_option("--p", e_p, "Prime base")->capture_default_str();
  embedded->add_option("--m1", e_m1, "Smallest exponent")->required();
  embedded->add_option("--m2", e_m2, "Largest exponent")->required();
  add_space_options(embedded, e_space, true);
  embedded->add_option("--out", e_out, "Embedded vector file ('-' for stdout)")->capture_default_str();
  embedded->add_option("--csv", e_csv, "X ratios CSV (s,X_s)");
  embedded->add_option("--levels-csv", e_levels,
                       "Per-m CSV (m,n,S_embedded,S_baseline,max_X)");

  // criterion
  auto* criterion = app.add_subcommand("criterion", "Evaluate S and its components T_s");
  LatticeInput k_in;
  std::string k_out = "-";
  add_lattice_options(criterion, k_in);
  criterion->add_option("--out", k_out, "CSV output ('-' for stdout)")->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Worst-case error bounds for a lattice");
  LatticeInput b_in;
  std::optional<double> b_tau;
  std::optional<double> b_lambda;
  std::string b_out = "-";
  add_lattice_options(bounds, b_in);
  bounds->add_option("--tau", b_tau, "tau for the L-infinity bounds (default: grid search)");
  bounds->add_option("--lambda", b_lambda, "lambda for the a priori bounds (default: grid search)");
  bounds->add_option("--out", b_out, "CSV output ('-' for stdout)")->capture_default_str();

  // approximate
  auto* approximate_cmd = app.add_subcommand("approximate", "Lattice approximation of sampled data");
  LatticeInput a_in;
  double a_M = 0.0;
  std::string a_samples;
  std::string a_function;
  bool a_nodes = false;
  std::string a_out = "-";
  add_lattice_options(approximate_cmd, a_in);
  approximate_cmd->add_option("--M", a_M, "Index set threshold: keep h with r(h) <= M");
  approximate_cmd->add_option("--samples", a_samples, "File with one sample per node, node order");
  approximate_cmd->add_option("--function", a_function, "Built-in test function: cos-product, sin-sum");
  approximate_cmd->add_flag("--nodes", a_nodes, "Write the lattice nodes as CSV and stop");
  approximate_cmd->add_option("--out", a_out, "CSV output ('-' for stdout)")->capture_default_str();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Numerical experiments");
  experiment->require_subcommand(1);
  auto* rates = experiment->add_subcommand("rates", "Convergence rate of S against n");
  SpaceOptions r_space;
  r_space.d = 10;
  unsigned r_lo = 6;
  unsigned r_hi = 13;
  bool r_primes = false;
  bool r_full = false;
  std::vector<std::uint64_t> r_ns;
  std::string r_out = "-";
  std::string r_fit;
  add_space_options(rates, r_space, false);
  auto* r_d_opt = rates->get_option("--d");
  r_d_opt->capture_default_str();
  auto* r_lo_opt = rates->add_option("--m-lo", r_lo, "Smallest exponent of n = 2^m")->capture_default_str();
  auto* r_hi_opt = rates->add_option("--m-hi", r_hi, "Largest exponent of n = 2^m")->capture_default_str();
  rates->add_flag("--primes", r_primes, "Use the prime point counts within the 2^m range");
  rates->add_option("--ns", r_ns, "Explicit list of n")->delimiter(',');
  rates->add_flag("--full-scale", r_full, "Full-scale run: n = 2^9..2^17, d = 100");
  rates->add_option("--out", r_out, "CSV of (n,S) ('-' for stdout)")->capture_default_str();
  rates->add_option("--fit-out", r_fit, "CSV with slope,intercept,residual,rate");

  auto* xratio = experiment->add_subcommand("xratio", "X_s of an embedded sequence");
  SpaceOptions x_space;
  x_space.d = 8;
  std::uint64_t x_p = 2;
  unsigned x_m1 = 4;
  unsigned x_m2 = 8;
  bool x_full = false;
  std::string x_out = "-";
  std::string x_levels;
  add_space_options(xratio, x_space, false);
  auto* x_d_opt = xratio->get_option("--d");
  x_d_opt->capture_default_str();
  xratio->add_option("--p", x_p, "Prime base")->capture_default_str();
  auto* x_m1_opt = xratio->add_option("--m1", x_m1, "Smallest exponent")->capture_default_str();
  auto* x_m2_opt = xratio->add_option("--m2", x_m2, "Largest exponent")->capture_default_str();
  xratio->add_flag("--full-scale", x_full, "Full-scale run: m = 9..17, d = 100");
  xratio->add_option("--out", x_out, "CSV of (s,X_s) ('-' for stdout)")->capture_default_str();
  xratio->add_option("--levels-csv", x_levels, "Per-m CSV (m,n,S_embedded,S_baseline,max_X)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorCategory::validation);
  }

  try {
    if (construct->parsed()) return cmd_construct(c_n, c_space, c_out, c_csv);

    if (embedded->parsed()) {
      const SpaceParams params = make_params(e_space);
      const EmbeddedResult result = cbc_construct_embedded(e_p, e_m1, e_m2, params, e_space.threads);
      Output out(e_out);
      write_embedded_file(out.stream(), result, params.alpha, params.weights);
      if (!e_csv.empty()) {
        Output c(e_csv);
        write_xratio_csv(c.stream(), result.x_values);
      }
      if (!e_levels.empty()) {
        Output c(e_levels);
        write_embedded_levels_csv(c.stream(), result);
      }
      return 0;
    }

    if (criterion->parsed()) {
      const LoadedLattice lat = load_lattice(k_in);
      const CriterionContext ctx(lat.n, lat.params);
      const CriterionReport report = s_criterion_fast(ctx, lat.z, k_in.space.threads);
      Output out(k_out);
      write_criterion_csv(out.stream(), lat.n, report.t_values);
      return 0;
    }

    if (bounds->parsed()) {
      const LoadedLattice lat = load_lattice(b_in);
      const SpaceParams& params = lat.params;
      const CriterionContext ctx(lat.n, params);
      const double S = s_criterion_fast(ctx, lat.z, b_in.space.threads).S;
      std::vector<BoundRow> rows;
      rows.push_back({"S", S, nan(), nan()});
      if (S > 0.0) {
        const BoundReport l2 = l2_error_bound(S);
        rows.push_back({"l2_M", l2.M, nan(), nan()});
        rows.push_back({"l2_bound", l2.bound, nan(), nan()});
      }
      if (b_lambda) {
        rows.push_back({"suapp_bound", suapp_bound(params, lat.n, *b_lambda), *b_lambda, nan()});
        rows.push_back({"l2_rate_bound", l2_rate_bound(params, lat.n, *b_lambda), *b_lambda, nan()});
      } else if (const auto best = best_suapp_bound(params, lat.n)) {
        rows.push_back({"suapp_bound", best->bound, best->lambda, nan()});
        rows.push_back({"l2_rate_bound", l2_rate_bound(params, lat.n, best->lambda), best->lambda, nan()});
      }
      auto add_linf = [&](const std::string& prefix, const std::optional<BoundReport>& r) {
        if (!r) {
          log_warning(prefix + " bound not applicable: the balancing M is below 1 for every tau");
          return;
        }
        rows.push_back({prefix + "_M", r->M, nan(), r->tau});
        rows.push_back({prefix + "_bound", r->bound, nan(), r->tau});
      };
      auto single = [&](auto&& fn) -> std::optional<BoundReport> {
        try {
          return fn();
        } catch (const BoundNotApplicable& e) {
          log_warning(e.what());
          return std::nullopt;
        }
      };
      if (S > 0.0) {
        add_linf("linf_v1", b_tau ? single([&] { return linf_error_bound_v1(params, S, *b_tau); })
                                  : best_linf_v1(params, S));
      }
      if (params.alpha > 2.0) {
        const double St = transformed_criterion(ctx, lat.z);
        rows.push_back({"S_tilde", St, nan(), nan()});
        if (St > 0.0) {
          const bool tau_ok = b_tau && *b_tau < 0.5;
          add_linf("linf_v2", tau_ok ? single([&] { return linf_error_bound_v2(params, St, *b_tau); })
                                     : best_linf_v2(params, St));
        }
      }
      if (lat.file && lat.file->p) {
        const double lambda = b_lambda.value_or(1.0);
        rows.push_back({"embedded_penalty",
                        embedded_penalty_bound(*lat.file->p, *lat.file->m1, *lat.file->m2,
                                               params.alpha, lambda),
                        lambda, nan()});
      }
      Output out(b_out);
      write_bounds_csv(out.stream(), rows);
      return 0;
    }

    if (approximate_cmd->parsed()) {
      const LoadedLattice lat = load_lattice(a_in);
      const LatticeSampler sampler = lattice_points(lat.n, lat.z);
      Output out(a_out);
      if (a_nodes) {
        for (std::size_t j = 0; j < sampler.d; ++j) out.stream() << (j ? "," : "") << "x" << j + 1;
        out.stream() << "\n";
        for (std::size_t k = 0; k < sampler.n; ++k) {
          const auto p = sampler.point(k);
          for (std::size_t j = 0; j < sampler.d; ++j) out.stream() << (j ? "," : "") << format_real(p[j]);
          out.stream() << "\n";
        }
        return 0;
      }
      if (!(a_M > 0.0)) throw InvalidParameter("--M must be positive");
      std::vector<double> samples;
      if (!a_samples.empty() == !a_function.empty()) {
        throw InvalidParameter("give exactly one of --samples and --function");
      }
      if (!a_samples.empty()) {
        std::ifstream f(a_samples);
        if (!f) throw InvalidParameter("cannot open '" + a_samples + "'");
        std::string line;
        std::size_t number = 0;
        while (std::getline(f, line)) {
          ++number;
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          try {
            samples.push_back(std::stod(line));
          } catch (const std::exception&) {
            throw ParseError(number, "expected a real sample value");
          }
        }
      } else {
        const auto f = builtin_function(a_function);
        for (std::size_t k = 0; k < sampler.n; ++k) samples.push_back(f(sampler.point(k)));
      }
      const Approximant approx = approximate(sampler, samples, lat.params, a_M);
      write_approximant_csv(out.stream(), approx);
      return 0;
    }

    if (rates->parsed()) {
      if (r_full) {
        log_warning("full-scale run: n up to 2^17 and d = 100 takes hours");
        if (r_lo_opt->count() == 0) r_lo = 9;
        if (r_hi_opt->count() == 0) r_hi = 17;
        if (r_d_opt->count() == 0) r_space.d = 100;
      }
      std::vector<std::uint64_t> ns = r_ns;
      if (ns.empty()) {
        if (r_primes) {
          const double lo = std::ldexp(1.0, static_cast<int>(r_lo)) * 0.9;
          const double hi = std::ldexp(1.0, static_cast<int>(r_hi)) * 1.1;
          for (auto p : experiment_primes()) {
            if (static_cast<double>(p) >= lo && static_cast<double>(p) <= hi) ns.push_back(p);
          }
        } else {
          ns = powers_of_two(r_lo, r_hi);
        }
      }
      const SpaceParams params = make_params(r_space);
      const RateExperiment result =
          run_rate_experiment(params, ns, r_space.threads, [](const RatePoint& p) {
            std::cerr << "n=" << p.n << " S=" << format_real(p.S) << "\n";
          });
      Output out(r_out);
      out.stream() << "n,S\n";
      for (const auto& p : result.points) out.stream() << p.n << "," << format_real(p.S) << "\n";
      if (!r_fit.empty()) {
        Output f(r_fit);
        f.stream() << "slope,intercept,residual,rate\n"
                   << format_real(result.fit.slope) << "," << format_real(result.fit.intercept)
                   << "," << format_real(result.fit.residual) << ","
                   << format_real(-result.fit.slope) << "\n";
      }
      std::cerr << "slope=" << format_real(result.fit.slope)
                << " rate=" << format_real(-result.fit.slope) << "\n";
      return 0;
    }

    if (xratio->parsed()) {
      if (x_full) {
        log_warning("full-scale run: m = 9..17 and d = 100 takes hours");
        if (x_m1_opt->count() == 0) x_m1 = 9;
        if (x_m2_opt->count() == 0) x_m2 = 17;
        if (x_d_opt->count() == 0) x_space.d = 100;
      }
      const SpaceParams params = make_params(x_space);
      const EmbeddedResult result = cbc_construct_embedded(x_p, x_m1, x_m2, params, x_space.threads);
      Output out(x_out);
      write_xratio_csv(out.stream(), result.x_values);
      if (!x_levels.empty()) {
        Output c(x_levels);
        write_embedded_levels_csv(c.stream(), result);
      }
      std::cerr << "max_X=" << format_real(result.max_x()) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "latticekit: error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "latticekit: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace latticekit::cli
