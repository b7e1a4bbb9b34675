#include "latticekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "latticekit/errors.hpp"
#include "latticekit/special_functions.hpp"

namespace latticekit {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a real number, got '" + token + "'");
  }
}

template <typename Int>
Int parse_int(const std::string& token, std::size_t line) {
  Int v{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::string copy = s;
  std::replace(copy.begin(), copy.end(), ',', ' ');
  std::istringstream in(copy);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<double> parse_real_list(const std::string& s, std::size_t line) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) out.push_back(parse_real(tok, line));
  return out;
}

void append_list(std::ostringstream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << format_real(values[i]);
}

std::optional<WeightFamily> named_family(const std::string& name) {
  if (name == "product-paper") return WeightFamily::Product;
  if (name == "pod-paper") return WeightFamily::Pod;
  if (name == "spod-paper") return WeightFamily::Spod;
  return std::nullopt;
}

// key=value tokens of a header line.
std::map<std::string, std::string> header_fields(const std::string& line, std::size_t number) {
  std::map<std::string, std::string> out;
  std::istringstream in(line);
  for (std::string tok; in >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(number, "malformed field '" + tok + "'");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

void write_header(std::ostream& out, std::uint64_t n, std::size_t d, double alpha,
                  const WeightModel& weights) {
  out << "latticekit-vector v1\n";
  out << "n=" << n << " d=" << d << " alpha=" << format_real(alpha)
      << " weights=" << weight_hash(weights);
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string canonical_weight_text(const WeightModel& model) {
  std::ostringstream out;
  out << "kind = " << to_string(model.kind()) << "\n";
  out << "d = " << model.dimension() << "\n";
  switch (model.kind()) {
    case WeightKind::Product:
      out << "gamma = ";
      append_list(out, model.gamma());
      out << "\n";
      break;
    case WeightKind::Pod:
      out << "order = ";
      append_list(out, model.order_factors());
      out << "\ngamma = ";
      append_list(out, model.gamma());
      out << "\n";
      break;
    case WeightKind::Spod:
      out << "sigma = " << model.sigma() << "\norder = ";
      append_list(out, model.order_factors());
      out << "\ngamma_nu = ";
      for (std::size_t j = 0; j < model.gamma_nu().size(); ++j) {
        if (j) out << "; ";
        append_list(out, model.gamma_nu()[j]);
      }
      out << "\n";
      break;
    case WeightKind::Explicit:
      for (const auto& [mask, value] : model.table()) {
        out << "weight[";
        bool first = true;
        for (std::size_t j = 0; j < 64; ++j) {
          if (!((mask >> j) & 1U)) continue;
          out << (first ? "" : ",") << j;
          first = false;
        }
        out << "] = " << format_real(value) << "\n";
      }
      break;
  }
  return out.str();
}

std::string weight_hash(const WeightModel& model) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_weight_text(model)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

WeightConfig parse_weight_config(std::istream& in) {
  std::map<std::string, std::pair<std::string, std::size_t>> fields;
  std::map<CoordinateMask, double> table;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.rfind("weight[", 0) == 0) {
      if (key.back() != ']') throw ParseError(line, "malformed subset key '" + key + "'");
      CoordinateMask mask = 0;
      for (const auto& tok : split_list(key.substr(7, key.size() - 8))) {
        const auto j = parse_int<unsigned>(tok, line);
        if (j >= 64) throw ParseError(line, "coordinate index out of range");
        mask |= CoordinateMask{1} << j;
      }
      if (table.count(mask)) throw ParseError(line, "duplicate subset");
      table[mask] = parse_real(value, line);
      continue;
    }
    if (fields.count(key)) throw ParseError(line, "duplicate key '" + key + "'");
    fields[key] = {value, line};
  }

  auto get = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(line, "missing key '" + key + "'");
    return it->second;
  };

  WeightConfig cfg{WeightModel::product({1.0}), std::nullopt, std::nullopt};
  if (fields.count("d")) cfg.d = parse_int<std::size_t>(fields["d"].first, fields["d"].second);
  if (fields.count("alpha")) cfg.alpha = parse_real(fields["alpha"].first, fields["alpha"].second);
  const auto& [kind, kind_line] = get("kind");

  try {
    if (const auto family = named_family(kind)) {
      if (!cfg.d || !cfg.alpha) throw ParseError(kind_line, "named families need d and alpha");
      cfg.model = named_weight_family(*family, *cfg.d, *cfg.alpha);
    } else if (kind == "product") {
      const auto& [g, l] = get("gamma");
      cfg.model = WeightModel::product(parse_real_list(g, l));
    } else if (kind == "pod") {
      const auto& [o, lo] = get("order");
      const auto& [g, lg] = get("gamma");
      cfg.model = WeightModel::pod(parse_real_list(o, lo), parse_real_list(g, lg));
    } else if (kind == "spod") {
      const auto& [s, ls] = get("sigma");
      const auto& [o, lo] = get("order");
      const auto& [g, lg] = get("gamma_nu");
      std::vector<std::vector<double>> rows;
      std::istringstream row_in(g);
      for (std::string row; std::getline(row_in, row, ';');) rows.push_back(parse_real_list(row, lg));
      cfg.model = WeightModel::spod(parse_int<unsigned>(s, ls), parse_real_list(o, lo), rows);
    } else if (kind == "explicit") {
      std::size_t d = cfg.d.value_or(0);
      if (!cfg.d) {
        for (const auto& [mask, v] : table) {
          for (std::size_t j = 0; j < 64; ++j) {
            if ((mask >> j) & 1U) d = std::max(d, j + 1);
          }
        }
      }
      cfg.model = WeightModel::explicit_table(d, table);
    } else {
      throw ParseError(kind_line, "unknown weight kind '" + kind + "'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(kind_line, e.what());
  }
  if (cfg.d && cfg.model.dimension() < *cfg.d) {
    throw ParseError(kind_line, "weights cover fewer coordinates than d");
  }
  return cfg;
}

WeightConfig read_weight_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open weight config '" + path + "'");
  return parse_weight_config(in);
}

void write_weight_config(std::ostream& out, const WeightModel& model, double alpha) {
  out << "alpha = " << format_real(alpha) << "\n" << canonical_weight_text(model);
}

WeightModel resolve_weight_spec(const std::string& spec, std::size_t d, double alpha) {
  if (const auto family = named_family(spec)) return named_weight_family(*family, d, alpha);
  if (spec.rfind("file:", 0) == 0) {
    WeightConfig cfg = read_weight_config_file(spec.substr(5));
    if (cfg.model.dimension() < d) {
      throw InvalidParameter("weight file covers " + std::to_string(cfg.model.dimension()) +
                             " coordinates, need " + std::to_string(d));
    }
    return cfg.model.dimension() == d ? cfg.model : cfg.model.truncated(d);
  }
  throw InvalidParameter("unknown weight spec '" + spec +
                         "' (expected product-paper, pod-paper, spod-paper or file:<path>)");
}

void write_vector_file(std::ostream& out, const GeneratingVector& gv, double alpha,
                       const WeightModel& weights) {
  write_header(out, gv.n, gv.d, alpha, weights);
  out << "\n";
  for (auto zj : gv.z) out << zj << "\n";
}

void write_embedded_file(std::ostream& out, const EmbeddedResult& result, double alpha,
                         const WeightModel& weights) {
  std::uint64_t n = 1;
  for (unsigned m = 0; m < result.m2; ++m) n *= result.p;
  write_header(out, n, result.d, alpha, weights);
  out << " p=" << result.p << " m1=" << result.m1 << " m2=" << result.m2 << "\n";
  for (auto zj : result.z_emb) out << zj << "\n";
  out << "x-values\n";
  for (double x : result.x_values) out << format_real(x) << "\n";
}

VectorFile read_vector_file(std::istream& in, const WeightModel* expected) {
  VectorFile vf;
  std::string raw;
  std::size_t line = 0;
  auto next = [&](std::string& s) {
    if (!std::getline(in, s)) return false;
    ++line;
    s = trim(s);
    return true;
  };
  if (!next(raw) || raw != "latticekit-vector v1") {
    throw ParseError(1, "expected header 'latticekit-vector v1'");
  }
  if (!next(raw)) throw ParseError(2, "missing parameter line");
  auto fields = header_fields(raw, line);
  for (const char* key : {"n", "d", "alpha", "weights"}) {
    if (!fields.count(key)) throw ParseError(line, std::string("missing field '") + key + "'");
  }
  vf.n = parse_int<std::uint64_t>(fields["n"], line);
  vf.d = parse_int<std::size_t>(fields["d"], line);
  vf.alpha = parse_real(fields["alpha"], line);
  vf.weights_hash = fields["weights"];
  const bool embedded = fields.count("p") || fields.count("m1") || fields.count("m2");
  if (embedded) {
    for (const char* key : {"p", "m1", "m2"}) {
      if (!fields.count(key)) throw ParseError(line, std::string("missing field '") + key + "'");
    }
    vf.p = parse_int<std::uint64_t>(fields["p"], line);
    vf.m1 = parse_int<unsigned>(fields["m1"], line);
    vf.m2 = parse_int<unsigned>(fields["m2"], line);
  }
  if (vf.n < 2) throw ParseError(line, "n must be at least 2");
  while (vf.z.size() < vf.d) {
    if (!next(raw)) throw ParseError(line + 1, "expected " + std::to_string(vf.d) + " components");
    const auto zj = parse_int<std::uint64_t>(raw, line);
    if (zj < 1 || zj >= vf.n) throw ParseError(line, "component outside 1..n-1");
    vf.z.push_back(zj);
  }
  if (embedded) {
    if (!next(raw) || raw != "x-values") throw ParseError(line, "expected 'x-values'");
    while (vf.x_values.size() < vf.d) {
      if (!next(raw)) throw ParseError(line + 1, "expected " + std::to_string(vf.d) + " X values");
      vf.x_values.push_back(parse_real(raw, line));
    }
  }
  while (next(raw)) {
    if (!raw.empty()) throw ParseError(line, "unexpected trailing content");
  }
  if (expected != nullptr) {
    const std::string want = weight_hash(*expected);
    if (want != vf.weights_hash) {
      throw WeightHashMismatch("vector file was built for weights " + vf.weights_hash +
                               ", configuration hashes to " + want);
    }
  }
  return vf;
}

void write_criterion_csv(std::ostream& out, std::uint64_t n, std::span<const double> t_values) {
  out << "n,d,s,T_s,cumulative_S\n";
  CompensatedSum<long double> cumulative;
  for (std::size_t s = 0; s < t_values.size(); ++s) {
    cumulative.add(t_values[s]);
    out << n << "," << t_values.size() << "," << s + 1 << "," << format_real(t_values[s]) << ","
        << format_real(static_cast<double>(cumulative.value())) << "\n";
  }
}

void write_approximant_csv(std::ostream& out, const Approximant& approx) {
  const std::size_t d = approx.index_set.d;
  for (std::size_t j = 0; j < d; ++j) out << "h" << j + 1 << ",";
  out << "re,im\n";
  for (std::size_t i = 0; i < approx.coefficients.size(); ++i) {
    for (auto hj : approx.index_set.entries[i].h) out << hj << ",";
    out << format_real(approx.coefficients[i].real()) << ","
        << format_real(approx.coefficients[i].imag()) << "\n";
  }
}

void write_bounds_csv(std::ostream& out, std::span<const BoundRow> rows) {
  out << "quantity,value,lambda,tau\n";
  for (const auto& r : rows) {
    out << r.quantity << "," << format_real(r.value) << "," << format_real(r.lambda) << ","
        << format_real(r.tau) << "\n";
  }
}

void write_xratio_csv(std::ostream& out, std::span<const double> x_values) {
  out << "s,X_s\n";
  for (std::size_t s = 0; s < x_values.size(); ++s) {
    out << s + 1 << "," << format_real(x_values[s]) << "\n";
  }
}

void write_embedded_levels_csv(std::ostream& out, const EmbeddedResult& result) {
  out << "m,n,S_embedded,S_baseline,max_X\n";
  std::uint64_t n = 1;
  for (unsigned m = 1; m < result.m1; ++m) n *= result.p;
  for (std::size_t i = 0; i < result.per_m_s.size(); ++i) {
    n *= result.p;
    out << result.m1 + i << "," << n << "," << format_real(result.per_m_s[i]) << ","
        << format_real(result.baselines[i].S()) << "," << format_real(result.max_x()) << "\n";
  }
}

}  // namespace latticekit
