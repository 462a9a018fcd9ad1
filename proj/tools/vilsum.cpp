// vilsum: command-line driver for the Vilenkin summability toolkit.
//
// Subcommands: transform, kernels, means, check-conditions, experiment.
// Every artifact gets a JSON sidecar echoing the full run configuration.
// Exit codes: 0 success, 1 usage/config error, 2 numeric-invariant breach,
// 3 I/O failure.

#include "vilenkin/characters.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/sharpness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace vilenkin;
using nlohmann::json;

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t cell_cap_from_env() {
  if (const char* cap = std::getenv("VILENKIN_CELL_CAP")) {
    const auto parsed = std::strtoull(cap, nullptr, 10);
    if (parsed == 0) throw std::invalid_argument("VILENKIN_CELL_CAP must be a positive integer");
    return parsed;
  }
  return VilenkinBase::kDefaultCellCap;
}

std::vector<int> parse_radix_rule(const std::string& rule, int N) {
  std::vector<int> pattern;
  if (rule == "walsh") {
    pattern = {2};
  } else if (rule.rfind("cycle:", 0) == 0 || rule.rfind("custom:", 0) == 0) {
    const auto list = rule.substr(rule.find(':') + 1);
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) pattern.push_back(std::stoi(item));
    if (pattern.empty()) throw std::invalid_argument("--m: empty radix list in '" + rule + "'");
    if (rule.rfind("custom:", 0) == 0 && static_cast<int>(pattern.size()) < N) {
      throw std::invalid_argument("--m custom: needs at least N radices");
    }
  } else {
    throw std::invalid_argument("--m: unknown rule '" + rule + "' (walsh|cycle:...|custom:...)");
  }
  std::vector<int> radices(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) radices[static_cast<std::size_t>(k)] = pattern[static_cast<std::size_t>(k) % pattern.size()];
  return radices;
}

BasePtr base_from_flags(const std::string& m_rule, int N) {
  return make_base(parse_radix_rule(m_rule, N), N, cell_cap_from_env());
}

SequencePtr parse_sequence_rule(const std::string& rule) {
  if (rule == "const") return make_constant_sequence(1.0);
  if (rule == "riesz") return make_riesz_sequence();
  if (rule.rfind("powers:", 0) == 0) return make_power_sequence(std::stod(rule.substr(7)));
  if (rule.rfind("custom-file:", 0) == 0) {
    const auto path = rule.substr(12);
    std::ifstream in(path);
    if (!in) throw IoFailure("--q custom-file: cannot open " + path);
    auto values = std::make_shared<std::vector<double>>();
    double v;
    while (in >> v) values->push_back(v);
    if (values->empty()) throw std::invalid_argument("--q custom-file: no values in " + path);
    return make_sequence(
        [values](std::uint64_t k) {
          if (k >= values->size()) {
            throw std::out_of_range("custom q sequence exhausted at k = " + std::to_string(k));
          }
          return (*values)[k];
        },
        Monotonicity::none, "custom-file:" + path);
  }
  throw std::invalid_argument("--q: unknown rule '" + rule + "' (const|riesz|powers:b|custom-file:path)");
}

WeightFunction parse_weight_rule(const std::string& rule, double p) {
  if (rule == "one") return WeightFunction::one();
  if (rule == "paper") return WeightFunction::paper(p);
  if (rule.rfind("power:", 0) == 0) return WeightFunction::power(std::stod(rule.substr(6)));
  if (rule.rfind("log2pow:", 0) == 0) return WeightFunction::log2_power(std::stod(rule.substr(8)));
  throw std::invalid_argument("--phi: unknown rule '" + rule + "' (one|paper|power:b|log2pow:e)");
}

std::vector<int> parse_int_list(const std::string& list) {
  std::vector<int> out;
  std::istringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty integer list '" + list + "'");
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoFailure("cannot open output file " + path);
  return os;
}

std::vector<cplx> read_input_values(const std::string& path, std::uint64_t size) {
  std::ifstream is(path);
  if (!is) throw IoFailure("cannot open input file " + path);
  return read_values_csv(is, size);
}

void write_sidecar(const std::string& out_path, const json& config) {
  const auto dot = out_path.find_last_of('.');
  const auto json_path = (dot == std::string::npos ? out_path : out_path.substr(0, dot)) + ".json";
  auto os = open_out(json_path);
  os << config.dump(2) << '\n';
  if (!os) throw IoFailure("failed writing " + json_path);
}

json base_config(const std::string& sub, const std::string& m_rule, int N) {
  json j;
  j["subcommand"] = sub;
  j["m"] = m_rule;
  j["N"] = N;
  j["log_base"] = "2";
  return j;
}

int run_transform(const std::string& m_rule, int N, const std::string& in,
                  const std::string& out, bool inverse) {
  const auto base = base_from_flags(m_rule, N);
  const auto values = read_input_values(in, base->cell_count());
  auto os = open_out(out);
  if (inverse) {
    write_cell_function_csv(os, synthesize(Spectrum(base, values)));
  } else {
    write_spectrum_csv(os, analyze(CellFunction(base, values)));
  }
  if (!os) throw IoFailure("failed writing " + out);
  auto cfg = base_config("transform", m_rule, N);
  cfg["in"] = in;
  cfg["out"] = out;
  cfg["inverse"] = inverse;
  write_sidecar(out, cfg);
  return 0;
}

int run_kernels(const std::string& m_rule, int N, const std::string& kind,
                std::uint64_t n, const std::string& out) {
  const auto base = base_from_flags(m_rule, N);
  CellFunction k = kind == "fejer" ? fejer_kernel(base, n) : dirichlet(base, n);
  auto os = open_out(out);
  write_cell_function_csv(os, k);
  if (!os) throw IoFailure("failed writing " + out);
  auto cfg = base_config("kernels", m_rule, N);
  cfg["kind"] = kind;
  cfg["n"] = n;
  cfg["out"] = out;
  write_sidecar(out, cfg);
  return 0;
}

int run_means(const std::string& m_rule, int N, const std::string& mean,
              double alpha, const std::string& q_rule, const std::string& n_list,
              const std::string& in, const std::string& out) {
  const auto base = base_from_flags(m_rule, N);
  const auto s = analyze(CellFunction(base, read_input_values(in, base->cell_count())));
  const auto q = parse_sequence_rule(q_rule);

  auto os = open_out(out);
  os << "n,cell,re,im\n";
  for (int n_int : parse_int_list(n_list)) {
    const auto n = static_cast<std::uint64_t>(n_int);
    CellFunction g(base);
    if (mean == "fejer") g = fejer_mean(s, n);
    else if (mean == "cesaro") g = cesaro_mean(s, alpha, n);
    else if (mean == "u") g = inverse_cesaro_mean(s, alpha, n);
    else if (mean == "v") g = v_alpha_mean(s, alpha, n);
    else if (mean == "riesz") g = riesz_mean(s, n);
    else if (mean == "nlog") g = norlund_log_mean(s, n);
    else if (mean == "b") g = b_mean(s, *q, n);
    else if (mean == "t") g = t_mean(s, *q, n);
    else if (mean == "norlund") g = norlund_mean(s, *q, n);
    else throw std::invalid_argument("--mean: unknown kind '" + mean + "'");
    for (std::uint64_t x = 0; x < g.size(); ++x) {
      os << n << ',' << x << ',' << format_double(g[x].real()) << ','
         << format_double(g[x].imag()) << '\n';
    }
  }
  if (!os) throw IoFailure("failed writing " + out);
  auto cfg = base_config("means", m_rule, N);
  cfg["mean"] = mean;
  cfg["alpha"] = alpha;
  cfg["q"] = q->description();
  cfg["n_list"] = n_list;
  cfg["in"] = in;
  cfg["out"] = out;
  write_sidecar(out, cfg);
  return 0;
}

int run_check_conditions(const std::string& m_rule, int N, const std::string& cond,
                         const std::string& q_rule, double c, std::uint64_t horizon,
                         const std::string& ks_list) {
  const auto q = parse_sequence_rule(q_rule);
  ConditionReport report;
  if (cond == "regular") {
    report = check_regularity(*q, horizon);
  } else if (cond == "cond0") {
    report = check_cond0(*q, horizon, c);
  } else if (cond == "fn011") {
    report = check_fn011(*q, horizon, c);
  } else if (cond == "k1" || cond == "k2") {
    const auto base = base_from_flags(m_rule, N);
    const auto ks = parse_int_list(ks_list);
    report = cond == "k1" ? check_kachzcond1(*q, *base, ks, c)
                          : check_kachzcond2(*q, *base, ks, c);
  } else {
    throw std::invalid_argument("--cond: unknown condition '" + cond + "'");
  }

  if (report.passed) {
    std::cout << "PASS " << cond << " q=" << q->description() << " c=" << c << '\n';
    return 0;
  }
  std::cout << "FAIL " << cond << " q=" << q->description() << " c=" << c
            << " witness=" << report.witness << " lhs=" << format_double(report.lhs)
            << " rhs=" << format_double(report.rhs) << '\n';
  return 2;
}

int run_experiment(const std::string& m_rule, int N, const std::string& part,
                   double p, const std::string& q_rule, const std::string& phi_rule,
                   const std::string& ks_list, const std::string& out) {
  if (part != "a" && part != "b") throw std::invalid_argument("--part must be a or b");
  CounterexampleSpec spec;
  spec.base = base_from_flags(m_rule, N);
  spec.k_list = parse_int_list(ks_list);
  spec.q = parse_sequence_rule(q_rule);
  spec.p = p;
  spec.phi = parse_weight_rule(phi_rule, p);

  const auto report = run_sweep(spec, part[0]);
  for (const auto& row : report.rows) {
    const double rel = std::abs(row.hp_computed - row.hp_closed) /
                       std::max(std::abs(row.hp_closed), 1e-300);
    if (rel > 1e-10) {
      throw NumericBreach("hp_computed deviates from the closed form at k = " +
                          std::to_string(row.n_k) + " (relative error " +
                          format_double(rel) + ")");
    }
    if (!(row.witnessed_c > 0.0)) {
      throw NumericBreach("non-positive witnessed c at k = " + std::to_string(row.n_k));
    }
  }

  auto os = open_out(out);
  write_ratio_report_csv(os, report);
  if (!os) throw IoFailure("failed writing " + out);

  auto cfg = json::parse(ratio_report_config_json(report));
  cfg["subcommand"] = "experiment";
  cfg["m_rule"] = m_rule;
  cfg["out"] = out;
  write_sidecar(out, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis on bounded Vilenkin groups: transforms, kernels, "
               "summability means, and divergence-ratio experiments"};
  app.require_subcommand(1);
  app.set_config("--config")->description("key = value config file mirroring the flags; flags win");

  std::string m_rule = "walsh";
  int N = 8;
  std::string in_path, out_path;

  auto add_base_flags = [&](CLI::App* sub) {
    sub->add_option("--m", m_rule, "radix rule: walsh | cycle:2,3 | custom:2,3,4,...")
        ->capture_default_str();
    sub->add_option("--N", N, "resolution (number of digits)")->capture_default_str();
  };

  auto* transform = app.add_subcommand("transform", "Vilenkin-Fourier analysis / synthesis of a cell-value CSV");
  bool inverse = false;
  add_base_flags(transform);
  transform->add_option("--in", in_path, "input CSV (cell,re,im)")->required();
  transform->add_option("--out", out_path, "output CSV")->required();
  transform->add_flag("--inverse", inverse, "synthesize from coefficients instead");

  auto* kernels = app.add_subcommand("kernels", "emit Dirichlet or Fejér kernel values");
  std::string kind = "dirichlet";
  std::uint64_t kernel_n = 1;
  add_base_flags(kernels);
  kernels->add_option("--kind", kind, "dirichlet | fejer")->capture_default_str();
  kernels->add_option("--n", kernel_n, "kernel index")->required();
  kernels->add_option("--out", out_path, "output CSV")->required();

  auto* means = app.add_subcommand("means", "evaluate summability means of an input function");
  std::string mean_kind = "fejer", q_rule = "const", n_list = "1,2,3";
  double alpha = 0.5;
  add_base_flags(means);
  means->add_option("--mean", mean_kind, "fejer|cesaro|u|v|riesz|nlog|b|t|norlund")->capture_default_str();
  means->add_option("--alpha", alpha, "order for cesaro/u/v")->capture_default_str();
  means->add_option("--q", q_rule, "const | riesz | powers:b | custom-file:path")->capture_default_str();
  means->add_option("--n-list", n_list, "comma-separated mean orders")->capture_default_str();
  means->add_option("--in", in_path, "input CSV (cell,re,im)")->required();
  means->add_option("--out", out_path, "output CSV")->required();

  auto* check = app.add_subcommand("check-conditions", "verify sequence conditions with an explicit constant");
  std::string cond = "regular", ks_list = "1,2,3";
  double c = 0.5;
  std::uint64_t horizon = 64;
  add_base_flags(check);
  check->add_option("--cond", cond, "regular | cond0 | fn011 | k1 | k2")->capture_default_str();
  check->add_option("--q", q_rule, "const | riesz | powers:b | custom-file:path")->capture_default_str();
  check->add_option("--c", c, "constant in the inequality")->capture_default_str();
  check->add_option("--horizon", horizon, "largest index checked (regular/cond0/fn011)")->capture_default_str();
  check->add_option("--ks", ks_list, "k values for k1/k2")->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "divergence-ratio sweep over the counterexample family");
  std::string part = "a", phi_rule = "one";
  double p = 0.5;
  experiment->add_option("--part", part, "a | b")->required();
  add_base_flags(experiment);
  experiment->add_option("--p", p, "H_p exponent (a: 1/2; b: 0<p<1/2)")->capture_default_str();
  experiment->add_option("--q", q_rule, "const | riesz | powers:b | custom-file:path")->capture_default_str();
  experiment->add_option("--phi", phi_rule, "one | paper | power:b | log2pow:e")->capture_default_str();
  experiment->add_option("--ks", ks_list, "comma-separated n_k values")->capture_default_str();
  experiment->add_option("--out", out_path, "report CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 1;
  }

  try {
    if (transform->parsed()) return run_transform(m_rule, N, in_path, out_path, inverse);
    if (kernels->parsed()) return run_kernels(m_rule, N, kind, kernel_n, out_path);
    if (means->parsed()) return run_means(m_rule, N, mean_kind, alpha, q_rule, n_list, in_path, out_path);
    if (check->parsed()) return run_check_conditions(m_rule, N, cond, q_rule, c, horizon, ks_list);
    if (experiment->parsed()) return run_experiment(m_rule, N, part, p, q_rule, phi_rule, ks_list, out_path);
  } catch (const IoFailure& e) {
    std::cerr << "error (io): " << e.what() << '\n';
    return 3;
  } catch (const NumericBreach& e) {
    std::cerr << "error (invariant): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
