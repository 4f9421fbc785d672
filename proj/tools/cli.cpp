#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "sixvertex/column_algebra.hpp"
#include "sixvertex/determinants.hpp"
#include "sixvertex/errors.hpp"
#include "sixvertex/lattice_oracle.hpp"
#include "sixvertex/local_weights.hpp"
#include "sixvertex/onepoint.hpp"
#include "sixvertex/params.hpp"
#include "sixvertex/wavefunction.hpp"

namespace sixv::cli {

namespace {

using nlohmann::json;

// validate enumerates every position set, so psi_coordinate must fit all m <= n.
constexpr int kMaxValidateSize = kMaxPermutationOrder;

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::string params_path;
  double eps = kDefaultEpsGeneric;
  std::string methods;
  int trials = 0;
  std::optional<double> tol;
  std::string format;
  std::string out_path;
  std::string n_range;
};

struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

ModelParams load_params(const RunConfig& c) {
  if (!c.params_path.empty() && c.n) throw ParameterError("give either --params or --n, not both");
  if (!c.params_path.empty()) {
    std::ifstream in(c.params_path);
    if (!in) throw ParameterError("cannot read " + c.params_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParameterError(std::string("malformed JSON: ") + e.what());
    }
    ModelParams p = j.get<ModelParams>();
    require_generic(p, c.eps);
    return p;
  }
  if (!c.n) throw ParameterError("one of --params or --n is required");
  if (*c.n < 1) throw ParameterError("--n must be at least 1");
  return random_generic(*c.n, c.seed, c.eps);
}

double relative(double a, double b) { return relative_gap(a, b); }

// Relative above 1, absolute below; wave-function components can sit near zero.
double scaled_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// ---------------------------------------------------------------- z

struct ZResult {
  std::string method;
  double z;
  double pivot_min;  // NaN when the route has no determinant
};

int cmd_z(const RunConfig& c, std::ostream& out) {
  const ModelParams p = load_params(c);
  const auto methods = split_list(c.methods.empty() ? "tsuchiya" : c.methods);
  if (methods.empty()) throw ParameterError("--method is empty");
  for (const auto& m : methods)
    if (m != "oracle" && m != "tsuchiya" && m != "enumerate") throw ParameterError("unknown z method: " + m);

  std::vector<ZResult> results;
  for (const auto& m : methods) {
    if (m == "oracle") {
      results.push_back({m, partition_oracle(p), std::nan("")});
    } else if (m == "tsuchiya") {
      const DetEvaluation t = tsuchiya(p);
      results.push_back({m, t.value, t.pivot_min});
    } else {
      results.push_back({m, enumerate_z(p), std::nan("")});
    }
  }

  if (c.format == "csv") {
    out << "method,Z,pivot_min\n";
    for (const auto& r : results) out << r.method << ',' << fmt(r.z) << ',' << (std::isnan(r.pivot_min) ? "" : fmt(r.pivot_min)) << '\n';
    for (std::size_t a = 0; a < results.size(); ++a)
      for (std::size_t b = a + 1; b < results.size(); ++b)
        out << "# gap," << results[a].method << ',' << results[b].method << ',' << fmt(relative(results[a].z, results[b].z)) << '\n';
    return kOk;
  }

  json j;
  if (results.size() == 1) {
    j["Z"] = results[0].z;
    j["method"] = results[0].method;
    j["pivot_min"] = number_or_null(results[0].pivot_min);
  } else {
    j["results"] = json::array();
    for (const auto& r : results) j["results"].push_back({{"Z", r.z}, {"method", r.method}, {"pivot_min", number_or_null(r.pivot_min)}});
    j["gaps"] = json::array();
    for (std::size_t a = 0; a < results.size(); ++a)
      for (std::size_t b = a + 1; b < results.size(); ++b)
        j["gaps"].push_back({{"methods", {results[a].method, results[b].method}}, {"relative_gap", relative(results[a].z, results[b].z)}});
  }
  j["params"] = p;
  out << j.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- profile

int cmd_profile(const RunConfig& c, std::ostream& out) {
  const ModelParams p = load_params(c);
  const std::string label = c.methods.empty() ? "ratio-det" : c.methods;
  const auto method = parse_method(label);
  if (!method) throw ParameterError("unknown profile method: " + label);
  const OnePointProfile prof = profile(p, *method);

  if (c.format == "csv") {
    out << "M,F,method\n";
    for (std::size_t m = 0; m < prof.values.size(); ++m) out << m + 1 << ',' << fmt(prof.values[m]) << ',' << label << '\n';
    out << "# normalization_gap," << fmt(prof.normalization_gap) << '\n';
    return kOk;
  }
  json j;
  j["method"] = label;
  j["values"] = json::array();
  for (std::size_t m = 0; m < prof.values.size(); ++m) j["values"].push_back({{"M", m + 1}, {"F", prof.values[m]}});
  j["normalization_gap"] = prof.normalization_gap;
  j["params"] = p;
  out << j.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- validate

struct Check {
  std::string name;
  double tol;
  bool gating = true;
  double worst = 0.0;
  long samples = 0;
  bool pass = true;

  void record(double value, double limit) {
    ++samples;
    worst = std::max(worst, value);
    if (!(value <= limit)) pass = false;
  }
  void record(double value) { record(value, tol); }
};

std::vector<Check> run_checks(const std::vector<ModelParams>& trials, std::optional<double> tol) {
  auto t = [&](double fallback) { return tol.value_or(fallback); };
  Check ybe{"ybe", t(1e-12)};
  Check reflection{"reflection", t(1e-12)};
  Check sigma{"sigma-expansion", t(1e-10)};
  Check partition{"oracle-vs-tsuchiya", t(1e-9)};
  Check enumerate{"enumerate-vs-oracle", t(1e-11)};
  Check izergin_check{"izergin-vs-column", t(1e-10)};
  Check psi{"psi-coordinate-vs-oracle", t(1e-10)};
  Check form{"column-form-gap", t(1e-11)};
  Check column_row{"column-vs-row", t(1e-10)};
  Check routes{"f-route-agreement", t(1e-8)};
  Check normalization{"normalization", t(1e-8), false};

  for (const ModelParams& p : trials) {
    const int n = p.n;
    ybe.record(ybe_residual(p.lambdas[0], p.nus[0], p.eta));
    reflection.record(reflection_residual(p.lambdas[0], n > 1 ? p.lambdas[1] : p.nus[0], p.eta, p.zeta_plus));
    for (int m = 1; m <= std::min(n, 4); ++m) sigma.record(b_expansion_residual(p, m));

    const double z = partition_oracle(p);
    partition.record(relative(z, tsuchiya_z(p)));
    if (n <= kMaxEnumerationSize) enumerate.record(relative(enumerate_z(p), z));

    izergin_check.record(relative(izergin_z(p.lambdas, p.nus, p.eta), column_b_product(p.lambdas, p.nus, p.eta)));

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> xs;
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) xs.push_back(k + 1);
      const PositionSet positions(xs, n);
      const std::vector<double> spectral(p.lambdas.begin(), p.lambdas.begin() + positions.size());
      psi.record(scaled_gap(psi_coordinate(spectral, p, positions), psi_oracle(spectral, p, positions)));
    }

    if (n >= 2) {
      const std::vector<double> rows(p.lambdas.begin(), p.lambdas.end() - 1);
      for (int m = 1; m <= n; ++m) {
        const ColumnWaveFunction w = wavefunction_via_columns(p, m);
        form.record(w.form_gap);
        column_row.record(relative(w.value, psi_oracle(rows, p, PositionSet::all_but(m, n))));
      }
    }

    // Pairwise over oracle, perm, det and closed-form times Z; looser where the sigma-sum cancels.
    for (int m = 1; m <= n; ++m) {
      const SigmaSumEvaluation perm = f_perm_eval(p, m);
      const SigmaSumEvaluation det = f_det_eval(p, m);
      const SigmaSumEvaluation closed = closed_form_eval(p, m);
      const double values[] = {f_oracle(p, m), perm.value, det.value, closed.value * z};
      const double cancellation = std::max({perm.cancellation, det.cancellation, closed.cancellation});
      const double limit = tol ? *tol : (cancellation > 1e6 ? 1e-7 : 1e-8);
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) routes.record(relative(values[a], values[b]), limit);
    }
    normalization.record(profile(p, Method::kRatioDet).normalization_gap);
  }

  std::vector<Check> all = {ybe, reflection, sigma, partition, enumerate, izergin_check, psi, form, column_row, routes, normalization};
  all.erase(std::remove_if(all.begin(), all.end(), [](const Check& ch) { return ch.samples == 0; }), all.end());
  return all;
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  if (c.trials < 1) throw ParameterError("--trials must be at least 1");
  std::vector<ModelParams> trials;
  if (!c.params_path.empty()) {
    trials.push_back(load_params(c));
  } else {
    if (!c.n) throw ParameterError("--n is required");
    if (*c.n < 1) throw ParameterError("--n must be at least 1");
    for (int t = 0; t < c.trials; ++t) trials.push_back(random_generic(*c.n, c.seed + t, c.eps));
  }
  const int n = trials.front().n;
  if (n > kMaxValidateSize) {
    throw CapExceededError("validate enumerates every position set and is capped at n = " + std::to_string(kMaxValidateSize));
  }

  const std::vector<Check> checks = run_checks(trials, c.tol);
  bool pass = true;
  for (const auto& ch : checks)
    if (ch.gating && !ch.pass) pass = false;

  auto status = [](const Check& ch) { return !ch.gating ? (ch.pass ? "INFO" : "INFO (off)") : (ch.pass ? "PASS" : "FAIL"); };
  if (c.format == "json") {
    json j;
    j["n"] = n;
    j["trials"] = trials.size();
    j["seed"] = c.seed;
    j["checks"] = json::array();
    for (const auto& ch : checks) {
      j["checks"].push_back({{"check", ch.name}, {"worst", ch.worst}, {"tol", ch.tol}, {"samples", ch.samples},
                             {"gating", ch.gating}, {"status", status(ch)}});
    }
    j["pass"] = pass;
    out << j.dump(2) << '\n';
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %12s %10s %8s  %s\n", "check", "worst", "tol", "samples", "status");
    out << line;
    for (const auto& ch : checks) {
      std::snprintf(line, sizeof line, "%-26s %12.3e %10.1e %8ld  %s\n", ch.name.c_str(), ch.worst, ch.tol, ch.samples, status(ch));
      out << line;
    }
    out << "result: " << (pass ? "PASS" : "FAIL") << " (n = " << n << ", trials = " << trials.size() << ")\n";
  }
  return pass ? kOk : kValidationFailed;
}

// ---------------------------------------------------------------- bench

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("bad --n-range '" + s + "', expected a..b");
  }
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  const auto [lo, hi] = parse_range(c.n_range.empty() ? "2..6" : c.n_range);
  if (lo < 1 || hi < lo) throw ParameterError("bad --n-range, need 1 <= a <= b");
  if (c.trials < 1) throw ParameterError("--trials must be at least 1");
  const auto methods = split_list(c.methods.empty() ? "oracle,perm,det" : c.methods);
  std::vector<Method> routes;
  for (const auto& m : methods) {
    if (m == "oracle") routes.push_back(Method::kRatioOracle);
    else if (m == "perm") routes.push_back(Method::kRatioPerm);
    else if (m == "det") routes.push_back(Method::kRatioDet);
    else throw ParameterError("unknown bench method: " + m);
  }
  for (int n = lo; n <= hi; ++n)
    for (Method m : routes) require_method_caps(m, n);

  struct Row {
    int n;
    std::string method;
    double median_ns;
    long terms;
  };
  std::vector<Row> rows;
  volatile double sink = 0.0;
  for (int n = lo; n <= hi; ++n) {
    const ModelParams p = random_generic(n, c.seed, c.eps);
    for (std::size_t r = 0; r < routes.size(); ++r) {
      std::function<double(int)> f;
      long terms = 0;
      switch (routes[r]) {
        case Method::kRatioOracle:
          f = [&](int m) { return f_oracle(p, m); };
          terms = 1L << n;
          break;
        case Method::kRatioPerm:
          f = [&](int m) { return f_perm(p, m); };
          terms = (1L << (n - 1)) * permutation_terms(n - 1);
          break;
        default:
          f = [&](int m) { return f_det(p, m); };
          terms = 1L << (n - 1);
          break;
      }
      std::vector<double> times;
      for (int t = 0; t < c.trials; ++t) {
        const auto start = std::chrono::steady_clock::now();
        double acc = 0.0;
        for (int m = 1; m <= n; ++m) acc += f(m);
        const auto stop = std::chrono::steady_clock::now();
        sink = sink + acc;
        times.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
      }
      std::sort(times.begin(), times.end());
      const std::size_t k = times.size();
      const double median = k % 2 ? times[k / 2] : 0.5 * (times[k / 2 - 1] + times[k / 2]);
      rows.push_back({n, methods[r], median, terms});
    }
  }

  if (c.format == "json") {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back({{"n", r.n}, {"method", r.method}, {"median_ns", r.median_ns}, {"terms", r.terms}});
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    out << j.dump(2) << '\n';
  } else {
    out << "n,method,median_ns,terms\n";
    for (const auto& r : rows) out << r.n << ',' << r.method << ',' << fmt(r.median_ns) << ',' << r.terms << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- dispatch

void add_source_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n, "lattice size N (random generic parameters)");
  sub->add_option("--seed", c.seed, "sampler seed")->capture_default_str();
  sub->add_option("--params", c.params_path, "parameter JSON file");
  sub->add_option("--eps", c.eps, "genericity threshold")->capture_default_str();
}

void add_output_options(CLI::App* sub, RunConfig& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}))->capture_default_str();
  sub->add_option("--out", c.out_path, "write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact six-vertex evaluations with a reflecting end"};
  app.require_subcommand(1);
  RunConfig z, prof, val, bench;

  auto* z_cmd = app.add_subcommand("z", "partition function");
  add_source_options(z_cmd, z);
  z_cmd->add_option("--method", z.methods, "comma list of oracle, tsuchiya, enumerate")->default_str("tsuchiya");
  add_output_options(z_cmd, z, "json");

  auto* profile_cmd = app.add_subcommand("profile", "one-point function F(1..N)");
  add_source_options(profile_cmd, prof);
  profile_cmd->add_option("--method", prof.methods, "ratio-oracle, ratio-perm, ratio-det or closed-form")->default_str("ratio-det");
  add_output_options(profile_cmd, prof, "json");

  auto* validate_cmd = app.add_subcommand("validate", "seeded sweep over every cross-check");
  add_source_options(validate_cmd, val);
  val.trials = 10;
  validate_cmd->add_option("--trials", val.trials, "number of seeded parameter sets")->capture_default_str();
  validate_cmd->add_option("--tol", val.tol, "replace every tolerance with this value");
  add_output_options(validate_cmd, val, "table");

  auto* bench_cmd = app.add_subcommand("bench", "median wall time of the f(M) routes");
  bench.trials = 5;
  bench_cmd->add_option("--n-range", bench.n_range, "sizes a..b")->default_str("2..6");
  bench_cmd->add_option("--trials", bench.trials, "repetitions per size and method")->capture_default_str();
  bench_cmd->add_option("--method", bench.methods, "comma list of oracle, perm, det")->default_str("oracle,perm,det");
  bench_cmd->add_option("--seed", bench.seed, "sampler seed")->capture_default_str();
  bench_cmd->add_option("--eps", bench.eps, "genericity threshold")->capture_default_str();
  add_output_options(bench_cmd, bench, "csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }

  RunConfig* config = nullptr;
  std::function<int(const RunConfig&, std::ostream&)> command;
  if (z_cmd->parsed()) {
    config = &z;
    command = cmd_z;
  } else if (profile_cmd->parsed()) {
    config = &prof;
    command = cmd_profile;
  } else if (validate_cmd->parsed()) {
    config = &val;
    command = cmd_validate;
  } else {
    config = &bench;
    command = cmd_bench;
  }

  try {
    std::ostringstream buffer;
    const int code = command(*config, buffer);
    if (config->out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config->out_path);
      if (!file) {
        err << "error: cannot write " << config->out_path << '\n';
        return kParameterError;
      }
      file << buffer.str();
    }
    return code;
  } catch (const CapExceededError& e) {
    err << "error: size cap: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const SingularParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const SamplingExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kParameterError;
  }
}

}  // namespace sixv::cli
