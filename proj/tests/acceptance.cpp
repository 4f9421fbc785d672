// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sixvertex/column_algebra.hpp"
#include "sixvertex/determinants.hpp"
#include "sixvertex/lattice_oracle.hpp"
#include "sixvertex/local_weights.hpp"
#include "sixvertex/numeric.hpp"
#include "sixvertex/onepoint.hpp"
#include "sixvertex/params.hpp"
#include "sixvertex/wavefunction.hpp"

using namespace sixv;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Worst {
  double value = 0.0;
  std::string where;

  void add(double x, const std::string& label) {
    if (!(x <= value)) {
      value = x;
      where = label;
    }
  }
};

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string at(int n, int seed) { return fmt("n=%d seed=%d", n, seed); }

std::string cli_output(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

void structural() {
  const auto start = Clock::now();
  Worst ybe, reflection;
  for (int seed = 0; seed < 100; ++seed) {
    const ModelParams p = random_generic(2, seed);
    ybe.add(ybe_residual(p.lambdas[0], p.lambdas[1], p.eta), at(2, seed));
    reflection.add(reflection_residual(p.lambdas[0], p.lambdas[1], p.eta, p.zeta_plus), at(2, seed));
  }
  const double elapsed = seconds_since(start);
  report("1 structural identities", ybe.value < 1e-12 && reflection.value < 1e-12 && elapsed < 1.0,
         fmt("ybe worst %.3e, reflection worst %.3e (tol 1e-12), %.3f s (limit 1 s)", ybe.value, reflection.value, elapsed));
}

void partition() {
  const auto start = Clock::now();
  Worst tsu, enumerated;
  for (int n = 1; n <= 6; ++n) {
    for (int seed = 0; seed < 20; ++seed) {
      const ModelParams p = random_generic(n, seed);
      const double z = partition_oracle(p);
      tsu.add(relative_gap(z, tsuchiya_z(p)), at(n, seed));
      if (n <= 3) enumerated.add(relative_gap(enumerate_z(p), z), at(n, seed));
    }
  }
  const double elapsed = seconds_since(start);
  report("2 partition function", tsu.value < 1e-9 && enumerated.value < 1e-11 && elapsed < 10.0,
         fmt("oracle vs tsuchiya worst %.3e at %s (tol 1e-9); enumerate worst %.3e (tol 1e-11); %.3f s (limit 10 s)",
             tsu.value, tsu.where.c_str(), enumerated.value, elapsed));
}

void dwbc_block() {
  Worst gap;
  for (int n = 1; n <= 5; ++n)
    for (int seed = 0; seed < 10; ++seed) {
      const ModelParams p = random_generic(n, seed);
      gap.add(relative_gap(izergin_z(p.lambdas, p.nus, p.eta), column_b_product(p.lambdas, p.nus, p.eta)), at(n, seed));
    }
  report("3 DWBC block", gap.value < 1e-10, fmt("izergin vs column Bbar product worst %.3e at %s (tol 1e-10)", gap.value, gap.where.c_str()));
}

void wave_functions() {
  Worst coordinate, form, row;
  long sets = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int seed = 0; seed < 10; ++seed) {
      const ModelParams p = random_generic(n, seed);
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> xs;
        for (int k = 0; k < n; ++k)
          if (mask >> k & 1u) xs.push_back(k + 1);
        const PositionSet positions(xs, n);
        const std::vector<double> spectral(p.lambdas.begin(), p.lambdas.begin() + positions.size());
        coordinate.add(relative_gap(psi_coordinate(spectral, p, positions), psi_oracle(spectral, p, positions)),
                       at(n, seed) + fmt(" mask=%u", mask));
        ++sets;
      }
      if (n < 2) continue;
      const std::vector<double> rows(p.lambdas.begin(), p.lambdas.end() - 1);
      for (int m = 1; m <= n; ++m) {
        const ColumnWaveFunction w = wavefunction_via_columns(p, m);
        form.add(w.form_gap, at(n, seed));
        row.add(relative_gap(w.value, psi_oracle(rows, p, PositionSet::all_but(m, n))), at(n, seed));
      }
    }
  }
  report("4 wave functions", coordinate.value < 1e-10 && form.value < 1e-11 && row.value < 1e-10,
         fmt("coordinate vs oracle worst %.3e at %s over %ld sets (tol 1e-10); form_gap worst %.3e (tol 1e-11); "
             "column vs row worst %.3e (tol 1e-10)",
             coordinate.value, coordinate.where.c_str(), sets, form.value, row.value));
}

void sigma_expansion() {
  Worst residual;
  for (int seed = 0; seed < 20; ++seed) {
    const ModelParams p = random_generic(4, seed);
    for (int m = 1; m <= 4; ++m) residual.add(b_expansion_residual(p, m), at(4, seed) + fmt(" m=%d", m));
  }
  report("5 sigma expansion", residual.value < 1e-10,
         fmt("b_expansion_residual worst %.3e at %s (tol 1e-10)", residual.value, residual.where.c_str()));
}

void one_point() {
  Worst routes;
  double worst_cancellation = 0.0;
  int loosened = 0;
  bool pass = true;
  for (int n = 1; n <= 5; ++n) {
    for (int seed = 0; seed < 10; ++seed) {
      const ModelParams p = random_generic(n, seed);
      const double z = tsuchiya_z(p);
      for (int m = 1; m <= n; ++m) {
        const SigmaSumEvaluation perm = f_perm_eval(p, m);
        const SigmaSumEvaluation det = f_det_eval(p, m);
        const SigmaSumEvaluation closed = closed_form_eval(p, m);
        const double values[] = {f_oracle(p, m), perm.value, det.value, closed.value * z};
        const double cancellation = std::max({perm.cancellation, det.cancellation, closed.cancellation});
        worst_cancellation = std::max(worst_cancellation, cancellation);
        const double tol = cancellation > 1e6 ? 1e-7 : 1e-8;
        if (cancellation > 1e6) ++loosened;
        for (int a = 0; a < 4; ++a)
          for (int b = a + 1; b < 4; ++b) {
            const double gap = relative_gap(values[a], values[b]);
            routes.add(gap, at(n, seed) + fmt(" M=%d", m));
            if (!(gap < tol)) pass = false;
          }
      }
    }
  }
  report("6a one-point route agreement", pass,
         fmt("pairwise worst %.3e at %s (tol 1e-8, 1e-7 for %d cases with cancellation > 1e6; max cancellation %.2e)",
             routes.value, routes.where.c_str(), loosened, worst_cancellation));

  Worst normalization;
  for (int n = 1; n <= 6; ++n)
    for (int seed = 0; seed < 10; ++seed) {
      const ModelParams p = random_generic(n, seed);
      normalization.add(profile(p, Method::kRatioDet).normalization_gap, at(n, seed));
    }
  report("6b one-point normalization", normalization.value < 1e-8,
         fmt("|sum_M F(M) - 1| worst %.3e at %s (tol 1e-8)", normalization.value, normalization.where.c_str()));
}

void degenerate_size() {
  Worst gap;
  for (int seed = 0; seed < 10; ++seed) {
    const ModelParams p = random_generic(1, seed);
    for (Method m : {Method::kRatioOracle, Method::kRatioPerm, Method::kRatioDet, Method::kClosedForm})
      gap.add(std::abs(big_f(p, 1, m) - 1.0), at(1, seed) + " " + std::string(method_label(m)));
  }
  report("7 degenerate size", gap.value < 1e-12, fmt("|F(1) - 1| worst %.3e at %s (tol 1e-12)", gap.value, gap.where.c_str()));
}

void determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"z", "--n", "4", "--seed", "3", "--method", "oracle,tsuchiya,enumerate"},
      {"z", "--n", "3", "--seed", "3", "--method", "oracle,tsuchiya,enumerate"},
      {"profile", "--n", "5", "--seed", "4", "--method", "ratio-oracle"},
      {"profile", "--n", "5", "--seed", "4", "--method", "ratio-perm"},
      {"profile", "--n", "5", "--seed", "4", "--method", "ratio-det"},
      {"profile", "--n", "5", "--seed", "4", "--method", "closed-form"},
      {"validate", "--n", "3", "--trials", "3", "--seed", "5", "--format", "json"},
  };
  int identical = 0;
  for (const auto& args : commands) {
    const std::string first = cli_output(args);
    bool same = true;
    for (int repeat = 0; repeat < 3; ++repeat) same = same && cli_output(args) == first;
    if (same) ++identical;
  }
  report("8 determinism", identical == static_cast<int>(commands.size()),
         fmt("%d of %zu commands byte-identical over 4 runs", identical, commands.size()));
}

// Median time of one route at size n, read back from the bench command.
double bench_median(const std::string& output, int n, const std::string& method) {
  std::stringstream in(output);
  std::string line;
  const std::string prefix = std::to_string(n) + "," + method + ",";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
  return std::nan("");
}

void performance() {
  int code = 0;
  const std::string five = cli_output({"bench", "--n-range", "5..5", "--trials", "5", "--method", "perm,det"}, &code);
  const double perm = bench_median(five, 5, "perm");
  const double det = bench_median(five, 5, "det");
  report("9a det faster than perm at N=5", code == 0 && det < perm,
         fmt("median det %.0f ns, perm %.0f ns", det, perm));

  const auto start = Clock::now();
  const std::string eight = cli_output({"bench", "--n-range", "8..8", "--trials", "1", "--method", "det"}, &code);
  const double elapsed = seconds_since(start);
  report("9b det route at N=8", code == 0 && elapsed < 5.0,
         fmt("bench wall %.3f s (limit 5 s), median %.0f ns", elapsed, bench_median(eight, 8, "det")));
}

void full_validate() {
  int code = 0;
  const auto start = Clock::now();
  cli_output({"validate", "--n", "5", "--trials", "10"}, &code);
  const double elapsed = seconds_since(start);
  report("validate --n 5 --trials 10", code == 0 && elapsed < 60.0, fmt("exit %d, %.3f s (limit 60 s)", code, elapsed));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {structural, partition,  dwbc_block,  wave_functions, sigma_expansion,
                                                       one_point,  degenerate_size, determinism, performance,    full_validate};
  for (const auto& c : criteria) c();
  std::printf("%d failing\n", failures);
  return failures == 0 ? 0 : 1;
}
