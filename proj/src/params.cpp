#include "sixvertex/params.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "sixvertex/errors.hpp"

namespace sixv {

void ModelParams::validate_shape() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (lambdas.size() != static_cast<std::size_t>(n) || nus.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("lambdas and nus must each have exactly n entries");
  }
}

std::string_view family_label(DenominatorFamily family) {
  switch (family) {
    case DenominatorFamily::kNone: return "none";
    case DenominatorFamily::kNuVandermonde: return "nu-Vandermonde";
    case DenominatorFamily::kLambdaVandermonde: return "lambda-Vandermonde";
    case DenominatorFamily::kNuDifference: return "nu-difference";
    case DenominatorFamily::kWeightPole: return "weight-pole";
    case DenominatorFamily::kDoubledLambda: return "doubled-lambda";
    case DenominatorFamily::kLambdaPair: return "lambda-pair";
    case DenominatorFamily::kShiftedCross: return "shifted-cross";
  }
  return "unknown";
}

namespace {

class MinTracker {
 public:
  void offer(double value, DenominatorFamily family) {
    const double a = std::abs(value);
    if (a < min_ || (std::isnan(a) && !std::isnan(min_))) {
      min_ = a;
      family_ = family;
    }
  }
  double min() const { return min_; }
  DenominatorFamily family() const { return family_; }

 private:
  double min_ = std::numeric_limits<double>::infinity();
  DenominatorFamily family_ = DenominatorFamily::kNone;
};

double sq(double x) { return x * x; }

}  // namespace

GenericityReport check_genericity(const ModelParams& p, double eps_generic) {
  if (!(eps_generic > 0)) throw std::invalid_argument("eps_generic must be positive");
  p.validate_shape();
  const int n = p.n;
  const double eta = p.eta;
  const auto& lam = p.lambdas;
  const auto& nu = p.nus;
  MinTracker t;

  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      t.offer(sq(std::sinh(nu[j])) - sq(std::sinh(nu[k])), DenominatorFamily::kNuVandermonde);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      t.offer(sq(std::sinh(lam[j])) - sq(std::sinh(lam[k])), DenominatorFamily::kLambdaVandermonde);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      t.offer(std::sinh(nu[j] - nu[k]), DenominatorFamily::kNuDifference);
  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < n; ++k) {
      t.offer(std::sinh(lam[a] - nu[k] + eta / 2), DenominatorFamily::kWeightPole);
      t.offer(std::sinh(-lam[a] - nu[k] + eta / 2), DenominatorFamily::kWeightPole);
    }
  }
  for (int a = 0; a < n; ++a) t.offer(std::sinh(2 * lam[a]), DenominatorFamily::kDoubledLambda);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int s : {1, -1})
        for (int s2 : {1, -1})
          t.offer(std::sinh(s * lam[a] + s2 * lam[b]), DenominatorFamily::kLambdaPair);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int a = 0; a < n; ++a) {
      t.offer(sq(std::sinh(nu[j] + eta / 2)) - sq(std::sinh(lam[a])), DenominatorFamily::kShiftedCross);
      t.offer(sq(std::sinh(nu[j] - eta / 2)) - sq(std::sinh(lam[a])), DenominatorFamily::kShiftedCross);
    }
  }

  GenericityReport report;
  report.min_abs_denominator = t.min();
  report.worst_family = t.family();
  report.pass = t.min() >= eps_generic;
  return report;
}

void require_generic(const ModelParams& params, double eps_generic) {
  const GenericityReport r = check_genericity(params, eps_generic);
  if (!r.pass) {
    throw SingularParameterError("parameters are not generic: family " +
                                 std::string(family_label(r.worst_family)) + " reaches |denominator| = " +
                                 std::to_string(r.min_abs_denominator));
  }
}

ModelParams random_generic(int n, std::uint64_t seed, double eps_generic) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::mt19937_64 engine(seed);
  // 53 high bits -> [0, 1); avoids the implementation-defined
  // std::uniform_real_distribution so draws are portable.
  auto uniform = [&engine](double lo, double hi) {
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  };

  ModelParams p;
  p.n = n;
  p.lambdas.resize(n);
  p.nus.resize(n);
  for (int attempt = 0; attempt < kSamplerAttempts; ++attempt) {
    p.eta = uniform(0.3, 1.2);
    p.zeta_plus = uniform(-1.0, 1.0);
    for (auto& l : p.lambdas) l = uniform(-1.0, 1.0);
    for (auto& v : p.nus) v = uniform(-1.0, 1.0);
    if (check_genericity(p, eps_generic).pass) return p;
  }
  throw SamplingExhaustedError("no generic parameter point found for n = " + std::to_string(n) +
                               " after " + std::to_string(kSamplerAttempts) + " attempts");
}

void to_json(nlohmann::json& j, const ModelParams& p) {
  j = nlohmann::json{{"n", p.n}, {"eta", p.eta}, {"zeta_plus", p.zeta_plus}, {"lambdas", p.lambdas}, {"nus", p.nus}};
}

void from_json(const nlohmann::json& j, ModelParams& p) {
  try {
    ModelParams out;
    out.n = j.at("n").get<int>();
    out.eta = j.at("eta").get<double>();
    out.zeta_plus = j.at("zeta_plus").get<double>();
    out.lambdas = j.at("lambdas").get<std::vector<double>>();
    out.nus = j.at("nus").get<std::vector<double>>();
    out.validate_shape();
    p = std::move(out);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed parameter JSON: ") + e.what());
  }
}

}  // namespace sixv
