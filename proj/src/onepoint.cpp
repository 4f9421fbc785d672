#include "sixvertex/onepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixvertex/determinants.hpp"
#include "sixvertex/errors.hpp"
#include "sixvertex/lattice_oracle.hpp"
#include "sixvertex/local_weights.hpp"
#include "sixvertex/numeric.hpp"
#include "sixvertex/wavefunction.hpp"

namespace sixv {

std::string_view method_label(Method method) {
  switch (method) {
    case Method::kRatioOracle: return "ratio-oracle";
    case Method::kRatioPerm: return "ratio-perm";
    case Method::kRatioDet: return "ratio-det";
    case Method::kClosedForm: return "closed-form";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view label) {
  for (Method m : {Method::kRatioOracle, Method::kRatioPerm, Method::kRatioDet, Method::kClosedForm}) {
    if (method_label(m) == label) return m;
  }
  return std::nullopt;
}

void require_method_caps(Method method, int n) {
  switch (method) {
    case Method::kRatioOracle:
      require_oracle_size(n);
      return;
    case Method::kRatioPerm:
      if (n - 1 > kMaxPermutationOrder) {
        throw CapExceededError("permutation route needs N-1 <= " + std::to_string(kMaxPermutationOrder) +
                               ", got N = " + std::to_string(n));
      }
      return;
    case Method::kRatioDet:
    case Method::kClosedForm:
      if (n > kMaxDetColumns) {
        throw CapExceededError("determinant routes are capped at N = " + std::to_string(kMaxDetColumns) +
                               ", got N = " + std::to_string(n));
      }
      return;
  }
}

namespace {

Extended checked(Extended x, const char* what) {
  require_nonzero(static_cast<double>(x), what);
  return x;
}

Extended sq(Extended x) { return x * x; }

Extended extended_d(Extended lambda, const ModelParams& p) {
  const Extended eta = p.eta;
  Extended d = 1.0L;
  for (double nu : p.nus) {
    const Extended u = lambda - nu - eta / 2;
    d *= std::sinh(u) / checked(std::sinh(u + eta), "sinh(u + eta) in d");
  }
  return d;
}

Extended extended_sigma_weight(const ModelParams& p, const SignVector& sigma) {
  const int m = sigma.size();
  const Extended eta = p.eta;
  Extended w = 1.0L;
  for (int a = 0; a < m; ++a) {
    const Extended dressed = sigma[a] * static_cast<Extended>(p.lambdas[a]);
    w *= -sigma[a] * std::sinh(-dressed + eta / 2 - p.zeta_plus) * extended_d(-dressed, p);
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Extended s = sigma[a] * static_cast<Extended>(p.lambdas[a]) + sigma[b] * static_cast<Extended>(p.lambdas[b]);
      w *= std::sinh(s - eta) / checked(std::sinh(s), "sinh(s_a lambda_a + s_b lambda_b)");
    }
  }
  return w;
}

Extended extended_prefactor(const ModelParams& p, int m) {
  Extended f = 1.0L;
  for (int a = 0; a < m; ++a) {
    const Extended l = p.lambdas[a];
    f *= std::sinh(2 * l + p.eta) / checked(std::sinh(2 * l), "sinh(2 lambda)");
  }
  return f;
}

using ExtendedState = std::vector<Extended>;

// One-row B(lambda) applied site by site.
ExtendedState extended_b(const ModelParams& p, Extended lambda, const ExtendedState& v) {
  ExtendedState up(v.size(), 0.0L), down = v;
  const Extended eta = p.eta;
  for (int k = 0; k < p.n; ++k) {
    const Extended u = lambda - p.nus[k] - eta / 2;
    const Extended den = checked(std::sinh(u + eta), "sinh(u + eta) in a B weight");
    const Extended b = std::sinh(u) / den;
    const Extended c = std::sinh(eta) / den;
    const std::size_t bit = std::size_t{1} << k;
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (s & bit) continue;
      const std::size_t t = s | bit;
      const Extended up_down = up[t], down_up = down[s];
      up[t] = b * up_down + c * down_up;
      down[s] = c * up_down + b * down_up;
    }
  }
  return up;
}

}  // namespace

double d_function(double lambda, const ModelParams& p) { return static_cast<double>(extended_d(lambda, p)); }

double sigma_weight(const ModelParams& p, const SignVector& sigma) {
  return static_cast<double>(extended_sigma_weight(p, sigma));
}

double sigma_prefactor(const ModelParams& p, int m) { return static_cast<double>(extended_prefactor(p, m)); }

double b_expansion_residual(const ModelParams& p, int m) {
  p.validate_shape();
  if (m < 1 || m > p.n) throw std::out_of_range("b_expansion_residual: m outside [1, n]");
  const StateVector lhs = double_row_b_state(p, m);

  ExtendedState rhs(lhs.size(), 0.0L);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    const SignVector sigma = SignVector::from_mask(mask, m);
    ExtendedState v(lhs.size(), 0.0L);
    v[0] = 1.0L;
    for (int a = 0; a < m; ++a) v = extended_b(p, sigma[a] * static_cast<Extended>(p.lambdas[a]), v);
    const Extended w = extended_sigma_weight(p, sigma);
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] += w * v[i];
  }
  const Extended prefactor = extended_prefactor(p, m);

  double gap = 0.0;
  for (Eigen::Index i = 0; i < lhs.size(); ++i) {
    gap = std::max(gap, static_cast<double>(std::abs(lhs[i] - prefactor * rhs[i])));
  }
  const double scale = lhs.norm();
  return scale > 0 ? gap / scale : gap;
}

namespace {

void check_column(const ModelParams& p, int column) {
  p.validate_shape();
  if (column < 1 || column > p.n) throw std::out_of_range("column M outside [1, N]");
}

SigmaSumEvaluation summarize(const std::vector<Extended>& terms, Extended head, double pivot_min, long count) {
  const Extended sum = pairwise_sum(terms);
  Extended max_term = 0.0L;
  for (Extended t : terms) max_term = std::max(max_term, std::abs(t));
  SigmaSumEvaluation out;
  out.value = static_cast<double>(head * sum);
  if (max_term == 0.0L) {
    out.cancellation = 0.0;
  } else {
    out.cancellation = sum == 0.0L ? std::numeric_limits<double>::infinity() : static_cast<double>(max_term / std::abs(sum));
  }
  out.pivot_min = pivot_min;
  out.terms = count;
  return out;
}

// sinh eta sinh(l_N + eta/2 + zeta) sinh(l_N + nu_M + eta/2) / [sinh^2 l_N - sinh^2(nu_M - eta/2)],
// the simplified b(-l_N - nu_M - eta/2) c(l_N - nu_M - eta/2) sinh(l_N + eta/2 + zeta).
Extended simplified_head(const ModelParams& p, int column) {
  const Extended l = p.lambdas[p.n - 1];
  const Extended nu = p.nus[column - 1];
  const Extended eta = p.eta;
  const Extended den = checked(sq(std::sinh(l)) - sq(std::sinh(nu - eta / 2)), "sinh^2 lambda_N - sinh^2(nu_M - eta/2)");
  return std::sinh(eta) * std::sinh(l + eta / 2 + p.zeta_plus) * std::sinh(l + nu + eta / 2) / den;
}

// (-s) sinh(-s l + eta/2 - zeta) per dressed row and sinh(s l + s' l' - eta) per pair.
SignedLog dressed_numerator(const ModelParams& p, const std::vector<Extended>& dressed, const SignVector& sigma) {
  const Extended eta = p.eta;
  const int m = static_cast<int>(dressed.size());
  SignedLog term;
  for (int a = 0; a < m; ++a) {
    term.multiply(-sigma[a] * std::sinh(-dressed[a] + eta / 2 - p.zeta_plus));
    for (int b = a + 1; b < m; ++b) term.multiply(std::sinh(dressed[a] + dressed[b] - eta));
  }
  return term;
}

std::vector<Extended> dress(const ModelParams& p, const SignVector& sigma) {
  std::vector<Extended> dressed(sigma.size());
  for (int a = 0; a < sigma.size(); ++a) dressed[a] = sigma[a] * static_cast<Extended>(p.lambdas[a]);
  return dressed;
}

}  // namespace

SigmaSumEvaluation f_perm_eval(const ModelParams& p, int column) {
  check_column(p, column);
  require_method_caps(Method::kRatioPerm, p.n);
  const int n = p.n;
  const int m = n - 1;
  const Extended l = p.lambdas[n - 1];
  const Extended eta = p.eta;

  auto b = [&](Extended u) { return std::sinh(u) / checked(std::sinh(u + eta), "sinh(u + eta) in b"); };
  const Extended nu_m = p.nus[column - 1];
  Extended head = std::sinh(l + eta / 2 + p.zeta_plus) * b(-l - nu_m - eta / 2) *
                  std::sinh(eta) / checked(std::sinh(l - nu_m + eta / 2), "sinh(u + eta) in c");
  for (int j = column + 1; j <= n; ++j) head *= b(l - p.nus[j - 1] - eta / 2);
  head *= extended_prefactor(p, m);

  // N = 1: one empty sign vector, empty permutation set, psi = 1.
  const PositionSet positions = PositionSet::all_but(column, n);
  const std::uint32_t configurations = std::uint32_t{1} << m;
  std::vector<Extended> terms;
  terms.reserve(configurations);
  std::vector<double> dressed(m);
  for (std::uint32_t mask = 0; mask < configurations; ++mask) {
    const SignVector sigma = SignVector::from_mask(mask, m);
    for (int a = 0; a < m; ++a) dressed[a] = sigma[a] * p.lambdas[a];
    terms.push_back(extended_sigma_weight(p, sigma) * psi_coordinate_extended(dressed, p, positions));
  }
  return summarize(terms, head, std::numeric_limits<double>::infinity(),
                   static_cast<long>(configurations) * permutation_terms(m));
}

SigmaSumEvaluation f_det_eval(const ModelParams& p, int column) {
  check_column(p, column);
  require_method_caps(Method::kRatioDet, p.n);
  const int n = p.n;
  const int m = n - 1;
  const Extended l = p.lambdas[n - 1];
  const Extended eta = p.eta;

  SignedLog head(simplified_head(p, column));
  for (int j = column + 1; j <= n; ++j) {
    head.multiply(std::sinh(l - p.nus[j - 1] - eta / 2));
    head.divide(checked(std::sinh(l - p.nus[j - 1] + eta / 2), "sinh(lambda_N - nu_j + eta/2)"));
  }
  head.multiply(extended_prefactor(p, m));

  // Per-row factors for both signs: (-s) sinh(-s l + eta/2 - zeta) prod_k sinh(-s l - nu_k - eta/2) / sinh(-s l - nu_k + eta/2).
  std::vector<Extended> single(2 * m);
  for (int a = 0; a < m; ++a) {
    for (int sign : {1, -1}) {
      const Extended d = sign * static_cast<Extended>(p.lambdas[a]);
      Extended f = -sign * std::sinh(-d + eta / 2 - p.zeta_plus);
      for (double nu : p.nus) f *= std::sinh(-d - nu - eta / 2) / checked(std::sinh(-d - nu + eta / 2), "sinh(-s lambda - nu + eta/2)");
      single[2 * a + (sign > 0 ? 0 : 1)] = f;
    }
  }
  // sinh(s l + s' l' - eta) / sinh(s l + s' l'), indexed by the two sign bits.
  std::vector<Extended> pair(4 * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int bits = 0; bits < 4; ++bits) {
        const Extended s = ((bits & 1) ? -1 : 1) * static_cast<Extended>(p.lambdas[a]) +
                           ((bits & 2) ? -1 : 1) * static_cast<Extended>(p.lambdas[b]);
        pair[(a * m + b) * 4 + bits] = std::sinh(s - eta) / checked(std::sinh(s), "sinh(s_a lambda_a + s_b lambda_b)");
      }

  const HFormTable table(p, column);
  const std::uint32_t configurations = std::uint32_t{1} << m;
  std::vector<Extended> terms;
  terms.reserve(configurations);
  double pivot_min = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < configurations; ++mask) {
    const SignVector sigma = SignVector::from_mask(mask, m);
    Extended term = 1.0L;
    for (int a = 0; a < m; ++a) {
      term *= single[2 * a + (mask >> a & 1u)];
      for (int b = a + 1; b < m; ++b) term *= pair[(a * m + b) * 4 + (mask >> a & 1u) + 2 * (mask >> b & 1u)];
    }
    const DetEvaluation psi = table.evaluate(sigma);
    pivot_min = std::min(pivot_min, psi.pivot_min);
    terms.push_back(term * psi.extended);
  }
  return summarize(terms, head.extended_value(), pivot_min, configurations);
}

SigmaSumEvaluation closed_form_eval(const ModelParams& p, int column) {
  check_column(p, column);
  require_method_caps(Method::kClosedForm, p.n);
  const int n = p.n;
  const int m = n - 1;
  const Extended l = p.lambdas[n - 1];
  const Extended eta = p.eta;
  const auto& nu = p.nus;

  SignedLog head(simplified_head(p, column));
  head.multiply(extended_prefactor(p, m));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) head.multiply(std::sinh(static_cast<Extended>(nu[j]) + nu[k]));
  for (int j = 0; j < m; ++j) head.multiply(sq(std::sinh(static_cast<Extended>(p.lambdas[j]))) - sq(std::sinh(l)));
  for (int j = 0; j < column; ++j) {
    head.divide(checked(sq(std::sinh(nu[j] + eta / 2)) - sq(std::sinh(l)), "sinh^2(nu_j + eta/2) - sinh^2 lambda_N"));
  }
  for (int j = column; j < n; ++j) {
    head.divide(checked(sq(std::sinh(static_cast<Extended>(nu[j]))) - sq(std::sinh(l + eta / 2)),
                        "sinh^2 nu_j - sinh^2(lambda_N + eta/2)"));
  }
  const DetResult chi = det_lu(chi_matrix(p));
  if (chi.singular) throw SingularParameterError("det chi vanishes");
  head /= chi.as_signed_log();

  const std::uint32_t configurations = std::uint32_t{1} << m;
  std::vector<Extended> terms;
  terms.reserve(configurations);
  double pivot_min = chi.pivot_min;
  for (std::uint32_t mask = 0; mask < configurations; ++mask) {
    const SignVector sigma = SignVector::from_mask(mask, m);
    const std::vector<Extended> wide = dress(p, sigma);
    SignedLog term = dressed_numerator(p, wide, sigma);
    for (int a = 0; a < m; ++a)
      for (double v : nu) term.divide(checked(std::sinh(-wide[a] - v + eta / 2), "sinh(-s lambda - nu + eta/2)"));
    const DetResult h = det_lu(h_matrix_extended(nu, wide, p.eta, column));
    pivot_min = std::min(pivot_min, h.pivot_min);
    term *= h.as_signed_log();
    terms.push_back(term.extended_value());
  }
  return summarize(terms, head.extended_value(), pivot_min, configurations);
}

namespace {

inline constexpr double kMinPartition = 1e-300;

double numerator(const ModelParams& p, int column, Method method) {
  switch (method) {
    case Method::kRatioOracle: return f_oracle(p, column);
    case Method::kRatioPerm: return f_perm(p, column);
    case Method::kRatioDet: return f_det(p, column);
    case Method::kClosedForm: break;
  }
  throw std::logic_error("closed form has no separate numerator");
}

double guarded_partition(const ModelParams& p) {
  const double z = tsuchiya_z(p);
  if (!(std::abs(z) >= kMinPartition)) throw SingularParameterError("partition function vanishes");
  return z;
}

}  // namespace

double big_f(const ModelParams& p, int column, Method method) {
  check_column(p, column);
  require_method_caps(method, p.n);
  if (method == Method::kClosedForm) return closed_form_eval(p, column).value;
  return numerator(p, column, method) / guarded_partition(p);
}

OnePointProfile profile(const ModelParams& p, Method method) {
  p.validate_shape();
  require_method_caps(method, p.n);
  OnePointProfile out;
  out.method = method;
  out.values.reserve(p.n);
  if (method == Method::kClosedForm) {
    for (int column = 1; column <= p.n; ++column) out.values.push_back(closed_form_eval(p, column).value);
  } else {
    const double z = guarded_partition(p);
    for (int column = 1; column <= p.n; ++column) out.values.push_back(numerator(p, column, method) / z);
  }
  out.normalization_gap = std::abs(pairwise_sum(out.values) - 1.0);
  return out;
}

}  // namespace sixv
