#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sixvertex/params.hpp"
#include "sixvertex/sign_vector.hpp"

namespace sixv {

/// Routes to the boundary one-point function F(M) = f(M) / Z.
enum class Method {
  kRatioOracle,  // f_oracle / tsuchiya_z
  kRatioPerm,    // f_perm / tsuchiya_z
  kRatioDet,     // f_det / tsuchiya_z
  kClosedForm,   // sum of det H / det chi ratios, no Z evaluated
};

std::string_view method_label(Method method);
std::optional<Method> parse_method(std::string_view label);

inline constexpr int kMaxDetColumns = 12;

/// Throws CapExceededError if `method` cannot run at size n: the oracle is
/// capped by dense operator size, the permutation route by (N-1)! and the
/// determinant routes by the 2^(N-1) sigma-sum.
void require_method_caps(Method method, int n);

/// d(lambda) = prod_k b(lambda - nu_k - eta/2).
double d_function(double lambda, const ModelParams& params);

/// Weight of one sigma configuration in the expansion of a calB product:
///   prod_a (-s_a) sinh(-s_a l_a + eta/2 - zeta) d(-s_a l_a)
///   * prod_{a<b} sinh(s_a l_a + s_b l_b - eta) / sinh(s_a l_a + s_b l_b),
/// over lambda_1 .. lambda_m with m = sigma.size().
double sigma_weight(const ModelParams& params, const SignVector& sigma);

/// prod_{a <= m} sinh(2 lambda_a + eta) / sinh(2 lambda_a).
double sigma_prefactor(const ModelParams& params, int m);

/// Relative max-component gap between calB(lambda_m)..calB(lambda_1) w+ and
/// its 2^m-term expansion over one-row B(s_a lambda_a) products.
double b_expansion_residual(const ModelParams& params, int m);

/// A sigma-sum value with its diagnostics.
struct SigmaSumEvaluation {
  double value = 0.0;
  /// max |term| / |sum|; large values flag cancellation.
  double cancellation = 0.0;
  /// Smallest LU pivot over every determinant evaluated (infinity if none).
  double pivot_min = 0.0;
  /// Number of elementary terms summed.
  long terms = 0;
};

/// f(M) via the sigma expansion and the coordinate (permutation-sum) wave function.
SigmaSumEvaluation f_perm_eval(const ModelParams& params, int column);
inline double f_perm(const ModelParams& params, int column) { return f_perm_eval(params, column).value; }

/// f(M) via the sigma expansion and the H-determinant wave function.
SigmaSumEvaluation f_det_eval(const ModelParams& params, int column);
inline double f_det(const ModelParams& params, int column) { return f_det_eval(params, column).value; }

/// F(M) from the fully simplified determinant-ratio display.
SigmaSumEvaluation closed_form_eval(const ModelParams& params, int column);

/// F(M) by the chosen route.
double big_f(const ModelParams& params, int column, Method method);

/// F(1..N) with |sum - 1| recorded as is.
struct OnePointProfile {
  std::vector<double> values;
  Method method = Method::kRatioDet;
  double normalization_gap = 0.0;
};

OnePointProfile profile(const ModelParams& params, Method method);

}  // namespace sixv
