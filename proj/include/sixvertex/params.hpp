#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sixv {

/// Parameter point of the 2N x N reflecting-end lattice.
///
/// `lambdas` are the double-row spectral parameters, `nus` the column
/// inhomogeneities. Both have exactly `n` entries.
struct ModelParams {
  int n = 1;
  double eta = 0.0;
  double zeta_plus = 0.0;
  std::vector<double> lambdas;
  std::vector<double> nus;

  /// Throws std::invalid_argument unless n >= 1 and both lists have n entries.
  void validate_shape() const;

  bool operator==(const ModelParams&) const = default;
};

inline constexpr double kDefaultEpsGeneric = 1e-3;
inline constexpr int kSamplerAttempts = 1000;

/// Families of the denominator catalog. Evaluation order is the
/// declaration order; on exact ties the earlier family is reported.
enum class DenominatorFamily {
  kNone,
  kNuVandermonde,      // sinh^2 nu_j - sinh^2 nu_k
  kLambdaVandermonde,  // sinh^2 lambda_j - sinh^2 lambda_k
  kNuDifference,       // sinh(nu_j - nu_k)
  kWeightPole,         // sinh(+-lambda_a - nu_k + eta/2)
  kDoubledLambda,      // sinh(2 lambda_a)
  kLambdaPair,         // sinh(s lambda_a + s' lambda_b), a < b
  kShiftedCross,       // sinh^2(nu_j +- eta/2) - sinh^2 lambda_a
};

std::string_view family_label(DenominatorFamily family);

struct GenericityReport {
  double min_abs_denominator = 0.0;
  DenominatorFamily worst_family = DenominatorFamily::kNone;
  bool pass = false;
};

/// Minimum |denominator| over the whole catalog. Precondition eps_generic > 0.
GenericityReport check_genericity(const ModelParams& params, double eps_generic);

/// Throws SingularParameterError (message names the family) when the
/// catalog check fails.
void require_generic(const ModelParams& params, double eps_generic);

/// Seeded generic sampler: eta in [0.3, 1.2], zeta_plus in [-1, 1],
/// lambdas and nus in [-1, 1], redrawn until check_genericity passes.
/// Pure function of its arguments. Throws SamplingExhaustedError after
/// kSamplerAttempts rejected draws.
ModelParams random_generic(int n, std::uint64_t seed, double eps_generic = kDefaultEpsGeneric);

void to_json(nlohmann::json& j, const ModelParams& params);
/// Throws std::invalid_argument on missing keys or inconsistent lengths.
void from_json(const nlohmann::json& j, ModelParams& params);

}  // namespace sixv
