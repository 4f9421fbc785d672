#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sixvertex/numeric.hpp"
#include "sixvertex/params.hpp"
#include "sixvertex/sign_vector.hpp"

namespace sixv {

enum class KernelKind { kGeneric, kChi, kCauchyPhi, kH };

std::string_view kernel_label(KernelKind kind);

struct KernelMatrix {
  Eigen::MatrixXd values;
  KernelKind kind = KernelKind::kGeneric;
};

/// det = value * exp(log_scale). log_scale is nonzero only when the plain
/// double would overflow or underflow.
struct DetResult {
  double value = 0.0;
  double log_scale = 0.0;
  double pivot_min = 0.0;  // smallest |pivot|; conditioning witness
  bool singular = false;   // an exactly zero pivot column was hit
  SignedLog exact;         // the same determinant before rounding to double

  double determinant() const { return value * std::exp(log_scale); }
  SignedLog as_signed_log() const { return exact; }
};

using ExtendedMatrix = Eigen::Matrix<Extended, Eigen::Dynamic, Eigen::Dynamic>;

/// LU with partial pivoting, carried out in extended precision. Throws
/// std::invalid_argument for a non-square input.
DetResult det_lu(const KernelMatrix& m);
DetResult det_lu(const Eigen::MatrixXd& m);
DetResult det_lu(const ExtendedMatrix& m);

/// A closed-form value together with the conditioning of its determinant.
struct DetEvaluation {
  double value = 0.0;
  double pivot_min = 0.0;
  Extended extended = 0.0L;  // value before rounding
};

/// phi(lambda, nu) = sinh eta / (sinh(lambda - nu + eta/2) sinh(lambda - nu - eta/2)).
double phi_kernel(double lambda, double nu, double eta);

/// chi(lambda, nu) = -sinh eta sinh(2 lambda + eta) sinh(nu + zeta)
///   / ([sinh^2(nu + eta/2) - sinh^2 lambda] [sinh^2(nu - eta/2) - sinh^2 lambda]).
double chi_kernel(double lambda, double nu, double eta, double zeta);

/// chi_{jk} = chi(lambda_j, nu_k).
KernelMatrix chi_matrix(const ModelParams& params);

/// M_{alpha k} = phi(lambda_alpha, nu_k).
KernelMatrix cauchy_phi_matrix(std::span<const double> lambdas, std::span<const double> nus, double eta);

/// N x N matrix with first row h(nu_k) and rows alpha >= 2 equal to
/// phi(row_lambdas[alpha-2], nu_k). `row_lambdas` has N-1 entries.
KernelMatrix h_matrix(std::span<const double> nus, std::span<const double> row_lambdas, double eta, int column);
/// The same matrix with entries evaluated in extended precision.
ExtendedMatrix h_matrix_extended(std::span<const double> nus, std::span<const Extended> row_lambdas, double eta,
                                 int column);

/// Reflecting-end partition function in determinant form.
DetEvaluation tsuchiya(const ModelParams& params);
inline double tsuchiya_z(const ModelParams& params) { return tsuchiya(params).value; }

/// Domain-wall partition function of the square lattice in determinant form.
DetEvaluation izergin(std::span<const double> lambdas, std::span<const double> nus, double eta);
inline double izergin_z(std::span<const double> lambdas, std::span<const double> nus, double eta) {
  return izergin(lambdas, nus, eta).value;
}

/// The column-picture wave function with M-th column's Dbar, evaluated by
/// the H-determinant at the dressed rows {sigma_alpha lambda_alpha}, alpha < N.
DetEvaluation wavefunction_det_eval(const ModelParams& params, int column, const SignVector& sigma);
inline double wavefunction_det(const ModelParams& params, int column, const SignVector& sigma) {
  return wavefunction_det_eval(params, column, sigma).value;
}

/// wavefunction_det_eval for many sign vectors at fixed params and column.
/// The sinh values are tabulated once for both signs of every lambda_alpha.
class HFormTable {
 public:
  HFormTable(const ModelParams& params, int column);
  DetEvaluation evaluate(const SignVector& sigma) const;

 private:
  Extended& at(std::vector<Extended>& t, int sign, int a, int k) const;
  const Extended& at(const std::vector<Extended>& t, int sign, int a, int k) const;

  int n_ = 0;
  int column_ = 0;
  Extended sinh_eta_ = 0.0L;
  std::vector<Extended> plus_;        // sinh(s lambda_a - nu_k + eta/2)
  std::vector<Extended> minus_;       // sinh(s lambda_a - nu_k - eta/2)
  std::vector<Extended> difference_;  // sinh(s lambda_a - s' lambda_b)
  std::vector<Extended> row0_;        // numerator of the first row, per k
  Extended vandermonde_ = 1.0L;       // prod_{j<k} sinh(nu_k - nu_j)
};

}  // namespace sixv
