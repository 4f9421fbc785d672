#include "sixvertex/determinants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace sixv {

std::string_view kernel_label(KernelKind kind) {
  switch (kind) {
    case KernelKind::kGeneric: return "generic";
    case KernelKind::kChi: return "chi";
    case KernelKind::kCauchyPhi: return "cauchy-phi";
    case KernelKind::kH: return "H";
  }
  return "unknown";
}

DetResult det_lu(const ExtendedMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("det_lu: matrix is not square");
  const Eigen::Index n = input.rows();
  DetResult out;
  if (n == 0) {
    out.value = 1.0;
    out.pivot_min = std::numeric_limits<double>::infinity();
    return out;
  }

  ExtendedMatrix lu = input;
  SignedLog det;
  Extended pivot_min = std::numeric_limits<Extended>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot_row = k;
    lu.col(k).tail(n - k).cwiseAbs().maxCoeff(&pivot_row);
    pivot_row += k;
    const Extended pivot = lu(pivot_row, k);
    pivot_min = std::min(pivot_min, std::abs(pivot));
    if (pivot == 0.0L) {
      out.singular = true;
      out.pivot_min = 0.0;
      out.exact = SignedLog(0.0L);
      return out;
    }
    if (pivot_row != k) {
      lu.row(k).swap(lu.row(pivot_row));
      det.multiply(-1.0L);
    }
    det.multiply(pivot);
    const Eigen::Index rest = n - k - 1;
    if (rest > 0) {
      lu.col(k).tail(rest) /= pivot;
      lu.bottomRightCorner(rest, rest).noalias() -= lu.col(k).tail(rest) * lu.row(k).tail(rest);
    }
  }

  out.pivot_min = static_cast<double>(pivot_min);
  out.exact = det;
  // exp() is exact enough and finite well inside +-700.
  if (std::abs(det.log_abs()) < 700.0L) {
    out.value = det.value();
  } else {
    out.value = det.sign();
    out.log_scale = static_cast<double>(det.log_abs());
  }
  return out;
}

DetResult det_lu(const Eigen::MatrixXd& input) { return det_lu(ExtendedMatrix(input.cast<Extended>())); }

DetResult det_lu(const KernelMatrix& m) { return det_lu(m.values); }

double phi_kernel(double lambda, double nu, double eta) {
  const double d1 = require_nonzero(std::sinh(lambda - nu + eta / 2), "sinh(lambda - nu + eta/2) in phi");
  const double d2 = require_nonzero(std::sinh(lambda - nu - eta / 2), "sinh(lambda - nu - eta/2) in phi");
  return std::sinh(eta) / (d1 * d2);
}

namespace {

double sq(double x) { return x * x; }

double shifted_cross(double nu, double shift, double lambda) {
  return require_nonzero(sq(std::sinh(nu + shift)) - sq(std::sinh(lambda)),
                         "sinh^2(nu +- eta/2) - sinh^2 lambda");
}

}  // namespace

double chi_kernel(double lambda, double nu, double eta, double zeta) {
  const double den = shifted_cross(nu, eta / 2, lambda) * shifted_cross(nu, -eta / 2, lambda);
  return -std::sinh(eta) * std::sinh(2 * lambda + eta) * std::sinh(nu + zeta) / den;
}

KernelMatrix chi_matrix(const ModelParams& p) {
  p.validate_shape();
  KernelMatrix m{Eigen::MatrixXd(p.n, p.n), KernelKind::kChi};
  for (int j = 0; j < p.n; ++j)
    for (int k = 0; k < p.n; ++k) m.values(j, k) = chi_kernel(p.lambdas[j], p.nus[k], p.eta, p.zeta_plus);
  return m;
}

KernelMatrix cauchy_phi_matrix(std::span<const double> lambdas, std::span<const double> nus, double eta) {
  if (lambdas.size() != nus.size()) throw std::invalid_argument("cauchy_phi_matrix: length mismatch");
  const auto n = static_cast<Eigen::Index>(lambdas.size());
  KernelMatrix m{Eigen::MatrixXd(n, n), KernelKind::kCauchyPhi};
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index k = 0; k < n; ++k) m.values(a, k) = phi_kernel(lambdas[a], nus[k], eta);
  return m;
}

namespace {

template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> fill_h(std::span<const double> nus,
                                                             std::span<const Scalar> row_lambdas, double eta_in,
                                                             int column) {
  const int n = static_cast<int>(nus.size());
  if (static_cast<int>(row_lambdas.size()) != n - 1) throw std::invalid_argument("h_matrix: need N-1 row lambdas");
  if (column < 1 || column > n) throw std::out_of_range("h_matrix: column outside [1, N]");
  const Scalar eta = eta_in;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (int k = 0; k < n; ++k) {
    const Scalar nu = nus[k];
    Scalar h = 1;
    for (int kp = 0; kp < column - 1; ++kp) h *= std::sinh(nus[kp] - nu + eta);
    for (int kp = column; kp < n; ++kp) h *= std::sinh(nus[kp] - nu);
    for (Scalar lambda : row_lambdas) {
      const Scalar s = std::sinh(lambda - nu + eta / 2);
      require_nonzero(static_cast<double>(s), "sinh(lambda - nu + eta/2) in h");
      h /= s;
    }
    m(0, k) = h;
    for (int a = 1; a < n; ++a) {
      const Scalar plus = std::sinh(row_lambdas[a - 1] - nu + eta / 2);
      const Scalar minus = std::sinh(row_lambdas[a - 1] - nu - eta / 2);
      require_nonzero(static_cast<double>(plus), "sinh(lambda - nu + eta/2) in phi");
      require_nonzero(static_cast<double>(minus), "sinh(lambda - nu - eta/2) in phi");
      m(a, k) = std::sinh(eta) / (plus * minus);
    }
  }
  return m;
}

}  // namespace

KernelMatrix h_matrix(std::span<const double> nus, std::span<const double> row_lambdas, double eta, int column) {
  return KernelMatrix{fill_h<double>(nus, row_lambdas, eta, column), KernelKind::kH};
}

ExtendedMatrix h_matrix_extended(std::span<const double> nus, std::span<const Extended> row_lambdas, double eta,
                                 int column) {
  return fill_h<Extended>(nus, row_lambdas, eta, column);
}

DetEvaluation tsuchiya(const ModelParams& p) {
  p.validate_shape();
  const int n = p.n;
  const auto& lam = p.lambdas;
  const auto& nu = p.nus;
  const DetResult det = det_lu(chi_matrix(p));

  SignedLog value = det.as_signed_log();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) value.multiply(sq(std::sinh(nu[j] + p.eta / 2)) - sq(std::sinh(lam[k])));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      value.divide(require_nonzero(sq(std::sinh(nu[j])) - sq(std::sinh(nu[k])), "sinh^2 nu_j - sinh^2 nu_k"));
      value.divide(require_nonzero(sq(std::sinh(lam[k])) - sq(std::sinh(lam[j])), "sinh^2 lambda_k - sinh^2 lambda_j"));
    }
  }
  return DetEvaluation{value.value(), det.pivot_min, value.extended_value()};
}

DetEvaluation izergin(std::span<const double> lambdas, std::span<const double> nus, double eta) {
  if (lambdas.size() != nus.size()) throw std::invalid_argument("izergin: length mismatch");
  const int n = static_cast<int>(lambdas.size());
  const DetResult det = det_lu(cauchy_phi_matrix(lambdas, nus, eta));

  SignedLog value = det.as_signed_log();
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) value.multiply(std::sinh(lambdas[a] - nus[k] - eta / 2));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      value.divide(require_nonzero(std::sinh(nus[j] - nus[k]), "sinh(nu_j - nu_k)"));
      value.divide(require_nonzero(std::sinh(lambdas[k] - lambdas[j]), "sinh(lambda_b - lambda_a)"));
    }
  }
  return DetEvaluation{value.value(), det.pivot_min, value.extended_value()};
}

DetEvaluation wavefunction_det_eval(const ModelParams& p, int column, const SignVector& sigma) {
  return HFormTable(p, column).evaluate(sigma);
}

namespace {

int sign_index(int sign) { return sign > 0 ? 0 : 1; }

}  // namespace

HFormTable::HFormTable(const ModelParams& p, int column) : n_(p.n), column_(column) {
  p.validate_shape();
  const int n = p.n;
  if (column < 1 || column > n) throw std::out_of_range("wavefunction_det: column outside [1, N]");
  const int m = n - 1;
  const Extended eta = p.eta;
  sinh_eta_ = std::sinh(eta);
  plus_.resize(2 * m * n);
  minus_.resize(2 * m * n);
  difference_.resize(4 * m * m);
  for (int sign : {1, -1}) {
    for (int a = 0; a < m; ++a) {
      const Extended l = sign * static_cast<Extended>(p.lambdas[a]);
      for (int k = 0; k < n; ++k) {
        const Extended nu = p.nus[k];
        at(plus_, sign, a, k) = std::sinh(l - nu + eta / 2);
        at(minus_, sign, a, k) = std::sinh(l - nu - eta / 2);
      }
    }
  }
  for (int sa : {1, -1})
    for (int sb : {1, -1})
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const Extended d = std::sinh(sa * static_cast<Extended>(p.lambdas[a]) - sb * static_cast<Extended>(p.lambdas[b]));
          difference_[((sign_index(sa) * 2 + sign_index(sb)) * m + a) * m + b] = d;
        }
  row0_.resize(n);
  for (int k = 0; k < n; ++k) {
    const Extended nu = p.nus[k];
    Extended h = 1;
    for (int kp = 0; kp < column - 1; ++kp) h *= std::sinh(p.nus[kp] - nu + eta);
    for (int kp = column; kp < n; ++kp) h *= std::sinh(p.nus[kp] - nu);
    row0_[k] = h;
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      const Extended s = std::sinh(static_cast<Extended>(p.nus[k]) - p.nus[j]);
      require_nonzero(static_cast<double>(s), "sinh(nu_k - nu_j)");
      vandermonde_ *= s;
    }
}

Extended& HFormTable::at(std::vector<Extended>& t, int sign, int a, int k) const {
  return t[(sign_index(sign) * (n_ - 1) + a) * n_ + k];
}

const Extended& HFormTable::at(const std::vector<Extended>& t, int sign, int a, int k) const {
  return t[(sign_index(sign) * (n_ - 1) + a) * n_ + k];
}

DetEvaluation HFormTable::evaluate(const SignVector& sigma) const {
  const int n = n_;
  const int m = n - 1;
  if (sigma.size() != m) throw std::invalid_argument("wavefunction_det: sign vector must have N-1 entries");

  ExtendedMatrix h(n, n);
  Extended outer = 1.0L;
  for (int k = 0; k < n; ++k) {
    Extended first = row0_[k];
    for (int a = 0; a < m; ++a) {
      const Extended plus = at(plus_, sigma[a], a, k);
      const Extended minus = at(minus_, sigma[a], a, k);
      require_nonzero(static_cast<double>(plus), "sinh(lambda - nu + eta/2) in h");
      require_nonzero(static_cast<double>(minus), "sinh(lambda - nu - eta/2) in phi");
      first /= plus;
      h(a + 1, k) = sinh_eta_ / (plus * minus);
      outer *= minus;
    }
    h(0, k) = first;
  }
  const DetResult det = det_lu(h);

  Extended pairs = 1.0L;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Extended s = difference_[((sign_index(sigma[a]) * 2 + sign_index(sigma[b])) * m + a) * m + b];
      require_nonzero(static_cast<double>(s), "sinh(lambda_a - lambda_b) in H form");
      pairs *= s;
    }
  const Extended value = det.exact.extended_value() * outer / (vandermonde_ * pairs);
  return DetEvaluation{static_cast<double>(value), det.pivot_min, value};
}

}  // namespace sixv
