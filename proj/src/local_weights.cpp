#include "sixvertex/local_weights.hpp"

#include <cmath>

#include "sixvertex/numeric.hpp"

namespace sixv {

Weights weights(double u, double eta) {
  const double den = require_nonzero(std::sinh(u + eta), "sinh(u + eta) in a six-vertex weight");
  return Weights{1.0, std::sinh(u) / den, std::sinh(eta) / den};
}

AuxSiteMatrix r_matrix(double u, double eta) {
  const Weights w = weights(u, eta);
  AuxSiteMatrix r = AuxSiteMatrix::Zero();
  r(0, 0) = w.a;
  r(1, 1) = w.b;
  r(1, 2) = w.c;
  r(2, 1) = w.c;
  r(2, 2) = w.b;
  r(3, 3) = w.a;
  return r;
}

LMatrix l_matrix(double lambda, double nu, double eta) {
  const double u = lambda - nu - eta / 2;
  return LMatrix{weights(u, eta), r_matrix(u, eta)};
}

ExtendedAuxSiteMatrix l_matrix_extended(double lambda, double nu, double eta_in) {
  const Extended eta = eta_in;
  const Extended u = static_cast<Extended>(lambda) - nu - eta / 2;
  const Extended den = std::sinh(u + eta);
  require_nonzero(static_cast<double>(den), "sinh(u + eta) in a six-vertex weight");
  const Extended b = std::sinh(u) / den;
  const Extended c = std::sinh(eta) / den;
  ExtendedAuxSiteMatrix r = ExtendedAuxSiteMatrix::Zero();
  r(0, 0) = 1;
  r(1, 1) = b;
  r(1, 2) = c;
  r(2, 1) = c;
  r(2, 2) = b;
  r(3, 3) = 1;
  return r;
}

BoundaryMatrix k_plus(double lambda, double eta, double zeta) {
  return BoundaryMatrix{std::sinh(lambda + eta / 2 + zeta), std::sinh(-lambda - eta / 2 + zeta)};
}

namespace {

template <class M>
M conjugate_sigma2(const M& m) {
  M out;
  out.template block<2, 2>(0, 0) = m.template block<2, 2>(2, 2);
  out.template block<2, 2>(0, 2) = -m.template block<2, 2>(2, 0);
  out.template block<2, 2>(2, 0) = -m.template block<2, 2>(0, 2);
  out.template block<2, 2>(2, 2) = m.template block<2, 2>(0, 0);
  return out;
}

}  // namespace

ExtendedAuxSiteMatrix aux_conjugate_sigma2(const ExtendedAuxSiteMatrix& m) { return conjugate_sigma2(m); }

AuxSiteMatrix aux_conjugate_sigma2(const AuxSiteMatrix& m) { return conjugate_sigma2(m); }

AuxSiteMatrix aux_transpose(const AuxSiteMatrix& m) {
  AuxSiteMatrix out;
  out.block<2, 2>(0, 0) = m.block<2, 2>(0, 0);
  out.block<2, 2>(0, 2) = m.block<2, 2>(2, 0);
  out.block<2, 2>(2, 0) = m.block<2, 2>(0, 2);
  out.block<2, 2>(2, 2) = m.block<2, 2>(2, 2);
  return out;
}

Eigen::Matrix2d aux_block(const AuxSiteMatrix& m, int aux_row, int aux_col) {
  return m.block<2, 2>(2 * aux_row, 2 * aux_col);
}

namespace {

using Matrix8d = Eigen::Matrix<double, 8, 8>;

// Embeds a two-slot operator on slots (i, j) of three slots; slot 0 is the
// most significant bit of the 8-dimensional index.
Matrix8d embed_pair(const Eigen::Matrix4d& op, int i, int j) {
  const int spectator = 3 - i - j;
  auto bit = [](int index, int slot) { return (index >> (2 - slot)) & 1; };
  Matrix8d out = Matrix8d::Zero();
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      if (bit(row, spectator) != bit(col, spectator)) continue;
      out(row, col) = op(2 * bit(row, i) + bit(row, j), 2 * bit(col, i) + bit(col, j));
    }
  }
  return out;
}

Eigen::Matrix4d kron(const Eigen::Matrix2d& x, const Eigen::Matrix2d& y) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return out;
}

}  // namespace

double ybe_residual(double lambda, double mu, double eta) {
  const Matrix8d r12 = embed_pair(r_matrix(lambda, eta), 0, 1);
  const Matrix8d r13 = embed_pair(r_matrix(lambda + mu, eta), 0, 2);
  const Matrix8d r23 = embed_pair(r_matrix(mu, eta), 1, 2);
  return (r12 * r13 * r23 - r23 * r13 * r12).cwiseAbs().maxCoeff();
}

double reflection_residual(double lambda1, double lambda2, double eta, double zeta) {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d k1 = k_plus(lambda1, eta, zeta).dense().transpose();
  const Eigen::Matrix2d k2 = k_plus(lambda2, eta, zeta).dense().transpose();
  const Eigen::Matrix4d k1_slot = kron(k1, id);
  const Eigen::Matrix4d k2_slot = kron(id, k2);
  const Eigen::Matrix4d r_diff = r_matrix(-lambda1 + lambda2, eta);
  const Eigen::Matrix4d r_sum = r_matrix(-lambda1 - lambda2 - eta, eta);
  const Eigen::Matrix4d lhs = r_diff * k1_slot * r_sum * k2_slot;
  const Eigen::Matrix4d rhs = k2_slot * r_sum * k1_slot * r_diff;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace sixv
