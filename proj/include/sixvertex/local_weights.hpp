#pragma once

#include <Eigen/Dense>

#include "sixvertex/numeric.hpp"

namespace sixv {

/// Six-vertex weights at one spectral argument u:
///   a = 1, b = sinh u / sinh(u + eta), c = sinh eta / sinh(u + eta).
struct Weights {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
};

/// 4x4 matrix on (auxiliary ⊗ site). Basis order (up,up), (up,down),
/// (down,up), (down,down); index 0 = up in every two-dimensional space.
using AuxSiteMatrix = Eigen::Matrix4d;

/// Diagonal boundary matrix; off-diagonal entries are zero by construction.
struct BoundaryMatrix {
  double up = 0.0;
  double down = 0.0;

  Eigen::Matrix2d dense() const {
    Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
    m(0, 0) = up;
    m(1, 1) = down;
    return m;
  }
};

/// Throws SingularParameterError when sinh(u + eta) vanishes.
Weights weights(double u, double eta);
inline double b_weight(double u, double eta) { return weights(u, eta).b; }
inline double c_weight(double u, double eta) { return weights(u, eta).c; }

AuxSiteMatrix r_matrix(double u, double eta);

struct LMatrix {
  Weights weights;
  AuxSiteMatrix matrix;
};

/// L(lambda, nu) = R(lambda - nu - eta/2).
LMatrix l_matrix(double lambda, double nu, double eta);

/// K+(lambda) = diag(sinh(lambda + eta/2 + zeta), sinh(-lambda - eta/2 + zeta)).
BoundaryMatrix k_plus(double lambda, double eta, double zeta);

/// Conjugation by the second Pauli matrix on the auxiliary factor, in real
/// closed form: [[M11, M12], [M21, M22]] -> [[M22, -M21], [-M12, M11]].
AuxSiteMatrix aux_conjugate_sigma2(const AuxSiteMatrix& m);

/// L(lambda, nu) and its sigma2 conjugate with u and every sinh taken in
/// extended precision. Used by the matrix-free state-vector path.
using ExtendedAuxSiteMatrix = Eigen::Matrix<Extended, 4, 4>;
ExtendedAuxSiteMatrix l_matrix_extended(double lambda, double nu, double eta);
ExtendedAuxSiteMatrix aux_conjugate_sigma2(const ExtendedAuxSiteMatrix& m);

/// Partial transpose on the auxiliary factor: blocks (i,j) -> (j,i).
AuxSiteMatrix aux_transpose(const AuxSiteMatrix& m);

/// The 2x2 site-space block (aux_row, aux_col) of an aux⊗site matrix.
Eigen::Matrix2d aux_block(const AuxSiteMatrix& m, int aux_row, int aux_col);

/// max |LHS - RHS| of R12(l) R13(l+m) R23(m) = R23(m) R13(l+m) R12(l) as 8x8 matrices.
double ybe_residual(double lambda, double mu, double eta);

/// max |LHS - RHS| of the boundary reflection equation for K+ on two auxiliary slots.
double reflection_residual(double lambda1, double lambda2, double eta, double zeta);

}  // namespace sixv
