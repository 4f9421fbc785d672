#pragma once

// Test-only reference computations. Nothing here calls into the code path
// it is used to check.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sixvertex/params.hpp"

namespace sixv::test {

/// Hand-picked generic points (catalog minimum >= 0.017) with n = 1..4.
ModelParams fixed_point(int n);

/// Determinant by cofactor expansion along the first row, O(n!).
double cofactor_det(const Eigen::MatrixXd& m);

/// sigma^2 ⊗ 1 · m · sigma^2 ⊗ 1 in complex arithmetic.
Eigen::Matrix4cd complex_sigma2_conjugate(const Eigen::Matrix4d& m);

/// Transpose on the site factor only.
Eigen::Matrix4d site_transpose(const Eigen::Matrix4d& m);

/// Seeded dense matrix with entries in [-1, 1].
Eigen::MatrixXd seeded_matrix(int n, unsigned seed);
Eigen::VectorXd seeded_vector(int n, unsigned seed);

}  // namespace sixv::test
