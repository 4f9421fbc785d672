#pragma once

#include "sixvertex/params.hpp"
#include "sixvertex/site_operators.hpp"

namespace sixv {

/// One-row monodromy T(lambda) = L_N(lambda, nu_N) ... L_1(lambda, nu_1),
/// returned as [[A, B], [C, D]]. B adds one down spin, C removes one.
OperatorBlock one_row_monodromy(const ModelParams& params, double lambda);

/// Entry (row, col) of T(lambda) applied to v, in O(N 2^N) without
/// forming the operator. (0, 1) is B(lambda).
StateVector apply_one_row_entry(const ModelParams& params, double lambda, int row, int col, const StateVector& v);

/// The double-row operators read off
///   U^t(lambda) = T^t(lambda) K+(lambda) sigma2 T(-lambda) sigma2 = [[calA, calC], [calB, calD]].
/// calB adds exactly one down spin per application.
struct DoubleRowOperators {
  SiteOperator cal_a;
  SiteOperator cal_b;
  SiteOperator cal_c;
  SiteOperator cal_d;
};

DoubleRowOperators double_row_monodromy(const ModelParams& params, double lambda);

/// calB(lambda) v = B(lambda) K_up D(-lambda) v - D(lambda) K_down B(-lambda) v,
/// the lower-left entry of U^t, by matrix-vector products only.
StateVector apply_cal_b(const ModelParams& params, double lambda, const StateVector& v);

/// calB(lambda_count) ... calB(lambda_1) w+, applied as repeated
/// matrix-vector products.
StateVector double_row_b_state(const ModelParams& params, int count);

/// Z = w- calB(lambda_N) ... calB(lambda_1) w+.
double partition_oracle(const ModelParams& params);

/// f(M) = w- E_M(lambda_N) calB(lambda_{N-1}) ... calB(lambda_1) w+, with E_M
/// the (down, up) auxiliary element of V_M: the site up-projector on column
/// M after the odd row and the auxiliary up-projector between columns M-1
/// and M of the odd row. Throws std::out_of_range unless 1 <= M <= N.
double f_oracle(const ModelParams& params, int column);

inline constexpr int kMaxEnumerationSize = 3;

struct EnumerationResult {
  double z = 0.0;
  long configurations = 0;  // ice-rule configurations visited
  int bulk_vertices = 0;
  int boundary_turns = 0;
};

/// Z by brute force over edge configurations of the 2N x N lattice: bottom
/// edges all up, top edges all down, right boundary up on odd rows and down
/// on even rows, the row pair joined at the left by the diagonal K+ turn.
/// Throws CapExceededError for n > kMaxEnumerationSize.
EnumerationResult enumerate_lattice(const ModelParams& params);
inline double enumerate_z(const ModelParams& params) { return enumerate_lattice(params).z; }

}  // namespace sixv
