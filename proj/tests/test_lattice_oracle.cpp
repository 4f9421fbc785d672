#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "sixvertex/errors.hpp"
#include "sixvertex/lattice_oracle.hpp"
#include "support/frozen.hpp"
#include "support/oracles.hpp"

using namespace sixv;
using test::fixed_point;
using test::frozen;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("one-row monodromy at n = 1 is the L-matrix") {
  const ModelParams p = fixed_point(1);
  const double lambda = 0.44;
  const OperatorBlock t = one_row_monodromy(p, lambda);
  const LMatrix l = l_matrix(lambda, p.nus[0], p.eta);
  for (int ar = 0; ar < 2; ++ar)
    for (int ac = 0; ac < 2; ++ac)
      for (int sr = 0; sr < 2; ++sr)
        for (int sc = 0; sc < 2; ++sc) CHECK(t(ar, ac)(sr, sc) == l.matrix(2 * ar + sr, 2 * ac + sc));
  CHECK(t(0, 1)(1, 0) == doctest::Approx(l.weights.c));
}

TEST_CASE("vacuum eigenvalues of A and D") {
  const ModelParams p = fixed_point(4);
  const double lambda = -0.27;
  const OperatorBlock t = one_row_monodromy(p, lambda);
  const Eigen::VectorXd up = all_up(p.n).cast<double>();
  CHECK((t(0, 0) * up - up).cwiseAbs().maxCoeff() < 1e-14);
  double d = 1.0;
  for (double nu : p.nus) d *= b_weight(lambda - nu - p.eta / 2, p.eta);
  CHECK((t(1, 1) * up - d * up).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((t(1, 0) * up).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin sectors of the one-row and double-row entries") {
  const ModelParams p = fixed_point(3);
  const OperatorBlock t = one_row_monodromy(p, 0.19);
  CHECK(sector_shift(t(0, 0)) == 0);
  CHECK(sector_shift(t(1, 1)) == 0);
  CHECK(sector_shift(t(0, 1)) == 1);
  CHECK(sector_shift(t(1, 0)) == -1);
  const DoubleRowOperators u = double_row_monodromy(p, 0.19);
  CHECK(sector_shift(u.cal_a) == 0);
  CHECK(sector_shift(u.cal_d) == 0);
  CHECK(sector_shift(u.cal_b) == 1);
  CHECK(sector_shift(u.cal_c) == -1);
}

TEST_CASE("matrix-free entries agree with the dense monodromy") {
  const ModelParams p = fixed_point(4);
  const OperatorBlock t = one_row_monodromy(p, 0.37);
  const StateVector v = test::seeded_vector(16, 4).cast<Extended>();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK((apply_one_row_entry(p, 0.37, r, c, v) - t(r, c).cast<Extended>() * v).cwiseAbs().maxCoeff() < 1e-13);
  const DoubleRowOperators u = double_row_monodromy(p, 0.37);
  const StateVector dense = u.cal_b.cast<Extended>() * v;
  CHECK((apply_cal_b(p, 0.37, v) - dense).cwiseAbs().maxCoeff() < 1e-13 * dense.cwiseAbs().maxCoeff());
}

TEST_CASE("calB operators commute") {
  const ModelParams p = fixed_point(3);
  const SiteOperator b1 = double_row_monodromy(p, 0.31).cal_b;
  const SiteOperator b2 = double_row_monodromy(p, -0.52).cal_b;
  const double scale = std::max(b1.cwiseAbs().maxCoeff(), b2.cwiseAbs().maxCoeff());
  CHECK((b1 * b2 - b2 * b1).cwiseAbs().maxCoeff() < 1e-12 * scale * scale);
}

TEST_CASE("partition function at the fixed points") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(rel(partition_oracle(fixed_point(n)), frozen(n).z) < 1e-12);
    const StateVector s = double_row_b_state(fixed_point(n), n);
    CHECK(s.size() == (1 << n));
    CHECK(rel(s[(1 << n) - 1], frozen(n).z) < 1e-12);
    CHECK(s.head((1 << n) - 1).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("f(M) at the fixed points") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(rel(f_oracle(fixed_point(n), m), frozen(n).f[m - 1]) < 1e-12);
    }
}

TEST_CASE("n = 1 configurations by hand") {
  const ModelParams p = fixed_point(1);
  const double lambda = p.lambdas[0], nu = p.nus[0], eta = p.eta;
  const double u = lambda - nu - eta / 2, u_reflected = -lambda - nu - eta / 2;
  const BoundaryMatrix k = k_plus(lambda, eta, p.zeta_plus);
  const double turn_up = k.up * c_weight(u, eta) * b_weight(u_reflected, eta);
  const double turn_down = -k.down * c_weight(u_reflected, eta);
  CHECK(partition_oracle(p) == doctest::Approx(turn_up + turn_down).epsilon(1e-14));
  CHECK(f_oracle(p, 1) == doctest::Approx(turn_up).epsilon(1e-14));
}

TEST_CASE("Z is symmetric in the lambdas and in the nus") {
  ModelParams p = fixed_point(3);
  const double z = partition_oracle(p);
  std::reverse(p.lambdas.begin(), p.lambdas.end());
  CHECK(rel(partition_oracle(p), z) < 1e-12);
  std::rotate(p.nus.begin(), p.nus.begin() + 1, p.nus.end());
  CHECK(rel(partition_oracle(p), z) < 1e-12);
}

TEST_CASE("brute-force enumeration") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const EnumerationResult e = enumerate_lattice(fixed_point(n));
    CHECK(rel(e.z, frozen(n).z) < 1e-12);
    CHECK(e.bulk_vertices == 2 * n * n);
    CHECK(e.boundary_turns == n);
    CHECK(e.configurations >= 1);
  }
  CHECK(enumerate_lattice(fixed_point(1)).configurations == 2);
  CHECK(enumerate_z(random_generic(3, 17)) == doctest::Approx(partition_oracle(random_generic(3, 17))).epsilon(1e-12));
}

TEST_CASE("caps and argument errors") {
  CHECK_THROWS_AS(enumerate_lattice(fixed_point(4)), CapExceededError);
  const ModelParams big = random_generic(11, 3);
  CHECK_THROWS_AS(partition_oracle(big), CapExceededError);
  CHECK_THROWS_AS(f_oracle(big, 1), CapExceededError);
  CHECK_THROWS_AS(f_oracle(fixed_point(2), 0), std::out_of_range);
  CHECK_THROWS_AS(f_oracle(fixed_point(2), 3), std::out_of_range);
}

TEST_CASE("oracle runs at the dense cap") {
  const ModelParams p = random_generic(10, 8);
  const double z = partition_oracle(p);
  CHECK(std::isfinite(z));
  CHECK(z != 0.0);
}
