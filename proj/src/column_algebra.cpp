#include "sixvertex/column_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sixvertex/errors.hpp"

namespace sixv {

namespace {

// L_{alpha j} written on (column ⊗ row) instead of (row ⊗ column).
AuxSiteMatrix swap_factors(const AuxSiteMatrix& m) {
  static constexpr int kSwap[4] = {0, 2, 1, 3};
  AuxSiteMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(kSwap[r], kSwap[c]) = m(r, c);
  return out;
}

std::span<const double> row_slots(const ModelParams& p) {
  p.validate_shape();
  if (p.n < 2) throw std::invalid_argument("column picture needs n >= 2");
  return std::span<const double>(p.lambdas).first(p.n - 1);
}

}  // namespace

ColumnOperators column_monodromy(std::span<const double> row_lambdas, double nu, double eta) {
  const int m = static_cast<int>(row_lambdas.size());
  require_oracle_size(m);
  OperatorBlock t = OperatorBlock::identity(m);
  for (int alpha = 0; alpha < m; ++alpha) {
    t = fold_left(swap_factors(l_matrix(row_lambdas[alpha], nu, eta).matrix), alpha, t);
  }
  return ColumnOperators{t(0, 0), t(0, 1), t(1, 0), t(1, 1)};
}

ColumnOperators column_monodromy(const ModelParams& p, int column) {
  const auto rows = row_slots(p);
  if (column < 1 || column > p.n) throw std::out_of_range("column_monodromy: column outside [1, N]");
  return column_monodromy(rows, p.nus[column - 1], p.eta);
}

double exchange_residual(const ModelParams& p, double mu, double nu) {
  const auto rows = row_slots(p);
  const ColumnOperators at_mu = column_monodromy(rows, mu, p.eta);
  const ColumnOperators at_nu = column_monodromy(rows, nu, p.eta);
  const Weights w = weights(nu - mu, p.eta);
  const SiteOperator lhs = w.c * at_mu.b_bar * at_nu.d_bar + w.b * at_mu.d_bar * at_nu.b_bar;
  const SiteOperator rhs = at_nu.b_bar * at_mu.d_bar;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

ColumnWaveFunction wavefunction_via_columns(const ModelParams& p, int column) {
  const auto rows = row_slots(p);
  if (column < 1 || column > p.n) throw std::out_of_range("wavefunction_via_columns: column outside [1, N]");
  const int m = static_cast<int>(rows.size());

  StateVector c_form = all_down(m);
  StateVector b_form = all_up(m);
  for (int j = 1; j <= p.n; ++j) {
    const ColumnOperators t = column_monodromy(rows, p.nus[j - 1], p.eta);
    if (j == column) {
      c_form = t.a_bar.cast<Extended>() * c_form;
      b_form = t.d_bar.cast<Extended>() * b_form;
    } else {
      c_form = t.c_bar.cast<Extended>() * c_form;
      b_form = t.b_bar.cast<Extended>() * b_form;
    }
  }
  const double via_c = static_cast<double>(c_form(0));
  const double via_b = static_cast<double>(b_form(b_form.size() - 1));
  return ColumnWaveFunction{via_b, std::abs(via_c - via_b) / std::max(1.0, std::abs(via_b))};
}

double column_b_product(std::span<const double> lambdas, std::span<const double> nus, double eta) {
  if (lambdas.size() != nus.size()) throw std::invalid_argument("column_b_product: length mismatch");
  const int n = static_cast<int>(lambdas.size());
  StateVector v = all_up(n);
  for (double nu : nus) v = column_monodromy(lambdas, nu, eta).b_bar.cast<Extended>() * v;
  return static_cast<double>(v(v.size() - 1));
}

}  // namespace sixv
