#pragma once

#include <span>

#include "sixvertex/params.hpp"
#include "sixvertex/site_operators.hpp"

namespace sixv {

/// Column monodromy entries on the space of row slots (bit alpha-1 is row
/// slot alpha, 0 = up). Bbar adds one down spin, Cbar removes one.
struct ColumnOperators {
  SiteOperator a_bar;
  SiteOperator b_bar;
  SiteOperator c_bar;
  SiteOperator d_bar;
};

/// Tbar(nu) = L_m(lambda_m, nu) ... L_1(lambda_1, nu) with the column's
/// vertical space as auxiliary and the m given rows as quantum space.
ColumnOperators column_monodromy(std::span<const double> row_lambdas, double nu, double eta);

/// Column j (1-based) over the rows lambda_1 .. lambda_{N-1}. Requires n >= 2.
ColumnOperators column_monodromy(const ModelParams& params, int column);

/// max-entry residual of
///   c(nu - mu) Bbar(mu) Dbar(nu) + b(nu - mu) Dbar(mu) Bbar(nu) = Bbar(nu) Dbar(mu)
/// over rows lambda_1 .. lambda_{N-1}.
double exchange_residual(const ModelParams& params, double mu, double nu);

struct ColumnWaveFunction {
  double value = 0.0;     // the Bbar ... Dbar ... Bbar form
  double form_gap = 0.0;  // |Cbar ... Abar ... Cbar form - value| / max(1, |value|)
};

/// <1, .., M-check, .., N| prod_{alpha<N} B(lambda_alpha) |w+> evaluated in
/// the column picture by both vacuum-sandwiched forms.
ColumnWaveFunction wavefunction_via_columns(const ModelParams& params, int column);

/// v- Bbar(nu_n) ... Bbar(nu_1) v+ on the square n x n lattice.
double column_b_product(std::span<const double> lambdas, std::span<const double> nus, double eta);

}  // namespace sixv
