#pragma once

#include <span>
#include <vector>

#include "sixvertex/numeric.hpp"
#include "sixvertex/params.hpp"

namespace sixv {

/// Strictly increasing down-spin positions x_1 < ... < x_m in [1, n].
class PositionSet {
 public:
  /// Throws std::invalid_argument on unsorted, repeated, or out-of-range entries.
  PositionSet(std::vector<int> positions, int n);

  /// {1, .., n} without `column`.
  static PositionSet all_but(int column, int n);

  int size() const { return static_cast<int>(positions_.size()); }
  int n() const { return n_; }
  int operator[](int j) const { return positions_[j]; }
  std::span<const int> values() const { return positions_; }

 private:
  std::vector<int> positions_;
  int n_ = 0;
};

/// Largest permutation group the coordinate sum will enumerate (8! terms).
inline constexpr int kMaxPermutationOrder = 8;

/// Coordinate wave function as a sum over S_m:
///   psi = sum_P prod_{a<b} b^{-1}(l_{P_b} - l_{P_a}) prod_j phi_{P_j}(x_j),
///   phi_p(x) = c(l_p - eta/2 - nu_x) prod_{l<x} b(l_p - nu_l - eta/2),
/// with b^{-1}(u) = sinh(u + eta) / sinh u. Permutations are visited in
/// lexicographic order and summed with a pairwise tree, so the result is
/// bit-reproducible. Throws CapExceededError for m > kMaxPermutationOrder.
double psi_coordinate(std::span<const double> spectral, const ModelParams& params, const PositionSet& positions);
/// psi_coordinate before the final rounding to double.
Extended psi_coordinate_extended(std::span<const double> spectral, const ModelParams& params,
                                 const PositionSet& positions);

/// Number of terms psi_coordinate sums for m spectral parameters.
long permutation_terms(int m);

/// <x_1 .. x_m| B(s_m) ... B(s_1) |w+> from explicit one-row operators.
double psi_oracle(std::span<const double> spectral, const ModelParams& params, const PositionSet& positions);

}  // namespace sixv
