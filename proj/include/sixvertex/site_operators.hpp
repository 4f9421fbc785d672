#pragma once

#include <array>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "sixvertex/local_weights.hpp"
#include "sixvertex/numeric.hpp"

namespace sixv {

/// Amplitudes on the 2^n quantum space, in extended precision. Basis index is a bitmask: bit k-1
/// holds the spin of site k, 0 = up, 1 = down.
using StateVector = Eigen::Matrix<Extended, Eigen::Dynamic, 1>;
/// Dense operator on the same 2^n space.
using SiteOperator = Eigen::MatrixXd;

/// Dense operators are only built up to this many sites (1024 x 1024).
inline constexpr int kMaxOracleSites = 10;

/// Throws CapExceededError when sites > kMaxOracleSites.
void require_oracle_size(int sites);

inline std::size_t dimension(int sites) { return std::size_t{1} << sites; }

StateVector all_up(int sites);
StateVector all_down(int sites);

/// Bitmask with down spins at the given 1-based sites.
std::uint32_t down_mask(std::span<const int> positions);
int down_count(std::uint32_t mask);

/// Number of down spins the operator adds (negative: removes) if every
/// nonzero entry changes the count by the same amount; nullopt-like
/// sentinel kMixedSector otherwise. Entries with |x| <= tol are ignored.
inline constexpr int kMixedSector = 1 << 20;
int sector_shift(const SiteOperator& op, double tol = 0.0);

/// 2x2 auxiliary matrix whose entries are quantum-space operators.
class OperatorBlock {
 public:
  OperatorBlock() = default;
  explicit OperatorBlock(int sites);

  static OperatorBlock identity(int sites);

  int sites() const { return sites_; }
  SiteOperator& operator()(int row, int col) { return entries_[2 * row + col]; }
  const SiteOperator& operator()(int row, int col) const { return entries_[2 * row + col]; }

  /// Auxiliary-space transpose; quantum-space operators are untouched.
  OperatorBlock aux_transposed() const;
  /// sigma^2 conjugation in the auxiliary space (real closed form).
  OperatorBlock sigma2_conjugated() const;

 private:
  int sites_ = 0;
  std::array<SiteOperator, 4> entries_;
};

/// Auxiliary matrix product; quantum operators multiply in the written order.
OperatorBlock operator*(const OperatorBlock& lhs, const OperatorBlock& rhs);

/// x ⊗ (identity elsewhere) acting on `site` (0-based), applied on the left of y.
/// Costs O(dim^2) instead of a dense product.
SiteOperator apply_local_left(const Eigen::Matrix2d& x, int site, const SiteOperator& y);
StateVector apply_local_left(const Eigen::Matrix2d& x, int site, const StateVector& y);

/// Returns L · t where L is the aux⊗site matrix `local` placed on `site`
/// (0-based) and identity on every other site.
OperatorBlock fold_left(const AuxSiteMatrix& local, int site, const OperatorBlock& t);

/// A vector in (auxiliary ⊗ quantum) space split by auxiliary component.
struct AuxPair {
  StateVector up;
  StateVector down;
};

/// Applies the aux⊗site matrix `local` on `site` (0-based) to an AuxPair.
AuxPair apply_local(const AuxSiteMatrix& local, int site, const AuxPair& in);
AuxPair apply_local(const ExtendedAuxSiteMatrix& local, int site, const AuxPair& in);

/// Dense embedding of a one-site 2x2 operator.
SiteOperator embed_site(const Eigen::Matrix2d& x, int site, int sites);

}  // namespace sixv
