#include "sixvertex/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sixvertex/errors.hpp"
#include "sixvertex/lattice_oracle.hpp"
#include "sixvertex/local_weights.hpp"
#include "sixvertex/numeric.hpp"

namespace sixv {

PositionSet::PositionSet(std::vector<int> positions, int n) : positions_(std::move(positions)), n_(n) {
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    if (positions_[j] < 1 || positions_[j] > n) throw std::invalid_argument("position outside [1, n]");
    if (j > 0 && positions_[j] <= positions_[j - 1]) throw std::invalid_argument("positions must be strictly increasing");
  }
}

PositionSet PositionSet::all_but(int column, int n) {
  if (column < 1 || column > n) throw std::out_of_range("excluded column outside [1, n]");
  std::vector<int> xs;
  for (int x = 1; x <= n; ++x)
    if (x != column) xs.push_back(x);
  return PositionSet(std::move(xs), n);
}

long permutation_terms(int m) {
  long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

namespace {

void check_inputs(std::span<const double> spectral, const ModelParams& p, const PositionSet& positions) {
  p.validate_shape();
  if (static_cast<int>(spectral.size()) != positions.size()) {
    throw std::invalid_argument("spectral list and position set must have equal length");
  }
  if (positions.n() != p.n) throw std::invalid_argument("position set built for a different n");
}

}  // namespace

Extended psi_coordinate_extended(std::span<const double> spectral, const ModelParams& p, const PositionSet& positions) {
  check_inputs(spectral, p, positions);
  const int m = positions.size();
  if (m > kMaxPermutationOrder) {
    throw CapExceededError("permutation sum capped at m = " + std::to_string(kMaxPermutationOrder) + ", got " +
                           std::to_string(m));
  }
  const Extended eta = p.eta;
  auto weight_den = [&](Extended u) {
    const Extended den = std::sinh(u + eta);
    require_nonzero(static_cast<double>(den), "sinh(u + eta) in a wave-function weight");
    return den;
  };

  // amplitude[a][j] = phi_a(x_j)
  std::vector<std::vector<Extended>> amplitude(m, std::vector<Extended>(m));
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j < m; ++j) {
      const int x = positions[j];
      const Extended u = spectral[a] - eta / 2 - p.nus[x - 1];
      Extended v = std::sinh(eta) / weight_den(u);
      for (int l = 1; l < x; ++l) {
        const Extended w = spectral[a] - p.nus[l - 1] - eta / 2;
        v *= std::sinh(w) / weight_den(w);
      }
      amplitude[a][j] = v;
    }
  }
  // inv_b[a][b] = b^{-1}(l_b - l_a)
  std::vector<std::vector<Extended>> inv_b(m, std::vector<Extended>(m, 1.0L));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const Extended u = static_cast<Extended>(spectral[b]) - spectral[a];
      const Extended den = std::sinh(u);
      require_nonzero(static_cast<double>(den), "coinciding spectral parameters in A(P)");
      inv_b[a][b] = std::sinh(u + eta) / den;
    }
  }

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Extended> terms;
  terms.reserve(static_cast<std::size_t>(permutation_terms(m)));
  do {
    Extended t = 1.0L;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) t *= inv_b[perm[a]][perm[b]];
    for (int j = 0; j < m; ++j) t *= amplitude[perm[j]][j];
    terms.push_back(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return pairwise_sum(terms);
}

double psi_coordinate(std::span<const double> spectral, const ModelParams& p, const PositionSet& positions) {
  return static_cast<double>(psi_coordinate_extended(spectral, p, positions));
}

double psi_oracle(std::span<const double> spectral, const ModelParams& p, const PositionSet& positions) {
  check_inputs(spectral, p, positions);
  require_oracle_size(p.n);
  StateVector v = all_up(p.n);
  for (double s : spectral) v = apply_one_row_entry(p, s, 0, 1, v);
  return v(down_mask(positions.values()));
}

}  // namespace sixv
