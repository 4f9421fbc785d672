#include "sixvertex/lattice_oracle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "sixvertex/errors.hpp"

namespace sixv {

namespace {

void check_oracle_params(const ModelParams& p) {
  p.validate_shape();
  require_oracle_size(p.n);
}

// sigma2 L(-lambda, nu_k) sigma2: the odd-row vertex weight.
ExtendedAuxSiteMatrix odd_row_local_extended(const ModelParams& p, double lambda, int column) {
  return aux_conjugate_sigma2(l_matrix_extended(-lambda, p.nus[column], p.eta));
}

// K+ entries with the sinh arguments formed in extended precision.
std::pair<Extended, Extended> k_plus_extended(const ModelParams& p, double lambda) {
  const Extended shift = static_cast<Extended>(lambda) + static_cast<Extended>(p.eta) / 2;
  return {std::sinh(shift + p.zeta_plus), std::sinh(-shift + p.zeta_plus)};
}

OperatorBlock scale_aux_rows(const OperatorBlock& t, double row0, double row1) {
  OperatorBlock out = t;
  out(0, 0) *= row0;
  out(0, 1) *= row0;
  out(1, 0) *= row1;
  out(1, 1) *= row1;
  return out;
}

}  // namespace

OperatorBlock one_row_monodromy(const ModelParams& p, double lambda) {
  check_oracle_params(p);
  OperatorBlock t = OperatorBlock::identity(p.n);
  for (int k = 0; k < p.n; ++k) t = fold_left(l_matrix(lambda, p.nus[k], p.eta).matrix, k, t);
  return t;
}

DoubleRowOperators double_row_monodromy(const ModelParams& p, double lambda) {
  const OperatorBlock forward = one_row_monodromy(p, lambda).aux_transposed();
  const OperatorBlock backward = one_row_monodromy(p, -lambda).sigma2_conjugated();
  const BoundaryMatrix k = k_plus(lambda, p.eta, p.zeta_plus);
  const OperatorBlock u = forward * scale_aux_rows(backward, k.up, k.down);
  return DoubleRowOperators{u(0, 0), u(1, 0), u(0, 1), u(1, 1)};
}

namespace {

// T(lambda) applied to an (auxiliary ⊗ quantum) vector, column by column.
AuxPair apply_one_row(const ModelParams& p, double lambda, AuxPair v) {
  for (int k = 0; k < p.n; ++k) v = apply_local(l_matrix_extended(lambda, p.nus[k], p.eta), k, v);
  return v;
}

StateVector zero_state(int sites) { return StateVector::Zero(static_cast<Eigen::Index>(dimension(sites))); }

}  // namespace

StateVector apply_one_row_entry(const ModelParams& p, double lambda, int row, int col, const StateVector& v) {
  AuxPair in{zero_state(p.n), zero_state(p.n)};
  (col == 0 ? in.up : in.down) = v;
  const AuxPair out = apply_one_row(p, lambda, std::move(in));
  return row == 0 ? out.up : out.down;
}

StateVector apply_cal_b(const ModelParams& p, double lambda, const StateVector& v) {
  const auto [k_up, k_down] = k_plus_extended(p, lambda);
  const StateVector up_leg = k_up * apply_one_row_entry(p, -lambda, 1, 1, v);
  const StateVector down_leg = -k_down * apply_one_row_entry(p, -lambda, 0, 1, v);
  return apply_one_row_entry(p, lambda, 0, 1, up_leg) + apply_one_row_entry(p, lambda, 1, 1, down_leg);
}

StateVector double_row_b_state(const ModelParams& p, int count) {
  check_oracle_params(p);
  if (count < 0 || count > p.n) throw std::out_of_range("double_row_b_state: count outside [0, n]");
  StateVector v = all_up(p.n);
  for (int alpha = 0; alpha < count; ++alpha) v = apply_cal_b(p, p.lambdas[alpha], v);
  return v;
}

double partition_oracle(const ModelParams& p) {
  const StateVector v = double_row_b_state(p, p.n);
  return static_cast<double>(v(v.size() - 1));
}

double f_oracle(const ModelParams& p, int column) {
  check_oracle_params(p);
  if (column < 1 || column > p.n) throw std::out_of_range("f_oracle: column outside [1, N]");
  const int n = p.n;
  const double lambda = p.lambdas[n - 1];

  // Column (., up) of V_M applied to the calB state, right to left.
  AuxPair v{double_row_b_state(p, n - 1), zero_state(n)};
  for (int k = 0; k < column - 1; ++k) v = apply_local(odd_row_local_extended(p, lambda, k), k, v);
  v.down.setZero();  // auxiliary up-projector
  for (int k = column - 1; k < n; ++k) v = apply_local(odd_row_local_extended(p, lambda, k), k, v);
  const auto [k_up, k_down] = k_plus_extended(p, lambda);
  v.up *= k_up;
  v.down *= k_down;
  Eigen::Matrix2d up_projector = Eigen::Matrix2d::Zero();
  up_projector(0, 0) = 1.0;
  v.up = apply_local_left(up_projector, column - 1, v.up);
  v.down = apply_local_left(up_projector, column - 1, v.down);

  // Row "down" of T^t(lambda): (T^t)_{10} = B(lambda), (T^t)_{11} = D(lambda).
  const StateVector state = apply_one_row_entry(p, lambda, 0, 1, v.up) + apply_one_row_entry(p, lambda, 1, 1, v.down);
  return static_cast<double>(state(state.size() - 1));
}

namespace {

// Ice rule in the orientation shared by both row types: site + (1 - aux)
// is conserved through a vertex.
bool conserves(int aux_in, int site_in, int aux_out, int site_out) {
  return site_in + (1 - aux_in) == site_out + (1 - aux_out);
}

double vertex_weight(const AuxSiteMatrix& w, int aux_in, int site_in, int aux_out, int site_out) {
  return w(2 * aux_out + site_out, 2 * aux_in + site_in);
}

class LatticeEnumerator {
 public:
  explicit LatticeEnumerator(const ModelParams& p) : p_(p) {
    const int n = p.n;
    odd_.resize(n);
    even_.resize(n);
    turns_.resize(n);
    for (int beta = 0; beta < n; ++beta) {
      for (int k = 0; k < n; ++k) {
        odd_[beta].push_back(aux_conjugate_sigma2(l_matrix(-p.lambdas[beta], p.nus[k], p.eta).matrix));
        even_[beta].push_back(aux_transpose(l_matrix(p.lambdas[beta], p.nus[k], p.eta).matrix));
      }
      turns_[beta] = k_plus(p.lambdas[beta], p.eta, p.zeta_plus);
    }
  }

  EnumerationResult run() {
    result_ = EnumerationResult{};
    result_.bulk_vertices = 2 * p_.n * p_.n;
    result_.boundary_turns = p_.n;
    std::vector<int> sites(p_.n, 0);
    result_.z = row(0, sites, 1.0);
    return result_;
  }

 private:
  // Row pair starting at 0-based row r (always even): the odd lattice row
  // enters from the right boundary with aux up and walks columns 1..N, turns
  // at K+, and the even row walks columns N..1 leaving with aux down.
  double row(int r, std::vector<int>& sites, double weight) {
    if (r == 2 * p_.n) {
      for (int s : sites)
        if (s != 1) return 0.0;
      ++result_.configurations;
      return weight;
    }
    return odd_vertex(r, r / 2, 0, 0, sites, weight);
  }

  double odd_vertex(int r, int beta, int k, int aux, std::vector<int>& sites, double weight) {
    if (k == p_.n) {
      const double turn = aux == 0 ? turns_[beta].up : turns_[beta].down;
      return even_vertex(r + 1, beta, p_.n - 1, aux, sites, weight * turn);
    }
    return branch(odd_[beta][k], k, aux, sites, weight, [&](int aux_out, double w) {
      return odd_vertex(r, beta, k + 1, aux_out, sites, w);
    });
  }

  double even_vertex(int r, int beta, int k, int aux, std::vector<int>& sites, double weight) {
    if (k < 0) {
      if (aux != 1) return 0.0;
      return row(r + 1, sites, weight);
    }
    return branch(even_[beta][k], k, aux, sites, weight, [&](int aux_out, double w) {
      return even_vertex(r, beta, k - 1, aux_out, sites, w);
    });
  }

  template <class Next>
  double branch(const AuxSiteMatrix& w, int k, int aux_in, std::vector<int>& sites, double weight, Next&& next) {
    const int site_in = sites[k];
    double total = 0.0;
    for (int aux_out = 0; aux_out < 2; ++aux_out) {
      for (int site_out = 0; site_out < 2; ++site_out) {
        if (!conserves(aux_in, site_in, aux_out, site_out)) continue;
        const double vw = vertex_weight(w, aux_in, site_in, aux_out, site_out);
        sites[k] = site_out;
        total += next(aux_out, weight * vw);
        sites[k] = site_in;
      }
    }
    return total;
  }

  const ModelParams& p_;
  std::vector<std::vector<AuxSiteMatrix>> odd_;
  std::vector<std::vector<AuxSiteMatrix>> even_;
  std::vector<BoundaryMatrix> turns_;
  EnumerationResult result_;
};

}  // namespace

EnumerationResult enumerate_lattice(const ModelParams& p) {
  p.validate_shape();
  if (p.n > kMaxEnumerationSize) {
    throw CapExceededError("enumeration is capped at n = " + std::to_string(kMaxEnumerationSize) + ", got " +
                           std::to_string(p.n));
  }
  return LatticeEnumerator(p).run();
}

}  // namespace sixv
