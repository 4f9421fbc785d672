#include "sixvertex/site_operators.hpp"

#include <bit>
#include <string>

#include "sixvertex/errors.hpp"

namespace sixv {

void require_oracle_size(int sites) {
  if (sites > kMaxOracleSites) {
    throw CapExceededError("dense operators are capped at " + std::to_string(kMaxOracleSites) + " sites, got " +
                           std::to_string(sites));
  }
}

StateVector all_up(int sites) {
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dimension(sites)));
  v(0) = 1.0;
  return v;
}

StateVector all_down(int sites) {
  const auto dim = static_cast<Eigen::Index>(dimension(sites));
  StateVector v = StateVector::Zero(dim);
  v(dim - 1) = 1.0;
  return v;
}

std::uint32_t down_mask(std::span<const int> positions) {
  std::uint32_t mask = 0;
  for (int x : positions) mask |= std::uint32_t{1} << (x - 1);
  return mask;
}

int down_count(std::uint32_t mask) { return std::popcount(mask); }

int sector_shift(const SiteOperator& op, double tol) {
  int shift = kMixedSector;
  for (Eigen::Index col = 0; col < op.cols(); ++col) {
    for (Eigen::Index row = 0; row < op.rows(); ++row) {
      if (std::abs(op(row, col)) <= tol) continue;
      const int d = down_count(static_cast<std::uint32_t>(row)) - down_count(static_cast<std::uint32_t>(col));
      if (shift == kMixedSector) {
        shift = d;
      } else if (shift != d) {
        return kMixedSector;
      }
    }
  }
  return shift == kMixedSector ? 0 : shift;
}

OperatorBlock::OperatorBlock(int sites) : sites_(sites) {
  const auto dim = static_cast<Eigen::Index>(dimension(sites));
  for (auto& e : entries_) e = SiteOperator::Zero(dim, dim);
}

OperatorBlock OperatorBlock::identity(int sites) {
  OperatorBlock out(sites);
  out(0, 0).setIdentity();
  out(1, 1).setIdentity();
  return out;
}

OperatorBlock OperatorBlock::aux_transposed() const {
  OperatorBlock out = *this;
  std::swap(out(0, 1), out(1, 0));
  return out;
}

OperatorBlock OperatorBlock::sigma2_conjugated() const {
  OperatorBlock out(sites_);
  out(0, 0) = (*this)(1, 1);
  out(0, 1) = -(*this)(1, 0);
  out(1, 0) = -(*this)(0, 1);
  out(1, 1) = (*this)(0, 0);
  return out;
}

OperatorBlock operator*(const OperatorBlock& lhs, const OperatorBlock& rhs) {
  OperatorBlock out(lhs.sites());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j).noalias() = lhs(i, 0) * rhs(0, j);
      out(i, j).noalias() += lhs(i, 1) * rhs(1, j);
    }
  }
  return out;
}

SiteOperator apply_local_left(const Eigen::Matrix2d& x, int site, const SiteOperator& y) {
  SiteOperator out(y.rows(), y.cols());
  const Eigen::Index bit = Eigen::Index{1} << site;
  for (Eigen::Index r = 0; r < y.rows(); ++r) {
    if (r & bit) continue;
    const Eigen::Index r_up = r;
    const Eigen::Index r_down = r | bit;
    out.row(r_up) = x(0, 0) * y.row(r_up) + x(0, 1) * y.row(r_down);
    out.row(r_down) = x(1, 0) * y.row(r_up) + x(1, 1) * y.row(r_down);
  }
  return out;
}

StateVector apply_local_left(const Eigen::Matrix2d& x, int site, const StateVector& y) {
  StateVector out(y.size());
  const Eigen::Index bit = Eigen::Index{1} << site;
  for (Eigen::Index r = 0; r < y.size(); ++r) {
    if (r & bit) continue;
    out(r) = x(0, 0) * y(r) + x(0, 1) * y(r | bit);
    out(r | bit) = x(1, 0) * y(r) + x(1, 1) * y(r | bit);
  }
  return out;
}

OperatorBlock fold_left(const AuxSiteMatrix& local, int site, const OperatorBlock& t) {
  OperatorBlock out(t.sites());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = apply_local_left(aux_block(local, i, 0), site, t(0, j)) +
                  apply_local_left(aux_block(local, i, 1), site, t(1, j));
    }
  }
  return out;
}

AuxPair apply_local(const AuxSiteMatrix& local, int site, const AuxPair& in) {
  AuxPair out;
  out.up = apply_local_left(aux_block(local, 0, 0), site, in.up) + apply_local_left(aux_block(local, 0, 1), site, in.down);
  out.down = apply_local_left(aux_block(local, 1, 0), site, in.up) + apply_local_left(aux_block(local, 1, 1), site, in.down);
  return out;
}

AuxPair apply_local(const ExtendedAuxSiteMatrix& local, int site, const AuxPair& in) {
  AuxPair out{StateVector(in.up.size()), StateVector(in.up.size())};
  const Eigen::Index bit = Eigen::Index{1} << site;
  for (Eigen::Index r = 0; r < in.up.size(); ++r) {
    if (r & bit) continue;
    const Extended x[4] = {in.up(r), in.up(r | bit), in.down(r), in.down(r | bit)};
    Extended y[4];
    for (int i = 0; i < 4; ++i) y[i] = local(i, 0) * x[0] + local(i, 1) * x[1] + local(i, 2) * x[2] + local(i, 3) * x[3];
    out.up(r) = y[0];
    out.up(r | bit) = y[1];
    out.down(r) = y[2];
    out.down(r | bit) = y[3];
  }
  return out;
}

SiteOperator embed_site(const Eigen::Matrix2d& x, int site, int sites) {
  const auto dim = static_cast<Eigen::Index>(dimension(sites));
  const SiteOperator identity = SiteOperator::Identity(dim, dim);
  return apply_local_left(x, site, identity);
}

}  // namespace sixv
