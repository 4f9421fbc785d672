#include "sixvertex/numeric.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sixvertex/errors.hpp"

namespace sixv {

double require_nonzero(double x, const char* what) {
  if (!(std::abs(x) >= kSingularTolerance)) {
    throw SingularParameterError(std::string("vanishing denominator: ") + what);
  }
  return x;
}

SignedLog SignedLog::from_parts(int sign, Extended log_abs) {
  SignedLog out;
  out.sign_ = sign > 0 ? 1 : (sign < 0 ? -1 : 0);
  out.log_abs_ = out.sign_ == 0 ? 0.0L : log_abs;
  return out;
}

SignedLog& SignedLog::multiply(Extended x) {
  if (x == 0.0L) {
    sign_ = 0;
    log_abs_ = 0.0L;
    return *this;
  }
  if (sign_ == 0) return *this;
  if (x < 0) sign_ = -sign_;
  log_abs_ += std::log(std::abs(x));
  return *this;
}

SignedLog& SignedLog::divide(Extended x) {
  if (x == 0.0L) throw SingularParameterError("division by an exact zero");
  if (sign_ == 0) return *this;
  if (x < 0) sign_ = -sign_;
  log_abs_ -= std::log(std::abs(x));
  return *this;
}

SignedLog& SignedLog::operator*=(const SignedLog& other) {
  if (sign_ == 0 || other.sign_ == 0) {
    sign_ = 0;
    log_abs_ = 0.0L;
    return *this;
  }
  sign_ *= other.sign_;
  log_abs_ += other.log_abs_;
  return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& other) {
  if (other.sign_ == 0) throw SingularParameterError("division by an exact zero");
  if (sign_ == 0) return *this;
  sign_ *= other.sign_;
  log_abs_ -= other.log_abs_;
  return *this;
}

namespace {

template <class T>
T pairwise_range(std::span<const T> terms) {
  if (terms.size() <= 8) {
    T s = 0;
    for (T t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_range(terms.first(half)) + pairwise_range(terms.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> terms) { return pairwise_range(terms); }
Extended pairwise_sum(std::span<const Extended> terms) { return pairwise_range(terms); }

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

}  // namespace sixv
