#pragma once

#include <cmath>
#include <span>

namespace sixv {

/// Internal accumulation type for products and sums that cancel; every
/// public result is rounded to double once at the end.
using Extended = long double;

/// Absolute threshold under which a denominator is treated as zero.
inline constexpr double kSingularTolerance = 1e-13;

/// Throws SingularParameterError naming `what` when |x| < kSingularTolerance.
double require_nonzero(double x, const char* what);

/// A real number kept as (sign, log|x|) so long products neither overflow
/// nor underflow. Default-constructed value is 1.
class SignedLog {
 public:
  SignedLog() = default;
  explicit SignedLog(Extended x) { multiply(x); }

  static SignedLog from_parts(int sign, Extended log_abs);

  SignedLog& multiply(Extended x);
  /// Throws SingularParameterError on an exact zero divisor.
  SignedLog& divide(Extended x);

  SignedLog& operator*=(const SignedLog& other);
  SignedLog& operator/=(const SignedLog& other);

  int sign() const { return sign_; }
  Extended log_abs() const { return log_abs_; }
  Extended extended_value() const { return sign_ == 0 ? 0.0L : sign_ * std::exp(log_abs_); }
  double value() const { return static_cast<double>(extended_value()); }

 private:
  int sign_ = 1;
  Extended log_abs_ = 0.0L;
};

inline SignedLog operator*(SignedLog lhs, const SignedLog& rhs) { return lhs *= rhs; }
inline SignedLog operator/(SignedLog lhs, const SignedLog& rhs) { return lhs /= rhs; }

/// Sum with a fixed-shape pairwise reduction tree: the result depends only
/// on the order of `terms`, never on threading or scheduling.
double pairwise_sum(std::span<const double> terms);
Extended pairwise_sum(std::span<const Extended> terms);

/// |a - b| / max(|a|, |b|); zero when both are zero.
double relative_gap(double a, double b);

}  // namespace sixv
