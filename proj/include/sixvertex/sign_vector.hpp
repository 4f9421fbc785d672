#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sixv {

/// Signs sigma_1 .. sigma_m in {+1, -1}, one per dressed spectral parameter.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("sign entries must be +1 or -1");
  }

  static SignVector all_plus(int length) { return SignVector(std::vector<int>(length, 1)); }

  /// Bit alpha of `mask` set means sigma_{alpha+1} = -1. Iterating masks
  /// 0 .. 2^m - 1 fixes the summation order of every sigma-sum.
  static SignVector from_mask(std::uint32_t mask, int length) {
    std::vector<int> s(length);
    for (int a = 0; a < length; ++a) s[a] = (mask >> a) & 1u ? -1 : 1;
    return SignVector(std::move(s));
  }

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int alpha) const { return signs_[alpha]; }
  const std::vector<int>& values() const { return signs_; }

 private:
  std::vector<int> signs_;
};

}  // namespace sixv
