#pragma once

// Truncated Laurent expansions at c = infinity:
//   sum_{i = start_power}^{truncation_order} a_i c^{-i}.
// Powers are counted downward, so start_power = -1 means the series begins
// with a c^1 term.

#include <vector>

#include "futaki/exactnum/ratfn.hpp"

namespace futaki::num {

class LaurentTail {
 public:
  LaurentTail() = default;
  LaurentTail(int start_power, std::vector<BigRational> coeffs, int truncation_order);

  int start_power() const { return start_; }
  int truncation_order() const { return order_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  /// Coefficient of c^{-i}; zero below start_power, TruncationError past the order.
  BigRational coeff(int i) const;

  LaurentTail truncated(int order) const;

  /// Exact value of the truncated sum at a nonzero point.
  BigRational eval(const BigRational& at) const;

  /// The truncated sum as a rational function of c.
  RationalFn to_rational() const;

  friend bool operator==(const LaurentTail& a, const LaurentTail& b);

 private:
  int start_ = 0;
  std::vector<BigRational> coeffs_;
  int order_ = -1;
};

/// Expansion of f in powers c^{-i}, through i = order.
LaurentTail laurent_expand(const RationalFn& f, int order);

}  // namespace futaki::num
