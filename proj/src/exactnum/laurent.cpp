#include "futaki/exactnum/laurent.hpp"

#include <algorithm>
#include <string>

#include "futaki/errors.hpp"

namespace futaki::num {

LaurentTail::LaurentTail(int start_power, std::vector<BigRational> coeffs, int truncation_order)
    : start_(start_power), coeffs_(std::move(coeffs)), order_(truncation_order) {
  const int expected = std::max(0, order_ - start_ + 1);
  if (static_cast<int>(coeffs_.size()) != expected)
    throw TruncationError("Laurent tail has " + std::to_string(coeffs_.size()) +
                          " coefficients, expected " + std::to_string(expected));
}

BigRational LaurentTail::coeff(int i) const {
  if (i > order_)
    throw TruncationError("coefficient c^-" + std::to_string(i) + " beyond truncation order " +
                          std::to_string(order_));
  if (i < start_) return 0;
  return coeffs_[static_cast<std::size_t>(i - start_)];
}

LaurentTail LaurentTail::truncated(int order) const {
  if (order > order_) throw TruncationError("cannot extend a truncated Laurent tail");
  const int keep = std::max(0, order - start_ + 1);
  return {start_, std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + keep), order};
}

BigRational LaurentTail::eval(const BigRational& at) const {
  if (at.is_zero()) throw PoleError("Laurent tail evaluated at c = 0");
  const BigRational inv = BigRational(1) / at;
  BigRational acc;
  for (int i = start_; i <= order_; ++i) {
    const BigRational scale = i >= 0 ? pow(inv, static_cast<unsigned>(i)) : pow(at, static_cast<unsigned>(-i));
    acc += coeff(i) * scale;
  }
  return acc;
}

RationalFn LaurentTail::to_rational() const {
  RationalFn acc;
  for (int i = start_; i <= order_; ++i) {
    const BigRational a = coeff(i);
    if (a.is_zero()) continue;
    if (i <= 0)
      acc += RationalFn(Poly::monomial(a, -i));
    else
      acc += RationalFn(Poly(a), Poly::monomial(1, i));
  }
  return acc;
}

bool operator==(const LaurentTail& a, const LaurentTail& b) {
  if (a.order_ != b.order_) return false;
  const int lo = std::min(a.start_, b.start_);
  for (int i = lo; i <= a.order_; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

LaurentTail laurent_expand(const RationalFn& f, int order) {
  if (f.is_zero()) return {0, std::vector<BigRational>(static_cast<std::size_t>(std::max(0, order + 1))), order};
  const Poly& num = f.num();
  const Poly& den = f.den();
  if (den.leading().is_zero()) throw TruncationError("denominator without a leading coefficient");
  const int start = den.degree() - num.degree();
  // Reverse both polynomials (w = 1/c) and divide the power series.
  const int terms = std::max(0, order - start + 1);
  auto rev = [](const Poly& p, int j) { return p.coeff(p.degree() - j); };
  std::vector<BigRational> s(static_cast<std::size_t>(terms));
  const BigRational d0 = den.leading();
  for (int j = 0; j < terms; ++j) {
    BigRational acc = rev(num, j);
    for (int t = 1; t <= std::min(j, den.degree()); ++t) acc -= rev(den, t) * s[static_cast<std::size_t>(j - t)];
    s[static_cast<std::size_t>(j)] = acc / d0;
  }
  return {start, std::move(s), order};
}

}  // namespace futaki::num
