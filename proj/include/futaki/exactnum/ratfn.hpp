#pragma once

// Rational functions of c over Q in canonical form: gcd(num, den) = 1 and den
// monic (so its leading coefficient is positive).

#include <string>

#include "futaki/exactnum/poly.hpp"

namespace futaki::num {

class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const BigRational& s) : num_(s), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(int s) : RationalFn(BigRational(s)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is the zero polynomial.
  RationalFn(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws PoleError when den vanishes at the point.
  BigRational eval(const BigRational& at) const;
  /// Sign of the value at the point.
  int sign_at(const BigRational& at) const { return eval(at).sign(); }

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "c") const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

}  // namespace futaki::num
