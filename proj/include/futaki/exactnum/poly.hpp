#pragma once

// Dense univariate polynomials with exact rational coefficients.
// coeffs()[i] is the coefficient of c^i; the highest stored coefficient is
// never zero (the zero polynomial stores nothing).

#include <string>
#include <utility>
#include <vector>

#include "futaki/exactnum/bigrational.hpp"

namespace futaki::num {

class Poly {
 public:
  Poly() = default;
  Poly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(BigRational(constant)) {}  // NOLINT
  explicit Poly(std::vector<BigRational> coeffs);

  /// The indeterminate c.
  static Poly x();
  /// a*c + b.
  static Poly affine(const BigRational& a, const BigRational& b);
  static Poly monomial(const BigRational& coeff, int degree);

  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigRational coeff(int i) const;
  BigRational leading() const;

  BigRational eval(const BigRational& at) const;
  Poly derivative() const;
  /// Same polynomial with every coefficient divided by the leading one.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigRational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
  friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, int s) { return a *= BigRational(s); }
  friend Poly operator*(int s, Poly a) { return a *= BigRational(s); }
  friend Poly operator/(Poly a, const BigRational& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in the given variable, highest power first.
  std::string str(const std::string& var = "c") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws InternalMismatch when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& base, unsigned exponent);

}  // namespace futaki::num
