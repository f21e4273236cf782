#include "futaki/exactnum/poly.hpp"

#include <algorithm>

#include "futaki/errors.hpp"

namespace futaki::num {

Poly::Poly(const BigRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<BigRational>{0, 1}); }

Poly Poly::affine(const BigRational& a, const BigRational& b) {
  return Poly(std::vector<BigRational>{b, a});
}

Poly Poly::monomial(const BigRational& coeff, int degree) {
  std::vector<BigRational> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = coeff;
  return Poly(std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigRational Poly::leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

BigRational Poly::eval(const BigRational& at) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<BigRational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * BigRational(static_cast<long>(i)));
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator/(Poly a, const BigRational& s) {
  if (s.is_zero()) throw DivisionByZero("polynomial divided by zero scalar");
  for (auto& c : a.coeffs_) c /= s;
  return a;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const BigRational mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == BigRational(1);
    if (i == 0 || !unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero polynomial");
  std::vector<BigRational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<BigRational> quot(static_cast<std::size_t>(da - db + 1));
  const BigRational lead = b.leading();
  for (int i = da; i >= db; --i) {
    const BigRational t = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalMismatch("inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace futaki::num
