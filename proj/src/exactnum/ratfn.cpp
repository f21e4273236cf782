#include "futaki/exactnum/ratfn.hpp"

#include "futaki/errors.hpp"

namespace futaki::num {

RationalFn::RationalFn(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void RationalFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const BigRational lead = den_.leading();
  if (lead != BigRational(1)) {
    num_ = num_ / lead;
    den_ = den_ / lead;
  }
}

BigRational RationalFn::eval(const BigRational& at) const {
  const BigRational d = den_.eval(at);
  if (d.is_zero()) throw PoleError("rational function evaluated at a pole c = " + at.str());
  return num_.eval(at) / d;
}

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

std::string RationalFn::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace futaki::num
