#include "futaki/exactnum/bigrational.hpp"

#include <cctype>
#include <limits>
#include <utility>
#include <ostream>

#include "futaki/errors.hpp"

namespace futaki::num {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 1 || b == 1) return 1;
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  while (b != 0) {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  }
  return a << shift;
}

std::uint64_t uabs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

BigInt from128(i128 v) {
  const bool neg = v < 0;
  u128 m = uabs(v);
  BigInt out(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  out <<= 64;
  out += BigInt(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  return neg ? BigInt(-out) : out;
}

bool fits_int64(const BigInt& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62 || (z.fits_slong_p() && z != BigInt(std::numeric_limits<long>::min()));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an exact rational: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

BigRational::BigRational(long v) {
  if (v == std::numeric_limits<long>::min())
    assign(mpq_class(BigInt(v)));
  else
    num_ = v;
}

BigRational::BigRational(const BigInt& v) { assign(mpq_class(v)); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(q);
}

BigRational& BigRational::operator=(const BigRational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

void BigRational::assign(const mpq_class& q) {
  if (fits_int64(q.get_num()) && fits_int64(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }
}

mpq_class BigRational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q{BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_))};
  return q;
}

BigInt BigRational::numerator() const { return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_)); }
BigInt BigRational::denominator() const { return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_)); }

int BigRational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool BigRational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

BigRational BigRational::operator-() const {
  if (big_) return BigRational(mpq_class(-*big_));
  BigRational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  if (small() && o.small()) {
    if (den_ == 1 && o.den_ == 1) {
      const i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    const std::uint64_t g = gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
    const std::int64_t bd = den_ / static_cast<std::int64_t>(g);
    const std::int64_t od = o.den_ / static_cast<std::int64_t>(g);
    i128 n = static_cast<i128>(num_) * od + static_cast<i128>(o.num_) * bd;
    i128 d = static_cast<i128>(den_) * od;
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (g != 1) {
      const std::uint64_t h = fits(n) ? gcd64(uabs64(static_cast<std::int64_t>(n)), g)
                                      : static_cast<std::uint64_t>(gcd128(uabs(n), static_cast<u128>(g)));
      if (h != 1) {
        n /= static_cast<i128>(h);
        d /= static_cast<i128>(h);
      }
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign(mpq_class(from128(n), from128(d)));
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) { return *this += -o; }

BigRational& BigRational::operator*=(const BigRational& o) {
  if (small() && o.small()) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      const i128 p = static_cast<i128>(num_) * o.num_;
      if (fits(p)) {
        num_ = static_cast<std::int64_t>(p);
        return *this;
      }
    }
    const std::uint64_t g1 = gcd64(uabs64(num_), static_cast<std::uint64_t>(o.den_));
    const std::uint64_t g2 = gcd64(uabs64(o.num_), static_cast<std::uint64_t>(den_));
    const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
    const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign(mpq_class(from128(n), from128(d)));
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  if (o.small()) {
    BigRational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  assign(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const BigRational& a, const BigRational& b) {
  if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.small() != b.small()) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = 0;
  if (a.small() && b.small()) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    c = (l > r) - (l < r);
  } else {
    c = cmp(a.to_mpq(), b.to_mpq());
  }
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text, text));
  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+')
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  BigInt num = parse_int(text.substr(0, slash), text);
  BigInt den = parse_int(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return BigRational(num, den);
}

std::string BigRational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigRational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace futaki::num
