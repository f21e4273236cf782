#pragma once

// Arbitrary precision rationals, always kept in lowest terms with a positive
// denominator. Values whose numerator and denominator fit in 64 bits are held
// inline; larger ones live in a GMP mpq_class. A value that fits is always
// stored inline, so equality can compare representations directly.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace futaki::num {

using BigInt = mpz_class;

class BigRational {
 public:
  BigRational() = default;
  BigRational(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(long v);  // NOLINT(google-explicit-constructor)
  BigRational(long long v) : BigRational(static_cast<long>(v)) {}  // NOLINT
  BigRational(const BigInt& v);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

  BigRational(const BigRational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  BigRational(BigRational&& o) noexcept = default;
  BigRational& operator=(const BigRational& o);
  BigRational& operator=(BigRational&& o) noexcept = default;
  ~BigRational() = default;

  /// Parses "p/q" or "p" (optional leading '-'). No decimal point, no exponent.
  static BigRational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b);
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

  mpq_class to_mpq() const;

 private:
  explicit BigRational(const mpq_class& q) { assign(q); }
  /// Stores q, inline when it fits.
  void assign(const mpq_class& q);
  bool small() const { return !big_; }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

BigRational abs(const BigRational& r);
BigRational pow(const BigRational& base, unsigned exponent);

}  // namespace futaki::num
