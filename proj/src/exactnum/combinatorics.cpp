#include "futaki/exactnum/combinatorics.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace futaki::num {

std::size_t factorial_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("FUTAKI_FACTORIAL_CAP")) {
      try {
        const long v = std::stol(env);
        if (v >= 0) return static_cast<std::size_t>(v);
      } catch (const std::exception&) {
      }
    }
    return kDefaultFactorialCap;
  }();
  return cap;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  const auto un = static_cast<std::size_t>(n);
  if (un < factorial_cap()) {
    std::lock_guard lock(mu);
    while (table.size() <= un) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    return table[un];
  }
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigRational factorial_rational(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
  static std::mutex mu;
  static std::vector<BigRational> table{BigRational(1)};
  const auto un = static_cast<std::size_t>(n);
  if (un < factorial_cap()) {
    std::lock_guard lock(mu);
    while (table.size() <= un) table.push_back(table.back() * BigRational(static_cast<long>(table.size())));
    return table[un];
  }
  return BigRational(factorial(n));
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (n >= 0) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  BigInt num = 1;
  for (long i = 0; i < k; ++i) num *= BigInt(n - i);
  return num / factorial(k);
}

}  // namespace futaki::num
