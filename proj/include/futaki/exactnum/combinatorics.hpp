#pragma once

#include <cstddef>

#include "futaki/exactnum/bigrational.hpp"

namespace futaki::num {

/// Default number of memoised factorials; FUTAKI_FACTORIAL_CAP overrides it.
inline constexpr std::size_t kDefaultFactorialCap = 256;

/// Memoisation bound in effect (read once from the environment).
std::size_t factorial_cap();

/// Exact n!. Requires n >= 0; values below the cap come from a shared table.
BigInt factorial(long n);
/// n! as a rational, from its own memo table.
BigRational factorial_rational(long n);

/// Exact C(n, k); zero when k < 0 or (n >= 0 and k > n). Negative n uses the
/// generalised definition n(n-1)...(n-k+1)/k!.
BigInt binomial(long n, long k);

}  // namespace futaki::num
