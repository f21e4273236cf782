#include <doctest.h>

#include <cmath>
#include <numeric>

#include "futaki/errors.hpp"
#include "futaki/oracle/quadrature.hpp"

using namespace futaki;
using namespace futaki::oracle;
using bundle::derive_invariants;
using bundle::make_fiber;
using num::BigRational;

namespace {

void all_exponents(int parts, int total, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == parts) {
    f(cur);
    return;
  }
  for (int e = 0; e <= total; ++e) {
    cur.push_back(e);
    all_exponents(parts, total - e, cur, f);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("Gauss-Legendre rule on the unit interval") {
  const auto rule = gauss_legendre(16);
  CHECK(rule.nodes.size() == 16);
  CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (int p = 0; p <= 31; ++p) {
    double s = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
    CHECK(std::abs(s - 1.0 / (p + 1)) < 1e-14);
  }
}

TEST_CASE("simplex quadrature on simple integrands") {
  const auto one = simplex_quadrature([](std::span<const double>) { return 1.0; }, 2);
  CHECK(std::abs(one.value - 0.5) < 1e-12);
  CHECK(one.estimated_error >= 0);
  const auto l0l1 = simplex_quadrature([](std::span<const double> l) { return l[0] * l[1]; }, 2);
  CHECK(std::abs(l0l1.value - 1.0 / 24) < 1e-10);
  const auto pc = simplex_quadrature([](std::span<const double> l) { return 2 - (1 * l[0] + -1 * l[1]); }, 1);
  CHECK(std::abs(pc.value - 2.0) < 1e-10);
  CHECK(simplex_quadrature([](std::span<const double>) { return 3.0; }, 0).value == 3.0);
  CHECK_THROWS_AS(simplex_quadrature([](std::span<const double>) { return 1.0; }, 6), DepthExceeded);
  CHECK_THROWS_AS(simplex_quadrature([](std::span<const double>) { return 1.0; }, 2, 100), DepthExceeded);
}

TEST_CASE("quadrature matches the factorial formula") {
  for (int ell = 1; ell <= 4; ++ell)
    for (int total = 0; total <= 6; ++total) {
      std::vector<int> cur;
      all_exponents(ell + 1, total, cur, [&](const std::vector<int>& e) {
        if (std::accumulate(e.begin(), e.end(), 0) == total) CHECK(monomial_deviation(e) < 1e-9);
      });
    }
}

TEST_CASE("quadrature matches moment tables and facet integrals") {
  const auto zero = derive_invariants(make_fiber(1, {1, 2, 1}, {0, 0, 0}));
  CHECK(moment_table_numeric_check(zero, 2) < 1e-10);
  const auto inv = derive_invariants(make_fiber(2, {2, 1, 1, 2}, {1, -2, 0, 1}));
  CHECK(moment_table_numeric_check(inv, 3) < 1e-9);
  CHECK(moment_table_numeric_check(inv, inv.max_slope() + BigRational(1, 100)) < 1e-8);
  CHECK(boundary_numeric_check(inv, 3) < 1e-9);
  const auto five = derive_invariants(make_fiber(3, {1, 1, 1, 1, 2}, {2, -1, 0, 1, -3}));
  CHECK(moment_table_numeric_check(five, 4) < 1e-9);
  CHECK(boundary_numeric_check(five, 4) < 1e-9);
}

TEST_CASE("relative deviation") {
  CHECK(relative_deviation(1.5, BigRational(3, 2)) == 0.0);
  CHECK(relative_deviation(0.25, BigRational(0)) == 0.25);
  CHECK(to_double(BigRational(1, 4)) == 0.25);
}
