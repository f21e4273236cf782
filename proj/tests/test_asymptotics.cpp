#include <doctest.h>

#include "futaki/asymptotics.hpp"
#include "futaki/errors.hpp"
#include "futaki/invariant.hpp"

using namespace futaki;
using namespace futaki::asymptotics;
using bundle::derive_invariants;
using bundle::make_fiber;
using num::BigRational;
using num::RationalFn;

namespace {

BigRational r(long p, long q = 1) { return BigRational(p, q); }
BigRational q(const char* s) { return BigRational::parse(s); }

}  // namespace

// Frozen from the Laurent series of the Sigma sums obtained by solving the
// extremal system symbolically from directly integrated moments.
TEST_CASE("Sigma expansions of a four-summand fiber") {
  const auto inv = derive_invariants(make_fiber(2, {2, 1, 1, 2}, {1, -2, 0, 1}));
  const std::vector<BigRational> u{0, -48, -9, r(-209, 168), r(-31, 126), r(-25127, 677376), r(-111431, 16257024),
                                   q("-1483033/1365590016"), q("-12660563/65548320768")};
  const std::vector<BigRational> v{0, -20, r(-25, 6), r(-305, 504), r(-2785, 24192), r(-72565, 4064256),
                                   r(-11245, 3483648), q("-8517175/16387080192"), q("-35909995/393289924608")};
  const auto sig = sigma_exact(inv, 8);
  const auto [ru, rv] = uv_recursion(inv, 8);
  for (int i = 0; i <= 8; ++i) {
    CHECK(sig.u.coeff(i) == u[i]);
    CHECK(sig.v.coeff(i) == v[i]);
    CHECK(ru.coeff(i) == u[i]);
    CHECK(rv.coeff(i) == v[i]);
  }
  CHECK(v1_closed(inv) == -20);
  CHECK(u2_closed(inv) == -9);
  CHECK(sig.sigma2 == RationalFn(num::Poly(std::vector<BigRational>{-4480, -26880}),
                                 num::Poly(std::vector<BigRational>{-29, -56, 1344})));
}

TEST_CASE("expansion of the invariant over the slope gap") {
  const auto inv = derive_invariants(make_fiber(2, {2, 1, 1, 2}, {1, -2, 0, 1}));
  const auto fe = fut_expansion(inv, 5);
  CHECK(fe.fut1 == r(1, 75600));
  CHECK(fe.fut2 == r(1, 907200));
  const std::vector<BigRational> higher{r(17, 304819200), q("191/7315660800"), q("11/4800902400"),
                                        q("19433/29496744345600"), q("381023/4955453050060800")};
  CHECK(fe.higher == higher);
  CHECK(fut1_closed(inv) == fe.fut1);
  CHECK(fut2_closed(inv) == fe.fut2);
  const auto exact = num::laurent_expand(invariant::relative_futaki_symbolic(inv) / RationalFn(inv.mu[0] - inv.mu[1]), 5);
  CHECK(fe.as_laurent() == exact);
}

TEST_CASE("closed leading coefficients") {
  const auto ones = derive_invariants(make_fiber(1, {1, 1, 1}, {0, 0, 0}));
  CHECK(fut1_closed(ones) == r(1, 16));
  CHECK(fut2_closed(ones) == 0);
  const auto sig = sigma_exact(ones, 4);
  CHECK(sig.sigma2.is_zero());
  CHECK(sig.u.coeff(1) == 0);

  const auto line = derive_invariants(make_fiber(1, {1, 2, 1}, {1, -3, 2}));
  const auto line_sig = sigma_exact(line, 4);
  for (const BigRational c : {BigRational(3), BigRational(4), r(9, 2)}) {
    const auto ex = invariant::solve_extremal(moments::moment_table_closed(line, c));
    CHECK(line_sig.sigma1.eval(c) == ex.coeffs[0]);
    CHECK(line_sig.sigma2.eval(c) == 2 * ex.coeffs[0]);
  }
}

TEST_CASE("recursion equals the exact expansion across small fibers") {
  for (int g = 1; g <= 3; ++g)
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const auto inv = derive_invariants(make_fiber(g, {1, 2, 1, 1}, {a, b, 1, -a - b - 1}));
        const auto sig = sigma_exact(inv, 6);
        const auto [u, v] = uv_recursion(inv, 6);
        CHECK(sig.u == u);
        CHECK(sig.v == v);
        CHECK(u.coeff(1) == 4 * BigRational(inv.r_V * inv.r_V) * inv.mu01);
        CHECK(v.coeff(1) == v1_closed(inv));
        CHECK(u.coeff(2) == u2_closed(inv));
      }
}

TEST_CASE("one extra summand has a vanishing recursion") {
  const auto inv = derive_invariants(make_fiber(2, {1, 1}, {1, -1}));
  const auto [u, v] = uv_recursion(inv, 4);
  for (int i = 0; i <= 4; ++i) {
    CHECK(u.coeff(i) == 0);
    CHECK(v.coeff(i) == 0);
  }
  CHECK_THROWS_AS(sigma_exact(inv), WrongArity);
}

TEST_CASE("inputs must be normalized") {
  const auto inv = derive_invariants(make_fiber(2, {1, 1, 1}, {1, 0, 0}));
  CHECK_THROWS_AS(sigma_exact(inv), NotNormalized);
  CHECK_THROWS_AS(uv_recursion(inv, 3), NotNormalized);
  CHECK_THROWS_AS(fut_expansion(inv, 3), NotNormalized);
  CHECK_THROWS_AS(positivity_certificate(inv, 3), NotNormalized);
}

TEST_CASE("positivity certificate") {
  const auto inv = derive_invariants(make_fiber(1, {1, 1, 1}, {1, -1, 0}));
  const auto cert = positivity_certificate(inv, 2);
  CHECK(cert.which == PositivityCase::PairDegreeNonNegative);
  CHECK(cert.positive());
  CHECK(cert.consistent());
  CHECK(cert.minus_sigma2_nonnegative);

  const auto flat = derive_invariants(make_fiber(2, {1, 2, 1}, {0, 0, 0}));
  const auto fc = positivity_certificate(flat, r(1, 3));
  CHECK(fc.sigma2 == 0);
  CHECK(fc.delta_sigma2 > 0);
  CHECK(fc.positive());

  CHECK_THROWS_AS(positivity_certificate(inv, 1), InadmissiblePolarization);
  CHECK_THROWS_AS(positivity_certificate(derive_invariants(make_fiber(1, {1, 1}, {1, -1})), 2), WrongArity);
}

TEST_CASE("positivity certificate across normalized fibers") {
  for (int g = 1; g <= 2; ++g)
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        const auto raw = bundle::make_fiber(g, {2, 1, 1, 3}, {a, b, 2, -1});
        const auto base = derive_invariants(raw);
        for (const BigRational c : {base.max_slope() + r(1, 100), base.max_slope() + 2}) {
          const auto nf = bundle::normalize_slope_zero(raw, c);
          const auto inv = derive_invariants(nf.fiber);
          const auto cert = positivity_certificate(inv, nf.c);
          CHECK(cert.positive());
          CHECK(cert.consistent());
          CHECK(cert.minus_sigma2_nonnegative);
          CHECK(cert.which == ((inv.degrees[0] + inv.degrees[1]).sign() >= 0 ? PositivityCase::PairDegreeNonNegative
                                                                              : PositivityCase::PairDegreeNegative));
          const auto value = invariant::relative_futaki_value(moments::moment_table_closed(base, c));
          CHECK(value.sign() == (base.mu[0] - base.mu[1]).sign());
        }
      }
}
