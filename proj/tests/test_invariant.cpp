#include <doctest.h>

#include "futaki/errors.hpp"
#include "futaki/invariant.hpp"

using namespace futaki;
using namespace futaki::invariant;
using bundle::derive_invariants;
using bundle::make_fiber;
using num::BigRational;
using num::Poly;
using num::RationalFn;

namespace {

BigRational r(long p, long q = 1) { return BigRational(p, q); }

Poly poly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(v);
}

}  // namespace

TEST_CASE("one extra summand: worked rank-two example") {
  const auto inv = derive_invariants(make_fiber(2, {1, 1}, {1, -1}));
  const RationalFn sym = relative_futaki_symbolic(inv);
  CHECK(sym == RationalFn(Poly::affine(r(2, 3), r(1, 3))));
  CHECK(relative_futaki_value(moments::moment_table_closed(inv, BigRational(1))) == 1);
  CHECK(futaki_ell1_closed(inv, BigRational(1)) == 1);
  CHECK(relative_futaki(inv, 2).value == r(5, 3));
  CHECK_THROWS_AS(relative_futaki(inv, 1), InadmissiblePolarization);

  const auto t = moments::moment_table_closed(inv, BigRational(3));
  CHECK(relative_futaki_value(t) == t.volume * t.scalar_moment[1] - t.moment[1] * t.scalar_total);
  const auto ex = solve_extremal(t);
  CHECK(ex.coeffs.empty());
  CHECK(ex.constant == 2 * t.scalar_total / t.volume);
}

TEST_CASE("one extra summand: closed form equals the general route") {
  CHECK(relative_futaki_symbolic(derive_invariants(make_fiber(3, {2, 1}, {1, -1}))) ==
        RationalFn(Poly::affine(r(1, 8), r(1, 12))));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int d = -3; d <= 3; ++d)
        for (int g = 0; g <= 2; ++g) {
          const auto inv = derive_invariants(make_fiber(g, {a, b}, {d, 1 - d}));
          CHECK(relative_futaki_symbolic(inv) == RationalFn(futaki_ell1_closed(inv, Poly::x())));
        }
  const auto equal = derive_invariants(make_fiber(2, {1, 1}, {0, 0}));
  CHECK(relative_futaki_symbolic(equal).is_zero());
  const auto down = derive_invariants(make_fiber(2, {1, 1}, {-1, 1}));
  CHECK(relative_futaki(down, 2).value == r(-5, 3));
  CHECK(relative_futaki(down, 2).verdict == Verdict::Destabilized);
  const auto up = derive_invariants(make_fiber(2, {1, 1}, {1, -1}));
  CHECK(futaki_ell1_closed(up, Poly::x()).leading() > 0);
  CHECK(futaki_ell1_closed(down, Poly::x()).leading() < 0);
  CHECK_THROWS_AS(futaki_ell1_closed(derive_invariants(make_fiber(2, {1, 1, 1}, {0, 0, 0})), Poly::x()), WrongArity);
}

// Frozen from an independent symbolic computation: direct integration of the
// moment integrands followed by an explicit matrix inverse.
TEST_CASE("frozen values for longer fibers") {
  const auto two = derive_invariants(make_fiber(1, {1, 1, 1}, {1, -1, 0}));
  CHECK(relative_futaki_symbolic(two) == RationalFn(Poly::affine(r(1, 8), 0)));
  const auto rep = relative_futaki(two, 2);
  CHECK(rep.value == r(1, 4));
  CHECK(rep.extremal.constant == 12);
  CHECK(rep.extremal.coeffs == std::vector<BigRational>{0});

  const auto three = derive_invariants(make_fiber(2, {2, 1, 1, 2}, {1, -2, 0, 1}));
  CHECK(relative_futaki_symbolic(three) ==
        RationalFn(poly({0, -1, 2, 48}), poly({-31320, -60480, 1451520})));
  const auto rep3 = relative_futaki(three, 3);
  CHECK(rep3.value == r(437, 4283640));
  CHECK(rep3.extremal.constant == r(2193632, 35697));
  CHECK(rep3.extremal.coeffs == std::vector<BigRational>{r(-97888, 35697), r(-85120, 11899)});
  CHECK(rep3.all_certificates_pass());

  const auto flat = derive_invariants(make_fiber(1, {1, 1, 1}, {0, 0, 0}));
  CHECK(relative_futaki_symbolic(flat).is_zero());
  const auto flat_ex = solve_extremal(moments::moment_table_closed(flat, Poly::x()));
  CHECK(flat_ex.constant == RationalFn(12));
  CHECK(flat_ex.coeffs[0].is_zero());
}

TEST_CASE("extremal system residual vanishes") {
  const auto inv = derive_invariants(make_fiber(1, {1, 1, 1}, {1, -1, 0}));
  const auto t = moments::moment_table_closed(inv, BigRational(2));
  const auto ex = solve_extremal(t);
  CHECK(ex.constant * t.volume + ex.coeffs[0] * t.moment[2] == 2 * t.scalar_total);
  CHECK(ex.constant * t.moment[2] + ex.coeffs[0] * t.second[2][2] == 2 * t.scalar_moment[2]);
  CHECK(futaki_from_extremal(t, ex) == relative_futaki_value(t));
}

TEST_CASE("equal slopes: no extremal correction") {
  for (const auto& ranks : std::vector<std::vector<int>>{{1, 2, 1}, {2, 2, 2, 1}, {1, 1, 3}}) {
    std::vector<long> degrees;
    for (int rk : ranks) degrees.push_back(2L * rk);
    const auto inv = derive_invariants(make_fiber(2, ranks, degrees));
    const auto t = moments::moment_table_closed(inv, BigRational(7, 2));
    const auto ex = solve_extremal(t);
    for (const auto& a : ex.coeffs) CHECK(a.is_zero());
    CHECK(ex.constant == 2 * t.scalar_total / t.volume);
    CHECK(relative_futaki_value(t).is_zero());
  }
}

TEST_CASE("two extra summands factor through the slope gap") {
  const auto inv = derive_invariants(make_fiber(2, {3, 1, 1}, {1, -1, 0}));
  CHECK(relative_futaki_symbolic(inv) == RationalFn(Poly::affine(r(1, 432), r(1, 2160))));
  const auto f = futaki_ell2_factorized(inv);
  CHECK(f.gamma1 == r(1, 544320000));
  CHECK(f.gamma1 == f.gamma1_formula);
  CHECK_FALSE(f.alternate_form_matches);
  CHECK(f.slope_gap == r(4, 3));

  const auto unit = derive_invariants(make_fiber(1, {1, 1, 1}, {2, -1, 0}));
  const auto fu = futaki_ell2_factorized(unit);
  CHECK(fu.alternate_form_matches);

  const auto level = derive_invariants(make_fiber(2, {2, 2, 1}, {2, 2, -1}));
  CHECK(relative_futaki_symbolic(level).is_zero());
  CHECK(futaki_ell2_factorized(level).slope_gap == 0);
  CHECK_THROWS_AS(futaki_ell2_factorized(derive_invariants(make_fiber(1, {1, 1}, {0, 0}))), WrongArity);
}

TEST_CASE("sign of the invariant follows the slope gap") {
  for (int d0 = -3; d0 <= 3; ++d0)
    for (int d1 = -3; d1 <= 3; ++d1)
      for (int d2 = -2; d2 <= 2; ++d2)
        for (int g = 1; g <= 2; ++g) {
          const auto inv = derive_invariants(make_fiber(g, {1, 2, 1}, {d0, d1, d2}));
          const int gap = (inv.mu[0] - inv.mu[1]).sign();
          for (const BigRational c : {inv.max_slope() + r(1, 50), inv.max_slope() + 1, inv.max_slope() + 9}) {
            const auto rep = relative_futaki(inv, c);
            CHECK(rep.value.sign() == gap);
            CHECK(rep.all_certificates_pass());
          }
        }
}

TEST_CASE("classical term factorization") {
  const auto inv = derive_invariants(make_fiber(2, {1, 1, 2}, {1, 0, 1}));
  const auto cl = classical_futaki(inv);
  CHECK(cl.value == cl.factored);
  const auto same = derive_invariants(make_fiber(2, {1, 1, 1}, {2, -2, 0}));
  CHECK(classical_futaki(same).third_slope_form_matches);
  const auto slope_v = derive_invariants(make_fiber(2, {1, 1, 1}, {2, 0, -2}));
  CHECK(classical_futaki(slope_v).value.is_zero());
}

TEST_CASE("sign and verdict names") {
  CHECK(verdict_for(Sign::Positive) == Verdict::NotDestabilized);
  CHECK(verdict_for(Sign::Negative) == Verdict::Destabilized);
  CHECK(verdict_for(Sign::Zero) == Verdict::Borderline);
  for (auto s : {Sign::Positive, Sign::Negative, Sign::Zero}) CHECK(parse_sign(to_string(s)) == s);
  for (auto v : {Verdict::NotDestabilized, Verdict::Destabilized, Verdict::Borderline})
    CHECK(parse_verdict(to_string(v)) == v);
  CHECK_THROWS_AS(parse_sign("up"), ParseError);
}

TEST_CASE("genus zero is flagged") {
  const auto inv = derive_invariants(make_fiber(0, {1, 1}, {1, -1}));
  CHECK(relative_futaki(inv, 2).outside_theorem_hypotheses);
  CHECK_FALSE(relative_futaki(derive_invariants(make_fiber(1, {1, 1}, {1, -1})), 2).outside_theorem_hypotheses);
}
