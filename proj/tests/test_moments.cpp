#include <doctest.h>

#include "futaki/moments.hpp"

using namespace futaki;
using bundle::derive_invariants;
using bundle::make_fiber;
using num::BigRational;
using num::Poly;

namespace {

Poly aff(BigRational a, BigRational b) { return Poly::affine(a, b); }
BigRational r(long p, long q = 1) { return BigRational(p, q); }

}  // namespace

TEST_CASE("simplex monomial integrals") {
  CHECK(moments::simplex_monomial_integral({0, 0}) == 1);
  CHECK(moments::simplex_monomial_integral({1, 0, 0}) == r(1, 6));
  CHECK(moments::simplex_monomial_integral({1, 1, 0}) == r(1, 24));
  CHECK(moments::simplex_monomial_integral({0, 0, 0}) == r(1, 2));
  CHECK(moments::simplex_monomial_integral({2, 3}) == r(2 * 6, 720));
  CHECK(moments::simplex_monomial_integral({5}) == 1);
}

TEST_CASE("boundary integrals") {
  const auto a = derive_invariants(make_fiber(1, {1, 1, 2}, {0, 0, 0}));
  CHECK(moments::boundary_integrals(a, Poly::x()).total == Poly::x());
  const auto b = derive_invariants(make_fiber(1, {2, 2}, {1, -3}));
  const auto bb = moments::boundary_integrals(b, Poly::x());
  CHECK(bb.total.is_zero());
  for (const auto& w : bb.weighted) CHECK(w.is_zero());
  const auto c = derive_invariants(make_fiber(2, {1, 1}, {1, -1}));
  CHECK(moments::boundary_integrals(c, Poly::x()).total == aff(2, 0));
  for (const auto& inv : {a, b, c, derive_invariants(make_fiber(3, {1, 2, 1, 1}, {2, -1, 0, 3}))})
    CHECK(moments::boundary_integrals(inv, Poly::x()) == moments::boundary_integrals_direct(inv, Poly::x()));
}

TEST_CASE("worked two-summand table") {
  const auto inv = derive_invariants(make_fiber(2, {1, 1}, {1, -1}));
  const auto t = moments::moment_table_closed(inv, BigRational(2));
  CHECK(t.volume == 2);
  CHECK(t.scalar_total == 2);
  CHECK(t.moment[1] == r(7, 6));
  CHECK(moments::moment_table_direct(inv, BigRational(2)) == t);
  const auto zero = derive_invariants(make_fiber(1, {1, 1}, {0, 0}));
  CHECK(moments::moment_table_direct(zero, Poly::x()).moment[1] == aff(r(1, 2), 0));
}

TEST_CASE("single summand table") {
  const auto inv = derive_invariants(make_fiber(2, {2}, {0}));
  const auto closed = moments::moment_table_closed(inv, Poly::x());
  const auto direct = moments::moment_table_direct(inv, Poly::x());
  CHECK(closed.volume == Poly::x());
  CHECK(direct.volume == Poly::x());
  CHECK(closed.scalar_total == aff(2, -2));
  CHECK(direct == closed);
}

// Frozen from direct symbolic integration of p_c, x_j p_c, x_j x_k p_c and the
// scalar integrands (bulk plus facets) over the simplex.
TEST_CASE("symbolic table against direct integration") {
  const auto inv = derive_invariants(make_fiber(3, {2, 1, 3}, {1, -1, 2}));
  const auto t = moments::moment_table_closed(inv, Poly::x());
  CHECK(t.volume == aff(r(1, 60), r(-1, 180)));
  CHECK(t.moment[0] == aff(r(1, 180), r(-1, 504)));
  CHECK(t.moment[1] == aff(r(1, 360), r(-1, 2520)));
  CHECK(t.moment[2] == aff(r(1, 120), r(-1, 315)));
  CHECK(t.second[0][0] == aff(r(1, 420), r(-1, 1120)));
  CHECK(t.second[0][1] == aff(r(1, 1260), r(-1, 6720)));
  CHECK(t.second[0][2] == aff(r(1, 420), r(-19, 20160)));
  CHECK(t.second[1][1] == aff(r(1, 1260), 0));
  CHECK(t.second[1][2] == aff(r(1, 840), r(-1, 4032)));
  CHECK(t.second[2][2] == aff(r(1, 210), r(-1, 504)));
  CHECK(t.scalar_total == aff(r(1, 2), r(-7, 30)));
  CHECK(t.scalar_moment[0] == aff(r(1, 6), r(-1, 12)));
  CHECK(t.scalar_moment[1] == aff(r(1, 12), r(-1, 60)));
  CHECK(t.scalar_moment[2] == aff(r(1, 4), r(-2, 15)));
  CHECK(moments::moment_table_direct(inv, Poly::x()) == t);

  const auto flat = derive_invariants(make_fiber(1, {1, 1}, {0, 0}));
  const auto f = moments::moment_table_closed(flat, Poly::x());
  CHECK(f.second[0][1] == aff(r(1, 6), 0));
  CHECK(f.second[1][1] == aff(r(1, 3), 0));
  CHECK(f.scalar_moment[1] == Poly::x());
}

TEST_CASE("direct and closed tables agree symbolically and numerically") {
  for (int genus = 0; genus <= 3; ++genus)
    for (const auto& ranks : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 3}, {1, 3}, {2, 2, 1, 1}})
      for (int d = -2; d <= 2; ++d) {
        std::vector<long> degrees;
        for (std::size_t i = 0; i < ranks.size(); ++i) degrees.push_back((d * static_cast<long>(i + 1)) % 3 - 1);
        const auto inv = derive_invariants(make_fiber(genus, ranks, degrees));
        const auto sym = moments::moment_table_closed(inv, Poly::x());
        CHECK(moments::moment_table_direct(inv, Poly::x()) == sym);
        for (const BigRational c : {inv.max_slope() + r(1, 100), inv.max_slope() + 3}) {
          const auto num = moments::moment_table_closed(inv, c);
          CHECK(moments::evaluate(sym, c) == num);
          CHECK(moments::moment_table_direct(inv, c) == num);
        }
      }
}

TEST_CASE("tables are affine, symmetric and positive") {
  const auto inv = derive_invariants(make_fiber(2, {2, 1, 1, 2}, {1, -2, 0, 3}));
  const auto t = moments::moment_table_closed(inv, Poly::x());
  CHECK(t.volume.degree() == 1);
  CHECK(t.scalar_total.degree() == 1);
  for (int j = 0; j <= t.ell(); ++j)
    for (int k = 0; k <= t.ell(); ++k) {
      CHECK(t.second[j][k] == t.second[k][j]);
      CHECK(t.second[j][k].degree() == 1);
    }
  for (const BigRational c : {inv.max_slope() + r(1, 1000), inv.max_slope() + r(7, 3), BigRational(50)}) {
    const auto n = moments::evaluate(t, c);
    CHECK(n.volume > 0);
    for (int j = 0; j <= n.ell(); ++j) {
      CHECK(n.second[j][j] > 0);
      CHECK(n.volume * n.second[j][j] - n.moment[j] * n.moment[j] > 0);
    }
  }
}

TEST_CASE("Gram and cross identities") {
  const auto inv = derive_invariants(make_fiber(2, {1, 1}, {1, -1}));
  const auto t = moments::moment_table_closed(inv, Poly::x());
  const auto g = moments::gamma_terms(t, inv);
  CHECK(g.closed[1][1] == t.volume * t.second[1][1] - t.moment[1] * t.moment[1]);
  const auto x = moments::beta_alpha_cross(t, inv);
  for (std::size_t k = 0; k < x.product.size(); ++k) CHECK(x.product[k] == x.closed[k]);

  const auto flat = derive_invariants(make_fiber(1, {1, 2, 1}, {0, 0, 0}));
  const auto ft = moments::moment_table_closed(flat, Poly::x());
  const auto fg = moments::gamma_terms(ft, flat);
  const BigRational rV(flat.r_V);
  const BigRational pR(flat.pi_R);
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; k <= 2; ++k)
      if (j != k) {
        const BigRational scale = pR * pR * BigRational(flat.ranks[j] * flat.ranks[k]) /
                                  (moments::detail::fact(flat.r_V + 1) * moments::detail::fact(flat.r_V + 1) * (rV + 2));
        CHECK(fg.gamma[j][k] == Poly::monomial(-(rV + 1) * (rV + 2) * scale, 2));
        CHECK(fg.gamma[j][k] == fg.gamma[k][j]);
      }

  const auto equal = derive_invariants(make_fiber(2, {1, 2, 3}, {1, 2, 3}));
  const auto ex = moments::beta_alpha_cross(moments::moment_table_closed(equal, Poly::x()), equal);
  for (const auto& v : ex.product) CHECK(v.is_zero());

  const auto wide = derive_invariants(make_fiber(3, {2, 1, 3, 1}, {1, -2, 2, 0}));
  const auto wt = moments::moment_table_closed(wide, Poly::x());
  const auto wx = moments::beta_alpha_cross(wt, wide);
  REQUIRE(wx.tail_product.has_value());
  CHECK(*wx.tail_product == *wx.tail_closed);
  const auto wg = moments::gamma_terms(wt, wide);
  CHECK(wg.product == wg.closed);
}
