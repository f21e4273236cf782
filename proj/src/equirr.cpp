#include "futaki/equirr.hpp"

#include <map>

#include "futaki/errors.hpp"
#include "futaki/exactnum/combinatorics.hpp"
#include "futaki/invariant.hpp"
#include "futaki/linalg/bareiss.hpp"
#include "futaki/moments.hpp"

namespace futaki::equirr {

namespace {

/// C(a + k, k - b) at an integer k.
struct IntegerBinomial {
  long k;
  BigRational operator()(int a, int b) const { return BigRational(num::binomial(a + k, k - b)); }
};

struct PolyBinomial {
  const Poly& operator()(int a, int b) const {
    thread_local std::map<std::pair<int, int>, Poly> cache;
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::pair{a, b}, binomial_in_k(a, b)).first;
    return it->second;
  }
};

template <class T, class Binom>
SymPowerCoeffs<T> assemble(int r, const Binom& binom) {
  SymPowerCoeffs<T> s;
  s.rank = binom(r - 1, 0);
  s.c1 = binom(r - 1, 1);
  s.ch2_ch2 = binom(r, 1);
  s.ch2_c1sq = binom(r - 1, 2) * BigRational(1, 2);
  s.ch3_c1cube = binom(r - 1, 3) * BigRational(1, 6);
  s.ch3_c1ch2 = binom(r, 2);
  s.ch3_ch3 = binom(r + 1, 1) + binom(r, 2);
  return s;
}

struct WeightSums {
  BigRational on_degree;  // sum lambda_i d_i
  BigRational on_rank;    // sum lambda_i r_i
};

WeightSums sums(const DerivedInvariants& inv, const WeightVector& rho) {
  if (rho.lambdas.size() != inv.ranks.size()) throw WrongArity("weight vector length must equal ell + 1");
  WeightSums s;
  for (std::size_t i = 0; i < rho.lambdas.size(); ++i) {
    const BigRational l(rho.lambdas[i]);
    s.on_degree += l * inv.degrees[i];
    s.on_rank += l * BigRational(inv.ranks[i]);
  }
  return s;
}

WeightSums product_sums(const DerivedInvariants& inv, const WeightVector& a, const WeightVector& b) {
  WeightVector ab;
  for (std::size_t i = 0; i < a.lambdas.size() && i < b.lambdas.size(); ++i)
    ab.lambdas.push_back(a.lambdas[i] * b.lambdas[i]);
  if (a.lambdas.size() != b.lambdas.size()) ab.lambdas.clear();
  return sums(inv, ab);
}

template <class T, class Binom>
T hilbert_display(const DerivedInvariants& inv, const BigRational& m, const T& k, const Binom& binom) {
  const int n = inv.r_V;
  return binom(n - 1, 0) * (k * (m - inv.mu_V) + T(BigRational(1 - inv.genus)));
}

template <class T, class Binom>
T weight_display(const DerivedInvariants& inv, const BigRational& m, const WeightSums& s, const T& k,
                 const Binom& binom) {
  const int n = inv.r_V;
  return binom(n, 1) * (-s.on_degree) - binom(n - 1, 2) * (s.on_rank * inv.d_V) +
         binom(n - 1, 1) * s.on_rank * (k * m + T(BigRational(1 - inv.genus)));
}

template <class T>
T weight_from_chern(const DerivedInvariants& inv, const BigRational& m, const WeightSums& s, const T& k,
                    const SymPowerCoeffs<T>& sp) {
  // S^k V*: c_1(V*) = -d_V, the weight-linear part of ch_2 is -sum lambda d,
  // of c_1^2 it is 2 (sum lambda r)(-d_V).
  return sp.ch2_ch2 * (-s.on_degree) + sp.ch2_c1sq * (-2 * s.on_rank * inv.d_V) +
         sp.c1 * s.on_rank * (k * m + T(BigRational(1 - inv.genus)));
}

BigRational leading_at(const Poly& p, int degree) {
  if (p.degree() > degree) throw InternalMismatch("polynomial in k exceeds the expected degree");
  return p.coeff(degree);
}

BigRational alpha_tilde_gram(const TildeCoefficients& t, std::size_t i, std::size_t k) {
  return t.t_alpha2[i][k] - t.t_alpha[i] * t.t_alpha[k] / t.t_alpha0;
}

BigRational f_alg(const TildeCoefficients& t, std::size_t i) {
  return t.t_beta[i] - t.t_alpha[i] * t.t_beta0 / t.t_alpha0;
}

const SymPowerChernPoly& cached_sym_power_chern_poly(int r) {
  thread_local std::map<int, SymPowerChernPoly> cache;
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, sym_power_chern_poly(r)).first;
  return it->second;
}

AlgebraicFutaki algebraic_from_tilde(const TildeCoefficients& t, int ell) {
  AlgebraicFutaki out;
  out.value = f_alg(t, 1);
  if (ell == 1) return out;
  linalg::Matrix<BigRational> gram;
  std::vector<BigRational> rhs;
  for (std::size_t i = 2; i <= static_cast<std::size_t>(ell); ++i) {
    std::vector<BigRational> row;
    for (std::size_t k = 2; k <= static_cast<std::size_t>(ell); ++k) row.push_back(alpha_tilde_gram(t, i, k));
    gram.push_back(std::move(row));
    rhs.push_back(f_alg(t, i));
  }
  const auto sol = linalg::bareiss_solve(std::move(gram), std::move(rhs));
  for (std::size_t j = 2; j <= static_cast<std::size_t>(ell); ++j) {
    const BigRational aj = sol.numerators[j - 2] / sol.det;
    out.a_tilde.push_back(aj);
    out.value -= aj * alpha_tilde_gram(t, j, 1);
  }
  return out;
}

Identification identify(const DerivedInvariants& inv, const BigRational& m, const TildeCoefficients& t,
                        const moments::NumericTable& a) {
  const BigRational pR(inv.pi_R);
  const std::size_t size = inv.ranks.size();
  Identification id;
  id.alpha0 = t.t_alpha0 * pR == a.volume;
  id.beta0 = 2 * t.t_beta0 * pR == a.scalar_total;
  id.alpha = id.beta = id.alpha2 = id.pairwise_closed = true;
  for (std::size_t i = 0; i < size; ++i) {
    id.alpha = id.alpha && t.t_alpha[i] * pR == a.moment[i];
    id.beta = id.beta && 2 * t.t_beta[i] * pR == a.scalar_moment[i];
    for (std::size_t j = 0; j < size; ++j) {
      id.alpha2 = id.alpha2 && t.t_alpha2[i][j] * pR == a.second[i][j];
      id.pairwise_closed =
          id.pairwise_closed &&
          t.t_alpha2[i][j] == pairwise_leading_closed(inv, m, WeightVector::unit(size, i), WeightVector::unit(size, j));
    }
  }
  return id;
}

void require_admissible(const DerivedInvariants& inv, const BigRational& m) {
  if (!bundle::is_admissible(inv, m))
    throw InadmissiblePolarization("m = " + m.str() + " is not above every slope", inv.max_slope().str());
}

}  // namespace

WeightVector WeightVector::unit(std::size_t size, std::size_t i) {
  WeightVector w{std::vector<long>(size, 0)};
  w.lambdas.at(i) = 1;
  return w;
}

WeightVector WeightVector::diagonal(std::size_t size) { return WeightVector{std::vector<long>(size, 1)}; }

Poly binomial_in_k(int a, int b) {
  if (a + b < 0) throw InternalMismatch("binomial_in_k needs a + b >= 0");
  Poly p(1);
  for (int i = 1 - b; i <= a; ++i) p *= Poly::affine(1, i);
  return p / BigRational(num::factorial(a + b));
}

SymPowerChern sym_power_chern(int r, long k) {
  if (r < 1 || k < 0) throw InvalidBundle("symmetric powers need rank >= 1 and k >= 0");
  return assemble<BigRational>(r, IntegerBinomial{k});
}

SymPowerChernPoly sym_power_chern_poly(int r) {
  if (r < 1) throw InvalidBundle("symmetric powers need rank >= 1");
  return assemble<Poly>(r, PolyBinomial{});
}

SymPowerChern evaluate(const SymPowerChernPoly& p, long k) {
  const BigRational at(k);
  return {p.rank.eval(at),      p.c1.eval(at),        p.ch2_ch2.eval(at), p.ch2_c1sq.eval(at),
          p.ch3_c1cube.eval(at), p.ch3_c1ch2.eval(at), p.ch3_ch3.eval(at)};
}

BigRational hilbert_dk(const DerivedInvariants& inv, const BigRational& m, long k) {
  return hilbert_display(inv, m, BigRational(k), IntegerBinomial{k});
}

BigRational hilbert_dk_chern(const DerivedInvariants& inv, const BigRational& m, long k) {
  const SymPowerChern sp = sym_power_chern(inv.r_V, k);
  return sp.rank * (m * BigRational(k) + BigRational(1 - inv.genus)) + sp.c1 * (-inv.d_V);
}

Poly hilbert_poly(const DerivedInvariants& inv, const BigRational& m) {
  return hilbert_display(inv, m, Poly::x(), PolyBinomial{});
}

BigRational weight_wk(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho, long k) {
  return weight_display(inv, m, sums(inv, rho), BigRational(k), IntegerBinomial{k});
}

BigRational weight_wk_chern(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho, long k) {
  return weight_from_chern(inv, m, sums(inv, rho), BigRational(k), sym_power_chern(inv.r_V, k));
}

Poly weight_poly(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho) {
  return weight_display(inv, m, sums(inv, rho), Poly::x(), PolyBinomial{});
}

Poly weight_pairwise_poly(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho,
                          const WeightVector& rho2) {
  const WeightSums a = sums(inv, rho);
  const WeightSums b = sums(inv, rho2);
  const WeightSums ab = product_sums(inv, rho, rho2);
  const SymPowerChernPoly& sp = cached_sym_power_chern_poly(inv.r_V);
  const Poly t1 = sp.ch3_c1cube * (-6 * a.on_rank * b.on_rank * inv.d_V) -
                  sp.ch3_c1ch2 * (a.on_degree * b.on_rank + b.on_degree * a.on_rank + ab.on_rank * inv.d_V) -
                  sp.ch3_ch3 * ab.on_degree;
  const Poly t2 = (sp.ch2_ch2 * ab.on_rank + sp.ch2_c1sq * (2 * a.on_rank * b.on_rank)) *
                  (Poly::x() * m + Poly(BigRational(1 - inv.genus)));
  return t1 + t2;
}

BigRational pairwise_leading_closed(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho,
                                    const WeightVector& rho2) {
  const WeightSums a = sums(inv, rho);
  const WeightSums b = sums(inv, rho2);
  const WeightSums ab = product_sums(inv, rho, rho2);
  const int n = inv.r_V;
  const BigRational t1 = -a.on_rank * b.on_rank * inv.d_V - a.on_degree * b.on_rank - b.on_degree * a.on_rank -
                         ab.on_rank * inv.d_V - 2 * ab.on_degree +
                         m * BigRational(n + 2) * (ab.on_rank + a.on_rank * b.on_rank);
  return t1 / BigRational(num::factorial(n + 2));
}

BigRational weight_pairwise(const DerivedInvariants& inv, const BigRational& m, std::size_t i, std::size_t j) {
  const std::size_t size = inv.ranks.size();
  const WeightVector rho = WeightVector::unit(size, i);
  const WeightVector rho2 = WeightVector::unit(size, j);
  const WeightSums a = sums(inv, rho);
  const WeightSums b = sums(inv, rho2);
  const WeightSums ab = product_sums(inv, rho, rho2);
  const SymPowerChernPoly& sp = cached_sym_power_chern_poly(inv.r_V);
  const int top = inv.r_V + 2;
  // Only the k^{n+2} coefficient of weight_pairwise_poly; every factor has degree <= n+2.
  if (sp.ch3_c1cube.degree() > top || sp.ch3_c1ch2.degree() > top || sp.ch3_ch3.degree() > top ||
      sp.ch2_ch2.degree() > top - 1 || sp.ch2_c1sq.degree() > top - 1)
    throw InternalMismatch("polynomial in k exceeds the expected degree");
  const BigRational t1 = sp.ch3_c1cube.coeff(top) * (-6 * a.on_rank * b.on_rank * inv.d_V) -
                         sp.ch3_c1ch2.coeff(top) * (a.on_degree * b.on_rank + b.on_degree * a.on_rank +
                                                    ab.on_rank * inv.d_V) -
                         sp.ch3_ch3.coeff(top) * ab.on_degree;
  const BigRational t2 = (sp.ch2_ch2.coeff(top - 1) * ab.on_rank + sp.ch2_c1sq.coeff(top - 1) * (2 * a.on_rank * b.on_rank)) * m;
  return t1 + t2;
}

TildeCoefficients tilde_coefficients(const DerivedInvariants& inv, const BigRational& m) {
  const int n = inv.r_V;
  const std::size_t size = inv.ranks.size();
  TildeCoefficients t;
  const Poly d = hilbert_poly(inv, m);
  t.t_alpha0 = leading_at(d, n);
  t.t_beta0 = d.coeff(n - 1);
  for (std::size_t i = 0; i < size; ++i) {
    const Poly w = weight_poly(inv, m, WeightVector::unit(size, i));
    t.t_alpha.push_back(leading_at(w, n + 1));
    t.t_beta.push_back(w.coeff(n));
    std::vector<BigRational> row;
    for (std::size_t j = 0; j < size; ++j) row.push_back(weight_pairwise(inv, m, i, j));
    t.t_alpha2.push_back(std::move(row));
  }
  return t;
}

Identification identify_with_moments(const DerivedInvariants& inv, const BigRational& m) {
  return identify(inv, m, tilde_coefficients(inv, m), moments::moment_table_closed(inv, m));
}

AlgebraicFutaki algebraic_relative_futaki(const DerivedInvariants& inv, const BigRational& m) {
  const int ell = inv.ell();
  if (ell < 1) throw WrongArity("the relative invariant needs at least two summands");
  require_admissible(inv, m);
  return algebraic_from_tilde(tilde_coefficients(inv, m), ell);
}

RrCrossCheck rr_crosscheck(const DerivedInvariants& inv, const BigRational& m) {
  require_admissible(inv, m);
  const moments::NumericTable table = moments::moment_table_closed(inv, m);
  const BigRational f = invariant::relative_futaki_value(table);
  if (inv.ell() < 1) throw WrongArity("the relative invariant needs at least two summands");
  const TildeCoefficients t = tilde_coefficients(inv, m);
  const AlgebraicFutaki alg = algebraic_from_tilde(t, inv.ell());
  RrCrossCheck out;
  out.expected_ratio = 2 * BigRational(inv.pi_R) * table.volume;
  if (!alg.value.is_zero()) out.ratio = f / alg.value;
  out.same_sign = f.sign() == alg.value.sign();
  out.a_tilde_quarter = true;
  if (inv.ell() >= 2) {
    const auto ex = invariant::solve_extremal(table);
    for (std::size_t j = 0; j < alg.a_tilde.size(); ++j)
      out.a_tilde_quarter = out.a_tilde_quarter && 4 * alg.a_tilde[j] == ex.coeffs[j];
  }
  out.identification = identify(inv, m, t, table);
  out.match = out.identification.all() && out.a_tilde_quarter && out.same_sign &&
              f == out.expected_ratio * alg.value;
  return out;
}

}  // namespace futaki::equirr
