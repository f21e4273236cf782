#pragma once

// Moment coefficients of the fiber volume density over the simplex.
//
// For the central fiber with summands (r_k, d_k) the density on the standard
// simplex is p_c = (c - sum_k mu_k L_k) prod_k L_k^{r_k - 1}, where
// L_0 = 1 - sum_j x_j and L_j = x_j. Two routes produce the same table:
//   * direct: expand p_c into L-monomials and integrate each with the
//     factorial formula; rank-one summands contribute facet integrals;
//   * closed: the affine-in-c closed forms.
// Tables are generic in the scalar type: BigRational (numeric c) or Poly
// (symbolic c).

#include <optional>
#include <vector>

#include "futaki/bundle.hpp"
#include "futaki/errors.hpp"
#include "futaki/exactnum/combinatorics.hpp"

namespace futaki::moments {

using bundle::DerivedInvariants;
using num::BigRational;
using num::Poly;

/// Indices j, k run over 0..ell; index 0 weights by L_0 and is not used by the
/// invariant itself, which only needs 1..ell.
template <class T>
struct MomentTable {
  T c;                                    // evaluation point or the indeterminate
  T volume;                               // alpha_0 = int p_c
  std::vector<T> moment;                  // alpha_j = int x_j p_c
  std::vector<std::vector<T>> second;     // alpha_jk = int x_j x_k p_c
  T scalar_total;                         // beta_0
  std::vector<T> scalar_moment;           // beta_j

  int ell() const { return static_cast<int>(moment.size()) - 1; }
  friend bool operator==(const MomentTable&, const MomentTable&) = default;
};

using NumericTable = MomentTable<BigRational>;
using SymbolicTable = MomentTable<Poly>;

/// prod m_k! / (sum m_k + ell)!, the integral of prod L_k^{m_k} over the
/// standard ell-simplex (ell = exponents.size() - 1).
BigRational simplex_monomial_integral(const std::vector<int>& exponents);

template <class T>
struct BoundaryIntegrals {
  T total;                 // int over the boundary of p_c
  std::vector<T> weighted; // int over the boundary of x_j p_c, j = 0..ell
  friend bool operator==(const BoundaryIntegrals&, const BoundaryIntegrals&) = default;
};

/// An affine expression a*c + sum_k b_k mu_k + e*(1 - g) produced by the
/// direct expansion, before the data (c, mu, g) is substituted.
struct LinearForm {
  BigRational on_c;
  std::vector<BigRational> on_mu;
  BigRational on_one_minus_genus;

  /// Constant part for the given slopes and genus.
  BigRational constant(const DerivedInvariants& inv) const;
};

/// The direct expansion for one rank vector, independent of degrees and genus.
struct DirectForms {
  LinearForm volume;
  std::vector<LinearForm> moment;
  std::vector<std::vector<LinearForm>> second;
  LinearForm scalar_total;
  std::vector<LinearForm> scalar_moment;
  LinearForm facet_total;
  std::vector<LinearForm> facet_moment;
};

/// Built on first use and cached per rank vector (thread-safe).
const DirectForms& direct_forms(const std::vector<int>& ranks);

namespace detail {
template <class T>
T at(const T& c, const LinearForm& f, const DerivedInvariants& inv) {
  return c * f.on_c + T(f.constant(inv));
}
inline BigRational fact(long n) { return num::factorial_rational(n); }
}  // namespace detail

/// Facet integrals from the direct expansion (sum over facets L_i = 0, r_i = 1).
template <class T>
BoundaryIntegrals<T> boundary_integrals_direct(const DerivedInvariants& inv, const T& c) {
  const DirectForms& f = direct_forms(inv.ranks);
  BoundaryIntegrals<T> out{detail::at(c, f.facet_total, inv), {}};
  for (const auto& form : f.facet_moment) out.weighted.push_back(detail::at(c, form, inv));
  return out;
}

/// Closed forms for the facet integrals in terms of the rank-one counts.
template <class T>
BoundaryIntegrals<T> boundary_integrals(const DerivedInvariants& inv, const T& c) {
  using detail::fact;
  const BigRational pR(inv.pi_R);
  const int rV = inv.r_V;
  const std::size_t n = inv.ranks.size();
  BigRational dk_kappa;
  for (std::size_t k = 0; k < n; ++k) dk_kappa += inv.degrees[k] * BigRational(inv.kappa_k[k]);
  BoundaryIntegrals<T> out;
  out.total = (c * BigRational((rV - 1) * inv.kappa) - T(dk_kappa)) * (pR / fact(rV - 1));
  for (std::size_t j = 0; j < n; ++j) {
    const BigRational rj(inv.ranks[j]);
    BigRational pair_sum;
    for (std::size_t k = 0; k < n; ++k) pair_sum += inv.degrees[k] * BigRational(inv.kappa_pair[k][j]);
    const BigRational kj(inv.kappa_k[j]);
    out.weighted.push_back((c * (rj * BigRational(rV) * kj) - T(rj * pair_sum + kj * inv.degrees[j])) *
                           (pR / fact(rV)));
  }
  return out;
}

template <class T>
MomentTable<T> moment_table_direct(const DerivedInvariants& inv, const T& c) {
  const DirectForms& f = direct_forms(inv.ranks);
  MomentTable<T> t;
  t.moment.reserve(f.moment.size());
  t.scalar_moment.reserve(f.moment.size());
  t.second.reserve(f.moment.size());
  t.c = c;
  t.volume = detail::at(c, f.volume, inv);
  t.scalar_total = detail::at(c, f.scalar_total, inv);
  for (std::size_t j = 0; j < f.moment.size(); ++j) {
    t.moment.push_back(detail::at(c, f.moment[j], inv));
    t.scalar_moment.push_back(detail::at(c, f.scalar_moment[j], inv));
    std::vector<T> row;
    row.reserve(f.second[j].size());
    for (const auto& form : f.second[j]) row.push_back(detail::at(c, form, inv));
    t.second.push_back(std::move(row));
  }
  return t;
}

template <class T>
MomentTable<T> moment_table_closed(const DerivedInvariants& inv, const T& c) {
  using detail::fact;
  const BigRational pR(inv.pi_R);
  const BigRational rV(inv.r_V);
  const BigRational& dV = inv.d_V;
  const BigRational one_minus_g(1 - inv.genus);
  const int n = inv.r_V;
  const std::size_t size = inv.ranks.size();
  const BigRational over_n = pR / fact(n);
  const BigRational over_n1 = pR / fact(n + 1);
  const BigRational over_n2 = pR / fact(n + 2);
  const T c_first = c * (rV + 1);
  const T c_second = c * (rV + 2);
  const T c_scalar = c * (rV * (rV - 1));
  MomentTable<T> t;
  t.c = c;
  t.volume = (c * rV - T(dV)) * over_n;
  t.scalar_total = (c_scalar + T(2 * one_minus_g - (rV - 1) * dV)) * (pR / fact(n - 1));
  t.moment.reserve(size);
  t.scalar_moment.reserve(size);
  t.second.reserve(size);
  for (std::size_t j = 0; j < size; ++j) {
    const BigRational rj(inv.ranks[j]);
    const BigRational& mj = inv.mu[j];
    t.moment.push_back((c_first - T(dV + mj)) * (over_n1 * rj));
    t.scalar_moment.push_back((c_scalar + T(2 * one_minus_g - dV * (rV - 2) - rV * mj)) * (over_n * rj));
    std::vector<T> row;
    row.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
      const BigRational rk(inv.ranks[k]);
      if (j == k)
        row.push_back((c_second - T(dV + 2 * mj)) * (over_n2 * rj * (rj + 1)));
      else
        row.push_back((c_second - T(dV + mj + inv.mu[k])) * (over_n2 * rj * rk));
    }
    t.second.push_back(std::move(row));
  }
  return t;
}

NumericTable evaluate(const SymbolicTable& table, const BigRational& c);

/// Both sides of the Gram-determinant identities, for j, k in 0..ell:
/// product[j][k] = alpha_0 alpha_jk - alpha_j alpha_k, and
/// closed[j][k] = gamma_jk (+ gamma'_j on the diagonal).
template <class T>
struct GammaTerms {
  std::vector<std::vector<T>> product;
  std::vector<std::vector<T>> gamma;
  std::vector<T> gamma_prime;
  std::vector<std::vector<T>> closed;
};

template <class T>
GammaTerms<T> compute_gamma_terms(const MomentTable<T>& table, const DerivedInvariants& inv) {
  using detail::fact;
  const T& c = table.c;
  const BigRational pR(inv.pi_R);
  const BigRational rV(inv.r_V);
  const BigRational& dV = inv.d_V;
  const int n = inv.r_V;
  const std::size_t size = inv.ranks.size();
  const BigRational g_scale = pR * pR / (fact(n + 1) * fact(n + 1) * (rV + 2));
  const BigRational gp_scale = pR * pR / (fact(n) * fact(n + 2));
  GammaTerms<T> out;
  out.product.assign(size, std::vector<T>(size));
  out.gamma.assign(size, std::vector<T>(size));
  out.closed.assign(size, std::vector<T>(size));
  for (std::size_t j = 0; j < size; ++j) {
    const BigRational& mj = inv.mu[j];
    const BigRational rj(inv.ranks[j]);
    out.gamma_prime.push_back((c * c * (rV * (rV + 2)) - c * (2 * (dV * (rV + 1) + rV * mj)) + T(dV * (2 * mj + dV))) *
                              (gp_scale * rj));
  }
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      const BigRational& mj = inv.mu[j];
      const BigRational& mk = inv.mu[k];
      const BigRational s = mj + mk + dV;
      out.product[j][k] = table.volume * table.second[j][k] - table.moment[j] * table.moment[k];
      out.gamma[j][k] = (c * c * (-(rV + 1) * (rV + 2)) + c * (2 * s * (1 + rV)) - T(s * dV + (rV + 2) * mj * mk)) *
                        (g_scale * BigRational(inv.ranks[j]) * BigRational(inv.ranks[k]));
      out.closed[j][k] = j == k ? out.gamma[j][k] + out.gamma_prime[j] : out.gamma[j][k];
    }
  }
  return out;
}

/// As compute_gamma_terms, throwing InternalMismatch when the sides differ.
template <class T>
GammaTerms<T> gamma_terms(const MomentTable<T>& table, const DerivedInvariants& inv) {
  GammaTerms<T> out = compute_gamma_terms(table, inv);
  if (out.product != out.closed) throw InternalMismatch("Gram identity mismatch between product and closed forms");
  return out;
}

/// beta_k alpha_0 - beta_0 alpha_k for k in 0..ell, both ways, and the sum
/// over k >= 2 both ways (absent when ell < 1).
template <class T>
struct CrossTerms {
  std::vector<T> product;
  std::vector<T> closed;
  std::optional<T> tail_product;
  std::optional<T> tail_closed;
};

template <class T>
CrossTerms<T> compute_beta_alpha_cross(const MomentTable<T>& table, const DerivedInvariants& inv) {
  using detail::fact;
  const T& c = table.c;
  const BigRational pR(inv.pi_R);
  const BigRational rV(inv.r_V);
  const BigRational& dV = inv.d_V;
  const BigRational g(inv.genus);
  const int n = inv.r_V;
  const BigRational scale = pR * pR / (fact(n) * fact(n + 1));
  CrossTerms<T> out;
  for (std::size_t k = 0; k < inv.ranks.size(); ++k) {
    const BigRational x = BigRational(inv.ranks[k]) * dV - rV * inv.degrees[k];
    out.product.push_back(table.scalar_moment[k] * table.volume - table.scalar_total * table.moment[k]);
    out.closed.push_back((c * (2 * rV * x) + T(2 * (g - 1 - dV) * x)) * scale);
  }
  if (inv.ranks.size() >= 2) {
    T sum = T();
    for (std::size_t k = 2; k < inv.ranks.size(); ++k) sum = sum + out.product[k];
    out.tail_product = sum;
    const BigRational x =
        rV * (inv.degrees[0] + inv.degrees[1]) - dV * BigRational(inv.ranks[0] + inv.ranks[1]);
    out.tail_closed = c * (2 * pR * pR / (fact(n - 1) * fact(n + 1)) * x) + T(2 * scale * (g - 1 - dV) * x);
  }
  return out;
}

template <class T>
CrossTerms<T> beta_alpha_cross(const MomentTable<T>& table, const DerivedInvariants& inv) {
  CrossTerms<T> out = compute_beta_alpha_cross(table, inv);
  if (out.product != out.closed || out.tail_product != out.tail_closed)
    throw InternalMismatch("scalar-moment cross term mismatch between product and closed forms");
  return out;
}

}  // namespace futaki::moments
