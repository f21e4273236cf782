#pragma once

// Algebraic side: the Hilbert polynomial d_k = chi(L^k), the weights w_k(rho)
// and the pairwise traces w_k(rho, rho') of torus actions scaling the summands,
// their leading coefficients in k, and the algebraic relative invariant built
// from them. Every binomial C(a + k, k - b) is handled either as an integer at
// a given k or as an exact polynomial in k.

#include <vector>

#include "futaki/bundle.hpp"
#include "futaki/exactnum/poly.hpp"

namespace futaki::equirr {

using bundle::DerivedInvariants;
using num::BigRational;
using num::Poly;

/// Per-summand weights (lambda_0, ..., lambda_ell).
struct WeightVector {
  std::vector<long> lambdas;

  /// lambda_j = delta_ij.
  static WeightVector unit(std::size_t size, std::size_t i);
  /// Every lambda_j = 1.
  static WeightVector diagonal(std::size_t size);
};

/// C(a + k, k - b) as a polynomial in k, i.e. C(a + k, a + b); a + b >= 0.
Poly binomial_in_k(int a, int b);

/// Coefficients expressing the Chern character of S^k E through that of E,
/// for E of rank r:
///   rank S^k E = C(r-1+k, k)
///   c_1  = C(r-1+k, k-1) c_1(E)
///   ch_2 = C(r+k, k-1) ch_2(E) + 1/2 C(r-1+k, k-2) c_1(E)^2
///   ch_3 = 1/6 C(r-1+k, k-3) c_1^3 + C(r+k, k-2) c_1 ch_2
///          + (C(r+1+k, k-1) + C(r+k, k-2)) ch_3
template <class T>
struct SymPowerCoeffs {
  T rank;
  T c1;
  T ch2_ch2;
  T ch2_c1sq;
  T ch3_c1cube;
  T ch3_c1ch2;
  T ch3_ch3;
  friend bool operator==(const SymPowerCoeffs&, const SymPowerCoeffs&) = default;
};

using SymPowerChern = SymPowerCoeffs<BigRational>;
using SymPowerChernPoly = SymPowerCoeffs<Poly>;

/// Integer binomials at a given k >= 0. Requires r >= 1.
SymPowerChern sym_power_chern(int r, long k);
/// The same coefficients as polynomials in k.
SymPowerChernPoly sym_power_chern_poly(int r);
SymPowerChern evaluate(const SymPowerChernPoly& p, long k);

/// d_k = C(n-1+k, k)(k(m - mu(V)) + 1 - g), n = r_V.
BigRational hilbert_dk(const DerivedInvariants& inv, const BigRational& m, long k);
/// d_k = rank(S^k V*)(mk + 1 - g) + c_1(S^k V*), from the Chern coefficients.
BigRational hilbert_dk_chern(const DerivedInvariants& inv, const BigRational& m, long k);
/// d_k as a polynomial in k.
Poly hilbert_poly(const DerivedInvariants& inv, const BigRational& m);

/// w_k(rho) = -C(n+k, k-1) sum lambda_i d_i - C(n-1+k, k-2) (sum lambda_i r_i) d_V
///            + C(n-1+k, k-1) (sum lambda_i r_i)((1-g) + km).
BigRational weight_wk(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho, long k);
/// The same weight assembled from the symmetric-power Chern coefficients.
BigRational weight_wk_chern(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho, long k);
Poly weight_poly(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho);

/// tr(A_k A'_k) as the integrated T_1 + T_2, a polynomial in k.
Poly weight_pairwise_poly(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho,
                          const WeightVector& rho2);
/// Leading k^{n+2} coefficient from the integrated leading form t_1 / (n+2)!.
BigRational pairwise_leading_closed(const DerivedInvariants& inv, const BigRational& m, const WeightVector& rho,
                                    const WeightVector& rho2);
/// Leading coefficient of w_k(rho_i, rho_j), extracted from the polynomial.
BigRational weight_pairwise(const DerivedInvariants& inv, const BigRational& m, std::size_t i, std::size_t j);

/// Leading coefficients in k, indices 0..ell:
///   d_k = t_alpha0 k^n + t_beta0 k^{n-1} + ...
///   w_k(rho_i) = t_alpha[i] k^{n+1} + t_beta[i] k^n + ...
///   w_k(rho_i, rho_j) = t_alpha2[i][j] k^{n+2} + ...
struct TildeCoefficients {
  BigRational t_alpha0;
  BigRational t_beta0;
  std::vector<BigRational> t_alpha;
  std::vector<BigRational> t_beta;
  std::vector<std::vector<BigRational>> t_alpha2;
};

TildeCoefficients tilde_coefficients(const DerivedInvariants& inv, const BigRational& m);

/// Which of t_alpha0 pi_R = alpha_0, 2 t_beta0 pi_R = beta_0, t_alpha[i] pi_R = alpha_i,
/// 2 t_beta[i] pi_R = beta_i, t_alpha2[i][j] pi_R = alpha_ij hold against the
/// moment tables at c = m.
struct Identification {
  bool alpha0 = false;
  bool beta0 = false;
  bool alpha = false;
  bool beta = false;
  bool alpha2 = false;
  bool pairwise_closed = false;  // polynomial leading term equals the t_1 display

  bool all() const { return alpha0 && beta0 && alpha && beta && alpha2 && pairwise_closed; }
};

Identification identify_with_moments(const DerivedInvariants& inv, const BigRational& m);

struct AlgebraicFutaki {
  BigRational value;
  /// tilde a_j for j = 2..ell.
  std::vector<BigRational> a_tilde;
};

/// F^alg(rho_1) - sum_j a~_j (t_alpha2[j][1] - t_alpha[j] t_alpha[1] / t_alpha0), where a~ solves
/// sum_k a~_k (t_alpha2[i][k] - t_alpha[i] t_alpha[k] / t_alpha0) = F^alg(rho_i), i = 2..ell,
/// and F^alg(rho_i) = t_beta[i] - t_alpha[i] t_beta0 / t_alpha0. Throws SingularSystem,
/// WrongArity for ell < 1.
AlgebraicFutaki algebraic_relative_futaki(const DerivedInvariants& inv, const BigRational& m);

struct RrCrossCheck {
  /// F / F^alg (zero when both vanish).
  BigRational ratio;
  /// The expected positive factor 2 pi_R alpha_0(m).
  BigRational expected_ratio;
  bool same_sign = false;
  bool a_tilde_quarter = false;  // a~_j = a_j / 4
  Identification identification;
  bool match = false;
};

/// Compares the algebraic route with the moment route at an admissible m.
/// Throws InadmissiblePolarization.
RrCrossCheck rr_crosscheck(const DerivedInvariants& inv, const BigRational& m);

}  // namespace futaki::equirr
