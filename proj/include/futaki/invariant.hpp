#pragma once

// The normalized relative Donaldson-Futaki invariant of the graded central
// fiber, the extremal system behind it, and its closed forms for one and two
// extra summands.

#include <string>
#include <type_traits>
#include <vector>

#include "futaki/bundle.hpp"
#include "futaki/exactnum/ratfn.hpp"
#include "futaki/linalg/bareiss.hpp"
#include "futaki/moments.hpp"

namespace futaki::invariant {

using bundle::DerivedInvariants;
using moments::MomentTable;
using num::BigRational;
using num::Poly;
using num::RationalFn;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
enum class Verdict { NotDestabilized, Destabilized, Borderline };

Sign sign_of(int s);
Sign sign_of(const BigRational& v);
Verdict verdict_for(Sign s);
std::string to_string(Sign s);
std::string to_string(Verdict v);
Sign parse_sign(const std::string& s);
Verdict parse_verdict(const std::string& s);

/// Fractions of the scalar ring: Q for numeric c, Q(c) for symbolic c.
template <class T>
using FieldOf = std::conditional_t<std::is_same_v<T, Poly>, RationalFn, BigRational>;

inline BigRational ratio(const BigRational& n, const BigRational& d) { return n / d; }
inline RationalFn ratio(const Poly& n, const Poly& d) { return RationalFn(n, d); }

/// f_ex = a_0 + sum_{j >= 2} a_j x_j; `coeffs[i]` holds a_{i+2}.
template <class F>
struct ExtremalSolution {
  F constant;
  std::vector<F> coeffs;
  friend bool operator==(const ExtremalSolution&, const ExtremalSolution&) = default;
};

/// Solves a_0 alpha_0 + sum a_j alpha_j = 2 beta_0 and
/// a_0 alpha_k + sum_j a_j alpha_jk = 2 beta_k (k = 2..ell) by Bareiss
/// elimination. Throws SingularSystem.
template <class T>
ExtremalSolution<FieldOf<T>> solve_extremal(const MomentTable<T>& t) {
  const int ell = t.ell();
  if (ell < 1) throw WrongArity("the extremal system needs at least two summands");
  linalg::Matrix<T> m;
  std::vector<T> rhs;
  std::vector<T> row{t.volume};
  for (int j = 2; j <= ell; ++j) row.push_back(t.moment[j]);
  m.push_back(row);
  rhs.push_back(t.scalar_total * BigRational(2));
  for (int k = 2; k <= ell; ++k) {
    std::vector<T> rk{t.moment[k]};
    for (int j = 2; j <= ell; ++j) rk.push_back(t.second[j][k]);
    m.push_back(rk);
    rhs.push_back(t.scalar_moment[k] * BigRational(2));
  }
  const auto sol = linalg::bareiss_solve(std::move(m), std::move(rhs));
  ExtremalSolution<FieldOf<T>> out{ratio(sol.numerators[0], sol.det), {}};
  for (std::size_t i = 1; i < sol.numerators.size(); ++i) out.coeffs.push_back(ratio(sol.numerators[i], sol.det));
  return out;
}

/// alpha_0 beta_1 - alpha_1 beta_0.
template <class T>
T classical_term(const MomentTable<T>& t) {
  return t.volume * t.scalar_moment[1] - t.moment[1] * t.scalar_total;
}

/// alpha_0 alpha_j1 - alpha_1 alpha_j.
template <class T>
T coupling(const MomentTable<T>& t, int j) {
  return t.volume * t.second[j][1] - t.moment[1] * t.moment[j];
}

/// F = (alpha_0 beta_1 - alpha_1 beta_0) - 1/2 sum_j a_j (alpha_0 alpha_j1 - alpha_1 alpha_j).
template <class T>
FieldOf<T> futaki_from_extremal(const MomentTable<T>& t, const ExtremalSolution<FieldOf<T>>& ex) {
  FieldOf<T> acc = FieldOf<T>(classical_term(t));
  for (int j = 2; j <= t.ell(); ++j)
    acc = acc - ex.coeffs[static_cast<std::size_t>(j - 2)] * FieldOf<T>(coupling(t, j)) * FieldOf<T>(BigRational(1, 2));
  return acc;
}

/// The scaled Gram matrix alpha_0 A with A_ij = alpha_ij - alpha_i alpha_j / alpha_0, 2 <= i,j <= ell.
template <class T>
linalg::Matrix<T> scaled_gram(const MomentTable<T>& t) {
  linalg::Matrix<T> m;
  for (int i = 2; i <= t.ell(); ++i) {
    std::vector<T> row;
    for (int j = 2; j <= t.ell(); ++j) row.push_back(t.volume * t.second[i][j] - t.moment[i] * t.moment[j]);
    m.push_back(row);
  }
  return m;
}

/// F = (alpha_0 beta_1 - alpha_1 beta_0)
///     - sum_{j,r} (A^-1)_{rj} (alpha_0 beta_r - alpha_r beta_0)(alpha_j1 - alpha_1 alpha_j / alpha_0),
/// evaluated through alpha_0 A so that every entry stays in the scalar ring.
template <class T>
FieldOf<T> relative_futaki_value(const MomentTable<T>& t) {
  const int ell = t.ell();
  if (ell < 1) throw WrongArity("the relative invariant needs at least two summands");
  const T head = classical_term(t);
  if (ell == 1) return FieldOf<T>(head);
  std::vector<T> rhs;
  for (int r = 2; r <= ell; ++r) rhs.push_back(t.volume * t.scalar_moment[r] - t.moment[r] * t.scalar_total);
  const auto sol = linalg::bareiss_solve(scaled_gram(t), std::move(rhs));
  T numer = head * sol.det;
  for (int j = 2; j <= ell; ++j) numer = numer - sol.numerators[static_cast<std::size_t>(j - 2)] * coupling(t, j);
  return ratio(numer, sol.det);
}

/// Leading principal minors of A = alpha_ij - alpha_i alpha_j / alpha_0 at a rational point.
std::vector<BigRational> gram_leading_minors(const moments::NumericTable& t);

/// ell = 1 closed form (2 pi_R^2 r_V r_L/(r_V!(r_V+1)!)) (mu(E) - mu(L)) (r_V c - d_V + g - 1).
/// Throws WrongArity unless ell = 1.
template <class T>
T futaki_ell1_closed(const DerivedInvariants& inv, const T& c) {
  if (inv.ell() != 1) throw WrongArity("the one-step closed form needs exactly two summands");
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  const BigRational scale = 2 * pR * pR * BigRational(n) * BigRational(inv.ranks[1]) /
                            (moments::detail::fact(n) * moments::detail::fact(n + 1)) * (inv.mu_V - inv.mu[1]);
  return (c * BigRational(n) + T(BigRational(inv.genus - 1) - inv.d_V)) * scale;
}

struct Ell2Factorization {
  Poly gamma0;                // Delta_c (Delta_c + g - 1)(Delta_c + 2(c - mu_2)) Gamma_1
  BigRational slope_gap;      // mu_0 - mu_1
  BigRational gamma1;         // constant obtained by exact division
  BigRational gamma1_formula; // 2 pi_R^4 r_0 r_1 r_2 / ((r_V+2)! (r_V+1)! r_V!^2)
  BigRational gamma1_alternate; // the same with an extra prod (r_i - 1)!^4
  bool alternate_form_matches = false;
};

/// (alpha_0 alpha_22 - alpha_2^2) F = Gamma_0 (mu_0 - mu_1) for ell = 2, verified
/// as a polynomial identity in c. Throws WrongArity or IdentityMismatch.
Ell2Factorization futaki_ell2_factorized(const DerivedInvariants& inv);

struct ClassicalFutaki {
  Poly value;                       // alpha_0 beta_1 - alpha_1 beta_0
  Poly factored;                    // (2 pi_R^2 r_1 r_V/(r_V!(r_V+1)!)) (Delta_c + g - 1)(mu(V) - mu_1)
  bool third_slope_form_matches = false; // the variant with (mu_2 - mu_1) in place of (mu(V) - mu_1)
};

/// Classical term as a polynomial in c; asserts the factorization (InternalMismatch).
ClassicalFutaki classical_futaki(const DerivedInvariants& inv);

struct Certificate {
  std::string name;
  bool passed = false;
  std::string detail;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct FutakiReport {
  BigRational c;
  BigRational value;
  RationalFn symbolic_value;
  ExtremalSolution<BigRational> extremal;
  Sign sign = Sign::Zero;
  Verdict verdict = Verdict::Borderline;
  std::vector<Certificate> certificates;
  bool outside_theorem_hypotheses = false;

  bool all_certificates_pass() const;
  friend bool operator==(const FutakiReport&, const FutakiReport&) = default;
};

/// Full evaluation at an admissible c: numeric value, symbolic value, extremal
/// coefficients, sign, verdict and the identity certificates.
FutakiReport relative_futaki(const DerivedInvariants& inv, const BigRational& c);

/// F as a rational function of c.
RationalFn relative_futaki_symbolic(const DerivedInvariants& inv);

}  // namespace futaki::invariant
