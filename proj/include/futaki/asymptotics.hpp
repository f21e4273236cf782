#pragma once

// Large-c behaviour of the relative invariant for slope-zero data (d_V = 0):
// the sums Sigma_1 = sum_{j>=2} a_j r_j and Sigma_2 = sum_{j>=2} a_j d_j of the
// extremal coefficients, their expansions in 1/c, the expansion coefficients
// of F / (mu_0 - mu_1), and the positivity witnesses at a given c.

#include <vector>

#include "futaki/bundle.hpp"
#include "futaki/exactnum/laurent.hpp"

namespace futaki::asymptotics {

using bundle::DerivedInvariants;
using num::BigRational;
using num::LaurentTail;
using num::RationalFn;

struct SigmaPair {
  RationalFn sigma1;
  RationalFn sigma2;
  LaurentTail u;  // Sigma_1 = sum u_i c^-i
  LaurentTail v;  // Sigma_2 = sum v_i c^-i
};

/// Sigma_1, Sigma_2 from the two linear relations between them, solved over
/// Q(c). Throws WrongArity for ell < 2 and NotNormalized unless d_V = 0.
SigmaPair sigma_exact(const DerivedInvariants& inv, int order = 8);

/// u_i, v_i for i = 1..order by alternating the three-term recursion for u
/// with the expansion of the second Sigma relation for v. For ell = 1 every
/// coefficient vanishes. Throws NotNormalized.
std::pair<LaurentTail, LaurentTail> uv_recursion(const DerivedInvariants& inv, int order);

/// v_1 = -4 r_V ((d_0+d_1)^2/(r_0+r_1) + sum_{j>=2} d_j^2/r_j).
BigRational v1_closed(const DerivedInvariants& inv);
/// u_2 = -(8 r_V/(r_V+2)) Q + 4 r_V mu_01 (g - 1 + 2 r_V mu_01/(r_V+2)), Q as in v_1.
BigRational u2_closed(const DerivedInvariants& inv);

struct FutExpansion {
  BigRational fut1;
  BigRational fut2;
  std::vector<BigRational> higher;  // Fut_3, Fut_4, ...

  /// The series as a Laurent tail: Fut_1 at c^1, Fut_2 at c^0, Fut_{i+2} at c^-i.
  LaurentTail as_laurent() const;
};

/// F / (mu_0 - mu_1) = Fut_1 c + Fut_2 + Fut_3/c + ... through c^{-order}.
/// Throws NotNormalized.
FutExpansion fut_expansion(const DerivedInvariants& inv, int order);

/// Closed forms of the first two coefficients.
BigRational fut1_closed(const DerivedInvariants& inv);
BigRational fut2_closed(const DerivedInvariants& inv);

enum class PositivityCase { PairDegreeNonNegative, PairDegreeNegative };
const char* to_string(PositivityCase c);

struct PositivityCertificate {
  BigRational c;
  PositivityCase which = PositivityCase::PairDegreeNonNegative;
  BigRational sigma1;
  BigRational sigma2;
  BigRational delta_sigma2;
  bool delta_sigma2_positive = false;
  BigRational bracket;
  bool bracket_positive = false;
  bool minus_sigma2_nonnegative = false;
  /// Gathered numerator of each B_k (k = 2..ell), and B_k itself.
  std::vector<BigRational> witness;
  std::vector<BigRational> witness_terms;
  bool witness_positive = false;
  /// Internal consistency of the rewritings used by the argument.
  bool bracket_rewrite_holds = false;
  bool decomposition_holds = false;
  bool witness_numerator_holds = false;
  bool closed_sigma2_holds = false;
  bool factor_identity_holds = false;

  bool positive() const { return delta_sigma2_positive && bracket_positive; }
  bool consistent() const {
    return bracket_rewrite_holds && decomposition_holds && witness_numerator_holds && closed_sigma2_holds &&
           factor_identity_holds;
  }
};

/// Requires d_V = 0 (NotNormalized), ell >= 2 (WrongArity) and c above every
/// slope (InadmissiblePolarization).
PositivityCertificate positivity_certificate(const DerivedInvariants& inv, const BigRational& c);

}  // namespace futaki::asymptotics
