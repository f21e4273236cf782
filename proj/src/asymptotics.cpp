#include "futaki/asymptotics.hpp"

#include "futaki/errors.hpp"
#include "futaki/invariant.hpp"
#include "futaki/moments.hpp"

namespace futaki::asymptotics {

using moments::detail::fact;
using num::Poly;

namespace {

void require_normalized(const DerivedInvariants& inv) {
  if (!inv.d_V.is_zero()) throw NotNormalized("total degree must be zero; apply normalize_slope_zero first");
}

RationalFn K(const BigRational& v) { return RationalFn(v); }
RationalFn cvar() { return RationalFn(Poly::x()); }

/// Pieces of the second Sigma relation:
///   Sigma_2 = source - (d_0 + d_1)/r_V Sigma_1 - damping Sigma_2.
struct SecondRelation {
  RationalFn source;
  RationalFn damping;
};

SecondRelation second_relation(const DerivedInvariants& inv) {
  const BigRational rV(inv.r_V);
  const RationalFn c = cvar();
  const RationalFn shifted = c * K(rV) + K(BigRational(inv.genus - 1));
  SecondRelation rel;
  for (int k = 2; k <= inv.ell(); ++k) {
    const BigRational rk(inv.ranks[static_cast<std::size_t>(k)]);
    const BigRational& dk = inv.degrees[static_cast<std::size_t>(k)];
    const RationalFn dk_poly = c * K(rk * (rV + 2)) - K(2 * dk);
    const RationalFn ek = c * K(2 * rk * (1 + rV)) - K((rV + 2) * dk);
    rel.source -= K(4 * (rV + 2) * dk * dk) * shifted / (c * dk_poly);
    rel.damping += K(dk) * ek / (K((rV + 1) * rV) * c * dk_poly);
  }
  return rel;
}

/// Right side of the first relation: the summed cross terms, rescaled.
RationalFn first_relation_rhs(const DerivedInvariants& inv) {
  const moments::SymbolicTable t = moments::moment_table_closed(inv, Poly::x());
  const auto cross = moments::compute_beta_alpha_cross(t, inv);
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  const BigRational scale = 2 * fact(n) * fact(n + 1) * BigRational(n + 2) /
                            (pR * pR * BigRational(inv.ranks[0] + inv.ranks[1]));
  return RationalFn(*cross.tail_closed) * K(scale);
}

BigRational slope_square_sum(const DerivedInvariants& inv) {
  const BigRational d01 = inv.degrees[0] + inv.degrees[1];
  BigRational q = d01 * d01 / BigRational(inv.ranks[0] + inv.ranks[1]);
  for (int j = 2; j <= inv.ell(); ++j) {
    const auto& dj = inv.degrees[static_cast<std::size_t>(j)];
    q += dj * dj / BigRational(inv.ranks[static_cast<std::size_t>(j)]);
  }
  return q;
}

BigRational expansion_prefactor(const DerivedInvariants& inv) {
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  return pR * pR * BigRational(inv.ranks[0] * inv.ranks[1]) /
         (2 * fact(n + 1) * fact(n + 1) * BigRational(n + 2) * BigRational(inv.ranks[0] + inv.ranks[1]));
}

}  // namespace

SigmaPair sigma_exact(const DerivedInvariants& inv, int order) {
  if (inv.ell() < 2) throw WrongArity("Sigma sums need at least three summands");
  require_normalized(inv);
  const BigRational rV(inv.r_V);
  const BigRational& m01 = inv.mu01;
  const RationalFn c = cvar();
  // p11 Sigma_1 + p12 Sigma_2 = rhs1
  const RationalFn p11 = c * c * K(rV + 2) - c * K(2 * m01);
  const RationalFn p12 = K((rV + 2) / (rV + 1) * m01) - c * K(2);
  const RationalFn rhs1 = first_relation_rhs(inv);
  // p21 Sigma_1 + p22 Sigma_2 = rhs2
  const SecondRelation rel = second_relation(inv);
  const RationalFn p21 = K((inv.degrees[0] + inv.degrees[1]) / rV);
  const RationalFn p22 = K(1) + rel.damping;
  const RationalFn& rhs2 = rel.source;
  const RationalFn det = p11 * p22 - p12 * p21;
  if (det.is_zero()) throw SingularSystem("Sigma relations are dependent");
  SigmaPair out;
  out.sigma1 = (rhs1 * p22 - p12 * rhs2) / det;
  out.sigma2 = (p11 * rhs2 - p21 * rhs1) / det;
  out.u = num::laurent_expand(out.sigma1, order);
  out.v = num::laurent_expand(out.sigma2, order);
  return out;
}

std::pair<LaurentTail, LaurentTail> uv_recursion(const DerivedInvariants& inv, int order) {
  require_normalized(inv);
  if (order < 1) throw TruncationError("recursion order must be at least 1");
  const auto n = static_cast<std::size_t>(order);
  std::vector<BigRational> u(n + 1), v(n + 1);
  if (inv.ell() >= 2) {
    const BigRational rV(inv.r_V);
    const BigRational& m01 = inv.mu01;
    const BigRational g(inv.genus);
    const BigRational d01_over_rV = (inv.degrees[0] + inv.degrees[1]) / rV;
    const SecondRelation rel = second_relation(inv);
    const LaurentTail src = num::laurent_expand(rel.source, order);
    const LaurentTail damp = num::laurent_expand(rel.damping, order);
    auto next_v = [&](std::size_t i) {
      BigRational vi = src.coeff(static_cast<int>(i)) - d01_over_rV * u[i];
      for (std::size_t j = 1; j < i; ++j) vi -= damp.coeff(static_cast<int>(j)) * v[i - j];
      return vi;
    };
    u[1] = 4 * rV * rV * m01;
    v[1] = next_v(1);
    for (std::size_t i = 2; i <= n; ++i) {
      if (i == 2)
        u[2] = (2 * m01 * u[1] + 2 * v[1] + 4 * (rV + 2) * (g - 1) * rV * m01) / (rV + 2);
      else
        u[i] = (2 * m01 * u[i - 1] + 2 * v[i - 1] - (rV + 2) / (rV + 1) * m01 * v[i - 2]) / (rV + 2);
      v[i] = next_v(i);
    }
  }
  // Both series start at c^-1; index 0 is the (vanishing) constant term.
  return {LaurentTail(0, u, order), LaurentTail(0, v, order)};
}

BigRational v1_closed(const DerivedInvariants& inv) {
  require_normalized(inv);
  return -4 * BigRational(inv.r_V) * slope_square_sum(inv);
}

BigRational u2_closed(const DerivedInvariants& inv) {
  require_normalized(inv);
  const BigRational rV(inv.r_V);
  const BigRational& m01 = inv.mu01;
  return -(8 * rV / (rV + 2)) * slope_square_sum(inv) +
         4 * rV * m01 * (BigRational(inv.genus - 1) + 2 * rV / (rV + 2) * m01);
}

BigRational fut1_closed(const DerivedInvariants& inv) {
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  return 2 * pR * pR * BigRational(n) * BigRational(inv.ranks[0] * inv.ranks[1]) /
         (fact(n - 1) * fact(n + 1) * BigRational(inv.ranks[0] + inv.ranks[1]));
}

BigRational fut2_closed(const DerivedInvariants& inv) {
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  return 2 * BigRational(inv.ranks[0] * inv.ranks[1]) * pR * pR /
         (fact(n - 1) * fact(n + 2) * BigRational(inv.ranks[0] + inv.ranks[1])) *
         (BigRational(n + 2) * BigRational(inv.genus - 1) + 2 * BigRational(n) * inv.mu01);
}

LaurentTail FutExpansion::as_laurent() const {
  std::vector<BigRational> cs{fut1, fut2};
  cs.insert(cs.end(), higher.begin(), higher.end());
  const int order = static_cast<int>(cs.size()) - 2;
  return {-1, std::move(cs), order};
}

FutExpansion fut_expansion(const DerivedInvariants& inv, int order) {
  require_normalized(inv);
  if (inv.ell() < 1) throw WrongArity("the expansion needs at least two summands");
  FutExpansion out{fut1_closed(inv), fut2_closed(inv), {}};
  if (order < 1) return out;
  const auto [u, v] = uv_recursion(inv, order + 1);
  const BigRational pref = expansion_prefactor(inv);
  const BigRational rV(inv.r_V);
  for (int i = 1; i <= order; ++i)
    out.higher.push_back(pref * (2 * (rV + 1) * u.coeff(i + 1) - v.coeff(i) * (rV + 2)));
  return out;
}

const char* to_string(PositivityCase c) { return c == PositivityCase::PairDegreeNonNegative ? "pair degree non-negative" : "pair degree negative"; }

PositivityCertificate positivity_certificate(const DerivedInvariants& inv, const BigRational& c) {
  require_normalized(inv);
  if (inv.ell() < 2) throw WrongArity("positivity certificate needs at least three summands");
  if (!bundle::is_admissible(inv, c))
    throw InadmissiblePolarization("c = " + c.str() + " is not above every slope", inv.max_slope().str());
  const SigmaPair sig = sigma_exact(inv, 1);
  const BigRational rV(inv.r_V);
  const BigRational& m01 = inv.mu01;
  const BigRational g(inv.genus);
  const BigRational r01(inv.ranks[0] + inv.ranks[1]);
  const BigRational d01 = inv.degrees[0] + inv.degrees[1];
  const BigRational shifted = c * rV + g - 1;

  PositivityCertificate cert;
  cert.c = c;
  cert.which = d01.sign() >= 0 ? PositivityCase::PairDegreeNonNegative : PositivityCase::PairDegreeNegative;
  cert.sigma1 = sig.sigma1.eval(c);
  cert.sigma2 = sig.sigma2.eval(c);

  const BigRational d3 = (rV + 2) * c - 2 * m01;
  const BigRational d2 = 2 * (rV - r01) * (rV + 1) * c + (rV + 2) * d01;
  const BigRational pair_numer =
      rV * (rV + 2) * (rV + 1) * c * c - 2 * (rV + 1) * (rV - r01) * m01 * c - (rV + 2) * d01 * m01;
  BigRational delta = pair_numer / (rV * (rV + 1) * c * d3);
  BigRational decomposed;
  BigRational closed_num = 4 * (rV + 2) * d01 * m01 * shifted / ((rV + 2) * c * c - 2 * m01 * c);
  cert.witness_numerator_holds = true;
  cert.witness_positive = true;
  for (int k = 2; k <= inv.ell(); ++k) {
    const BigRational rk(inv.ranks[static_cast<std::size_t>(k)]);
    const BigRational& dk = inv.degrees[static_cast<std::size_t>(k)];
    const BigRational dkc = rk * (rV + 2) * c - 2 * dk;
    const BigRational ek = 2 * rk * (1 + rV) * c - (rV + 2) * dk;
    delta += dk * ek / ((rV + 1) * rV * c * dkc);
    closed_num += 4 * (rV + 2) * dk * dk * shifted / (c * dkc);
    const BigRational term = dk / dkc + pair_numer / (d2 * d3);
    decomposed += ek / ((rV + 1) * rV * c) * term;
    const BigRational numer = 2 * (rV + 1) * (rV * rk * (c - m01) + (rk * c - dk) * r01) * c +
                              (c - m01) * d01 * (rV + 2) * rk + (rV + 1) * rk * (rV * rV - 2 * r01) * c * c +
                              d01 * (rV * rk * c + (rV + 2) * dk);
    cert.witness.push_back(numer);
    cert.witness_terms.push_back(term);
    cert.witness_numerator_holds =
        cert.witness_numerator_holds && term * dkc * d2 * d3 == (rV + 2) * c * numer;
    cert.witness_positive = cert.witness_positive && numer.sign() > 0 && term.sign() > 0;
  }
  cert.delta_sigma2 = delta;
  cert.delta_sigma2_positive = delta.sign() > 0;
  cert.decomposition_holds = decomposed == delta;
  cert.closed_sigma2_holds = cert.sigma2 == -closed_num / delta;
  cert.minus_sigma2_nonnegative = cert.sigma2.sign() <= 0;

  cert.bracket = 4 * rV * (rV + 1) * (rV + 2) * shifted + 2 * (rV + 1) * c * cert.sigma1 - (rV + 2) * cert.sigma2;
  const BigRational form1 =
      4 * rV * (rV + 1) * (rV + 2) * (rV + 2) * shifted * c / d3 + (-cert.sigma2) * (c * rV * rV / d3);
  cert.bracket_rewrite_holds = form1 == cert.bracket;
  cert.bracket_positive = cert.bracket.sign() > 0;

  const moments::NumericTable table = moments::moment_table_closed(inv, c);
  const BigRational value = invariant::relative_futaki_value(table);
  cert.factor_identity_holds = value == (inv.mu[0] - inv.mu[1]) * expansion_prefactor(inv) * cert.bracket;
  return cert;
}

}  // namespace futaki::asymptotics
