#include "futaki/invariant.hpp"

#include "futaki/errors.hpp"

namespace futaki::invariant {

using moments::NumericTable;
using moments::SymbolicTable;
using moments::detail::fact;

Sign sign_of(int s) { return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero); }
Sign sign_of(const BigRational& v) { return sign_of(v.sign()); }

Verdict verdict_for(Sign s) {
  switch (s) {
    case Sign::Positive: return Verdict::NotDestabilized;
    case Sign::Negative: return Verdict::Destabilized;
    case Sign::Zero: break;
  }
  return Verdict::Borderline;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "Positive";
    case Sign::Negative: return "Negative";
    case Sign::Zero: break;
  }
  return "Zero";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotDestabilized: return "NotDestabilized";
    case Verdict::Destabilized: return "Destabilized";
    case Verdict::Borderline: break;
  }
  return "Borderline";
}

Sign parse_sign(const std::string& s) {
  if (s == "Positive") return Sign::Positive;
  if (s == "Negative") return Sign::Negative;
  if (s == "Zero") return Sign::Zero;
  throw ParseError("unknown sign '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  if (s == "NotDestabilized") return Verdict::NotDestabilized;
  if (s == "Destabilized") return Verdict::Destabilized;
  if (s == "Borderline") return Verdict::Borderline;
  throw ParseError("unknown verdict '" + s + "'");
}

std::vector<BigRational> gram_leading_minors(const NumericTable& t) {
  linalg::Matrix<BigRational> a;
  for (int i = 2; i <= t.ell(); ++i) {
    std::vector<BigRational> row;
    for (int j = 2; j <= t.ell(); ++j) row.push_back(t.second[i][j] - t.moment[i] * t.moment[j] / t.volume);
    a.push_back(row);
  }
  std::vector<BigRational> minors;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    linalg::Matrix<BigRational> sub;
    for (std::size_t i = 0; i < k; ++i) sub.emplace_back(a[i].begin(), a[i].begin() + static_cast<long>(k));
    minors.push_back(linalg::bareiss_det(std::move(sub)));
  }
  return minors;
}

namespace {

BigRational gamma1_constant(const DerivedInvariants& inv) {
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  return 2 * pow(pR, 4) * BigRational(inv.ranks[0] * inv.ranks[1] * inv.ranks[2]) /
         (fact(n + 2) * fact(n + 1) * fact(n) * fact(n));
}

Poly slope_gap_cubic(const DerivedInvariants& inv) {
  const Poly c = Poly::x();
  const Poly& delta = inv.delta_c;
  return delta * (delta + Poly(BigRational(inv.genus - 1))) * (delta + c * BigRational(2) - Poly(2 * inv.mu[2]));
}

}  // namespace

Ell2Factorization futaki_ell2_factorized(const DerivedInvariants& inv) {
  if (inv.ell() != 2) throw WrongArity("the two-step factorization needs exactly three summands");
  const SymbolicTable t = moments::moment_table_closed(inv, Poly::x());
  const Poly gram22 = t.volume * t.second[2][2] - t.moment[2] * t.moment[2];
  const RationalFn lhs = relative_futaki_value(t) * RationalFn(gram22);
  if (!lhs.is_polynomial()) throw IdentityMismatch("cleared relative invariant is not a polynomial in c");
  Ell2Factorization out;
  out.slope_gap = inv.mu[0] - inv.mu[1];
  out.gamma1_formula = gamma1_constant(inv);
  const BigRational pR(inv.pi_R);
  out.gamma1_alternate = out.gamma1_formula * pow(pR, 4);
  const Poly cubic = slope_gap_cubic(inv);
  if (out.slope_gap.is_zero()) {
    if (!lhs.is_zero()) throw IdentityMismatch("equal slopes but nonzero cleared invariant");
    out.gamma1 = out.gamma1_formula;
  } else {
    const auto [q, r] = num::divmod(lhs.num(), cubic * out.slope_gap);
    if (!r.is_zero() || q.degree() != 0)
      throw IdentityMismatch("cleared invariant is not a constant multiple of the cubic factor");
    out.gamma1 = q.leading();
  }
  if (out.gamma1 != out.gamma1_formula)
    throw IdentityMismatch("derived constant " + out.gamma1.str() + " differs from " + out.gamma1_formula.str());
  out.gamma0 = cubic * out.gamma1;
  if (lhs.num() != out.gamma0 * out.slope_gap) throw IdentityMismatch("two-step factorization fails");
  out.alternate_form_matches = out.gamma1_alternate == out.gamma1;
  return out;
}

ClassicalFutaki classical_futaki(const DerivedInvariants& inv) {
  if (inv.ell() < 1) throw WrongArity("the classical term needs at least two summands");
  const SymbolicTable t = moments::moment_table_closed(inv, Poly::x());
  ClassicalFutaki out;
  out.value = classical_term(t);
  const BigRational pR(inv.pi_R);
  const int n = inv.r_V;
  const BigRational scale =
      2 * pR * pR * BigRational(inv.ranks[1]) * BigRational(n) / (fact(n) * fact(n + 1));
  const Poly shifted = inv.delta_c + Poly(BigRational(inv.genus - 1));
  out.factored = shifted * (scale * (inv.mu_V - inv.mu[1]));
  if (out.value != out.factored) throw InternalMismatch("classical term does not factor as expected");
  if (inv.ell() >= 2) out.third_slope_form_matches = out.value == shifted * (scale * (inv.mu[2] - inv.mu[1]));
  return out;
}

RationalFn relative_futaki_symbolic(const DerivedInvariants& inv) {
  return relative_futaki_value(moments::moment_table_closed(inv, Poly::x()));
}

bool FutakiReport::all_certificates_pass() const {
  for (const auto& cert : certificates)
    if (!cert.passed) return false;
  return true;
}

namespace {

Certificate cert(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

FutakiReport relative_futaki(const DerivedInvariants& inv, const BigRational& c) {
  if (inv.ell() < 1) throw WrongArity("the relative invariant needs at least two summands");
  if (!bundle::is_admissible(inv, c))
    throw InadmissiblePolarization("c = " + c.str() + " is not above every slope", inv.max_slope().str());
  const NumericTable table = moments::moment_table_closed(inv, c);
  FutakiReport rep;
  rep.c = c;
  rep.outside_theorem_hypotheses = inv.genus < 1;
  rep.value = relative_futaki_value(table);
  rep.sign = sign_of(rep.value);
  rep.verdict = verdict_for(rep.sign);
  rep.extremal = solve_extremal(table);
  rep.symbolic_value = relative_futaki_symbolic(inv);

  auto& certs = rep.certificates;
  certs.push_back(cert("moments direct = closed", moments::moment_table_direct(inv, c) == table));
  certs.push_back(cert("volume positive", table.volume.sign() > 0, table.volume.str()));
  bool cs = true;
  for (int j = 1; j <= inv.ell(); ++j)
    cs = cs && (table.volume * table.second[j][j] - table.moment[j] * table.moment[j]).sign() > 0;
  certs.push_back(cert("Cauchy-Schwarz positivity", cs));
  bool posdef = true;
  std::string minors_text;
  for (const auto& m : gram_leading_minors(table)) {
    posdef = posdef && m.sign() > 0;
    minors_text += (minors_text.empty() ? "" : ", ") + m.str();
  }
  certs.push_back(cert("Gram matrix positive definite", posdef, minors_text));
  const BigRational den_at_c = rep.symbolic_value.den().eval(c);
  certs.push_back(cert("denominator positive at c", den_at_c.sign() > 0, den_at_c.str()));
  certs.push_back(cert("symbolic value matches at c", rep.symbolic_value.eval(c) == rep.value));
  certs.push_back(cert("extremal route agrees", futaki_from_extremal(table, rep.extremal) == rep.value));
  const auto gam = moments::compute_gamma_terms(table, inv);
  certs.push_back(cert("Gram identities", gam.product == gam.closed));
  const auto cross = moments::compute_beta_alpha_cross(table, inv);
  certs.push_back(cert("scalar cross identities", cross.product == cross.closed && cross.tail_product == cross.tail_closed));
  if (inv.ell() == 1) {
    certs.push_back(cert("one-step closed form", futaki_ell1_closed(inv, c) == rep.value));
  } else if (inv.ell() == 2) {
    bool ok = true;
    std::string detail;
    try {
      const auto f = futaki_ell2_factorized(inv);
      detail = "Gamma_1 = " + f.gamma1.str() + (f.alternate_form_matches ? "" : " (alternate constant with prod (r_i - 1)!^4 differs)");
    } catch (const IdentityMismatch& e) {
      ok = false;
      detail = e.what();
    }
    certs.push_back(cert("two-step factorization", ok, detail));
  }
  if (inv.genus >= 1) {
    const Sign gap = sign_of(inv.mu[0] - inv.mu[1]);
    certs.push_back(cert("sign matches slope gap", gap == rep.sign, "mu_0 - mu_1 = " + (inv.mu[0] - inv.mu[1]).str()));
  }
  return rep;
}

}  // namespace futaki::invariant
