#include "futaki/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "futaki/asymptotics.hpp"
#include "futaki/equirr.hpp"
#include "futaki/errors.hpp"
#include "futaki/exactnum/combinatorics.hpp"
#include "futaki/exactnum/laurent.hpp"
#include "futaki/invariant.hpp"
#include "futaki/moments.hpp"

namespace futaki::verify {

using num::Poly;
using num::RationalFn;

namespace {

void compositions(int total, int parts, std::vector<int>& prefix,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    prefix.push_back(total);
    emit(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= total - parts + 1; ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, emit);
    prefix.pop_back();
  }
}

template <class V>
std::string list(const V& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

/// Runs `check` on every instance; `check` returns an empty string on success
/// or a description of the failure.
SuiteResult sweep(const std::string& name, const CorpusSpec& corpus,
                  const std::function<std::string(const DerivedInvariants&, std::size_t&)>& check) {
  SuiteResult r{name, true, 0, {}};
  for_each_instance(corpus, [&](const DerivedInvariants& inv) {
    std::string failure;
    try {
      failure = check(inv, r.checked);
    } catch (const Error& e) {
      failure = std::string("raised: ") + e.what();
    }
    if (failure.empty()) return true;
    r.passed = false;
    r.counterexample = describe(inv) + ": " + failure;
    return false;
  });
  return r;
}

BigRational fault_amount(const Options& o, const char* suite) {
  return o.inject_fault && *o.inject_fault == suite ? BigRational(1, 1000) : BigRational(0);
}

std::string suite_moments(const DerivedInvariants& inv, std::size_t& n, const BigRational& fault) {
  for (const auto& c : sample_points(inv)) {
    ++n;
    auto closed = moments::moment_table_closed(inv, c);
    closed.volume += fault;
    if (moments::moment_table_direct(inv, c) != closed) return "direct and closed tables differ at c=" + c.str();
  }
  return {};
}

std::string suite_boundary(const DerivedInvariants& inv, std::size_t& n) {
  for (const auto& c : sample_points(inv)) {
    ++n;
    if (moments::boundary_integrals_direct(inv, c) != moments::boundary_integrals(inv, c))
      return "facet integrals differ from the rank-one count formula at c=" + c.str();
  }
  return {};
}

std::string suite_gamma(const DerivedInvariants& inv, std::size_t& n, const BigRational& fault) {
  ++n;
  const auto table = moments::moment_table_closed(inv, Poly::x());
  auto g = moments::compute_gamma_terms(table, inv);
  if (!fault.is_zero()) g.closed[0][0] += Poly::x() * fault;
  for (std::size_t j = 0; j < g.product.size(); ++j)
    for (std::size_t k = 0; k < g.product.size(); ++k)
      if (g.product[j][k] != g.closed[j][k])
        return "alpha_0 alpha_jk - alpha_j alpha_k at (j,k)=(" + std::to_string(j) + "," + std::to_string(k) +
               "): " + g.product[j][k].str() + " vs " + g.closed[j][k].str();
  return {};
}

std::string suite_cross(const DerivedInvariants& inv, std::size_t& n, const BigRational& fault) {
  ++n;
  const auto table = moments::moment_table_closed(inv, Poly::x());
  auto x = moments::compute_beta_alpha_cross(table, inv);
  if (!fault.is_zero()) x.closed[0] += Poly(fault);
  for (std::size_t k = 0; k < x.product.size(); ++k)
    if (x.product[k] != x.closed[k])
      return "beta_k alpha_0 - beta_0 alpha_k at k=" + std::to_string(k) + ": " + x.product[k].str() + " vs " +
             x.closed[k].str();
  if (x.tail_product != x.tail_closed) return "summed cross terms over k >= 2 differ";
  return {};
}

std::string suite_one_step(const DerivedInvariants& inv, std::size_t& n) {
  if (inv.ell() != 1) return {};
  ++n;
  const auto table = moments::moment_table_closed(inv, Poly::x());
  const RationalFn general = invariant::relative_futaki_value(table);
  const Poly closed = invariant::futaki_ell1_closed(inv, Poly::x());
  if (general != RationalFn(closed)) return "general " + general.str() + " vs closed " + closed.str();
  for (const auto& c : sample_points(inv)) {
    const auto rep = invariant::relative_futaki(inv, c);
    if (rep.value != invariant::futaki_ell1_closed(inv, c)) return "numeric mismatch at c=" + c.str();
  }
  return {};
}

std::string sign_check(const DerivedInvariants& inv) {
  const int gap = (inv.mu[0] - inv.mu[1]).sign();
  for (const auto& c : sample_points(inv, 5)) {
    const auto value = invariant::relative_futaki_value(moments::moment_table_closed(inv, c));
    if (value.sign() != gap) return "sign of F at c=" + c.str() + " is " + std::to_string(value.sign());
  }
  return {};
}

std::string suite_two_step(const DerivedInvariants& inv, std::size_t& n) {
  if (inv.ell() != 2) return {};
  ++n;
  invariant::futaki_ell2_factorized(inv);
  return sign_check(inv);
}

std::string suite_recursion(const DerivedInvariants& raw, std::size_t& n) {
  if (raw.ell() < 2) return {};
  ++n;
  const Normalized nf = normalized(raw, raw.max_slope() + 1);
  const auto& inv = nf.inv;
  const auto sig = asymptotics::sigma_exact(inv, 8);
  const auto [u, v] = asymptotics::uv_recursion(inv, 8);
  for (int i = 0; i <= 8; ++i)
    if (sig.u.coeff(i) != u.coeff(i) || sig.v.coeff(i) != v.coeff(i))
      return "recursion differs from the exact expansion at order " + std::to_string(i);
  if (u.coeff(1) != 4 * BigRational(inv.r_V) * BigRational(inv.r_V) * inv.mu01) return "u_1 differs from 4 r_V^2 mu_01";
  if (v.coeff(1) != asymptotics::v1_closed(inv)) return "v_1 differs from its closed form";
  if (u.coeff(2) != asymptotics::u2_closed(inv)) return "u_2 differs from its closed form";
  for (const auto& c : sample_points(inv)) {
    const auto ex = invariant::solve_extremal(moments::moment_table_closed(inv, c));
    BigRational s1, s2;
    for (int j = 2; j <= inv.ell(); ++j) {
      s1 += ex.coeffs[static_cast<std::size_t>(j - 2)] * BigRational(inv.ranks[static_cast<std::size_t>(j)]);
      s2 += ex.coeffs[static_cast<std::size_t>(j - 2)] * inv.degrees[static_cast<std::size_t>(j)];
    }
    if (sig.sigma1.eval(c) != s1 || sig.sigma2.eval(c) != s2)
      return "Sigma sums differ from the extremal solve at c=" + c.str();
  }
  return {};
}

std::string suite_expansion(const DerivedInvariants& raw, std::size_t& n) {
  if (raw.ell() < 1) return {};
  const BigRational gap = raw.mu[0] - raw.mu[1];
  const Normalized nf = normalized(raw, raw.max_slope() + 1);
  const auto& inv = nf.inv;
  if (asymptotics::fut1_closed(inv).sign() <= 0) return "Fut_1 is not positive";
  if (gap.is_zero()) return {};
  ++n;
  const auto fe = asymptotics::fut_expansion(inv, 5).as_laurent();
  const auto exact = num::laurent_expand(invariant::relative_futaki_symbolic(inv) / RationalFn(gap), 5);
  for (int i = -1; i <= 5; ++i)
    if (fe.coeff(i) != exact.coeff(i)) return "expansion coefficient of c^" + std::to_string(-i) + " differs";
  return {};
}

std::string suite_positivity(const DerivedInvariants& raw, std::size_t& n) {
  if (raw.ell() < 2) return {};
  const int gap = (raw.mu[0] - raw.mu[1]).sign();
  for (const auto& c0 : sample_points(raw, 5)) {
    ++n;
    const Normalized nf = normalized(raw, c0);
    const auto cert = asymptotics::positivity_certificate(nf.inv, nf.c);
    if (!cert.positive()) return "certificate not positive at c=" + c0.str();
    if (!cert.consistent()) return "certificate rewritings inconsistent at c=" + c0.str();
    if (!cert.minus_sigma2_nonnegative) return "-Sigma_2 negative at c=" + c0.str();
    const auto value = invariant::relative_futaki_value(moments::moment_table_closed(raw, c0));
    if (value.sign() != gap) return "sign of F differs from mu_0 - mu_1 at c=" + c0.str();
  }
  return {};
}

std::string suite_rr(const DerivedInvariants& inv, std::size_t& n) {
  for (const auto& m : sample_points(inv, 1)) {
    if (inv.ell() >= 1) {
      ++n;
      const auto x = equirr::rr_crosscheck(inv, m);
      if (!x.match) return "algebraic and moment routes disagree at m=" + m.str();
    }
    for (long k = 1; k <= 5; ++k) {
      if (equirr::hilbert_dk(inv, m, k) != equirr::hilbert_dk_chern(inv, m, k))
        return "d_k routes differ at k=" + std::to_string(k);
      for (std::size_t i = 0; i < inv.ranks.size(); ++i) {
        const auto rho = equirr::WeightVector::unit(inv.ranks.size(), i);
        if (equirr::weight_wk(inv, m, rho, k) != equirr::weight_wk_chern(inv, m, rho, k))
          return "w_k routes differ at k=" + std::to_string(k);
      }
    }
  }
  return {};
}

/// Number of degree-k monomials in r variables, by direct recursion.
BigRational monomial_count(int r, int k) {
  std::vector<BigRational> row(static_cast<std::size_t>(k) + 1, BigRational(1));
  for (int vars = 2; vars <= r; ++vars)
    for (int j = 1; j <= k; ++j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

SuiteResult suite_symchern(const Options&) {
  SuiteResult r{"symchern", true, 0, {}};
  auto fail = [&](std::string why) {
    if (r.passed) r.counterexample = std::move(why);
    r.passed = false;
  };
  for (int rank = 1; rank <= 8; ++rank) {
    ++r.checked;
    const auto s = equirr::sym_power_chern(rank, 1);
    const equirr::SymPowerChern identity{rank, 1, 1, 0, 0, 0, 1};
    if (s != identity) fail("k=1 is not the identity case for r=" + std::to_string(rank));
  }
  for (int rank = 1; rank <= 10; ++rank) {
    const auto poly = equirr::sym_power_chern_poly(rank);
    for (int k = 0; k <= 10; ++k) {
      ++r.checked;
      const auto s = equirr::sym_power_chern(rank, k);
      if (s.rank != monomial_count(rank, k))
        fail("rank of S^k differs from the monomial count at r=" + std::to_string(rank) + ", k=" + std::to_string(k));
      if (equirr::evaluate(poly, k) != s)
        fail("polynomial and integer binomials differ at r=" + std::to_string(rank) + ", k=" + std::to_string(k));
    }
  }
  return r;
}

}  // namespace

void for_each_instance(const CorpusSpec& spec, const std::function<bool(const DerivedInvariants&)>& visit) {
  bool go = true;
  for (int total = 1; total <= spec.max_rank && go; ++total) {
    for (int parts = spec.min_parts; parts <= spec.max_parts && parts <= total && go; ++parts) {
      std::vector<int> prefix;
      std::vector<std::vector<int>> rank_vectors;
      compositions(total, parts, prefix, [&](const std::vector<int>& r) { rank_vectors.push_back(r); });
      for (const auto& ranks : rank_vectors) {
        for (int g : spec.genera) {
          std::vector<long> d(ranks.size(), -spec.max_abs_degree);
          while (go) {
            go = visit(bundle::derive_invariants(bundle::make_fiber(g, ranks, d)));
            std::size_t i = 0;
            while (i < d.size() && d[i] == spec.max_abs_degree) d[i++] = -spec.max_abs_degree;
            if (i == d.size()) break;
            ++d[i];
          }
          if (!go) return;
        }
      }
    }
  }
}

std::size_t corpus_size(const CorpusSpec& spec) {
  std::size_t n = 0;
  for_each_instance(spec, [&](const DerivedInvariants&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<BigRational> sample_points(const DerivedInvariants& inv, int count) {
  static const std::vector<BigRational> offsets{BigRational(1, 3), BigRational(1), BigRational(5, 2),
                                                BigRational(1, 100), BigRational(7)};
  std::vector<BigRational> out;
  const BigRational top = inv.max_slope();
  for (int i = 0; i < count && i < static_cast<int>(offsets.size()); ++i)
    out.push_back(top + offsets[static_cast<std::size_t>(i)]);
  return out;
}

std::string describe(const DerivedInvariants& inv) {
  std::vector<std::string> degrees;
  for (const auto& d : inv.degrees) degrees.push_back(d.str());
  return "g=" + std::to_string(inv.genus) + " ranks=" + list(inv.ranks) + " degrees=" + list(degrees);
}

Normalized normalized(const DerivedInvariants& inv, const BigRational& c) {
  bundle::CentralFiber cf{inv.genus, {}};
  for (std::size_t i = 0; i < inv.ranks.size(); ++i) cf.summands.push_back({inv.ranks[i], inv.degrees[i]});
  const auto nf = bundle::normalize_slope_zero(cf, c);
  return {bundle::derive_invariants(nf.fiber), nf.c};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"moments",   "boundary",  "gamma",      "cross", "one-step", "two-step",
                                              "recursion", "expansion", "positivity", "rr",    "symchern"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
  const CorpusSpec& c = opts.corpus;
  if (name == "moments") {
    const BigRational f = fault_amount(opts, "moments");
    return sweep(name, c, [&](const DerivedInvariants& inv, std::size_t& n) { return suite_moments(inv, n, f); });
  }
  if (name == "boundary") return sweep(name, c, suite_boundary);
  if (name == "gamma") {
    const BigRational f = fault_amount(opts, "gamma");
    return sweep(name, c, [&](const DerivedInvariants& inv, std::size_t& n) { return suite_gamma(inv, n, f); });
  }
  if (name == "cross") {
    const BigRational f = fault_amount(opts, "cross");
    return sweep(name, c, [&](const DerivedInvariants& inv, std::size_t& n) { return suite_cross(inv, n, f); });
  }
  if (name == "one-step") return sweep(name, c, suite_one_step);
  if (name == "two-step") return sweep(name, c, suite_two_step);
  if (name == "recursion") return sweep(name, c, suite_recursion);
  if (name == "expansion") return sweep(name, c, suite_expansion);
  if (name == "positivity") return sweep(name, c, suite_positivity);
  if (name == "rr") return sweep(name, c, suite_rr);
  if (name == "symchern") return suite_symchern(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const Options& opts) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
  return out;
}

}  // namespace futaki::verify
