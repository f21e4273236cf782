#include "futaki/report.hpp"

#include <json.hpp>
#include <sstream>

#include "futaki/asymptotics.hpp"
#include "futaki/equirr.hpp"
#include "futaki/errors.hpp"
#include "futaki/exactnum/laurent.hpp"

namespace futaki::report {

using invariant::Sign;
using invariant::Verdict;
using nlohmann::json;
using num::Poly;
using num::RationalFn;

namespace {

AsymptoticsBlock asymptotics_block(const bundle::CentralFiber& fiber, const BigRational& c, int order) {
  const auto nf = bundle::normalize_slope_zero(fiber, c);
  const auto inv = bundle::derive_invariants(nf.fiber);
  AsymptoticsBlock b;
  b.shift = nf.shift;
  b.c_normalized = nf.c;
  b.order = order;
  const auto fe = asymptotics::fut_expansion(inv, order);
  b.fut.push_back(fe.fut1);
  b.fut.push_back(fe.fut2);
  b.fut.insert(b.fut.end(), fe.higher.begin(), fe.higher.end());
  const BigRational gap = inv.mu[0] - inv.mu[1];
  if (!gap.is_zero()) {
    const auto exact = num::laurent_expand(invariant::relative_futaki_symbolic(inv) / RationalFn(gap), order);
    const auto series = fe.as_laurent();
    bool same = true;
    for (int i = -1; i <= order; ++i) same = same && series.coeff(i) == exact.coeff(i);
    b.expansion_matches = same;
  }
  if (inv.ell() >= 2) {
    const auto sig = asymptotics::sigma_exact(inv, order);
    const auto [u, v] = asymptotics::uv_recursion(inv, order);
    bool same = true;
    for (int i = 0; i <= order; ++i) same = same && sig.u.coeff(i) == u.coeff(i) && sig.v.coeff(i) == v.coeff(i);
    b.recursion_matches = same;
    const auto cert = asymptotics::positivity_certificate(inv, nf.c);
    b.positivity = PositivitySummary{asymptotics::to_string(cert.which),
                                     cert.sigma1,
                                     cert.sigma2,
                                     cert.delta_sigma2,
                                     cert.bracket,
                                     cert.positive(),
                                     cert.consistent(),
                                     cert.minus_sigma2_nonnegative};
  }
  return b;
}

RrBlock rr_block(const bundle::DerivedInvariants& inv, const BigRational& c) {
  const auto x = equirr::rr_crosscheck(inv, c);
  return {x.match, x.ratio, x.expected_ratio, x.same_sign, x.a_tilde_quarter, x.identification.all()};
}

json rational_list(const std::vector<BigRational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json poly_json(const Poly& p) { return rational_list(p.coeffs()); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("report is missing '") + key + "'");
  return obj.at(key);
}

BigRational rational_at(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) throw ParseError(std::string("'") + key + "' must be a \"p/q\" string");
  return BigRational::parse(v.get<std::string>());
}

bool bool_at(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_boolean()) throw ParseError(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string string_at(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) throw ParseError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<BigRational> parse_rational_list(const json& v) {
  if (!v.is_array()) throw ParseError("expected an array of \"p/q\" strings");
  std::vector<BigRational> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw ParseError("expected a \"p/q\" string");
    out.push_back(BigRational::parse(x.get<std::string>()));
  }
  return out;
}

std::optional<bool> optional_bool(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (v.is_null()) return std::nullopt;
  return bool_at(obj, key);
}

json optional_bool_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json fiber_json(const bundle::CentralFiber& f) {
  json out = json::array();
  for (const auto& s : f.summands) out.push_back({{"rank", s.rank}, {"degree", s.degree.str()}});
  return out;
}

bundle::CentralFiber parse_fiber(const json& v, int genus) {
  if (!v.is_array()) throw ParseError("'central_fiber' must be an array");
  bundle::CentralFiber f{genus, {}};
  for (const auto& s : v) {
    const json& r = field(s, "rank");
    if (!r.is_number_integer()) throw ParseError("summand rank must be an integer");
    f.summands.push_back({r.get<int>(), rational_at(s, "degree")});
  }
  return f;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string maybe(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

std::string sign_word(Sign s) {
  switch (s) {
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Zero: break;
  }
  return "zero";
}

BigRational target_slope(const bundle::Problem& p) {
  const auto& u0 = p.bundle.summands.at(p.destabilizer.target_index);
  return BigRational(u0.degree) / BigRational(u0.rank);
}

}  // namespace

bool AsymptoticsBlock::ok() const {
  if (expansion_matches && !*expansion_matches) return false;
  if (recursion_matches && !*recursion_matches) return false;
  return !positivity || positivity->consistent;
}

bool Report::ok() const {
  return futaki.all_certificates_pass() && (!asymptotics || asymptotics->ok()) && (!rr || rr->match);
}

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::NotDestabilized: return "L does not destabilize U0";
    case Verdict::Destabilized:
      return "L destabilizes U0: bundle not relatively K-polystable for this test configuration";
    case Verdict::Borderline: break;
  }
  return "borderline";
}

std::string verdict_label(Verdict v) {
  switch (v) {
    case Verdict::NotDestabilized: return "NOT destabilized";
    case Verdict::Destabilized: return "destabilized";
    case Verdict::Borderline: break;
  }
  return "borderline";
}

Report build_report(const bundle::Problem& input, std::optional<BigRational> c, int expansion_order) {
  if (!c) c = input.polarization;
  if (!c) throw ParseError("no polarization given");
  if (expansion_order < 0) throw ParseError("expansion order must be non-negative");
  Report r;
  r.input = input;
  r.input.polarization = *c;
  r.fiber = bundle::build_central_fiber(input.bundle, input.destabilizer);
  bundle::validate_polarization(r.fiber, *c);
  const auto inv = bundle::derive_invariants(r.fiber);
  r.mu_sub = inv.mu[1];
  r.mu_target = target_slope(input);
  r.futaki = invariant::relative_futaki(inv, *c);
  r.verdict_text = verdict_text(r.futaki.verdict);
  r.asymptotics = asymptotics_block(r.fiber, *c, expansion_order);
  r.rr = rr_block(inv, *c);
  return r;
}

std::string render_json(const Report& r) {
  json doc;
  doc["input"] = json::parse(bundle::problem_to_json(r.input));
  doc["central_fiber"] = fiber_json(r.fiber);
  doc["c"] = r.futaki.c.str();
  doc["mu_L"] = r.mu_sub.str();
  doc["mu_U0"] = r.mu_target.str();
  doc["value"] = r.futaki.value.str();
  doc["symbolic_value"] = {{"num", poly_json(r.futaki.symbolic_value.num())},
                           {"den", poly_json(r.futaki.symbolic_value.den())}};
  doc["sign"] = invariant::to_string(r.futaki.sign);
  doc["verdict"] = invariant::to_string(r.futaki.verdict);
  doc["verdict_text"] = r.verdict_text;
  doc["extremal"] = {{"constant", r.futaki.extremal.constant.str()},
                     {"coefficients", rational_list(r.futaki.extremal.coeffs)}};
  doc["certificates"] = json::array();
  for (const auto& cert : r.futaki.certificates)
    doc["certificates"].push_back({{"name", cert.name}, {"passed", cert.passed}, {"detail", cert.detail}});
  doc["outside_theorem_hypotheses"] = r.futaki.outside_theorem_hypotheses;
  if (r.asymptotics) {
    const auto& a = *r.asymptotics;
    json block{{"shift", a.shift.str()},
               {"c_normalized", a.c_normalized.str()},
               {"order", a.order},
               {"fut", rational_list(a.fut)},
               {"expansion_matches", optional_bool_json(a.expansion_matches)},
               {"recursion_matches", optional_bool_json(a.recursion_matches)}};
    if (a.positivity) {
      const auto& p = *a.positivity;
      block["positivity"] = {{"case", p.which},
                             {"sigma1", p.sigma1.str()},
                             {"sigma2", p.sigma2.str()},
                             {"delta_sigma2", p.delta_sigma2.str()},
                             {"bracket", p.bracket.str()},
                             {"positive", p.positive},
                             {"consistent", p.consistent},
                             {"minus_sigma2_nonnegative", p.minus_sigma2_nonnegative}};
    } else {
      block["positivity"] = nullptr;
    }
    doc["asymptotics"] = block;
  }
  if (r.rr)
    doc["rr_crosscheck"] = {{"match", r.rr->match},
                            {"ratio", r.rr->ratio.str()},
                            {"expected_ratio", r.rr->expected_ratio.str()},
                            {"same_sign", r.rr->same_sign},
                            {"a_tilde_quarter", r.rr->a_tilde_quarter},
                            {"identification", r.rr->identification}};
  return doc.dump(2) + "\n";
}

Report parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    Report r;
    r.input = bundle::parse_problem(field(doc, "input").dump());
    r.fiber = parse_fiber(field(doc, "central_fiber"), r.input.bundle.genus);
    r.mu_sub = rational_at(doc, "mu_L");
    r.mu_target = rational_at(doc, "mu_U0");
    auto& f = r.futaki;
    f.c = rational_at(doc, "c");
    f.value = rational_at(doc, "value");
    const json& sym = field(doc, "symbolic_value");
    f.symbolic_value = RationalFn(Poly(parse_rational_list(field(sym, "num"))), Poly(parse_rational_list(field(sym, "den"))));
    f.sign = invariant::parse_sign(string_at(doc, "sign"));
    f.verdict = invariant::parse_verdict(string_at(doc, "verdict"));
    r.verdict_text = string_at(doc, "verdict_text");
    const json& ex = field(doc, "extremal");
    f.extremal.constant = rational_at(ex, "constant");
    f.extremal.coeffs = parse_rational_list(field(ex, "coefficients"));
    const json& certs = field(doc, "certificates");
    if (!certs.is_array()) throw ParseError("'certificates' must be an array");
    for (const auto& c : certs) f.certificates.push_back({string_at(c, "name"), bool_at(c, "passed"), string_at(c, "detail")});
    f.outside_theorem_hypotheses = bool_at(doc, "outside_theorem_hypotheses");
    if (doc.contains("asymptotics")) {
      const json& a = doc["asymptotics"];
      AsymptoticsBlock b;
      b.shift = rational_at(a, "shift");
      b.c_normalized = rational_at(a, "c_normalized");
      const json& order = field(a, "order");
      if (!order.is_number_integer()) throw ParseError("'order' must be an integer");
      b.order = order.get<int>();
      b.fut = parse_rational_list(field(a, "fut"));
      b.expansion_matches = optional_bool(a, "expansion_matches");
      b.recursion_matches = optional_bool(a, "recursion_matches");
      const json& p = field(a, "positivity");
      if (!p.is_null())
        b.positivity = PositivitySummary{string_at(p, "case"),          rational_at(p, "sigma1"),
                                         rational_at(p, "sigma2"),      rational_at(p, "delta_sigma2"),
                                         rational_at(p, "bracket"),     bool_at(p, "positive"),
                                         bool_at(p, "consistent"),      bool_at(p, "minus_sigma2_nonnegative")};
      r.asymptotics = b;
    }
    if (doc.contains("rr_crosscheck")) {
      const json& x = doc["rr_crosscheck"];
      r.rr = RrBlock{bool_at(x, "match"),     rational_at(x, "ratio"),           rational_at(x, "expected_ratio"),
                     bool_at(x, "same_sign"), bool_at(x, "a_tilde_quarter"), bool_at(x, "identification")};
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& f = r.futaki;
  out << "genus: " << r.input.bundle.genus << "\n";
  out << "summands:";
  for (const auto& s : r.input.bundle.summands) out << " (" << s.rank << ", " << s.degree << ")";
  out << "\n";
  out << "destabilizer: rank " << r.input.destabilizer.sub_rank << ", degree " << r.input.destabilizer.sub_degree
      << " in summand " << r.input.destabilizer.target_index << "\n";
  out << "central fiber:";
  for (const auto& s : r.fiber.summands) out << " (" << s.rank << ", " << s.degree.str() << ")";
  out << "\n";
  out << "c: " << f.c.str() << "\n";
  out << "mu(L): " << r.mu_sub.str() << "\n";
  out << "mu(U0): " << r.mu_target.str() << "\n";
  out << "F: " << f.value.str() << "\n";
  out << "F(c): " << f.symbolic_value.str() << "\n";
  out << "sign: " << sign_word(f.sign) << "\n";
  out << "verdict: " << verdict_label(f.verdict) << "\n";
  out << "  " << r.verdict_text << "\n";
  if (f.outside_theorem_hypotheses) out << "note: genus 0 lies outside the sign theorem\n";
  out << "extremal: a_0 = " << f.extremal.constant.str();
  for (std::size_t j = 0; j < f.extremal.coeffs.size(); ++j)
    out << ", a_" << j + 2 << " = " << f.extremal.coeffs[j].str();
  out << "\n";
  out << "certificates:\n";
  for (const auto& cert : f.certificates) {
    out << "  [" << (cert.passed ? "pass" : "FAIL") << "] " << cert.name;
    if (!cert.detail.empty()) out << ": " << cert.detail;
    out << "\n";
  }
  if (r.asymptotics) {
    const auto& a = *r.asymptotics;
    out << "asymptotics (slope-zero twist by " << a.shift.str() << ", c = " << a.c_normalized.str() << "):\n";
    for (std::size_t i = 0; i < a.fut.size(); ++i) out << "  Fut" << i + 1 << ": " << a.fut[i].str() << "\n";
    out << "  expansion matches exact series: " << maybe(a.expansion_matches) << "\n";
    out << "  recursion matches exact Sigma: " << maybe(a.recursion_matches) << "\n";
    if (a.positivity) {
      const auto& p = *a.positivity;
      out << "  positivity (" << p.which << "): Sigma_1 = " << p.sigma1.str() << ", Sigma_2 = " << p.sigma2.str()
          << ", Delta = " << p.delta_sigma2.str() << ", bracket = " << p.bracket.str() << "\n";
      out << "  positivity holds: " << yes_no(p.positive) << ", rewritings consistent: " << yes_no(p.consistent)
          << "\n";
    }
  }
  if (r.rr) {
    if (r.rr->match) {
      out << "RR cross-check: ok, ratio " << r.rr->ratio.str() << "\n";
    } else {
      out << "RR CROSS-CHECK FAILED: ratio " << r.rr->ratio.str() << ", expected " << r.rr->expected_ratio.str()
          << ", same sign " << yes_no(r.rr->same_sign) << ", a~ = a/4 " << yes_no(r.rr->a_tilde_quarter)
          << ", identification " << yes_no(r.rr->identification) << "\n";
    }
  }
  return out.str();
}

std::vector<ScanRow> scan(const bundle::Problem& input, const BigRational& c_min, const BigRational& c_max,
                          const BigRational& step) {
  if (step.sign() <= 0) throw ParseError("scan step must be positive");
  if (c_max < c_min) throw ParseError("scan range is empty");
  const auto fiber = bundle::build_central_fiber(input.bundle, input.destabilizer);
  const auto inv = bundle::derive_invariants(fiber);
  const auto symbolic = invariant::relative_futaki_symbolic(inv);
  std::vector<ScanRow> rows;
  for (BigRational c = c_min; c <= c_max; c += step) {
    ScanRow row{c, std::nullopt, Sign::Zero};
    if (bundle::is_admissible(inv, c)) {
      row.value = symbolic.eval(c);
      row.sign = invariant::sign_of(*row.value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_scan(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "c\tF\tsign\n";
  for (const auto& row : rows) {
    out << row.c.str() << "\t";
    if (row.value)
      out << row.value->str() << "\t" << sign_word(row.sign) << "\n";
    else
      out << "skipped: inadmissible\n";
  }
  return out.str();
}

Enumeration enumerate(const bundle::Problem& input, const BigRational& c, long d_min, long d_max) {
  if (d_max < d_min) throw ParseError("degree range is empty");
  input.bundle.validate();
  if (input.destabilizer.target_index >= input.bundle.summands.size())
    throw InvalidDestabilizer("destabilizer target out of range");
  const int top = input.bundle.summands[input.destabilizer.target_index].rank;
  Enumeration e;
  for (int r = 1; r < top; ++r) {
    for (long d = d_min; d <= d_max; ++d) {
      bundle::DestabilizerSpec dest{input.destabilizer.target_index, r, d};
      const auto inv = bundle::derive_invariants(bundle::build_central_fiber(input.bundle, dest));
      EnumerationRow row{r, d, std::nullopt, Sign::Zero};
      if (bundle::is_admissible(inv, c)) {
        row.value = invariant::relative_futaki_value(moments::moment_table_closed(inv, c));
        row.sign = invariant::sign_of(*row.value);
        if (!e.minimal) {
          e.minimal = e.rows.size();
        } else {
          const auto& best = e.rows[*e.minimal];
          if (row.sign < best.sign || (row.sign == best.sign && *row.value < *best.value)) e.minimal = e.rows.size();
        }
      }
      e.rows.push_back(std::move(row));
    }
  }
  return e;
}

std::string render_enumeration(const Enumeration& e) {
  std::ostringstream out;
  out << "rank\tdegree\tF\tsign\n";
  for (const auto& row : e.rows) {
    out << row.sub_rank << "\t" << row.sub_degree << "\t";
    if (row.value)
      out << row.value->str() << "\t" << sign_word(row.sign) << "\n";
    else
      out << "skipped: inadmissible\n";
  }
  if (e.minimal) {
    const auto& m = e.rows[*e.minimal];
    out << "minimal: rank " << m.sub_rank << ", degree " << m.sub_degree << ", F = " << m.value->str() << " ("
        << sign_word(m.sign) << ")\n";
  } else {
    out << "minimal: none admissible\n";
  }
  return out.str();
}

}  // namespace futaki::report
