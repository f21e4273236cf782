#include <doctest.h>

#include "futaki/errors.hpp"
#include "futaki/report.hpp"

using namespace futaki;
using namespace futaki::report;
using invariant::Sign;
using invariant::Verdict;
using num::BigRational;

namespace {

bundle::Problem problem(int genus, std::vector<bundle::SummandSpec> summands, bundle::DestabilizerSpec dest,
                        std::optional<BigRational> c) {
  bundle::Problem p;
  p.bundle = {genus, std::move(summands)};
  p.destabilizer = dest;
  p.polarization = std::move(c);
  return p;
}

bool contains(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("rank-two reports") {
  const auto pos = build_report(problem(2, {{2, 0}}, {0, 1, -1}, BigRational(2)));
  CHECK(pos.futaki.value == BigRational(5, 3));
  CHECK(pos.futaki.verdict == Verdict::NotDestabilized);
  CHECK(pos.verdict_text == "L does not destabilize U0");
  CHECK(pos.mu_sub == -1);
  CHECK(pos.mu_target == 0);
  CHECK(pos.ok());
  const auto text = render_text(pos);
  CHECK(contains(text, "verdict: NOT destabilized\n"));
  CHECK(contains(text, "F: 5/3\n"));
  CHECK(contains(text, "Fut1: "));
  CHECK(contains(text, "Fut2: "));
  CHECK(contains(text, "RR cross-check: ok"));

  const auto neg = build_report(problem(2, {{2, 0}}, {0, 1, 1}, BigRational(2)));
  CHECK(neg.mu_sub == 1);
  CHECK(neg.futaki.sign == Sign::Negative);
  CHECK(neg.verdict_text == "L destabilizes U0: bundle not relatively K-polystable for this test configuration");
  CHECK(contains(render_text(neg), "verdict: destabilized\n"));

  for (const BigRational c : {BigRational(1, 2), BigRational(1), BigRational(7, 3)}) {
    const auto flat = build_report(problem(2, {{2, 0}}, {0, 1, 0}, c));
    CHECK(flat.futaki.value == 0);
    CHECK(flat.futaki.verdict == Verdict::Borderline);
    CHECK(contains(render_text(flat), "verdict: borderline\n"));
  }
}

TEST_CASE("report errors") {
  CHECK_THROWS_AS(build_report(problem(2, {{2, 0}}, {0, 1, -1}, BigRational(1))), InadmissiblePolarization);
  CHECK_THROWS_AS(build_report(problem(2, {{2, 0}}, {0, 1, -1}, std::nullopt)), ParseError);
  CHECK_THROWS_AS(build_report(problem(2, {{2, 0}}, {0, 2, -1}, BigRational(3))), InvalidDestabilizer);
  CHECK(build_report(problem(2, {{2, 0}}, {0, 1, -1}, std::nullopt), BigRational(3)).futaki.c == 3);
}

TEST_CASE("JSON round trip") {
  for (const auto& p : {problem(2, {{2, 0}}, {0, 1, -1}, BigRational(2)),
                        problem(1, {{2, 0}, {1, 0}}, {0, 1, -1}, BigRational(3)),
                        problem(2, {{3, 1}, {2, 0}, {1, -2}}, {0, 2, -1}, BigRational(7, 2)),
                        problem(0, {{2, 0}}, {0, 1, -1}, BigRational(5, 2))}) {
    const auto rep = build_report(p, std::nullopt, 4);
    const auto json = render_json(rep);
    const auto back = parse_json(json);
    CHECK(back == rep);
    CHECK(render_json(back) == json);
    CHECK(render_text(back) == render_text(rep));
  }
  CHECK_THROWS_AS(parse_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_json("not json"), ParseError);
}

TEST_CASE("JSON layout") {
  const auto rep = build_report(problem(1, {{2, 0}, {1, 0}}, {0, 1, -1}, BigRational(3)), std::nullopt, 3);
  const auto json = render_json(rep);
  for (const char* key : {"\"value\"", "\"symbolic_value\"", "\"num\"", "\"den\"", "\"sign\"", "\"verdict\"",
                          "\"extremal\"", "\"certificates\"", "\"asymptotics\"", "\"rr_crosscheck\"", "\"ratio\""})
    CHECK(contains(json, key));
  REQUIRE(rep.asymptotics.has_value());
  CHECK(rep.asymptotics->fut.size() == 5);
  CHECK(rep.asymptotics->expansion_matches == true);
  CHECK(rep.asymptotics->recursion_matches == true);
  REQUIRE(rep.asymptotics->positivity.has_value());
  CHECK(rep.asymptotics->positivity->positive);
}

TEST_CASE("failed cross-check is reported") {
  auto rep = build_report(problem(2, {{2, 0}}, {0, 1, -1}, BigRational(2)));
  rep.rr->match = false;
  CHECK_FALSE(rep.ok());
  CHECK(contains(render_text(rep), "RR CROSS-CHECK FAILED"));
}

TEST_CASE("scan rows") {
  const auto p = problem(2, {{2, 0}, {1, 0}}, {0, 1, -1}, std::nullopt);
  const auto rows = scan(p, 2, 4, 1);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    REQUIRE(row.value.has_value());
    CHECK(row.sign == Sign::Positive);
  }
  const auto skipped = scan(p, 1, 2, BigRational(1, 2));
  REQUIRE(skipped.size() == 3);
  CHECK_FALSE(skipped[0].value.has_value());
  CHECK(contains(render_scan(skipped), "1\tskipped: inadmissible\n"));
  const auto flat = scan(problem(1, {{2, 0}, {1, 0}}, {0, 1, 0}, std::nullopt), 1, 3, BigRational(1, 3));
  for (const auto& row : flat) CHECK(*row.value == 0);
  CHECK_THROWS_AS(scan(p, 3, 2, 1), ParseError);
  CHECK_THROWS_AS(scan(p, 2, 3, 0), ParseError);
}

TEST_CASE("scan sign equals the slope gap on every row") {
  for (long d = -3; d <= 3; ++d)
    for (long e = -2; e <= 2; ++e) {
      const auto p = problem(2, {{3, 0}, {1, e}, {2, 1}}, {0, 1, d}, std::nullopt);
      const auto fiber = bundle::build_central_fiber(p.bundle, p.destabilizer);
      const auto inv = bundle::derive_invariants(fiber);
      const auto gap = invariant::sign_of(inv.mu[0] - inv.mu[1]);
      for (const auto& row : scan(p, inv.max_slope() + BigRational(1, 10), inv.max_slope() + 5, BigRational(7, 10)))
        CHECK(row.sign == gap);
    }
}

TEST_CASE("enumeration picks the smallest sign") {
  const auto e = enumerate(problem(1, {{3, 0}, {1, 1}}, {0, 1, 0}, std::nullopt), BigRational(5, 2), -2, 2);
  CHECK(e.rows.size() == 10);
  REQUIRE(e.minimal.has_value());
  const auto& m = e.rows[*e.minimal];
  CHECK(m.sign == Sign::Negative);
  for (const auto& row : e.rows)
    if (row.value) CHECK(*m.value <= *row.value);
  CHECK(contains(render_enumeration(e), "minimal: rank "));
  const auto none = enumerate(problem(1, {{2, 0}}, {0, 1, 0}, std::nullopt), BigRational(-5), 0, 0);
  CHECK_FALSE(none.minimal.has_value());
}
