#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "futaki/asymptotics.hpp"
#include "futaki/bundle.hpp"
#include "futaki/invariant.hpp"
#include "futaki/moments.hpp"
#include "futaki/oracle/quadrature.hpp"
#include "futaki/verify.hpp"

using namespace futaki;
using num::BigRational;
using verify::CorpusSpec;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

const CorpusSpec kLargeCorpus{6, 5, 3, {1, 2, 3}};

std::string seconds_since(Clock::time_point t0) {
  std::ostringstream os;
  os.precision(3);
  os << std::chrono::duration<double>(Clock::now() - t0).count() << " s";
  return os.str();
}

Outcome run_suites(const std::vector<std::string>& names, const CorpusSpec& corpus) {
  verify::Options opts;
  opts.corpus = corpus;
  Outcome out;
  std::ostringstream os;
  for (const auto& name : names) {
    const auto r = verify::run_suite(name, opts);
    os << name << ": " << r.checked << " checks";
    if (!r.passed) {
      out.passed = false;
      os << " FAILED at " << r.counterexample;
    }
    os << "; ";
  }
  out.detail = os.str();
  return out;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  auto out = run_suites({"moments"}, kLargeCorpus);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  out.detail += "corpus " + std::to_string(verify::corpus_size(kLargeCorpus)) + " instances in " + seconds_since(t0);
  if (secs >= 60) {
    out.passed = false;
    out.detail += " (over the 60 s budget)";
  }
  return out;
}

Outcome criterion2() { return run_suites({"gamma", "cross"}, kLargeCorpus); }

Outcome criterion3() {
  auto out = run_suites({"one-step"}, kLargeCorpus);
  const auto inv = bundle::derive_invariants(bundle::make_fiber(2, {1, 1}, {1, -1}));
  const auto formal = invariant::relative_futaki_value(moments::moment_table_closed(inv, BigRational(1)));
  const auto closed = invariant::futaki_ell1_closed(inv, BigRational(1));
  if (formal != 1 || closed != 1) out.passed = false;
  out.detail += "worked instance at c=1: " + formal.str() + " / " + closed.str();
  return out;
}

Outcome criterion4() { return run_suites({"two-step"}, kLargeCorpus); }

Outcome criterion5() { return run_suites({"recursion", "expansion"}, CorpusSpec{}); }

Outcome criterion6() {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> parts(3, 5), rank(1, 3), degree(-4, 4), genus(1, 3);
  const std::array<BigRational, 6> offsets{BigRational(1, 97), BigRational(1, 7), BigRational(1, 2), BigRational(1),
                                           BigRational(3), BigRational(10)};
  Outcome out;
  std::size_t instances = 0, points = 0;
  while (instances < 600 && out.passed) {
    std::vector<int> ranks(static_cast<std::size_t>(parts(rng)));
    std::vector<long> degrees(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      ranks[i] = rank(rng);
      degrees[i] = degree(rng);
    }
    const auto raw = bundle::make_fiber(genus(rng), ranks, degrees);
    const auto base = bundle::derive_invariants(raw);
    const int gap = (base.mu[0] - base.mu[1]).sign();
    ++instances;
    for (const auto& off : offsets) {
      const BigRational c = base.max_slope() + off;
      const auto nf = bundle::normalize_slope_zero(raw, c);
      const auto inv = bundle::derive_invariants(nf.fiber);
      const auto cert = asymptotics::positivity_certificate(inv, nf.c);
      const auto value = invariant::relative_futaki_value(moments::moment_table_closed(base, c));
      ++points;
      if (!inv.d_V.is_zero() || !cert.bracket_positive || !cert.delta_sigma2_positive ||
          !cert.positive() || !cert.consistent() || value.sign() != gap) {
        out.passed = false;
        out.detail = verify::describe(base) + " at c=" + c.str() + "; ";
        break;
      }
    }
  }
  out.detail += std::to_string(instances) + " instances, " + std::to_string(points) + " polarizations";
  return out;
}

Outcome criterion7() { return run_suites({"rr"}, kLargeCorpus); }

Outcome criterion8() {
  Outcome out;
  double worst = 0;
  std::size_t checks = 0;
  for (int ell = 0; ell <= 4; ++ell) {
    std::vector<int> e(static_cast<std::size_t>(ell) + 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
      if (k == e.size()) {
        worst = std::max(worst, oracle::monomial_deviation(e));
        ++checks;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[k] = v;
        rec(k + 1, left - v);
      }
      e[k] = 0;
    };
    rec(0, 6);
  }
  verify::for_each_instance(CorpusSpec{4, 5, 1, {1, 2}}, [&](const bundle::DerivedInvariants& inv) {
    for (const auto& c : verify::sample_points(inv, 2)) {
      worst = std::max({worst, oracle::moment_table_numeric_check(inv, c), oracle::boundary_numeric_check(inv, c)});
      ++checks;
    }
    return true;
  });
  for (const auto& ranks : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {1, 2, 1, 1, 1}, {1, 1, 1, 2, 1}})
    for (long shift = -1; shift <= 1; ++shift) {
      const auto inv = bundle::derive_invariants(bundle::make_fiber(2, ranks, {shift, -1, 0, 1, 2 - shift}));
      const BigRational c = inv.max_slope() + BigRational(1, 3);
      worst = std::max({worst, oracle::moment_table_numeric_check(inv, c), oracle::boundary_numeric_check(inv, c)});
      ++checks;
    }
  out.passed = worst < 1e-9;
  std::ostringstream os;
  os << checks << " comparisons, worst relative deviation " << worst;
  out.detail = os.str();
  return out;
}

Outcome criterion9() { return run_suites({"symchern"}, CorpusSpec{}); }

struct Captured {
  int status = -1;
  std::string output;
};

Captured capture(const std::string& cmd) {
  Captured out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome criterion10() {
  const std::string exe = FUTAKI_CLI_PATH;
  const std::string data = FUTAKI_DATA_DIR;
  Outcome out;
  const auto v = capture("'" + exe + "' verify");
  if (v.status != 0) {
    out.passed = false;
    out.detail = "verify exited with " + std::to_string(v.status) + "; ";
  } else {
    out.detail = "verify exit 0; ";
  }
  for (const char* file : {"rank2_positive.json", "two_step.json", "rank3.json"})
    for (const char* emit : {"text", "json"}) {
      const std::string cmd = "'" + exe + "' check --input '" + data + "/" + file + "' --emit " + emit;
      const auto first = capture(cmd);
      const auto second = capture(cmd);
      if (first.status != 0 || first.output.empty() || first.output != second.output) {
        out.passed = false;
        out.detail += std::string("check not stable for ") + file + " (" + emit + "); ";
      }
    }
  out.detail += "check output byte-identical across runs";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"moment tables, direct vs closed", criterion1},
      {"gamma and cross identities", criterion2},
      {"one extra summand closed form", criterion3},
      {"two extra summands factorization and sign", criterion4},
      {"asymptotic recursion and expansion", criterion5},
      {"positivity on random normalized instances", criterion6},
      {"Riemann-Roch cross-check", criterion7},
      {"quadrature oracle agreement", criterion8},
      {"symmetric power combinatorics", criterion9},
      {"end-to-end determinism", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("raised: ") + e.what()};
    }
    if (!out.passed) ++failures;
    std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << out.detail << "] (" << seconds_since(t0) << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
