#pragma once

// Identity suites run over a corpus of central fibers: every suite compares
// two independent routes (or a closed form against the general formula) and
// reports the first counterexample.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "futaki/bundle.hpp"

namespace futaki::verify {

using bundle::DerivedInvariants;
using num::BigRational;

/// All compositions of r_V <= max_rank into at most max_parts parts, every
/// degree in [-max_abs_degree, max_abs_degree], genus in `genera`.
struct CorpusSpec {
  int max_rank = 5;
  int max_parts = 5;
  int max_abs_degree = 2;
  std::vector<int> genera{1, 2};
  int min_parts = 1;
};

/// Visits each instance in a fixed order; stops early when the visitor returns false.
void for_each_instance(const CorpusSpec& spec, const std::function<bool(const DerivedInvariants&)>& visit);
std::size_t corpus_size(const CorpusSpec& spec);

/// Admissible sample points max mu + 1/3, max mu + 1, max mu + 5/2.
std::vector<BigRational> sample_points(const DerivedInvariants& inv, int count = 3);

/// "g=.. ranks=[..] degrees=[..]".
std::string describe(const DerivedInvariants& inv);

/// Slope-zero twist of a fiber and of an evaluation point.
struct Normalized {
  DerivedInvariants inv;
  BigRational c;
};
Normalized normalized(const DerivedInvariants& inv, const BigRational& c);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

struct Options {
  CorpusSpec corpus;
  /// Perturbs the closed side of the named suite (harness self-test).
  std::optional<std::string> inject_fault;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const Options& opts);

std::vector<SuiteResult> run_all(const Options& opts);

}  // namespace futaki::verify
