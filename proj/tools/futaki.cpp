// futaki: evaluate the relative Donaldson-Futaki invariant of a graded
// degeneration of a vector bundle over a curve.
//
// Exit codes: 0 ok, 1 failed verification or cross-check, 2 inadmissible
// polarization, 3 malformed input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "futaki/errors.hpp"
#include "futaki/report.hpp"
#include "futaki/verify.hpp"

namespace {

using futaki::num::BigRational;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInadmissible = 2;
constexpr int kMalformed = 3;

futaki::bundle::Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw futaki::ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return futaki::bundle::parse_problem(buf.str());
}

struct CheckArgs {
  std::string input;
  std::string c;
  int order = 5;
  std::string emit = "text";
  std::vector<long> enumerate;
};

int run_check(const CheckArgs& a) {
  const auto problem = load_problem(a.input);
  std::optional<BigRational> c;
  if (!a.c.empty()) c = BigRational::parse(a.c);
  if (!a.enumerate.empty()) {
    if (!c) c = problem.polarization;
    if (!c) throw futaki::ParseError("no polarization given");
    const auto e = futaki::report::enumerate(problem, *c, a.enumerate[0], a.enumerate[1]);
    std::cout << futaki::report::render_enumeration(e);
    return kOk;
  }
  const auto rep = futaki::report::build_report(problem, c, a.order);
  std::cout << (a.emit == "json" ? futaki::report::render_json(rep) : futaki::report::render_text(rep));
  return rep.ok() ? kOk : kFailed;
}

struct ScanArgs {
  std::string input;
  std::string c_min;
  std::string c_max;
  std::string step;
};

int run_scan(const ScanArgs& a) {
  const auto problem = load_problem(a.input);
  const auto rows = futaki::report::scan(problem, BigRational::parse(a.c_min), BigRational::parse(a.c_max),
                                         BigRational::parse(a.step));
  std::cout << futaki::report::render_scan(rows);
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  int max_rank = 5;
  std::string inject_fault;
};

int run_verify(const VerifyArgs& a) {
  futaki::verify::Options opts;
  opts.corpus.max_rank = a.max_rank;
  if (!a.inject_fault.empty()) opts.inject_fault = a.inject_fault;
  const auto& names = a.suites.empty() ? futaki::verify::suite_names() : a.suites;
  bool all = true;
  for (const auto& name : names) {
    const auto r = futaki::verify::run_suite(name, opts);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)";
    if (!r.passed) std::cout << ": " << r.counterexample;
    std::cout << "\n";
    all = all && r.passed;
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Donaldson-Futaki invariants of vector bundle degenerations"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* cmd_check = app.add_subcommand("check", "Evaluate one input file");
  cmd_check->add_option("--input", check.input, "Input JSON")->required();
  cmd_check->add_option("--c", check.c, "Polarization p/q, overriding the input");
  cmd_check->add_option("--expansion-order", check.order, "Last power of 1/c in the expansion")->check(CLI::Range(0, 20));
  cmd_check->add_option("--emit", check.emit, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd_check->add_option("--enumerate", check.enumerate, "Evaluate every sub-bundle rank with degrees in [MIN, MAX]")
      ->expected(2);

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "Tabulate the invariant over a range of polarizations");
  cmd_scan->add_option("--input", scan.input, "Input JSON")->required();
  cmd_scan->add_option("--c-min", scan.c_min, "First c, p/q")->required();
  cmd_scan->add_option("--c-max", scan.c_max, "Last c, p/q")->required();
  cmd_scan->add_option("--step", scan.step, "Increment, p/q")->required();

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run the identity suites over the built-in corpus");
  cmd_verify->add_option("--suite", verify.suites, "Suite name (repeatable)")
      ->check(CLI::IsMember(futaki::verify::suite_names()));
  cmd_verify->add_option("--max-rank", verify.max_rank, "Largest total rank in the corpus")->check(CLI::Range(1, 6));
  cmd_verify->add_option("--inject-fault", verify.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*cmd_check) return run_check(check);
    if (*cmd_scan) return run_scan(scan);
    return run_verify(verify);
  } catch (const futaki::InadmissiblePolarization& e) {
    std::cerr << "inadmissible polarization: " << e.what() << "\n";
    return kInadmissible;
  } catch (const futaki::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
}
