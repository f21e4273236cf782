#pragma once

// The end-to-end evaluation of one input: central fiber, relative invariant,
// large-c expansion and the Riemann-Roch cross-check, with JSON and text
// renderings. Also the scan and enumerate sweeps built on it.

#include <optional>
#include <string>
#include <vector>

#include "futaki/bundle.hpp"
#include "futaki/invariant.hpp"

namespace futaki::report {

using num::BigRational;

struct PositivitySummary {
  std::string which;
  BigRational sigma1;
  BigRational sigma2;
  BigRational delta_sigma2;
  BigRational bracket;
  bool positive = false;
  bool consistent = false;
  bool minus_sigma2_nonnegative = false;
  friend bool operator==(const PositivitySummary&, const PositivitySummary&) = default;
};

struct AsymptoticsBlock {
  BigRational shift;
  BigRational c_normalized;
  int order = 0;
  /// Fut_1, Fut_2, ..., Fut_{order+2}.
  std::vector<BigRational> fut;
  /// Against the exact expansion of F / (mu_0 - mu_1); absent for equal slopes.
  std::optional<bool> expansion_matches;
  /// Recursion against the exact Sigma expansion; absent for ell = 1.
  std::optional<bool> recursion_matches;
  std::optional<PositivitySummary> positivity;

  bool ok() const;
  friend bool operator==(const AsymptoticsBlock&, const AsymptoticsBlock&) = default;
};

struct RrBlock {
  bool match = false;
  BigRational ratio;
  BigRational expected_ratio;
  bool same_sign = false;
  bool a_tilde_quarter = false;
  bool identification = false;
  friend bool operator==(const RrBlock&, const RrBlock&) = default;
};

struct Report {
  bundle::Problem input;
  bundle::CentralFiber fiber;
  BigRational mu_sub;
  BigRational mu_target;
  invariant::FutakiReport futaki;
  std::string verdict_text;
  std::optional<AsymptoticsBlock> asymptotics;
  std::optional<RrBlock> rr;

  /// Every certificate, expansion check and the RR cross-check pass.
  bool ok() const;
  friend bool operator==(const Report&, const Report&) = default;
};

std::string verdict_text(invariant::Verdict v);
/// "NOT destabilized", "destabilized" or "borderline".
std::string verdict_label(invariant::Verdict v);

/// Runs the pipeline at c (the input's polarization unless given).
/// Throws ParseError without any polarization, InadmissiblePolarization,
/// InvalidBundle or InvalidDestabilizer.
Report build_report(const bundle::Problem& input, std::optional<BigRational> c = std::nullopt,
                    int expansion_order = 5);

std::string render_json(const Report& r);
/// Inverse of render_json; throws ParseError.
Report parse_json(const std::string& text);
std::string render_text(const Report& r);

struct ScanRow {
  BigRational c;
  /// Absent when c is not admissible.
  std::optional<BigRational> value;
  invariant::Sign sign = invariant::Sign::Zero;
};

/// c = c_min, c_min + step, ... <= c_max. Throws ParseError for an empty
/// range or a non-positive step.
std::vector<ScanRow> scan(const bundle::Problem& input, const BigRational& c_min, const BigRational& c_max,
                          const BigRational& step);
std::string render_scan(const std::vector<ScanRow>& rows);

struct EnumerationRow {
  int sub_rank = 1;
  long sub_degree = 0;
  std::optional<BigRational> value;
  invariant::Sign sign = invariant::Sign::Zero;
};

struct Enumeration {
  std::vector<EnumerationRow> rows;
  /// Index of the evaluated row with the smallest sign, then smallest value.
  std::optional<std::size_t> minimal;
};

/// Every formal sub-bundle 1 <= r_L < rank(U_0), d_min <= d_L <= d_max of the
/// target summand, evaluated at c; inadmissible rows keep no value.
Enumeration enumerate(const bundle::Problem& input, const BigRational& c, long d_min, long d_max);
std::string render_enumeration(const Enumeration& e);

}  // namespace futaki::report
