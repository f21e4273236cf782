#pragma once

// Input data (genus, indecomposable summands, candidate sub-bundle,
// polarization) and the graded central fiber built from it.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "futaki/exactnum/bigrational.hpp"
#include "futaki/exactnum/poly.hpp"

namespace futaki::bundle {

using num::BigInt;
using num::BigRational;
using num::Poly;

struct SummandSpec {
  int rank = 1;
  long degree = 0;
  friend bool operator==(const SummandSpec&, const SummandSpec&) = default;
};

struct BundleSpec {
  int genus = 0;
  std::vector<SummandSpec> summands;

  int total_rank() const;
  long total_degree() const;
  /// Throws InvalidBundle on an empty list, negative genus or non-positive rank.
  void validate() const;
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

struct DestabilizerSpec {
  std::size_t target_index = 0;
  int sub_rank = 1;
  long sub_degree = 0;
  friend bool operator==(const DestabilizerSpec&, const DestabilizerSpec&) = default;
};

/// A summand of the central fiber; degrees become rational after the slope
/// shift.
struct Summand {
  int rank = 1;
  BigRational degree;

  BigRational slope() const { return degree / BigRational(rank); }
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// V = V_0 + V_1 + ... + V_ell with V_0 = U_0/L, V_1 = L, V_k = U_{k-1}.
struct CentralFiber {
  int genus = 0;
  std::vector<Summand> summands;

  int ell() const { return static_cast<int>(summands.size()) - 1; }
  friend bool operator==(const CentralFiber&, const CentralFiber&) = default;
};

/// Fiber with arbitrary ranks and integer degrees, mostly for tests and corpora.
CentralFiber make_fiber(int genus, const std::vector<int>& ranks, const std::vector<long>& degrees);

struct DerivedInvariants {
  int genus = 0;
  std::vector<int> ranks;
  std::vector<BigRational> degrees;
  int r_V = 0;
  BigRational d_V;
  std::vector<BigRational> mu;
  BigRational mu_V;
  BigInt pi_R;
  int kappa = 0;
  std::vector<int> kappa_k;
  /// kappa_pair[k1][k2] counts rank-one summands other than k1, k2; the
  /// diagonal equals kappa_k.
  std::vector<std::vector<int>> kappa_pair;
  BigRational mu01;
  Poly delta_c;
  BigRational dV_plus;

  int ell() const { return static_cast<int>(ranks.size()) - 1; }
  BigRational max_slope() const;
};

/// Throws InvalidBundle / InvalidDestabilizer.
CentralFiber build_central_fiber(const BundleSpec& spec, const DestabilizerSpec& dest);

DerivedInvariants derive_invariants(const CentralFiber& cf);

struct NormalizedFiber {
  CentralFiber fiber;
  BigRational c;
  /// The slope mu(V) that was subtracted.
  BigRational shift;
};

/// Twist by O(-mu(V)): degrees d_i - r_i mu(V) and c - mu(V).
NormalizedFiber normalize_slope_zero(const CentralFiber& cf, const BigRational& c);

struct Polarization {
  BigRational m;
};

/// Accepts iff m > mu_i for every summand (strict); otherwise throws
/// InadmissiblePolarization naming the first violated slope.
Polarization validate_polarization(const CentralFiber& cf, const BigRational& m);

bool is_admissible(const DerivedInvariants& inv, const BigRational& c);

/// Whole input of a check run.
struct Problem {
  BundleSpec bundle;
  DestabilizerSpec destabilizer;
  std::optional<BigRational> polarization;
  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Parses the JSON input document; throws ParseError on malformed input.
Problem parse_problem(const std::string& json_text);
std::string problem_to_json(const Problem& p);

}  // namespace futaki::bundle
