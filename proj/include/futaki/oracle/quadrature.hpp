#pragma once

// Floating-point quadrature over the standard simplex, used only as an
// independent numerical check of the exact moment formulas.

#include <functional>
#include <span>
#include <vector>

#include "futaki/bundle.hpp"
#include "futaki/exactnum/bigrational.hpp"

namespace futaki::oracle {

struct QuadratureResult {
  double value = 0;
  double estimated_error = 0;
  int samples_or_depth = 0;
};

/// Receives the barycentric coordinates (L_0, ..., L_ell) of a point.
using Integrand = std::function<double(std::span<const double>)>;

inline constexpr int kDefaultOrder = 16;
inline constexpr int kMaxDimension = 5;
inline constexpr int kMaxOrder = 64;

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int order);

/// Iterated Gauss-Legendre integral of f over the standard ell-simplex
/// {x_j >= 0, sum x_j <= 1}, with L_0 = 1 - sum x_j. The error estimate
/// compares against a rule of order - 4. Throws DepthExceeded for
/// ell > kMaxDimension or order outside [5, kMaxOrder].
QuadratureResult simplex_quadrature(const Integrand& f, int ell, int order = kDefaultOrder);

double to_double(const num::BigRational& q);

/// |numeric - exact| / |exact| (absolute when exact = 0).
double relative_deviation(double numeric, const num::BigRational& exact);

/// Deviation of quadrature from the exact monomial formula for prod L_k^{m_k}.
double monomial_deviation(const std::vector<int>& exponents);

/// Largest deviation between quadrature and the closed moment table at c
/// (volume, first and second moments, scalar moments including the facet
/// terms). Requires ell <= 4.
double moment_table_numeric_check(const bundle::DerivedInvariants& inv, const num::BigRational& c);

/// Largest deviation between facet quadrature and the closed boundary integrals.
double boundary_numeric_check(const bundle::DerivedInvariants& inv, const num::BigRational& c);

}  // namespace futaki::oracle
