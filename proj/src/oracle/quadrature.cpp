#include "futaki/oracle/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "futaki/errors.hpp"
#include "futaki/moments.hpp"

namespace futaki::oracle {

namespace {

/// Legendre P_n and its derivative at x.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1);
  return {p1, dp};
}

double integrate(const Integrand& f, int ell, const GaussRule& rule) {
  std::vector<double> point(static_cast<std::size_t>(ell) + 1, 0.0);
  // Coordinates x_1..x_ell are nested: x_j ranges over [0, 1 - x_1 - ... - x_{j-1}].
  std::function<double(int, double)> level = [&](int j, double remaining) -> double {
    if (j > ell) {
      point[0] = remaining;
      return f(point);
    }
    double acc = 0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double x = remaining * rule.nodes[q];
      point[static_cast<std::size_t>(j)] = x;
      acc += rule.weights[q] * remaining * level(j + 1, remaining - x);
    }
    return acc;
  };
  return level(1, 1.0);
}

/// Integrand over the facet {L_skip = 0}, expressed on the lower simplex.
Integrand on_facet(const Integrand& f, std::size_t skip, std::size_t size) {
  return [f, skip, size](std::span<const double> sub) {
    std::vector<double> full(size, 0.0);
    for (std::size_t k = 0, t = 0; k < size; ++k)
      if (k != skip) full[k] = sub[t++];
    return f(full);
  };
}

struct Density {
  std::vector<int> ranks;
  std::vector<double> mu;
  double c;

  double linear(std::span<const double> l) const {
    double s = c;
    for (std::size_t k = 0; k < mu.size(); ++k) s -= mu[k] * l[k];
    return s;
  }
  double product(std::span<const double> l, std::size_t drop = static_cast<std::size_t>(-1)) const {
    double p = 1;
    for (std::size_t k = 0; k < ranks.size(); ++k) p *= std::pow(l[k], ranks[k] - 1 - (k == drop ? 1 : 0));
    return p;
  }
  double operator()(std::span<const double> l) const { return linear(l) * product(l); }
};

Density density_of(const bundle::DerivedInvariants& inv, const num::BigRational& c) {
  Density d{inv.ranks, {}, to_double(c)};
  for (const auto& m : inv.mu) d.mu.push_back(to_double(m));
  return d;
}

/// Bulk part of the scalar integrand: 2(1-g) prod L^{r-1} + sum_{r_k >= 2} r_k(r_k-1) p_c / L_k.
double scalar_bulk(const Density& d, double one_minus_genus, std::span<const double> l) {
  double s = 2 * one_minus_genus * d.product(l);
  for (std::size_t k = 0; k < d.ranks.size(); ++k)
    if (d.ranks[k] >= 2) s += d.ranks[k] * (d.ranks[k] - 1.0) * d.linear(l) * d.product(l, k);
  return s;
}

/// Sum over the facets {L_i = 0} with r_i = 1 of the integral of weight * p_c.
double facet_sum(const Density& d, int ell, const Integrand& weight) {
  double s = 0;
  if (ell < 1) return s;
  const std::size_t size = d.ranks.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (d.ranks[i] != 1) continue;
    const Integrand g = [&](std::span<const double> l) { return weight(l) * d(l); };
    s += simplex_quadrature(on_facet(g, i, size), ell - 1).value;
  }
  return s;
}

}  // namespace

GaussRule gauss_legendre(int order) {
  if (order < 1 || order > kMaxOrder) throw DepthExceeded("Gauss-Legendre order out of range");
  GaussRule rule;
  for (int i = 1; i <= order; ++i) {
    double x = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(order, x).second;
    rule.nodes.push_back((1 - x) / 2);
    rule.weights.push_back(1 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

QuadratureResult simplex_quadrature(const Integrand& f, int ell, int order) {
  if (ell < 0 || ell > kMaxDimension) throw DepthExceeded("simplex quadrature supports ell <= 5");
  if (order < 5 || order > kMaxOrder) throw DepthExceeded("quadrature order out of range");
  QuadratureResult r;
  if (ell == 0) {
    const std::vector<double> vertex{1.0};
    r.value = f(vertex);
    r.samples_or_depth = order;
    return r;
  }
  r.value = integrate(f, ell, gauss_legendre(order));
  const double coarse = integrate(f, ell, gauss_legendre(order - 4));
  r.estimated_error = std::abs(r.value - coarse) + 64 * std::numeric_limits<double>::epsilon() * std::abs(r.value);
  r.samples_or_depth = order;
  return r;
}

double to_double(const num::BigRational& q) { return q.to_mpq().get_d(); }

double relative_deviation(double numeric, const num::BigRational& exact) {
  const double e = to_double(exact);
  const double diff = std::abs(numeric - e);
  return e == 0 ? diff : diff / std::abs(e);
}

double monomial_deviation(const std::vector<int>& exponents) {
  const int ell = static_cast<int>(exponents.size()) - 1;
  const Integrand f = [&](std::span<const double> l) {
    double p = 1;
    for (std::size_t k = 0; k < exponents.size(); ++k) p *= std::pow(l[k], exponents[k]);
    return p;
  };
  return relative_deviation(simplex_quadrature(f, ell).value, moments::simplex_monomial_integral(exponents));
}

double moment_table_numeric_check(const bundle::DerivedInvariants& inv, const num::BigRational& c) {
  const int ell = inv.ell();
  if (ell > 4) throw DepthExceeded("numeric moment check supports ell <= 4");
  const moments::NumericTable exact = moments::moment_table_closed(inv, c);
  const Density d = density_of(inv, c);
  const double omg = 1.0 - inv.genus;
  const std::size_t size = inv.ranks.size();
  double worst = 0;
  auto note = [&](double numeric, const num::BigRational& value) {
    worst = std::max(worst, relative_deviation(numeric, value));
  };
  const Integrand one = [](std::span<const double>) { return 1.0; };
  note(simplex_quadrature(d, ell).value, exact.volume);
  note(simplex_quadrature([&](std::span<const double> l) { return scalar_bulk(d, omg, l); }, ell).value +
           facet_sum(d, ell, one),
       exact.scalar_total);
  for (std::size_t j = 0; j < size; ++j) {
    const Integrand wj = [j](std::span<const double> l) { return l[j]; };
    note(simplex_quadrature([&](std::span<const double> l) { return l[j] * d(l); }, ell).value, exact.moment[j]);
    note(simplex_quadrature([&](std::span<const double> l) { return l[j] * scalar_bulk(d, omg, l); }, ell).value +
             facet_sum(d, ell, wj),
         exact.scalar_moment[j]);
    for (std::size_t k = 0; k < size; ++k)
      note(simplex_quadrature([&](std::span<const double> l) { return l[j] * l[k] * d(l); }, ell).value,
           exact.second[j][k]);
  }
  return worst;
}

double boundary_numeric_check(const bundle::DerivedInvariants& inv, const num::BigRational& c) {
  const int ell = inv.ell();
  if (ell > 4) throw DepthExceeded("numeric boundary check supports ell <= 4");
  const auto exact = moments::boundary_integrals(inv, c);
  const Density d = density_of(inv, c);
  double worst = relative_deviation(facet_sum(d, ell, [](std::span<const double>) { return 1.0; }), exact.total);
  for (std::size_t j = 0; j < inv.ranks.size(); ++j)
    worst = std::max(worst, relative_deviation(facet_sum(d, ell, [j](std::span<const double> l) { return l[j]; }),
                                               exact.weighted[j]));
  return worst;
}

}  // namespace futaki::oracle
