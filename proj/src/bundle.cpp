#include "futaki/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "futaki/errors.hpp"
#include "futaki/exactnum/combinatorics.hpp"

namespace futaki::bundle {

int BundleSpec::total_rank() const {
  return std::accumulate(summands.begin(), summands.end(), 0,
                         [](int acc, const SummandSpec& s) { return acc + s.rank; });
}

long BundleSpec::total_degree() const {
  return std::accumulate(summands.begin(), summands.end(), 0L,
                         [](long acc, const SummandSpec& s) { return acc + s.degree; });
}

void BundleSpec::validate() const {
  if (genus < 0) throw InvalidBundle("genus must be non-negative");
  if (summands.empty()) throw InvalidBundle("bundle needs at least one summand");
  for (const auto& s : summands)
    if (s.rank < 1) throw InvalidBundle("summand rank must be positive");
}

CentralFiber make_fiber(int genus, const std::vector<int>& ranks, const std::vector<long>& degrees) {
  if (ranks.size() != degrees.size() || ranks.empty())
    throw InvalidBundle("ranks and degrees must be nonempty and of equal length");
  CentralFiber cf{genus, {}};
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 1) throw InvalidBundle("summand rank must be positive");
    cf.summands.push_back({ranks[i], BigRational(degrees[i])});
  }
  return cf;
}

BigRational DerivedInvariants::max_slope() const { return *std::max_element(mu.begin(), mu.end()); }

CentralFiber build_central_fiber(const BundleSpec& spec, const DestabilizerSpec& dest) {
  spec.validate();
  if (dest.target_index >= spec.summands.size())
    throw InvalidDestabilizer("destabilizer target " + std::to_string(dest.target_index) + " out of range");
  const SummandSpec& u0 = spec.summands[dest.target_index];
  if (dest.sub_rank < 1 || dest.sub_rank >= u0.rank)
    throw InvalidDestabilizer("sub-bundle rank must satisfy 1 <= r_L < rank(U_0) = " + std::to_string(u0.rank));
  CentralFiber cf{spec.genus, {}};
  cf.summands.push_back({u0.rank - dest.sub_rank, BigRational(u0.degree - dest.sub_degree)});
  cf.summands.push_back({dest.sub_rank, BigRational(dest.sub_degree)});
  for (std::size_t i = 0; i < spec.summands.size(); ++i)
    if (i != dest.target_index) cf.summands.push_back({spec.summands[i].rank, BigRational(spec.summands[i].degree)});
  return cf;
}

DerivedInvariants derive_invariants(const CentralFiber& cf) {
  if (cf.summands.empty()) throw InvalidBundle("central fiber has no summands");
  DerivedInvariants inv;
  inv.genus = cf.genus;
  inv.pi_R = 1;
  const std::size_t n = cf.summands.size();
  for (const auto& s : cf.summands) {
    inv.ranks.push_back(s.rank);
    inv.degrees.push_back(s.degree);
    inv.r_V += s.rank;
    inv.d_V += s.degree;
    inv.mu.push_back(s.slope());
    inv.pi_R *= num::factorial(s.rank - 1);
    if (s.rank == 1) ++inv.kappa;
    if (s.degree.sign() >= 0) inv.dV_plus += s.degree;
  }
  inv.mu_V = inv.d_V / BigRational(inv.r_V);
  for (std::size_t k = 0; k < n; ++k) inv.kappa_k.push_back(inv.kappa - (inv.ranks[k] == 1 ? 1 : 0));
  inv.kappa_pair.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      inv.kappa_pair[a][b] =
          a == b ? inv.kappa_k[a] : inv.kappa - (inv.ranks[a] == 1 ? 1 : 0) - (inv.ranks[b] == 1 ? 1 : 0);
  if (n >= 2)
    inv.mu01 = (inv.degrees[0] + inv.degrees[1]) / BigRational(inv.ranks[0] + inv.ranks[1]);
  else
    inv.mu01 = inv.mu[0];
  inv.delta_c = Poly::affine(BigRational(inv.r_V), -inv.d_V);
  return inv;
}

NormalizedFiber normalize_slope_zero(const CentralFiber& cf, const BigRational& c) {
  BigRational d_V;
  int r_V = 0;
  for (const auto& s : cf.summands) {
    d_V += s.degree;
    r_V += s.rank;
  }
  const BigRational shift = d_V / BigRational(r_V);
  NormalizedFiber out{cf, c - shift, shift};
  for (auto& s : out.fiber.summands) s.degree -= BigRational(s.rank) * shift;
  return out;
}

Polarization validate_polarization(const CentralFiber& cf, const BigRational& m) {
  for (const auto& s : cf.summands) {
    const BigRational mu = s.slope();
    if (!(m > mu))
      throw InadmissiblePolarization("polarization " + m.str() + " is not strictly above slope " + mu.str(),
                                     mu.str());
  }
  return Polarization{m};
}

bool is_admissible(const DerivedInvariants& inv, const BigRational& c) { return c > inv.max_slope(); }

}  // namespace futaki::bundle
