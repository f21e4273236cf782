#include "futaki/moments.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace futaki::moments {

BigRational simplex_monomial_integral(const std::vector<int>& exponents) {
  if (exponents.empty()) throw InvalidBundle("simplex integral needs at least one exponent");
  num::BigInt numer = 1;
  long total = 0;
  for (int m : exponents) {
    if (m < 0) throw InvalidBundle("negative simplex exponent");
    numer *= num::factorial(m);
    total += m;
  }
  const long ell = static_cast<long>(exponents.size()) - 1;
  return BigRational(numer, num::factorial(total + ell));
}

BigRational LinearForm::constant(const DerivedInvariants& inv) const {
  BigRational out = on_one_minus_genus * BigRational(1 - inv.genus);
  for (std::size_t k = 0; k < on_mu.size(); ++k)
    if (!on_mu[k].is_zero()) out += on_mu[k] * inv.mu[k];
  return out;
}

namespace {

using Exps = std::vector<int>;

Exps bumped(Exps e, std::size_t k, int by = 1) {
  e[k] += by;
  return e;
}

/// int prod L^e * (c - sum_k mu_k L_k) over the simplex of dimension e.size()-1;
/// `slot` maps local coordinates back to summand indices.
LinearForm density_integral(const Exps& e, const std::vector<std::size_t>& slot, std::size_t n) {
  LinearForm f{simplex_monomial_integral(e), std::vector<BigRational>(n), 0};
  for (std::size_t t = 0; t < e.size(); ++t) f.on_mu[slot[t]] -= simplex_monomial_integral(bumped(e, t));
  return f;
}

void accumulate(LinearForm& into, const LinearForm& add, const BigRational& scale = 1) {
  into.on_c += scale * add.on_c;
  into.on_one_minus_genus += scale * add.on_one_minus_genus;
  for (std::size_t k = 0; k < add.on_mu.size(); ++k) into.on_mu[k] += scale * add.on_mu[k];
}

class FormBuilder {
 public:
  explicit FormBuilder(const std::vector<int>& ranks) : ranks_(ranks), n_(ranks.size()) {
    all_.resize(n_);
    std::iota(all_.begin(), all_.end(), std::size_t{0});
  }

  Exps base(const Exps& extra) const {
    Exps e(n_);
    for (std::size_t k = 0; k < n_; ++k) e[k] = ranks_[k] - 1 + extra[k];
    return e;
  }

  LinearForm bulk(const Exps& extra) const { return density_integral(base(extra), all_, n_); }

  /// Facets {L_i = 0} with r_i = 1 where the weight does not vanish.
  LinearForm facets(const Exps& extra) const {
    LinearForm f{0, std::vector<BigRational>(n_), 0};
    if (n_ < 2) return f;
    const Exps b = base(extra);
    for (std::size_t i = 0; i < n_; ++i) {
      if (ranks_[i] != 1 || extra[i] != 0) continue;
      Exps e;
      std::vector<std::size_t> slot;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k == i) continue;
        e.push_back(b[k]);
        slot.push_back(k);
      }
      accumulate(f, density_integral(e, slot, n_));
    }
    return f;
  }

  /// 2(1-g) prod L^{r-1} plus r_k(r_k-1) p_c / L_k for r_k >= 2, then facets.
  LinearForm scalar(const Exps& extra) const {
    const Exps b = base(extra);
    LinearForm f{0, std::vector<BigRational>(n_), 2 * simplex_monomial_integral(b)};
    for (std::size_t k = 0; k < n_; ++k) {
      if (ranks_[k] < 2) continue;
      accumulate(f, density_integral(bumped(b, k, -1), all_, n_), BigRational(ranks_[k] * (ranks_[k] - 1)));
    }
    accumulate(f, facets(extra));
    return f;
  }

  Exps unit(std::size_t j) const {
    Exps e(n_);
    e[j] = 1;
    return e;
  }

  std::size_t size() const { return n_; }

 private:
  std::vector<int> ranks_;
  std::size_t n_;
  std::vector<std::size_t> all_;
};

DirectForms build(const std::vector<int>& ranks) {
  const FormBuilder b(ranks);
  const std::size_t n = b.size();
  const Exps zero(n);
  DirectForms f;
  f.volume = b.bulk(zero);
  f.scalar_total = b.scalar(zero);
  f.facet_total = b.facets(zero);
  for (std::size_t j = 0; j < n; ++j) {
    f.moment.push_back(b.bulk(b.unit(j)));
    f.scalar_moment.push_back(b.scalar(b.unit(j)));
    f.facet_moment.push_back(b.facets(b.unit(j)));
    std::vector<LinearForm> row;
    for (std::size_t k = 0; k < n; ++k) {
      Exps e = b.unit(j);
      e[k] += 1;
      row.push_back(b.bulk(e));
    }
    f.second.push_back(std::move(row));
  }
  return f;
}

}  // namespace

const DirectForms& direct_forms(const std::vector<int>& ranks) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::unique_ptr<const DirectForms>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(ranks); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const DirectForms>(build(ranks));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(ranks, std::move(built));
  return *it->second;
}

NumericTable evaluate(const SymbolicTable& table, const BigRational& c) {
  NumericTable t;
  t.c = c;
  t.volume = table.volume.eval(c);
  t.scalar_total = table.scalar_total.eval(c);
  for (std::size_t j = 0; j < table.moment.size(); ++j) {
    t.moment.push_back(table.moment[j].eval(c));
    t.scalar_moment.push_back(table.scalar_moment[j].eval(c));
    std::vector<BigRational> row;
    for (const auto& p : table.second[j]) row.push_back(p.eval(c));
    t.second.push_back(std::move(row));
  }
  return t;
}

}  // namespace futaki::moments
