#pragma once

#include "oyqg/cartan/cartan.hpp"

#include <functional>

namespace oyqg {

inline constexpr long kMaxWeylOrder = 100000;

/// Order of the Weyl group from the type, checked before enumeration.
inline long weyl_order(const CartanDatum& c) {
  const char fam = c.name()[0];
  const long n = c.rank();
  long fact = 1;
  for (long k = 2; k <= n + (fam == 'A' ? 1 : 0); ++k) fact *= k;
  switch (fam) {
    case 'A': return fact;
    case 'B':
    case 'C': return (1L << n) * fact;
    case 'D': return (1L << (n - 1)) * fact;
    case 'E': return 51840;
    case 'F': return 1152;
    case 'G': return 12;
    default: return -1;
  }
}

/// Element of W, acting on simple-root coordinates (and on scaled weights).
struct WeylElement {
  std::vector<int> m;     // row-major rank x rank
  std::vector<int> word;  // reduced word in simple reflections, rightmost acts first
  int length() const { return static_cast<int>(word.size()); }
};

class WeylGroup {
 public:
  explicit WeylGroup(const CartanDatum& c) : n_(c.rank()) {
    const long order = weyl_order(c);
    if (order < 0 || order > kMaxWeylOrder)
      throw UnsupportedType("Weyl group order " + std::to_string(order) + " exceeds " + std::to_string(kMaxWeylOrder));
    for (int i = 0; i < n_; ++i) {
      std::vector<int> s(n_ * n_, 0);
      for (int k = 0; k < n_; ++k) s[k * n_ + k] = 1;
      for (int j = 0; j < n_; ++j) s[i * n_ + j] -= c.a(i, j);
      gens_.push_back(std::move(s));
    }
    std::map<std::vector<int>, std::size_t> index;
    std::vector<int> id(n_ * n_, 0);
    for (int k = 0; k < n_; ++k) id[k * n_ + k] = 1;
    elems_.push_back({id, {}});
    index.emplace(id, 0);
    for (std::size_t head = 0; head < elems_.size(); ++head) {
      for (int i = 0; i < n_; ++i) {
        std::vector<int> prod = mul(gens_[i], elems_[head].m);
        if (index.count(prod)) continue;
        std::vector<int> w = elems_[head].word;
        w.insert(w.begin(), i);
        index.emplace(prod, elems_.size());
        elems_.push_back({std::move(prod), std::move(w)});
        if (static_cast<long>(elems_.size()) > kMaxWeylOrder) throw UnsupportedType("Weyl group too large");
      }
    }
  }

  std::size_t order() const { return elems_.size(); }
  const std::vector<WeylElement>& elements() const { return elems_; }

  Vec act(const WeylElement& w, const Vec& v) const {
    Vec out{};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i] += w.m[i * n_ + j] * v[j];
    return out;
  }
  Weight act(const WeylElement& w, const Weight& v) const { return {act(w, v.s)}; }

  Vec reflect(int i, const Vec& v) const {
    Vec out = v;
    for (int j = 0; j < n_; ++j) out[i] += (gens_[i][i * n_ + j] - (i == j ? 1 : 0)) * v[j];
    return out;
  }

  std::set<Weight> orbit(const Weight& w) const {
    std::set<Weight> out;
    for (const auto& e : elems_) out.insert(act(e, w));
    return out;
  }

  std::size_t stabilizer_size(const Weight& w) const { return order() / orbit(w).size(); }

 private:
  int n_;
  std::vector<std::vector<int>> gens_;
  std::vector<WeylElement> elems_;

  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        if (!a[i * n_ + k]) continue;
        for (int j = 0; j < n_; ++j) c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
      }
    return c;
  }
};

/// Weights of L(lam) with multiplicities (Freudenthal), lam dominant.
inline std::map<Weight, long> freudenthal(const CartanDatum& c, const Weight& lam) {
  if (!c.is_dominant(lam)) throw std::invalid_argument("freudenthal: weight not dominant");
  const int n = c.rank();
  // lowest weight: reflect until antidominant
  Vec low = lam.s;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      long s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<long>(c.a(i, j)) * low[j];
      if (s > 0) {
        low[i] -= static_cast<int>(s);
        moved = true;
      }
    }
  }
  const Vec bound = c.to_root(Weight{vec_sub(lam.s, low)});
  const Weight rho = c.rho();
  const mpq_class top = c.bil_q(lam + rho, lam + rho);
  std::map<Weight, long> mult;
  mult[lam] = 1;
  // enumerate nu in the box by height
  std::vector<std::vector<Vec>> by_height(vec_height(bound) + 1);
  std::function<void(int, Vec&)> rec = [&](int i, Vec& v) {
    if (i == n) {
      by_height[vec_height(v)].push_back(v);
      return;
    }
    for (int k = 0; k <= bound[i]; ++k) {
      v[i] = k;
      rec(i + 1, v);
    }
    v[i] = 0;
  };
  Vec v{};
  rec(0, v);
  for (std::size_t h = 1; h < by_height.size(); ++h) {
    for (const Vec& nu : by_height[h]) {
      const Weight mu = lam - c.from_root(nu);
      mpq_class num = 0;
      for (const Vec& a : c.positive_roots()) {
        const Weight ar = c.from_root(a);
        for (Weight x = mu + ar; c.dominated(x, lam); x = x + ar) {
          auto it = mult.find(x);
          if (it == mult.end()) continue;
          num += 2 * it->second * c.bil_q(x, ar);
        }
      }
      const mpq_class den = top - c.bil_q(mu + rho, mu + rho);
      if (num == 0 || den == 0) continue;
      mpq_class m = num / den;
      if (m.get_den() != 1) throw std::logic_error("freudenthal: non-integral multiplicity");
      mult[mu] = mpz_get_si(m.get_num_mpz_t());
    }
  }
  return mult;
}

inline mpz_class weyl_dimension(const CartanDatum& c, const Weight& lam) {
  const Weight rho = c.rho();
  mpq_class prod = 1;
  for (const Vec& a : c.positive_roots()) {
    const Weight ar = c.from_root(a);
    prod *= c.bil_q(lam + rho, ar) / c.bil_q(rho, ar);
  }
  if (prod.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral");
  return prod.get_num();
}

}  // namespace oyqg
