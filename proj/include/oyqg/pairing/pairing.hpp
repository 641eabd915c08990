#pragma once

#include "oyqg/algebra/linalg.hpp"
#include "oyqg/algebra/quantum_group.hpp"

namespace oyqg {

/// Skew-Hopf pairing U^{<=0} x U^{>=0} -> field with
///   <y, x x'> = <Delta(y), x' (x) x>,  <y y', x> = <y (x) y', Delta(x)>,
///   <w'_a, w_b> = chi(a, b),  <f_i, e_i> = -1/(q_i - q_i^{-1}),
/// and the Rosso form on U built from it.
template <ScalarField F>
class Pairing {
 public:
  using Scalar = typename F::Scalar;
  using Elem = Element<Scalar>;
  using Mat = Matrix<Scalar>;

  /// Dual bases of U^-_{-mu} and U^+_mu: <v_i, u_j> = delta_ij, u_j the e-basis words.
  struct DualBasis {
    std::vector<Word> u;     // e-basis words
    std::vector<Elem> v;     // f-side duals
    Mat coeffs;              // v_i = sum_k coeffs(i,k) fbasis_k
  };

  explicit Pairing(const QuantumGroup<F>& U) : U_(U) {}

  const QuantumGroup<F>& algebra() const { return U_; }

  /// <f-word y, e-word x> via <f_i y', x> = c_i sum_{p: x_p = i} chi(a_i, content(x_<p)) <y', x without p>.
  Scalar pair_words(const Word& y, const Word& x) const {
    if (y.size() != x.size() || word_content(y) != word_content(x)) return U_.field().zero();
    if (y.empty()) return U_.field().one();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = word_cache_.find({y, x});
      if (it != word_cache_.end()) return it->second;
    }
    const int i = y[0];
    const Word rest = y.substr(1);
    Scalar acc = U_.field().zero();
    Vec before{};
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (x[p] == i) {
        Scalar sub = pair_words(rest, x.substr(0, p) + x.substr(p + 1));
        if (!sub.is_zero()) acc += U_.chi(unit_vec(i), before) * sub;
      }
      before[static_cast<unsigned char>(x[p])] += 1;
    }
    acc = -(U_.hden(i) * acc);
    std::lock_guard<std::mutex> lock(mu_);
    word_cache_.emplace(std::make_pair(y, x), acc);
    return acc;
  }

  /// <y w'_a, w_b x> = chi(a + nu, b) <y, x> for y in U^-_{-nu}.
  Scalar pair_monomials(const Monomial& y, const Monomial& x) const {
    if (!vec_is_zero(y.b) || !y.e.empty() || !vec_is_zero(x.a) || !x.f.empty())
      throw std::invalid_argument("pair: arguments must lie in U^{<=0} and U^{>=0}");
    Scalar w = pair_words(y.f, x.e);
    if (w.is_zero()) return w;
    return w * U_.chi(vec_add(y.a, word_content(y.f)), x.b);
  }

  Scalar pair(const Elem& y, const Elem& x) const {
    Scalar acc = U_.field().zero();
    for (const auto& [my, cy] : y.terms())
      for (const auto& [mx, cx] : x.terms()) {
        Scalar v = pair_monomials(my, mx);
        if (!v.is_zero()) acc += cy * cx * v;
      }
    return acc;
  }

  Scalar torus_pair(const Vec& eta, const Vec& phi) const { return U_.chi(eta, phi); }

  /// Rows: f-basis words of mu, columns: e-basis words of mu.
  Mat gram(const Vec& mu) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = gram_cache_.find(mu);
      if (it != gram_cache_.end()) return it->second;
    }
    const auto& bf = U_.basis(Side::F, mu).basis;
    const auto& be = U_.basis(Side::E, mu).basis;
    Mat g(static_cast<int>(bf.size()), static_cast<int>(be.size()), U_.field().zero());
    for (std::size_t i = 0; i < bf.size(); ++i)
      for (std::size_t j = 0; j < be.size(); ++j) g.at(static_cast<int>(i), static_cast<int>(j)) = pair_words(bf[i], be[j]);
    std::lock_guard<std::mutex> lock(mu_);
    gram_cache_.emplace(mu, g);
    return g;
  }

  /// Installs a Gram matrix computed elsewhere (the on-disk cache).
  void preload_gram(const Vec& mu, Mat g) const {
    std::lock_guard<std::mutex> lock(mu_);
    gram_cache_.insert_or_assign(mu, std::move(g));
  }

  std::map<Vec, Mat> computed_grams() const {
    std::lock_guard<std::mutex> lock(mu_);
    return gram_cache_;
  }

  Scalar gram_det(const Vec& mu) const { return determinant(gram(mu), U_.field().one()); }

  const DualBasis& dual_basis(const Vec& mu) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = dual_cache_.find(mu);
      if (it != dual_cache_.end()) return *it->second;
    }
    auto made = std::make_unique<DualBasis>(build_dual(mu));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = dual_cache_.emplace(mu, std::move(made));
    return *it->second;
  }

  /// <y1 w'_{a1} w_{b1} x1 | y2 w'_{a2} w_{b2} x2>
  ///   = q^{2(rho,nu1)} <y2,x1> <y1,x2> chi(a2 + nu2, b1) chi(a1 + nu1, b2),
  /// y_k in U^-_{-nu_k}, x_k in U^+_{mu_k}; zero unless nu1 = mu2 and mu1 = nu2.
  Scalar rosso(const Elem& u, const Elem& v) const {
    Scalar acc = U_.field().zero();
    std::map<std::pair<Vec, Vec>, std::vector<const std::pair<const Monomial, Scalar>*>> by_degree;
    for (const auto& t : v.terms()) by_degree[{t.first.f_content(), t.first.e_content()}].push_back(&t);
    for (const auto& [m1, c1] : u.terms()) {
      const Vec nu1 = m1.f_content(), mu1 = m1.e_content();
      auto it = by_degree.find({mu1, nu1});
      if (it == by_degree.end()) continue;
      for (const auto* t : it->second) {
        const Monomial& m2 = t->first;
        Scalar x = pair_words(m2.f, m1.e);
        if (x.is_zero()) continue;
        Scalar y = pair_words(m1.f, m2.e);
        if (y.is_zero()) continue;
        Exponent ex = U_.cartan().q_rho(nu1, 2);
        ex = exp_add(ex, U_.cartan().chi(vec_add(m2.a, mu1), m1.b));
        ex = exp_add(ex, U_.cartan().chi(vec_add(m1.a, nu1), m2.b));
        acc += c1 * t->second * x * y * U_.field().monomial(ex);
      }
    }
    return acc;
  }

 private:
  const QuantumGroup<F>& U_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Word, Word>, Scalar> word_cache_;
  mutable std::map<Vec, std::unique_ptr<DualBasis>> dual_cache_;
  mutable std::map<Vec, Mat> gram_cache_;

  DualBasis build_dual(const Vec& mu) const {
    DualBasis d;
    const auto& bf = U_.basis(Side::F, mu).basis;
    d.u = U_.basis(Side::E, mu).basis;
    auto inv = inverse(gram(mu), U_.field().zero(), U_.field().one());
    if (!inv) {
      if constexpr (F::kExact) throw std::logic_error("degenerate pairing in degree " + std::to_string(vec_height(mu)));
      else throw RetryPoint();
    }
    d.coeffs = *inv;
    for (int i = 0; i < d.coeffs.rows; ++i) {
      Elem v;
      for (int k = 0; k < d.coeffs.cols; ++k) v.add(Monomial{bf[k], {}, {}, {}}, d.coeffs.at(i, k));
      d.v.push_back(std::move(v));
    }
    return d;
  }
};

// ---- characters of U^0 ---------------------------------------------------------

/// rho^lam(w'_a w_b) = chi(a, lam)^{-1} chi(lam, b): the torus eigenvalue on a
/// vector of weight lam.
template <ScalarField F>
typename F::Scalar rho_char(const QuantumGroup<F>& U, const Weight& lam, const Vec& a, const Vec& b) {
  const auto& c = U.cartan();
  Exponent ex = exp_add(exp_neg(c.chi(c.from_root(a), lam)), c.chi(lam, c.from_root(b)));
  return U.field().monomial(ex);
}

/// rho^{lam,mu}(w'_a w_b) = rho^lam(w'_a w_b) q^{(a + b, mu)}.
template <ScalarField F>
typename F::Scalar rho_char2(const QuantumGroup<F>& U, const Weight& lam, const Weight& mu, const Vec& a,
                             const Vec& b) {
  const auto& c = U.cartan();
  Exponent ex = exp_add(exp_neg(c.chi(c.from_root(a), lam)), c.chi(lam, c.from_root(b)));
  ex[0] += static_cast<std::int32_t>(c.bil_scaled(c.from_root(vec_add(a, b)), mu));
  return U.field().monomial(ex);
}

/// kappa_{a,b}(lam, mu) = rho^{lam,mu}(w'_a w_b).
template <ScalarField F>
typename F::Scalar kappa_char(const QuantumGroup<F>& U, const Vec& a, const Vec& b, const Weight& lam,
                              const Weight& mu) {
  return rho_char2(U, lam, mu, a, b);
}

/// chi_{eta,phi}(eta', phi') = <w'_eta, w_phi'> <w'_eta', w_phi>.
template <ScalarField F>
typename F::Scalar chi_char(const QuantumGroup<F>& U, const Vec& eta, const Vec& phi, const Vec& eta2,
                            const Vec& phi2) {
  return U.chi(eta, phi2) * U.chi(eta2, phi);
}

}  // namespace oyqg
