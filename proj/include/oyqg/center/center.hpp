#pragma once

#include "oyqg/module/simple_module.hpp"

#include <optional>

namespace oyqg {

struct NotInRootLattice : std::invalid_argument {
  NotInRootLattice() : std::invalid_argument("highest weight is not in the root lattice") {}
};

struct CentralityReport {
  bool central = true;
  std::string witness;  // first generator failing to commute, empty when central
};

/// Exact centrality: [e_i, z] = [f_i, z] = 0 and z commutes with every w_i, w'_i.
template <ScalarField F>
CentralityReport is_central(const QuantumGroup<F>& U, const Element<typename F::Scalar>& z) {
  auto name = [](const char* g, int i) { return std::string(g) + std::to_string(i + 1); };
  for (int i = 0; i < U.rank(); ++i) {
    if (!U.commutator(U.e(i), z).is_zero()) return {false, name("e", i)};
    if (!U.commutator(U.f(i), z).is_zero()) return {false, name("f", i)};
    if (!U.commutator(U.omega(unit_vec(i)), z).is_zero()) return {false, name("omega", i)};
    if (!U.commutator(U.omega_p(unit_vec(i)), z).is_zero()) return {false, name("omega'", i)};
  }
  return {};
}

template <ScalarField F>
class Center {
 public:
  using Scalar = typename F::Scalar;
  using Elem = Element<Scalar>;
  using Module = SimpleModule<F>;

  explicit Center(const QuantumGroup<F>& U) : U_(U), P_(U), W_(U.cartan()) {}

  const QuantumGroup<F>& algebra() const { return U_; }
  const Pairing<F>& pairing() const { return P_; }
  const WeylGroup& weyl() const { return W_; }

  /// z_lam = sum_{tau, mu} sum_{k,l} q^{-2(rho, tau + mu)} chi(mu, tau + mu) tr(v_k u_l P_tau)
  ///         v_l w'_tau w_{-(tau + mu)} u_k,
  /// over weights tau of L(lam), mu in Q+ with tau + mu a weight, {u_l} the
  /// e-basis of degree mu and {v_k} its dual.
  Elem central_element(const Module& M, std::optional<int> mu_height = std::nullopt) const {
    const CartanDatum& c = U_.cartan();
    if (!c.in_root_lattice(M.highest_weight())) throw NotInRootLattice();
    Elem z;
    for (const auto& tau_space : M.spaces()) {
      const Vec tau = c.to_root(tau_space.weight);
      std::vector<Vec> degrees;
      if (mu_height) {
        // every mu in Q+ up to the given height; the trace vanishes unless tau + mu is a weight
        U_.enumerate_degrees(*mu_height, [&](const Vec& mu) { degrees.push_back(mu); });
      } else {
        for (const auto& top_space : M.spaces()) {
          const Weight diff = top_space.weight - tau_space.weight;
          if (!c.in_root_lattice(diff)) continue;
          const Vec mu = c.to_root(diff);
          if (vec_nonneg(mu)) degrees.push_back(mu);
        }
      }
      for (const Vec& mu : degrees) {
        const auto& dual = P_.dual_basis(mu);
        Exponent ex = c.q_rho(vec_add(tau, mu), -2);
        ex = exp_add(ex, c.chi(mu, vec_add(tau, mu)));
        const Scalar pre = U_.field().monomial(ex);
        for (std::size_t l = 0; l < dual.u.size(); ++l) {
          // images of the tau weight space under u_l
          std::vector<typename Module::SVec> up;
          for (std::size_t m = 0; m < tau_space.tags.size(); ++m)
            up.push_back(M.apply_word(Side::E, dual.u[l], M.basis_vector(tau_space.offset + static_cast<int>(m))));
          for (std::size_t k = 0; k < dual.v.size(); ++k) {
            Scalar tr = U_.field().zero();
            for (std::size_t m = 0; m < up.size(); ++m) {
              auto back = M.act(dual.v[k], up[m]);
              auto it = back.find(tau_space.offset + static_cast<int>(m));
              if (it != back.end()) tr += it->second;
            }
            if (tr.is_zero()) continue;
            const Scalar coef = pre * tr;
            for (const auto& [fm, fx] : dual.v[l].terms())
              z.add(Monomial{fm.f, tau, vec_neg(vec_add(tau, mu)), dual.u[k]}, coef * fx);
          }
        }
      }
    }
    return z;
  }

  /// u with rosso(u, v) = f(v m) for all v, where m is basis vector m_idx
  /// of weight tau in Q and f the coordinate functional of f_idx.
  Elem realize_coefficient(const Module& M, int f_idx, int m_idx) const {
    const CartanDatum& c = U_.cartan();
    const Weight tau_w = M.weight_of(m_idx);
    if (!c.in_root_lattice(tau_w)) throw NotInRootLattice();
    const Vec tau = c.to_root(tau_w);
    const Weight tau2 = M.weight_of(f_idx);
    Elem u;
    for (const auto& mid : M.spaces()) {
      const Weight d1 = mid.weight - tau_w;   // nu1, degree of the e-part acting first
      const Weight d2 = mid.weight - tau2;    // mu1, degree of the f-part
      if (!c.in_root_lattice(d1) || !c.in_root_lattice(d2)) continue;
      const Vec nu1 = c.to_root(d1), mu1 = c.to_root(d2);
      if (!vec_nonneg(nu1) || !vec_nonneg(mu1)) continue;
      const auto& dn = P_.dual_basis(nu1);
      const auto& dm = P_.dual_basis(mu1);
      Exponent ex = c.q_rho(nu1, -2);
      ex = exp_add(ex, c.chi(mu1, vec_add(tau, nu1)));
      const Scalar pre = U_.field().monomial(ex);
      for (std::size_t l = 0; l < dn.u.size(); ++l) {
        const auto up = M.apply_word(Side::E, dn.u[l], M.basis_vector(m_idx));
        if (up.empty()) continue;
        for (std::size_t k = 0; k < dm.v.size(); ++k) {
          auto img = M.act(dm.v[k], up);
          auto it = img.find(f_idx);
          if (it == img.end()) continue;
          const Scalar coef = pre * it->second;
          for (const auto& [fm, fx] : dn.v[l].terms())
            u.add(Monomial{fm.f, tau, vec_neg(vec_add(tau, nu1)), dm.u[k]}, coef * fx);
        }
      }
    }
    return u;
  }

  /// Harish-Chandra image xi(z) = gamma^{-rho}(pi(z)): keep the torus part and
  /// twist w'_a w_b by rho^{-rho}(w'_a w_b). Requires degree zero.
  Elem hc_xi(const Elem& z) const {
    Elem out;
    const Weight mrho = -U_.cartan().rho();
    for (const auto& [m, c] : z.terms()) {
      if (m.f_content() != m.e_content()) throw std::invalid_argument("hc_xi: element is not of degree zero");
      if (!m.is_torus()) continue;
      out.add(m, c * rho_char(U_, mrho, m.a, m.b));
    }
    return out;
  }

  /// True when every term is w'_eta w_{-eta}.
  static bool is_flat(const Elem& u) {
    for (const auto& [m, c] : u.terms())
      if (!m.is_torus() || m.b != vec_neg(m.a)) return false;
    return true;
  }

  Elem weyl_act_flat(const WeylElement& w, const Elem& u) const {
    if (!is_flat(u)) throw std::invalid_argument("weyl_act_flat: element is not flat");
    Elem out;
    for (const auto& [m, c] : u.terms()) {
      const Vec eta = W_.act(w, m.a);
      out.add(Monomial{{}, eta, vec_neg(eta), {}}, c);
    }
    return out;
  }

  bool is_weyl_invariant(const Elem& u) const {
    for (const auto& w : W_.elements())
      if (!(weyl_act_flat(w, u) == u)) return false;
    return true;
  }

  /// av(lam) = (1/|W|) sum_w w'_{w lam} w_{-w lam}.
  Elem average(const Weight& lam) const {
    const Vec l = U_.cartan().to_root(lam);
    Elem out;
    const Scalar share = U_.field().one() / U_.field().from_int(static_cast<long>(W_.order()));
    for (const auto& w : W_.elements()) {
      const Vec eta = W_.act(w, l);
      out.add(Monomial{{}, eta, vec_neg(eta), {}}, share);
    }
    return out;
  }

  /// sum_mu dim L(lam)_mu w'_mu w_{-mu}, the expected xi(z_lam).
  Elem expected_xi(const Module& M) const {
    Elem out;
    for (const auto& [w, d] : M.weight_dims()) {
      const Vec mu = U_.cartan().to_root(w);
      out.add(Monomial{{}, mu, vec_neg(mu), {}}, U_.field().from_int(d));
    }
    return out;
  }

  struct Decomposition {
    std::map<Weight, Scalar> coeffs;  // av(lam) = sum coeffs[mu] xi(z_mu)
    Elem residual;                     // av(lam) - sum coeffs[mu] xi(z_mu)
  };

  /// Writes av(lam) in terms of xi(z_mu), mu <= lam dominant in Q, from
  ///   xi(z_lam) = sum_{mu dominant} dim L(lam)_mu |W mu| av(mu),
  /// and checks the identity with the actual central elements.
  Decomposition surjectivity_decompose(const Weight& lam) const {
    const CartanDatum& c = U_.cartan();
    if (!c.in_root_lattice(lam)) throw NotInRootLattice();
    std::map<Weight, std::map<Weight, Scalar>> av_in_xi;  // av(mu) -> coefficients
    std::map<Weight, Elem> xi_of;
    std::function<const std::map<Weight, Scalar>&(const Weight&)> solve = [&](const Weight& mu) -> const std::map<Weight, Scalar>& {
      auto it = av_in_xi.find(mu);
      if (it != av_in_xi.end()) return it->second;
      Module M(U_, mu);
      xi_of.emplace(mu, hc_xi(central_element(M)));
      std::map<Weight, Scalar> res;
      const Scalar orbit = U_.field().from_int(static_cast<long>(W_.orbit(mu).size()));
      res[mu] = U_.field().one() / orbit;
      for (const auto& [w, d] : M.weight_dims()) {
        if (w == mu || !c.is_dominant(w)) continue;
        const Scalar f = U_.field().from_int(d * static_cast<long>(W_.orbit(w).size())) / orbit;
        for (const auto& [nu, x] : solve(w)) res[nu] = res[nu] - f * x;
      }
      return av_in_xi.emplace(mu, std::move(res)).first->second;
    };
    Decomposition out;
    for (const auto& [nu, x] : solve(lam))
      if (!x.is_zero()) out.coeffs.emplace(nu, x);
    Elem acc = average(lam);
    for (const auto& [nu, x] : out.coeffs) acc = acc - x * xi_of.at(nu);
    out.residual = acc;
    return out;
  }

  /// Scalar by which z acts on M, if it acts by a scalar.
  std::optional<Scalar> eigenvalue(const Elem& z, const Module& M) const {
    std::optional<Scalar> val;
    for (int k = 0; k < M.dim(); ++k) {
      auto img = M.act(z, M.basis_vector(k));
      Scalar d = U_.field().zero();
      for (const auto& [idx, x] : img) {
        if (idx != k) return std::nullopt;
        d = x;
      }
      if (val && !(*val == d)) return std::nullopt;
      val = d;
    }
    return val;
  }

  /// rho^mu(pi(z)) for the highest weight mu of M.
  Scalar predicted_eigenvalue(const Elem& z, const Module& M) const {
    Scalar acc = U_.field().zero();
    for (const auto& [m, c] : z.terms())
      if (m.is_torus()) acc += c * rho_char(U_, M.highest_weight(), m.a, m.b);
    return acc;
  }

  struct TraceCheck {
    long checked = 0;
    long nonzero = 0;
    std::string witness;  // first failing test vector
    bool ok() const { return witness.empty(); }
  };

  /// rosso(z, v) == t_lam(v) for v = y w'_a w_b x over f/e-basis words y, x of
  /// equal degree in the window of M and the given torus exponents.
  TraceCheck verify_trace_realization(const Elem& z, const Module& M, const std::vector<std::pair<Vec, Vec>>& tori) const {
    const CartanDatum& c = U_.cartan();
    TraceCheck out;
    std::set<Vec> degrees;
    for (const auto& s1 : M.spaces())
      for (const auto& s2 : M.spaces()) {
        const Weight d = s2.weight - s1.weight;
        if (c.in_root_lattice(d) && vec_nonneg(c.to_root(d))) degrees.insert(c.to_root(d));
      }
    for (const Vec& mu : degrees)
      for (const Word& y : U_.basis(Side::F, mu).basis)
        for (const Word& x : U_.basis(Side::E, mu).basis)
          for (const auto& [a, b] : tori) {
            const Elem v = Elem::single(Monomial{y, a, b, x}, U_.field().one());
            const Scalar lhs = P_.rosso(z, v);
            const Scalar rhs = M.quantum_trace(v);
            ++out.checked;
            if (!rhs.is_zero()) ++out.nonzero;
            if (!(lhs == rhs) && out.witness.empty())
              out.witness = "f" + word_text(y) + " e" + word_text(x) + " at torus exponents";
          }
    return out;
  }

 private:
  const QuantumGroup<F>& U_;
  Pairing<F> P_;
  WeylGroup W_;
};

}  // namespace oyqg
