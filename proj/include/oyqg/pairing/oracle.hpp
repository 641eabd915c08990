#pragma once

#include "oyqg/pairing/pairing.hpp"

namespace oyqg {

/// Independent evaluation of the Hopf pairing from generator values alone,
/// expanding literal coproducts:
///   <y w'_a, X> = sum <y, X_(1)> <w'_a, X_(2)>,
///   <Y, X' e_j> = sum <Y_(1), e_j> <Y_(2), X'>,
/// with <w'_a, w_c> = chi(a, c), <f_j, e_j> = -1/(q_j - q_j^{-1}) and every
/// other generator pair zero.
template <ScalarField F>
class LiteralPairing {
 public:
  using Scalar = typename F::Scalar;
  using Elem = Element<Scalar>;

  explicit LiteralPairing(const QuantumGroup<F>& U) : U_(U) {}

  Scalar pair(const Elem& y, const Elem& x) const {
    Scalar acc = U_.field().zero();
    for (const auto& [my, cy] : y.terms())
      for (const auto& [mx, cx] : x.terms()) acc += cy * cx * pair_monomials(my, mx);
    return acc;
  }

  /// y = f-word w'_a, x = w_b e-word.
  Scalar pair_monomials(const Monomial& y, const Monomial& x) const {
    if (!vec_is_zero(y.b) || !y.e.empty() || !vec_is_zero(x.a) || !x.f.empty())
      throw std::invalid_argument("literal pair: arguments must lie in U^{<=0} and U^{>=0}");
    if (word_content(y.f) != word_content(x.e)) return U_.field().zero();
    if (!vec_is_zero(y.a)) {
      Scalar acc = U_.field().zero();
      const Monomial yf{y.f, {}, {}, {}};
      const auto dx = U_.coproduct(Elem::single(x, U_.field().one()));
      for (const auto& [key, c] : dx.terms()) {
        if (!key[1].is_torus() || !vec_is_zero(key[1].a)) continue;
        Scalar v = pair_monomials(yf, key[0]);
        if (!v.is_zero()) acc += c * v * U_.chi(y.a, key[1].b);
      }
      return acc;
    }
    if (y.f.empty()) return U_.field().one();  // x = w_b by the content check
    if (y.f.size() == 1 && vec_is_zero(x.b)) return -U_.hden(y.f[0]);
    const Monomial rest{{}, {}, x.b, x.e.substr(0, x.e.size() - 1)};
    const Monomial last{{}, {}, {}, x.e.substr(x.e.size() - 1)};
    Scalar acc = U_.field().zero();
    const auto dy = U_.coproduct(Elem::single(y, U_.field().one()));
    for (const auto& [key, c] : dy.terms()) {
      if (key[0].f.size() != 1) continue;
      Scalar v = pair_monomials(key[0], last);
      if (v.is_zero()) continue;
      Scalar w = pair_monomials(key[1], rest);
      if (!w.is_zero()) acc += c * v * w;
    }
    return acc;
  }

 private:
  const QuantumGroup<F>& U_;
};

}  // namespace oyqg
