#pragma once

#include "oyqg/coeff/modular.hpp"

#include <concepts>

namespace oyqg {

/// Scalar backends. Everything above the coefficient layer is templated on
/// one of these; the algebra only builds monomials q^{e0/r} prod t^{ek/r}
/// and integers, then uses field arithmetic.
template <class F>
concept ScalarField = requires(const F& f, const typename F::Scalar& a, const Exponent& e) {
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.from_int(1L) } -> std::same_as<typename F::Scalar>;
  { f.monomial(e) } -> std::same_as<typename F::Scalar>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.render(a) } -> std::same_as<std::string>;
  { f.vars() } -> std::same_as<const VarSet&>;
  { a + a } -> std::same_as<typename F::Scalar>;
  { a - a } -> std::same_as<typename F::Scalar>;
  { a * a } -> std::same_as<typename F::Scalar>;
  { a / a } -> std::same_as<typename F::Scalar>;
  { -a } -> std::same_as<typename F::Scalar>;
};

class ExactField {
 public:
  using Scalar = ParamScalar;
  static constexpr bool kExact = true;

  explicit ExactField(VarSet vs, bool t_to_one = false) : vs_(vs), t_to_one_(t_to_one) {}

  Scalar zero() const { return {}; }
  Scalar one() const { return Scalar(1L); }
  Scalar from_int(long v) const { return Scalar(v); }
  Scalar rational(long n, long d) const { return ParamScalar::rational(n, d); }
  Scalar monomial(const Exponent& e) const {
    if (!t_to_one_) return ParamScalar::monomial(e);
    Exponent only_q{};
    only_q[0] = e[0];
    return ParamScalar::monomial(only_q);
  }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  std::string render(const Scalar& a) const { return oyqg::render(a, vs_); }
  const VarSet& vars() const { return vs_; }
  bool t_specialized() const { return t_to_one_; }

  /// Identity on exact values; exists so code can move values between backends.
  Scalar lift(const ParamScalar& s) const {
    if (!t_to_one_) return s;
    return ParamScalar::fraction(drop_t(s.num()), drop_t(s.den()));
  }

 private:
  VarSet vs_;
  bool t_to_one_;

  static LaurentPoly drop_t(const LaurentPoly& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Exponent e{};
      e[0] = t.exp[0];
      ts.push_back(Term{e, t.coef});
    }
    return LaurentPoly::from_terms(std::move(ts));
  }
};

class ModField {
 public:
  using Scalar = ModScalar;
  static constexpr bool kExact = false;

  explicit ModField(ModPoint pt) : pt_(std::move(pt)) {}
  ModField(const VarSet& vs, std::uint64_t prime, std::uint64_t seed) : pt_(vs, prime, seed) {}

  Scalar zero() const { return {0, pt_.prime()}; }
  Scalar one() const { return {1, pt_.prime()}; }
  Scalar from_int(long v) const {
    const std::uint64_t m = pt_.prime();
    const std::uint64_t a = v >= 0 ? static_cast<std::uint64_t>(v) % m
                                   : (m - static_cast<std::uint64_t>(-(v + 1)) % m - 1) % m;
    return {a, m};
  }
  Scalar rational(long n, long d) const { return from_int(n) / from_int(d); }
  Scalar monomial(const Exponent& e) const { return pt_.monomial(e); }
  bool is_zero(const Scalar& a) const { return a.is_zero(); }
  std::string render(const Scalar& a) const { return std::to_string(a.v); }
  const VarSet& vars() const { return pt_.vars(); }
  const ModPoint& point() const { return pt_; }

  Scalar lift(const ParamScalar& s) const { return pt_.eval(s); }

 private:
  ModPoint pt_;
};

static_assert(ScalarField<ExactField>);
static_assert(ScalarField<ModField>);

}  // namespace oyqg
