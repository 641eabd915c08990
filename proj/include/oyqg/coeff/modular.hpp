#pragma once

#include "oyqg/coeff/param_scalar.hpp"

#include <random>

namespace oyqg {

/// Raised when a modular computation divides by a residue that vanishes at
/// the current evaluation point. The caller redraws the point.
struct RetryPoint : std::runtime_error {
  RetryPoint() : std::runtime_error("denominator vanishes at evaluation point") {}
};

inline constexpr std::array<std::uint64_t, 3> kDefaultPrimes = {
    2305843009213693951ULL,  // 2^61 - 1
    4611686018427387847ULL,  // 2^62 - 57
    1152921504606846883ULL,  // 2^60 - 93
};

/// Residue modulo p. p == 0 only for a default-constructed zero, which
/// adopts the modulus of whatever it is combined with.
struct ModScalar {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  ModScalar() = default;
  ModScalar(std::uint64_t value, std::uint64_t modulus) : v(value), p(modulus) {}

  bool is_zero() const { return v == 0; }

  static std::uint64_t join(const ModScalar& a, const ModScalar& b) {
    if (a.p && b.p && a.p != b.p) throw std::logic_error("ModScalar: mixed moduli");
    return a.p ? a.p : b.p;
  }

  ModScalar operator-() const { return {v ? p - v : 0, p}; }

  friend ModScalar operator+(const ModScalar& a, const ModScalar& b) {
    std::uint64_t p = join(a, b);
    if (!p) return {};
    std::uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return {s, p};
  }
  friend ModScalar operator-(const ModScalar& a, const ModScalar& b) { return a + (-b); }
  friend ModScalar operator*(const ModScalar& a, const ModScalar& b) {
    std::uint64_t p = join(a, b);
    if (!p) return {};
    return {detail::mulmod_u64(a.v, b.v, p), p};
  }
  ModScalar inverse() const {
    if (v == 0) throw RetryPoint();
    return {detail::powmod_u64(v, p - 2, p), p};
  }
  friend ModScalar operator/(const ModScalar& a, const ModScalar& b) { return a * b.inverse(); }

  ModScalar& operator+=(const ModScalar& b) { return *this = *this + b; }
  ModScalar& operator-=(const ModScalar& b) { return *this = *this - b; }
  ModScalar& operator*=(const ModScalar& b) { return *this = *this * b; }
  ModScalar& operator/=(const ModScalar& b) { return *this = *this / b; }

  friend bool operator==(const ModScalar& a, const ModScalar& b) { return a.v == b.v; }
};

/// Evaluation point: residues for q^{1/r} and each t_{ij}^{1/r}.
class ModPoint {
 public:
  ModPoint(const VarSet& vs, std::uint64_t prime, std::uint64_t seed) : vs_(vs), p_(prime), seed_(seed) {
    std::mt19937_64 rng(seed ^ (prime * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<std::uint64_t> dist(2, prime - 2);
    vals_.fill(1);
    invs_.fill(1);
    for (int k = 0; k < vs.num_vars(); ++k) {
      vals_[k] = dist(rng);
      invs_[k] = detail::powmod_u64(vals_[k], p_ - 2, p_);
    }
  }

  std::uint64_t prime() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  const VarSet& vars() const { return vs_; }
  std::uint64_t value(int var) const { return vals_[var]; }

  /// Fix every t_{ij} to 1, which specializes to the one-parameter algebra.
  void specialize_t_to_one() {
    for (int k = 1; k < vs_.num_vars(); ++k) vals_[k] = invs_[k] = 1;
  }

  ModScalar monomial(const Exponent& e) const {
    std::uint64_t r = 1;
    for (int k = 0; k < vs_.num_vars(); ++k) {
      if (e[k] > 0) r = detail::mulmod_u64(r, detail::powmod_u64(vals_[k], e[k], p_), p_);
      else if (e[k] < 0) r = detail::mulmod_u64(r, detail::powmod_u64(invs_[k], -e[k], p_), p_);
    }
    return {r, p_};
  }

  ModScalar eval(const LaurentPoly& poly) const {
    ModScalar acc(0, p_);
    for (const auto& t : poly.terms()) {
      ModScalar c(mpz_fdiv_ui(t.coef.get_mpz_t(), p_), p_);
      acc += c * monomial(t.exp);
    }
    return acc;
  }

  /// Throws RetryPoint when the denominator vanishes here.
  ModScalar eval(const ParamScalar& s) const {
    if (s.den_is_one()) return eval(s.num());
    return eval(s.num()) / eval(s.den());
  }

 private:
  VarSet vs_;
  std::uint64_t p_;
  std::uint64_t seed_;
  std::array<std::uint64_t, kMaxVars> vals_{};
  std::array<std::uint64_t, kMaxVars> invs_{};
};

/// Schwartz-Zippel zero test on k points; each point uses the next prime in
/// the list (cycling) with a seed derived from `seed`. A point where the
/// denominator vanishes is redrawn.
inline bool probably_zero(const ParamScalar& s, const VarSet& vs, int k = 3, std::uint64_t seed = 1) {
  for (int i = 0; i < k; ++i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      ModPoint pt(vs, kDefaultPrimes[i % kDefaultPrimes.size()], seed * 1000003ULL + i * 7919ULL + attempt);
      try {
        if (!pt.eval(s).is_zero()) return false;
        break;
      } catch (const RetryPoint&) {
        if (attempt > 16) throw;
      }
    }
  }
  return true;
}

}  // namespace oyqg
