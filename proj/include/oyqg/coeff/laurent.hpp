#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oyqg {

// Variable 0 is q, the rest are the t_{ij}. Exponents are stored scaled by
// the lattice denominator r of the VarSet, so q^{1/r} has exponent 1.
inline constexpr std::size_t kMaxVars = 16;
using Exponent = std::array<std::int32_t, kMaxVars>;

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent c;
  for (std::size_t k = 0; k < kMaxVars; ++k) c[k] = a[k] + b[k];
  return c;
}

inline Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent c;
  for (std::size_t k = 0; k < kMaxVars; ++k) c[k] = a[k] - b[k];
  return c;
}

inline Exponent exp_neg(const Exponent& a) {
  Exponent c;
  for (std::size_t k = 0; k < kMaxVars; ++k) c[k] = -a[k];
  return c;
}

inline bool exp_is_zero(const Exponent& a) {
  return std::all_of(a.begin(), a.end(), [](std::int32_t v) { return v == 0; });
}

struct Term {
  Exponent exp;
  mpz_class coef;
};

/// Laurent polynomial over Z in kMaxVars variables.
/// Invariant: terms strictly decreasing in lex order of exponents, no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const mpz_class& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back(Term{Exponent{}, c});
    return p;
  }

  static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back(Term{e, c});
    return p;
  }

  static LaurentPoly from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].coef == 1 && exp_is_zero(terms_[0].exp);
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_is_zero(terms_[0].exp));
  }

  /// True when no variable other than q occurs.
  bool only_q() const {
    for (const auto& t : terms_)
      for (std::size_t k = 1; k < kMaxVars; ++k)
        if (t.exp[k] != 0) return false;
    return true;
  }

  const Term& leading() const { return terms_.front(); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, false);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return merge(a, b, true);
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.scaled(a.terms_[0].exp, a.terms_[0].coef);
    if (b.is_monomial()) return a.scaled(b.terms_[0].exp, b.terms_[0].coef);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back(Term{exp_add(x.exp, y.exp), x.coef * y.coef});
    return from_terms(std::move(out));
  }

  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coef != b.terms_[k].coef) return false;
    return true;
  }

  /// Multiply by c * x^e. Order is preserved since shifting is monotone.
  LaurentPoly scaled(const Exponent& e, const mpz_class& c = 1) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{exp_add(t.exp, e), t.coef * c});
    return r;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Caller guarantees c divides every coefficient.
  void divide_exact(const mpz_class& c) {
    for (auto& t : terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  }

  /// Componentwise minimum exponent; zero vector for the zero polynomial.
  Exponent min_exponents() const {
    Exponent m{};
    if (terms_.empty()) return m;
    m = terms_[0].exp;
    for (const auto& t : terms_)
      for (std::size_t k = 0; k < kMaxVars; ++k) m[k] = std::min(m[k], t.exp[k]);
    return m;
  }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
      for (auto v : t.exp) h = h * 1000003u ^ static_cast<std::size_t>(v + 7919);
      h = h * 31u ^ static_cast<std::size_t>(mpz_get_si(t.coef.get_mpz_t()));
    }
    return h;
  }

 private:
  std::vector<Term> terms_;

  static bool exp_greater(const Term& x, const Term& y) { return x.exp > y.exp; }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), exp_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exp == t.exp) {
        out.back().coef += t.coef;
      } else {
        if (!out.empty() && out.back().coef == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coef == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    LaurentPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].exp > b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].exp > a.terms_[i].exp) {
        r.terms_.push_back(Term{b.terms_[j].exp, subtract ? mpz_class(-b.terms_[j].coef) : b.terms_[j].coef});
        ++j;
      } else {
        mpz_class c = subtract ? mpz_class(a.terms_[i].coef - b.terms_[j].coef)
                               : mpz_class(a.terms_[i].coef + b.terms_[j].coef);
        if (c != 0) r.terms_.push_back(Term{a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }
};

namespace detail {

// Dense univariate polynomials over Z, index = degree.
using UPoly = std::vector<mpz_class>;

inline void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class upoly_content(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline UPoly upoly_primitive(UPoly p) {
  upoly_trim(p);
  if (p.empty()) return p;
  mpz_class g = upoly_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Pseudo-remainder of a by b (b nonzero).
inline UPoly upoly_prem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    upoly_trim(a);
  }
  return a;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

// Degree of gcd(a, b) mod p; a valid upper bound for the degree of the gcd
// over Z whenever p divides neither leading coefficient.
inline std::size_t upoly_gcd_degree_mod(const UPoly& a, const UPoly& b, std::uint64_t p) {
  auto reduce = [p](const UPoly& x) {
    std::vector<std::uint64_t> r(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) r[k] = mpz_fdiv_ui(x[k].get_mpz_t(), p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  };
  auto x = reduce(a), y = reduce(b);
  while (!y.empty()) {
    const std::uint64_t inv = powmod_u64(y.back(), p - 2, p);
    while (x.size() >= y.size()) {
      const std::uint64_t f = mulmod_u64(x.back(), inv, p);
      const std::size_t shift = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k)
        x[k + shift] = (x[k + shift] + p - mulmod_u64(f, y[k], p)) % p;
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return x.empty() ? 0 : x.size() - 1;
}

/// Primitive gcd over Z with positive leading coefficient.
inline UPoly upoly_gcd(UPoly a, UPoly b) {
  a = upoly_primitive(std::move(a));
  b = upoly_primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  constexpr std::uint64_t kP = 2305843009213693951ULL;
  if (mpz_fdiv_ui(a.back().get_mpz_t(), kP) != 0 && mpz_fdiv_ui(b.back().get_mpz_t(), kP) != 0 &&
      upoly_gcd_degree_mod(a, b, kP) == 0)
    return UPoly{1};
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = upoly_primitive(upoly_prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_primitive(std::move(a));
}

/// Exact division; throws if b does not divide a.
inline UPoly upoly_div_exact(UPoly a, const UPoly& b) {
  upoly_trim(a);
  if (a.empty()) return a;
  if (a.size() < b.size()) throw std::logic_error("upoly_div_exact: not divisible");
  UPoly quo(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    mpz_class c;
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()))
      throw std::logic_error("upoly_div_exact: not divisible");
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    quo[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    upoly_trim(a);
    if (!a.empty() && a.size() < b.size()) throw std::logic_error("upoly_div_exact: not divisible");
  }
  return quo;
}

}  // namespace detail

}  // namespace oyqg
