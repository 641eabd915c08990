#pragma once

#include "oyqg/coeff/laurent.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>

namespace oyqg {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Variable layout for rank n: q, then t_{ij} for 1 <= i < j <= n in lex order.
/// Exponents live on the (1/r)Z lattice.
struct VarSet {
  int rank = 1;
  int r = 1;

  int num_vars() const { return 1 + rank * (rank - 1) / 2; }

  /// Index of t_{ij}, 0-based i < j.
  int t_index(int i, int j) const {
    int idx = 1;
    for (int a = 0; a < i; ++a) idx += rank - 1 - a;
    return idx + (j - i - 1);
  }

  std::string name(int var) const {
    if (var == 0) return "q";
    int idx = 1;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j, ++idx)
        if (idx == var) return "t" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    throw std::out_of_range("VarSet::name");
  }

  friend bool operator==(const VarSet&, const VarSet&) = default;
};

/// Ratio of Laurent polynomials.
/// Invariants: the denominator is stored empty when it equals 1; otherwise it
/// has no monomial factor, positive leading coefficient and no integer
/// content shared with the numerator. When the denominator involves q only,
/// the fraction is fully reduced, so such values have a unique representation.
class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(long v) : num_(LaurentPoly::constant(v)) {}  // NOLINT(google-explicit-constructor)
  explicit ParamScalar(LaurentPoly num) : num_(std::move(num)) {}

  static ParamScalar fraction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    ParamScalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
  }

  static ParamScalar monomial(const Exponent& e, const mpz_class& c = 1) {
    return ParamScalar(LaurentPoly::monomial(e, c));
  }

  static ParamScalar rational(long n, long d) {
    return fraction(LaurentPoly::constant(n), LaurentPoly::constant(d));
  }

  const LaurentPoly& num() const { return num_; }
  LaurentPoly den() const { return den_.is_zero() ? LaurentPoly::constant(1) : den_; }
  bool den_is_one() const { return den_.is_zero(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_zero() && num_.is_one(); }

  ParamScalar operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) { return add(a, b, false); }
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return add(a, b, true); }

  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ParamScalar r;
    r.num_ = a.num_ * b.num_;
    if (a.den_is_one() && b.den_is_one()) return r;
    r.den_ = a.den() * b.den();
    r.normalize();
    return r;
  }

  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

  ParamScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    return fraction(den(), num_);
  }

  ParamScalar& operator+=(const ParamScalar& b) { return *this = *this + b; }
  ParamScalar& operator-=(const ParamScalar& b) { return *this = *this - b; }
  ParamScalar& operator*=(const ParamScalar& b) { return *this = *this * b; }
  ParamScalar& operator/=(const ParamScalar& b) { return *this = *this / b; }

  /// Equality by cross-multiplication.
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_is_one() && b.den_is_one()) return a.num_ == b.num_;
    return a.num_ * b.den() == b.num_ * a.den();
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;

  static ParamScalar add(const ParamScalar& a, const ParamScalar& b, bool subtract) {
    ParamScalar r;
    if (a.den_is_one() && b.den_is_one()) {
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      return r;
    }
    if (a.den_ == b.den_) {
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
      r.normalize();
      return r;
    }
    LaurentPoly da = a.den(), db = b.den();
    if (da.only_q() && db.only_q()) {
      // lcm of the denominators keeps sizes down
      detail::UPoly ua = to_upoly(da), ub = to_upoly(db);
      detail::UPoly g = detail::upoly_gcd(ua, ub);
      LaurentPoly fa = from_upoly(detail::upoly_div_exact(ub, g));
      LaurentPoly fb = from_upoly(detail::upoly_div_exact(ua, g));
      r.num_ = subtract ? a.num_ * fa - b.num_ * fb : a.num_ * fa + b.num_ * fb;
      r.den_ = da * fa;
    } else {
      r.num_ = subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
      r.den_ = da * db;
    }
    r.normalize();
    return r;
  }

  // Requires only_q and nonnegative q exponents.
  static detail::UPoly to_upoly(const LaurentPoly& p) {
    detail::UPoly u;
    for (const auto& t : p.terms()) {
      auto d = static_cast<std::size_t>(t.exp[0]);
      if (u.size() <= d) u.resize(d + 1);
      u[d] = t.coef;
    }
    return u;
  }

  static LaurentPoly from_upoly(const detail::UPoly& u, const Exponent& shift = Exponent{}) {
    std::vector<Term> terms;
    for (std::size_t d = 0; d < u.size(); ++d) {
      if (u[d] == 0) continue;
      Exponent e = shift;
      e[0] += static_cast<std::int32_t>(d);
      terms.push_back(Term{e, u[d]});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly();
      return;
    }
    if (den_.is_zero()) return;
    const Exponent m = den_.min_exponents();
    if (!exp_is_zero(m)) {
      const Exponent neg = exp_neg(m);
      den_ = den_.scaled(neg);
      num_ = num_.scaled(neg);
    }
    mpz_class g = den_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num_.content().get_mpz_t());
    if (den_.leading().coef < 0) g = -g;
    if (g != 1) {
      den_.divide_exact(g);
      num_.divide_exact(g);
    }
    if (den_.is_one()) {
      den_ = LaurentPoly();
      return;
    }
    if (den_.only_q() && !den_.is_constant()) reduce_q_gcd();
    if (den_.is_one()) den_ = LaurentPoly();
  }

  // Cancel the gcd of den with num viewed as a polynomial in q over Z[t^{±1}].
  void reduce_q_gcd() {
    std::map<Exponent, std::vector<const Term*>> groups;
    for (const auto& t : num_.terms()) {
      Exponent key = t.exp;
      key[0] = 0;
      groups[key].push_back(&t);
    }
    detail::UPoly g = to_upoly(den_);
    std::vector<std::pair<Exponent, detail::UPoly>> parts;
    for (const auto& [key, ts] : groups) {
      std::int32_t lo = ts.front()->exp[0];
      for (const Term* t : ts) lo = std::min(lo, t->exp[0]);
      detail::UPoly u;
      for (const Term* t : ts) {
        auto d = static_cast<std::size_t>(t->exp[0] - lo);
        if (u.size() <= d) u.resize(d + 1);
        u[d] = t->coef;
      }
      Exponent shift = key;
      shift[0] = lo;
      if (g.size() > 1) g = detail::upoly_gcd(g, u);
      parts.emplace_back(shift, std::move(u));
    }
    if (g.size() <= 1) return;
    LaurentPoly num;
    for (auto& [shift, u] : parts) num += from_upoly(detail::upoly_div_exact(std::move(u), g), shift);
    num_ = std::move(num);
    den_ = from_upoly(detail::upoly_div_exact(to_upoly(den_), g));
    mpz_class c = den_.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), num_.content().get_mpz_t());
    if (den_.leading().coef < 0) c = -c;
    if (c != 1) {
      den_.divide_exact(c);
      num_.divide_exact(c);
    }
  }
};

namespace detail {

inline std::string render_exponent(std::int32_t e, int r) {
  int g = std::gcd(std::abs(e), r);
  int n = e / g, d = r / g;
  if (d == 1) return n >= 0 ? std::to_string(n) : "(" + std::to_string(n) + ")";
  return "(" + std::to_string(n) + "/" + std::to_string(d) + ")";
}

inline std::string render_poly(const LaurentPoly& p, const VarSet& vs) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coef;
    const bool neg = c < 0;
    if (neg) c = -c;
    std::string mono;
    for (int k = 0; k < vs.num_vars(); ++k) {
      if (t.exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vs.name(k);
      if (t.exp[k] != vs.r) mono += "^" + render_exponent(t.exp[k], vs.r);
    }
    std::string body;
    if (mono.empty()) body = c.get_str();
    else if (c == 1) body = mono;
    else body = c.get_str() + "*" + mono;
    if (first) out += neg ? "-" + body : body;
    else out += neg ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

class ScalarParser {
 public:
  ScalarParser(std::string_view s, const VarSet& vs) : s_(s), vs_(vs) {}

  ParamScalar parse() {
    LaurentPoly num = sum();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      LaurentPoly den = sum();
      skip_ws();
      if (pos_ != s_.size()) fail("trailing input");
      if (den.is_zero()) throw DivisionByZero();
      return ParamScalar::fraction(std::move(num), std::move(den));
    }
    if (pos_ != s_.size()) fail("trailing input");
    return ParamScalar(std::move(num));
  }

 private:
  std::string_view s_;
  const VarSet& vs_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar parse error at " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  LaurentPoly sum() {
    LaurentPoly acc;
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = s_[pos_++] == '-';
    acc = neg ? -product() : product();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      acc = c == '+' ? acc + product() : acc - product();
    }
    return acc;
  }

  LaurentPoly product() {
    LaurentPoly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  LaurentPoly factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = sum();
      if (peek() != ')') fail("expected )");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly::constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    int var = symbol();
    std::int32_t e = vs_.r;
    if (peek() == '^') {
      ++pos_;
      e = exponent();
    }
    Exponent ex{};
    ex[var] = e;
    return LaurentPoly::monomial(ex);
  }

  int symbol() {
    char c = peek();
    if (c == 'q') {
      ++pos_;
      return 0;
    }
    if (c == 't') {
      ++pos_;
      long i = integer();
      if (peek() != '_') fail("expected _ in t symbol");
      ++pos_;
      long j = integer();
      if (i < 1 || j <= i || j > vs_.rank) fail("bad t index");
      return vs_.t_index(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
    fail("expected symbol");
  }

  // Returns the exponent scaled by r.
  std::int32_t exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    long n = integer(), d = 1;
    if (paren && peek() == '/') {
      ++pos_;
      d = integer();
    }
    if (paren) {
      if (peek() != ')') fail("expected )");
      ++pos_;
    }
    if (d == 0 || (n * vs_.r) % d != 0) fail("exponent not on the lattice");
    long e = n * vs_.r / d;
    return static_cast<std::int32_t>(neg ? -e : e);
  }
};

}  // namespace detail

/// Canonical text form: terms in decreasing lex order, "(num)/(den)" when needed.
inline std::string render(const ParamScalar& s, const VarSet& vs) {
  if (s.den_is_one()) return detail::render_poly(s.num(), vs);
  return "(" + detail::render_poly(s.num(), vs) + ")/(" + detail::render_poly(s.den(), vs) + ")";
}

inline ParamScalar parse_scalar(std::string_view text, const VarSet& vs) {
  return detail::ScalarParser(text, vs).parse();
}

}  // namespace oyqg
