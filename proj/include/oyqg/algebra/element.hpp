#pragma once

#include "oyqg/cartan/cartan.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oyqg {

/// Word in the simple indices; letters are stored as chars 0..rank-1.
using Word = std::string;

enum class Side { F, E };

inline Vec word_content(const Word& w) {
  Vec v{};
  for (char c : w) ++v[static_cast<unsigned char>(c)];
  return v;
}

inline Word word_of(std::initializer_list<int> letters) {
  Word w;
  for (int l : letters) w.push_back(static_cast<char>(l));
  return w;
}

inline std::string word_text(const Word& w) {
  std::string s;
  for (char c : w) s += std::to_string(static_cast<int>(c) + 1);
  return s;
}

/// Normal-form monomial f-word * w'_a w_b * e-word.
struct Monomial {
  Word f;
  Vec a{};  // omega' exponents
  Vec b{};  // omega exponents
  Word e;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  bool is_torus() const { return f.empty() && e.empty(); }
  /// U^- degree nu and U^+ degree mu.
  Vec f_content() const { return word_content(f); }
  Vec e_content() const { return word_content(e); }
};

/// Finite linear combination of monomials. No zero coefficients are stored.
template <class S>
class Element {
 public:
  using Map = std::map<Monomial, S>;

  Element() = default;
  explicit Element(Map m) : terms_(std::move(m)) { prune(); }
  static Element single(Monomial m, S c) {
    Element x;
    x.add(std::move(m), std::move(c));
    return x;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Element& x, const S& c) {
    for (const auto& [m, v] : x.terms_) add(m, v * c);
  }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S{} : it->second;
  }

  Element operator-() const {
    Element r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
  }
  friend Element operator+(Element a, const Element& b) {
    for (const auto& [m, v] : b.terms_) a.add(m, v);
    return a;
  }
  friend Element operator-(Element a, const Element& b) {
    for (const auto& [m, v] : b.terms_) a.add(m, -v);
    return a;
  }
  friend Element operator*(const S& c, const Element& x) {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : x.terms_) r.add(m, c * v);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  /// Keeps only terms satisfying the predicate.
  Element filter(const std::function<bool(const Monomial&)>& keep) const {
    Element r;
    for (const auto& [m, v] : terms_)
      if (keep(m)) r.terms_.emplace(m, v);
    return r;
  }

 private:
  Map terms_;

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
};

/// Element of the k-fold tensor power, keyed by one monomial per factor.
template <class S>
class Tensor {
 public:
  using Key = std::vector<Monomial>;
  using Map = std::map<Key, S>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Key& k, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Tensor operator-(Tensor a, const Tensor& b) {
    for (const auto& [k, v] : b.terms_) a.add(k, -v);
    return a;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return (a - b).is_zero(); }

 private:
  Map terms_;
};

}  // namespace oyqg
