#pragma once

#include "oyqg/algebra/element.hpp"
#include "oyqg/algebra/linalg.hpp"
#include "oyqg/coeff/field.hpp"

#include <memory>
#include <mutex>
#include <random>

namespace oyqg {

struct HeightBoundExceeded : std::runtime_error {
  HeightBoundExceeded(int needed, int bound)
      : std::runtime_error("degree of height " + std::to_string(needed) + " exceeds the height bound " +
                           std::to_string(bound) + "; raise --max-height to at least " + std::to_string(needed)),
        needed_height(needed) {}
  int needed_height;
};

inline int default_max_height(const std::string& type) {
  if (type == "G2") return 5;
  if (type == "A3") return 4;
  return 6;
}

/// All words of the given content, in lex order.
inline std::vector<Word> words_of_content(const Vec& mu, int rank) {
  std::vector<Word> out;
  Word w;
  for (int i = 0; i < rank; ++i) w.append(static_cast<std::size_t>(mu[i]), static_cast<char>(i));
  if (w.empty()) return {Word{}};
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Basis of U^{sign}_mu by pivot-free words after row reduction of the
/// Serre ideal in degree mu. Every word of content mu has a rewrite as a
/// combination of basis words.
template <class S>
struct GradedBasis {
  Side side;
  Vec content{};
  std::vector<Word> words;           // all words of the content, lex order
  std::vector<Word> basis;           // pivot-free words, lex order
  std::map<Word, int> basis_index;
  std::map<Word, std::vector<std::pair<int, S>>> rewrite;  // word -> basis combination
};

template <ScalarField F>
class QuantumGroup {
 public:
  using Scalar = typename F::Scalar;
  using Elem = Element<Scalar>;
  using Tens = Tensor<Scalar>;
  using Basis = GradedBasis<Scalar>;

  QuantumGroup(CartanDatum cartan, F field, int max_height)
      : cartan_(std::move(cartan)), field_(std::move(field)), max_height_(max_height) {
    if (field_.vars().rank != cartan_.rank() || field_.vars().r != cartan_.r())
      throw std::invalid_argument("field variables do not match the Cartan datum");
    for (int i = 0; i < cartan_.rank(); ++i) {
      Scalar qi = q_i(i, 1);
      hden_.push_back((qi - qi.inverse()).inverse());
    }
  }

  const CartanDatum& cartan() const { return cartan_; }
  const F& field() const { return field_; }
  int rank() const { return cartan_.rank(); }
  int max_height() const { return max_height_; }

  // ---- scalars -------------------------------------------------------------

  Scalar chi(const Vec& eta, const Vec& phi) const { return field_.monomial(cartan_.chi(eta, phi)); }
  Scalar chi(const Weight& eta, const Weight& phi) const { return field_.monomial(cartan_.chi(eta, phi)); }
  Scalar q_i(int i, int k) const { return field_.monomial(cartan_.q_i(i, k)); }
  /// 1/(q_i - q_i^{-1})
  const Scalar& hden(int i) const { return hden_[i]; }
  /// q_ij as a scalar (t_ij for i < j, its inverse for i > j, 1 on the diagonal).
  Scalar q_param(int i, int j) const {
    Exponent e{};
    if (i < j) e[field_.vars().t_index(i, j)] = cartan_.r();
    if (i > j) e[field_.vars().t_index(j, i)] = -cartan_.r();
    return field_.monomial(e);
  }
  /// [m]_i
  Scalar qint(int m, int i) const { return (q_i(i, m) - q_i(i, -m)) * hden(i); }
  /// [m choose k]_i
  Scalar qbinom(int m, int k, int i) const {
    Scalar r = field_.one();
    for (int s = 0; s < k; ++s) r = r * qint(m - s, i) / qint(s + 1, i);
    return r;
  }

  // ---- generators ----------------------------------------------------------

  Elem one() const { return Elem::single(Monomial{}, field_.one()); }
  Elem e(int i) const { return Elem::single(Monomial{{}, {}, {}, word_of({i})}, field_.one()); }
  Elem f(int i) const { return Elem::single(Monomial{word_of({i}), {}, {}, {}}, field_.one()); }
  Elem omega(const Vec& b) const { return Elem::single(Monomial{{}, {}, b, {}}, field_.one()); }
  Elem omega_p(const Vec& a) const { return Elem::single(Monomial{{}, a, {}, {}}, field_.one()); }
  Elem scalar(const Scalar& c) const { return Elem::single(Monomial{}, c); }

  /// Monomial with free words rewritten in the basis.
  Elem monomial(const Monomial& m, const Scalar& c) const {
    Elem out;
    add_reduced(out, m, c);
    return out;
  }

  // ---- graded bases ---------------------------------------------------------

  const Basis& basis(Side side, const Vec& mu) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = bases_.find({side, mu});
      if (it != bases_.end()) return *it->second;
    }
    auto made = std::make_unique<Basis>(build_basis(side, mu));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = bases_.emplace(std::make_pair(side, mu), std::move(made));
    return *it->second;
  }

  /// Serre element of the free algebra (not reduced; it is zero in U).
  /// e-side: sum_n (-q_ij)^n [1-a_ij, n]_i e_i^{1-a_ij-n} e_j e_i^n; the f-side uses q_ji.
  Elem serre_element(Side side, int i, int j) const {
    const int N = 1 - cartan_.a(i, j);
    Scalar base = side == Side::E ? -q_param(i, j) : -q_param(j, i);
    Elem out;
    Scalar pw = field_.one();
    for (int n = 0; n <= N; ++n) {
      Word w(static_cast<std::size_t>(N - n), static_cast<char>(i));
      w.push_back(static_cast<char>(j));
      w.append(static_cast<std::size_t>(n), static_cast<char>(i));
      Monomial m;
      (side == Side::E ? m.e : m.f) = w;
      out.add(m, pw * qbinom(N, n, i));
      pw = pw * base;
    }
    return out;
  }

  // ---- multiplication --------------------------------------------------------

  Elem multiply(const Elem& x, const Elem& y) const {
    std::map<Monomial, Scalar> free;
    for (const auto& [m1, c1] : x.terms())
      for (const auto& [m2, c2] : y.terms()) mul_monomials(free, m1, m2, c1 * c2);
    Elem out;
    for (const auto& [m, c] : free) add_reduced(out, m, c);
    return out;
  }

  Elem commutator(const Elem& x, const Elem& y) const { return multiply(x, y) - multiply(y, x); }

  // ---- Hopf structure ---------------------------------------------------------

  Tens coproduct(const Elem& x) const {
    Tens out;
    for (const auto& [m, c] : x.terms())
      for (const auto& [pair, v] : coproduct_monomial(m)) {
        Elem l = monomial(pair.first, field_.one());
        Elem r = monomial(pair.second, field_.one());
        for (const auto& [ml, cl] : l.terms())
          for (const auto& [mr, cr] : r.terms()) out.add({ml, mr}, c * v * cl * cr);
      }
    return out;
  }

  /// k-fold coproduct, Delta_k = (Delta x id^{k-2}) Delta_{k-1}.
  Tens coproduct(const Elem& x, int k) const {
    Tens cur;
    for (const auto& [m, c] : x.terms()) cur.add({m}, c);
    for (int step = 1; step < k; ++step) cur = apply_to_factor(cur, 0, [this](const Elem& y) { return coproduct(y); });
    return cur;
  }

  /// Applies a map U -> U (tensor) U to one factor.
  template <class Fn>
  Tens apply_to_factor(const Tens& t, std::size_t pos, Fn&& fn) const {
    Tens out;
    for (const auto& [key, c] : t.terms()) {
      Tens d = fn(Elem::single(key[pos], field_.one()));
      for (const auto& [dk, dv] : d.terms()) {
        typename Tens::Key nk;
        nk.insert(nk.end(), key.begin(), key.begin() + static_cast<long>(pos));
        nk.insert(nk.end(), dk.begin(), dk.end());
        nk.insert(nk.end(), key.begin() + static_cast<long>(pos) + 1, key.end());
        out.add(nk, c * dv);
      }
    }
    return out;
  }

  /// Applies a map U -> U to one factor.
  template <class Fn>
  Tens map_factor(const Tens& t, std::size_t pos, Fn&& fn) const {
    Tens out;
    for (const auto& [key, c] : t.terms()) {
      Elem img = fn(Elem::single(key[pos], field_.one()));
      for (const auto& [m, v] : img.terms()) {
        auto nk = key;
        nk[pos] = m;
        out.add(nk, c * v);
      }
    }
    return out;
  }

  /// Product of all factors of each key, in order.
  Elem contract(const Tens& t) const {
    Elem out;
    for (const auto& [key, c] : t.terms()) {
      Elem acc = Elem::single(key[0], c);
      for (std::size_t k = 1; k < key.size(); ++k) acc = multiply(acc, Elem::single(key[k], field_.one()));
      out = out + acc;
    }
    return out;
  }

  Tens tensor(const Elem& x, const Elem& y) const {
    Tens out;
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms()) out.add({a, b}, ca * cb);
    return out;
  }

  Tens tensor_multiply(const Tens& x, const Tens& y) const {
    Tens out;
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) {
        std::vector<Elem> parts;
        for (std::size_t i = 0; i < kx.size(); ++i)
          parts.push_back(multiply(Elem::single(kx[i], field_.one()), Elem::single(ky[i], field_.one())));
        expand_product(out, parts, 0, {}, cx * cy);
      }
    return out;
  }

  Scalar counit(const Elem& x) const {
    Scalar s = field_.zero();
    for (const auto& [m, c] : x.terms())
      if (m.is_torus()) s = s + c;
    return s;
  }

  /// S(e_i) = -w_i^{-1} e_i, S(f_i) = -f_i w'_i^{-1}, S(w) = w^{-1}; anti-multiplicative.
  Elem antipode(const Elem& x) const {
    Elem out;
    for (const auto& [m, c] : x.terms()) {
      Elem acc = scalar(c);
      for (auto it = m.e.rbegin(); it != m.e.rend(); ++it) {
        const int i = *it;
        acc = multiply(acc, -(field_.one()) * Elem::single(Monomial{{}, {}, vec_neg(unit_vec(i)), word_of({i})}, field_.one()));
      }
      acc = multiply(acc, Elem::single(Monomial{{}, vec_neg(m.a), vec_neg(m.b), {}}, field_.one()));
      for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
        const int i = *it;
        acc = multiply(acc, -(field_.one()) * Elem::single(Monomial{word_of({i}), vec_neg(unit_vec(i)), {}, {}}, field_.one()));
      }
      out = out + acc;
    }
    return out;
  }

  /// ad_l(x)(b) = sum x_(1) b S(x_(2)).
  Elem ad_left(const Elem& x, const Elem& b) const {
    Elem out;
    const Tens dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
      Elem left = multiply(Elem::single(key[0], c), b);
      out = out + multiply(left, antipode(Elem::single(key[1], field_.one())));
    }
    return out;
  }

  /// Random combination of basis monomials with f- and e-degree heights
  /// summing to at most max_height, torus exponents in [-1, 1].
  Elem random_element(std::mt19937_64& rng, int max_height, int nterms) const {
    std::vector<std::pair<Side, Vec>> degrees;
    enumerate_degrees(max_height, [&](const Vec& v) { degrees.emplace_back(Side::F, v); });
    Elem out;
    std::uniform_int_distribution<int> coin(-1, 1);
    std::uniform_int_distribution<long> coef(1, 9);
    for (int t = 0; t < nterms; ++t) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        const Vec nu = degrees[rng() % degrees.size()].second;
        const Vec mu = degrees[rng() % degrees.size()].second;
        if (vec_height(nu) + vec_height(mu) > max_height) continue;
        const auto& bf = basis(Side::F, nu).basis;
        const auto& be = basis(Side::E, mu).basis;
        if (bf.empty() || be.empty()) continue;
        Monomial m{bf[rng() % bf.size()], {}, {}, be[rng() % be.size()]};
        for (int i = 0; i < rank(); ++i) {
          m.a[i] = coin(rng);
          m.b[i] = coin(rng);
        }
        long c = coef(rng);
        if (rng() & 1) c = -c;
        out.add(m, field_.from_int(c));
        break;
      }
    }
    return out;
  }

  /// Calls fn on every v in Q+ of height at most h.
  template <class Fn>
  void enumerate_degrees(int h, Fn&& fn) const {
    Vec v{};
    enumerate_rec(0, h, v, fn);
  }

 private:
  struct STerm {
    Scalar c;
    Word f;
    Vec a{};
    Vec b{};
    Word e;
  };

  CartanDatum cartan_;
  F field_;
  int max_height_;
  std::vector<Scalar> hden_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Side, Vec>, std::unique_ptr<Basis>> bases_;
  mutable std::map<std::pair<Word, Word>, std::vector<STerm>> straighten_cache_;

  template <class Fn>
  void enumerate_rec(int i, int h, Vec& v, Fn& fn) const {
    if (i == rank()) {
      fn(v);
      return;
    }
    for (int k = 0; k <= h; ++k) {
      v[i] = k;
      enumerate_rec(i + 1, h - k, v, fn);
    }
    v[i] = 0;
  }

  void expand_product(Tens& out, const std::vector<Elem>& parts, std::size_t i, typename Tens::Key key,
                      const Scalar& c) const {
    if (i == parts.size()) {
      out.add(key, c);
      return;
    }
    for (const auto& [m, v] : parts[i].terms()) {
      key.push_back(m);
      expand_product(out, parts, i + 1, key, c * v);
      key.pop_back();
    }
  }

  Basis build_basis(Side side, const Vec& mu) const {
    const int h = vec_height(mu);
    if (h > max_height_) throw HeightBoundExceeded(h, max_height_);
    Basis B;
    B.side = side;
    B.content = mu;
    B.words = words_of_content(mu, rank());
    std::map<Word, int> col;
    for (std::size_t k = 0; k < B.words.size(); ++k) col[B.words[k]] = static_cast<int>(k);
    const long target_rank = static_cast<long>(B.words.size()) - cartan_.kostant_count(mu);

    RowEchelon<Scalar> rows;

    for (int i = 0; i < rank() && static_cast<long>(rows.rank()) < target_rank; ++i) {
      for (int j = 0; j < rank() && static_cast<long>(rows.rank()) < target_rank; ++j) {
        if (i == j) continue;
        Vec c{};
        c[i] = 1 - cartan_.a(i, j);
        c[j] += 1;
        const Vec rest = vec_sub(mu, c);
        if (!vec_nonneg(rest)) continue;
        const Elem s = serre_element(side, i, j);
        // w1 S w2 with content(w1) + content(w2) = rest
        std::vector<Vec> splits;
        enumerate_degrees(vec_height(rest), [&](const Vec& g) {
          if (vec_nonneg(vec_sub(rest, g))) splits.push_back(g);
        });
        for (const Vec& g1 : splits) {
          const auto left = words_of_content(g1, rank());
          const auto right = words_of_content(vec_sub(rest, g1), rank());
          for (const Word& w1 : left) {
            for (const Word& w2 : right) {
              std::map<int, Scalar> v;
              for (const auto& [m, x] : s.terms()) {
                const Word& sw = side == Side::E ? m.e : m.f;
                v[col.at(w1 + sw + w2)] = x;
              }
              rows.insert(std::move(v));
              if (static_cast<long>(rows.rank()) >= target_rank) break;
            }
            if (static_cast<long>(rows.rank()) >= target_rank) break;
          }
          if (static_cast<long>(rows.rank()) >= target_rank) break;
        }
      }
    }
    if (static_cast<long>(rows.rank()) != target_rank) {
      if constexpr (F::kExact) throw std::logic_error("graded basis dimension differs from the Kostant count");
      else throw RetryPoint();
    }
    for (std::size_t k = 0; k < B.words.size(); ++k) {
      if (rows.is_pivot(static_cast<int>(k))) continue;
      B.basis_index[B.words[k]] = static_cast<int>(B.basis.size());
      B.rewrite[B.words[k]] = {{static_cast<int>(B.basis.size()), field_.one()}};
      B.basis.push_back(B.words[k]);
    }
    for (const auto& [p, row] : rows.rows()) {
      std::vector<std::pair<int, Scalar>> comb;
      for (const auto& [c, x] : row)
        if (c != p) comb.emplace_back(B.basis_index.at(B.words[c]), -x);
      B.rewrite[B.words[p]] = std::move(comb);
    }
    return B;
  }

  const std::vector<std::pair<int, Scalar>>& rewrite(Side side, const Word& w) const {
    return basis(side, word_content(w)).rewrite.at(w);
  }

  void add_reduced(Elem& out, const Monomial& m, const Scalar& c) const {
    const Basis& bf = basis(Side::F, word_content(m.f));
    const Basis& be = basis(Side::E, word_content(m.e));
    for (const auto& [i, x] : bf.rewrite.at(m.f))
      for (const auto& [j, y] : be.rewrite.at(m.e)) out.add(Monomial{bf.basis[i], m.a, m.b, be.basis[j]}, c * x * y);
  }

  void mul_monomials(std::map<Monomial, Scalar>& out, const Monomial& m1, const Monomial& m2, const Scalar& c) const {
    for (const STerm& t : straighten(m1.e, m2.f)) {
      const Vec nu = word_content(t.f);
      const Vec mu = word_content(t.e);
      // w'_{a1} w_{b1} past the f-word, then the e-word past w'_{a2} w_{b2}
      Exponent ex = exp_add(cartan_.chi(m1.a, nu), exp_neg(cartan_.chi(nu, m1.b)));
      ex = exp_add(ex, exp_add(cartan_.chi(m2.a, mu), exp_neg(cartan_.chi(mu, m2.b))));
      Scalar v = c * t.c * field_.monomial(ex);
      if (v.is_zero()) continue;
      Monomial r{m1.f + t.f, vec_add(vec_add(m1.a, t.a), m2.a), vec_add(vec_add(m1.b, t.b), m2.b), t.e + m2.e};
      auto [it, inserted] = out.try_emplace(std::move(r), v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }

  /// E * F rewritten as sum c f-word w'_a w_b e-word (free words).
  std::vector<STerm> straighten(const Word& E, const Word& Fw) const {
    if (E.empty() || Fw.empty()) return {STerm{field_.one(), Fw, {}, {}, E}};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = straighten_cache_.find({E, Fw});
      if (it != straighten_cache_.end()) return it->second;
    }
    const int i = E.back();
    const Word E0 = E.substr(0, E.size() - 1);
    std::map<std::tuple<Word, Vec, Vec, Word>, Scalar> acc;
    auto put = [&](const Word& f, const Vec& a, const Vec& b, const Word& e, const Scalar& v) {
      if (v.is_zero()) return;
      auto [it, inserted] = acc.try_emplace(std::make_tuple(f, a, b, e), v);
      if (!inserted) it->second += v;
    };
    // e_i F = F e_i + sum_{p: F_p = i} h_i F_<p F_>p (chi(nu_>p, a_i)^{-1} w_i - chi(a_i, nu_>p) w'_i)
    for (const STerm& t : straighten(E0, Fw)) put(t.f, t.a, t.b, t.e + static_cast<char>(i), t.c);
    const Vec ai = unit_vec(i);
    for (std::size_t p = 0; p < Fw.size(); ++p) {
      if (Fw[p] != i) continue;
      const Word rest = Fw.substr(0, p) + Fw.substr(p + 1);
      const Vec hi = word_content(Fw.substr(p + 1));
      const Scalar cw = hden(i) / chi(hi, ai);
      const Scalar cwp = -hden(i) * chi(ai, hi);
      for (const STerm& t : straighten(E0, rest)) {
        const Vec mu = word_content(t.e);
        // t.e * w_i = chi(mu, a_i)^{-1} w_i t.e ; t.e * w'_i = chi(a_i, mu) w'_i t.e
        put(t.f, t.a, vec_add(t.b, ai), t.e, t.c * cw / chi(mu, ai));
        put(t.f, vec_add(t.a, ai), t.b, t.e, t.c * cwp * chi(ai, mu));
      }
    }
    std::vector<STerm> out;
    for (auto& [k, v] : acc)
      if (!v.is_zero()) out.push_back(STerm{v, std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k)});
    std::lock_guard<std::mutex> lock(mu_);
    straighten_cache_.emplace(std::make_pair(E, Fw), out);
    return out;
  }

  /// Delta of a monomial as pairs of free-word monomials with coefficients.
  std::vector<std::pair<std::pair<Monomial, Monomial>, Scalar>> coproduct_monomial(const Monomial& m) const {
    std::vector<std::pair<std::pair<Monomial, Monomial>, Scalar>> out;
    const std::size_t kf = m.f.size(), ke = m.e.size();
    for (std::size_t sf = 0; sf < (1u << kf); ++sf) {
      // Delta(f_j) = f_j (x) w'_j + 1 (x) f_j; positions in sf go left
      Word fl, fr;
      Vec nl{};
      Exponent ex{};
      for (std::size_t p = 0; p < kf; ++p) {
        if (sf >> p & 1) {
          fl.push_back(m.f[p]);
          nl[static_cast<unsigned char>(m.f[p])] += 1;
        } else {
          fr.push_back(m.f[p]);
        }
      }
      // w'_j at p passes the right-factor f's after p
      for (std::size_t p = 0; p < kf; ++p) {
        if (!(sf >> p & 1)) continue;
        Vec later{};
        for (std::size_t s = p + 1; s < kf; ++s)
          if (!(sf >> s & 1)) later[static_cast<unsigned char>(m.f[s])] += 1;
        ex = exp_add(ex, cartan_.chi(unit_vec(m.f[p]), later));
      }
      for (std::size_t se = 0; se < (1u << ke); ++se) {
        // Delta(e_i) = e_i (x) 1 + w_i (x) e_i; positions in se go left as e_i
        Word el, er;
        Vec nw{};
        Exponent ex2 = ex;
        for (std::size_t p = 0; p < ke; ++p) {
          if (se >> p & 1) {
            el.push_back(m.e[p]);
          } else {
            er.push_back(m.e[p]);
            nw[static_cast<unsigned char>(m.e[p])] += 1;
            Vec earlier{};
            for (std::size_t s = 0; s < p; ++s)
              if (se >> s & 1) earlier[static_cast<unsigned char>(m.e[s])] += 1;
            ex2 = exp_add(ex2, exp_neg(cartan_.chi(earlier, unit_vec(m.e[p]))));
          }
        }
        Monomial left{fl, m.a, vec_add(m.b, nw), el};
        Monomial right{fr, vec_add(m.a, nl), m.b, er};
        out.push_back({{std::move(left), std::move(right)}, field_.monomial(ex2)});
      }
    }
    return out;
  }
};

}  // namespace oyqg
