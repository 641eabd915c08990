#pragma once

#include "oyqg/cartan/weyl.hpp"
#include "oyqg/pairing/pairing.hpp"

namespace oyqg {

struct DimensionCapExceeded : std::runtime_error {
  DimensionCapExceeded(long dim, long cap)
      : std::runtime_error("module dimension exceeds the cap: " + std::to_string(dim) + " > " + std::to_string(cap)) {}
};

/// lam - w0 lam in root coordinates: depths beyond it carry no weights of L(lam).
inline Vec weight_box(const CartanDatum& c, const Weight& lam) {
  Vec low = lam.s;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < c.rank(); ++i) {
      long s = 0;
      for (int j = 0; j < c.rank(); ++j) s += static_cast<long>(c.a(i, j)) * low[j];
      if (s > 0) {
        low[i] -= static_cast<int>(s);
        moved = true;
      }
    }
  }
  return c.to_root(Weight{vec_sub(lam.s, low)});
}

/// Simple highest-weight module L(lam) = M(lam) / sum_i U f_i^{c_i + 1} v_lam,
/// c_i = <lam, a_i^vee>, realized on quotients of U^-_{-nu} v_lam.
/// Basis vectors are pivot-free f-basis words of each weight space; the global
/// index runs through the weight spaces by increasing depth nu.
template <ScalarField F>
class SimpleModule {
 public:
  using Scalar = typename F::Scalar;
  using Elem = Element<Scalar>;
  using SVec = std::map<int, Scalar>;
  using Mat = Matrix<Scalar>;

  struct WeightSpace {
    Vec depth{};      // nu = lam - weight
    Weight weight;
    int offset = 0;   // first global index
    std::vector<Word> tags;
    std::vector<Word> fbasis;         // f-basis words of degree nu
    std::map<int, int> tag_of_col;    // f-basis column -> local index
    RowEchelon<Scalar> relations;     // the submodule inside U^-_{-nu} v_lam
  };

  SimpleModule(const QuantumGroup<F>& U, const Weight& lam, long dim_cap = 100000) : U_(U), lam_(lam) {
    const CartanDatum& c = U.cartan();
    if (!c.is_dominant(lam)) throw std::invalid_argument("highest weight must be dominant");
    const std::vector<int> cc = c.to_fundamental(lam);
    const Vec box = weight_box(c, lam);

    add_space(Vec{}, cc);
    std::vector<Vec> frontier{Vec{}};
    while (!frontier.empty()) {
      std::set<Vec> next;
      for (const Vec& nu : frontier)
        for (int j = 0; j < c.rank(); ++j) {
          Vec v = nu;
          v[j] += 1;
          bool inside = true;
          for (int i = 0; i < c.rank(); ++i) inside = inside && v[i] <= box[i];
          if (inside) next.insert(v);
        }
      frontier.clear();
      for (const Vec& nu : next) {
        if (add_space(nu, cc)) frontier.push_back(nu);
        if (dim_ > dim_cap) throw DimensionCapExceeded(dim_, dim_cap);
      }
    }
    for (const auto& ws : spaces_)
      for (std::size_t k = 0; k < ws.tags.size(); ++k) weight_of_.push_back(ws.weight);
    build_actions();
  }

  const QuantumGroup<F>& algebra() const { return U_; }
  const Weight& highest_weight() const { return lam_; }
  int dim() const { return dim_; }
  const std::vector<WeightSpace>& spaces() const { return spaces_; }
  const Weight& weight_of(int idx) const { return weight_of_[idx]; }

  const WeightSpace* space(const Weight& w) const {
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? nullptr : &spaces_[it->second];
  }

  std::map<Weight, long> weight_dims() const {
    std::map<Weight, long> out;
    for (const auto& ws : spaces_) out[ws.weight] = static_cast<long>(ws.tags.size());
    return out;
  }

  /// Image of basis vector col under e_i (Side::E) or f_i (Side::F).
  const SVec& generator_column(Side side, int i, int col) const {
    return (side == Side::E ? e_cols_ : f_cols_)[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
  }

  SVec apply_generator(Side side, int i, const SVec& v) const {
    SVec out;
    for (const auto& [col, x] : v)
      for (const auto& [row, y] : generator_column(side, i, col)) accumulate(out, row, x * y);
    return out;
  }

  /// Applies a free word of generators (rightmost letter acts first).
  SVec apply_word(Side side, const Word& w, SVec v) const {
    for (auto it = w.rbegin(); it != w.rend() && !v.empty(); ++it) v = apply_generator(side, *it, v);
    return v;
  }

  SVec apply_torus(const Vec& a, const Vec& b, SVec v) const {
    for (auto& [idx, x] : v) x = x * rho_char(U_, weight_of_[idx], a, b);
    return v;
  }

  SVec act(const Elem& u, const SVec& v) const {
    SVec out;
    for (const auto& [m, c] : u.terms()) {
      SVec w = apply_word(Side::E, m.e, v);
      if (w.empty()) continue;
      w = apply_word(Side::F, m.f, apply_torus(m.a, m.b, std::move(w)));
      for (const auto& [idx, x] : w) accumulate(out, idx, c * x);
    }
    return out;
  }

  SVec basis_vector(int idx) const { return SVec{{idx, U_.field().one()}}; }

  Mat act_matrix(const Elem& u) const {
    Mat m(dim_, dim_, U_.field().zero());
    for (int col = 0; col < dim_; ++col)
      for (const auto& [row, x] : act(u, basis_vector(col))) m.at(row, col) = x;
    return m;
  }

  /// Matrix of a free word of generators.
  Mat word_matrix(Side side, const Word& w) const {
    Mat m(dim_, dim_, U_.field().zero());
    for (int col = 0; col < dim_; ++col)
      for (const auto& [row, x] : apply_word(side, w, basis_vector(col))) m.at(row, col) = x;
    return m;
  }

  Mat torus_matrix(const Vec& a, const Vec& b) const {
    Mat m(dim_, dim_, U_.field().zero());
    for (int k = 0; k < dim_; ++k) m.at(k, k) = rho_char(U_, weight_of_[k], a, b);
    return m;
  }

  /// Theta = q^{-2(rho, wt)} on each weight space.
  Scalar theta(int idx) const {
    const CartanDatum& c = U_.cartan();
    Exponent e{};
    e[0] = static_cast<std::int32_t>(-2 * c.bil_scaled(c.rho(), weight_of_[idx]));
    return U_.field().monomial(e);
  }

  Mat theta_matrix() const {
    Mat m(dim_, dim_, U_.field().zero());
    for (int k = 0; k < dim_; ++k) m.at(k, k) = theta(k);
    return m;
  }

  /// t_lam(u) = tr(u Theta).
  Scalar quantum_trace(const Elem& u) const {
    Scalar acc = U_.field().zero();
    for (int k = 0; k < dim_; ++k) {
      SVec img = act(u, basis_vector(k));
      auto it = img.find(k);
      if (it != img.end()) acc += theta(k) * it->second;
    }
    return acc;
  }

  /// c_{f,m}(u) = f(u m) for basis vector m and coordinate functional f.
  Scalar matrix_coefficient(int f, int m, const Elem& u) const {
    SVec img = act(u, basis_vector(m));
    auto it = img.find(f);
    return it == img.end() ? U_.field().zero() : it->second;
  }

  /// Coordinates in L(lam) of (f-word) v_lam, for a word of any content.
  SVec word_vector(const Word& w) const {
    const Vec nu = word_content(w);
    const Weight wt = lam_ - U_.cartan().from_root(nu);
    const WeightSpace* ws = space(wt);
    if (!ws) return {};
    const Elem red = U_.monomial(Monomial{w, {}, {}, {}}, U_.field().one());
    SVec coords;
    for (const auto& [m, x] : red.terms()) {
      auto it = std::find(ws->fbasis.begin(), ws->fbasis.end(), m.f);
      coords[static_cast<int>(it - ws->fbasis.begin())] = x;
    }
    return project(*ws, coords);
  }

 private:
  const QuantumGroup<F>& U_;
  Weight lam_;
  int dim_ = 0;
  std::vector<WeightSpace> spaces_;
  std::map<Weight, int> by_weight_;
  std::vector<Weight> weight_of_;
  std::vector<std::vector<SVec>> e_cols_, f_cols_;

  static void accumulate(SVec& out, int idx, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = out.try_emplace(idx, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }

  // f-basis coordinates -> global coordinates in the quotient
  SVec project(const WeightSpace& ws, const typename RowEchelon<Scalar>::Row& coords) const {
    SVec out;
    for (const auto& [col, x] : ws.relations.reduce(coords)) out[ws.offset + ws.tag_of_col.at(col)] = x;
    return out;
  }

  bool add_space(const Vec& nu, const std::vector<int>& cc) {
    const CartanDatum& c = U_.cartan();
    WeightSpace ws;
    ws.depth = nu;
    ws.weight = lam_ - c.from_root(nu);
    ws.fbasis = U_.basis(Side::F, nu).basis;
    std::map<Word, int> col;
    for (std::size_t k = 0; k < ws.fbasis.size(); ++k) col[ws.fbasis[k]] = static_cast<int>(k);
    for (int i = 0; i < c.rank(); ++i) {
      Vec rest = nu;
      rest[i] -= cc[i] + 1;
      if (!vec_nonneg(rest)) continue;
      const Word power(static_cast<std::size_t>(cc[i] + 1), static_cast<char>(i));
      for (const Word& y : U_.basis(Side::F, rest).basis) {
        const Elem red = U_.monomial(Monomial{y + power, {}, {}, {}}, U_.field().one());
        typename RowEchelon<Scalar>::Row row;
        for (const auto& [m, x] : red.terms()) row[col.at(m.f)] = x;
        ws.relations.insert(std::move(row));
      }
    }
    for (std::size_t k = 0; k < ws.fbasis.size(); ++k) {
      if (ws.relations.is_pivot(static_cast<int>(k))) continue;
      ws.tag_of_col[static_cast<int>(k)] = static_cast<int>(ws.tags.size());
      ws.tags.push_back(ws.fbasis[k]);
    }
    if (ws.tags.empty()) return false;
    ws.offset = dim_;
    dim_ += static_cast<int>(ws.tags.size());
    by_weight_[ws.weight] = static_cast<int>(spaces_.size());
    spaces_.push_back(std::move(ws));
    return true;
  }

  void build_actions() {
    const int n = U_.rank();
    e_cols_.assign(n, std::vector<SVec>(dim_));
    f_cols_.assign(n, std::vector<SVec>(dim_));
    for (const auto& ws : spaces_) {
      for (std::size_t k = 0; k < ws.tags.size(); ++k) {
        const int col = ws.offset + static_cast<int>(k);
        const Word& w = ws.tags[k];
        for (int i = 0; i < n; ++i) {
          f_cols_[i][col] = word_vector(static_cast<char>(i) + w);
          // e_i w v_lam: straighten, keep e-free terms, evaluate the torus on v_lam
          const Elem prod = U_.multiply(U_.e(i), Elem::single(Monomial{w, {}, {}, {}}, U_.field().one()));
          SVec img;
          for (const auto& [m, x] : prod.terms()) {
            if (!m.e.empty()) continue;
            const Scalar s = x * rho_char(U_, lam_, m.a, m.b);
            for (const auto& [idx, y] : word_vector(m.f)) accumulate(img, idx, s * y);
          }
          e_cols_[i][col] = std::move(img);
        }
      }
    }
  }
};

}  // namespace oyqg
