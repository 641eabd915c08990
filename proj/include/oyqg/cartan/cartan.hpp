#pragma once

#include "oyqg/coeff/laurent.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oyqg {

inline constexpr int kMaxRank = 6;

/// Coordinates in the simple-root basis. Unused slots stay zero.
using Vec = std::array<int, kMaxRank>;

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec c{};
  for (int i = 0; i < kMaxRank; ++i) c[i] = a[i] + b[i];
  return c;
}
inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec c{};
  for (int i = 0; i < kMaxRank; ++i) c[i] = a[i] - b[i];
  return c;
}
inline Vec vec_neg(const Vec& a) {
  Vec c{};
  for (int i = 0; i < kMaxRank; ++i) c[i] = -a[i];
  return c;
}
inline Vec vec_scale(const Vec& a, int k) {
  Vec c{};
  for (int i = 0; i < kMaxRank; ++i) c[i] = a[i] * k;
  return c;
}
inline Vec unit_vec(int i) {
  Vec v{};
  v[i] = 1;
  return v;
}
inline bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}
inline bool vec_nonneg(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}
inline int vec_height(const Vec& a) { return std::accumulate(a.begin(), a.end(), 0); }

/// A weight, stored as r times its simple-root coordinates.
struct Weight {
  Vec s{};
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend Weight operator+(const Weight& a, const Weight& b) { return {vec_add(a.s, b.s)}; }
  friend Weight operator-(const Weight& a, const Weight& b) { return {vec_sub(a.s, b.s)}; }
  Weight operator-() const { return {vec_neg(s)}; }
};

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Finite-type Cartan datum with a_ij = 2(a_i,a_j)/(a_i,a_i) and d_i a_ij symmetric.
class CartanDatum {
 public:
  CartanDatum(std::string name, std::vector<std::vector<int>> a, std::vector<int> d)
      : name_(std::move(name)), a_(std::move(a)), d_(std::move(d)) {
    n_ = static_cast<int>(a_.size());
    if (n_ < 1 || n_ > kMaxRank) throw UnsupportedType("rank out of range: " + name_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (d_[i] * a_[i][j] != d_[j] * a_[j][i]) throw UnsupportedType("not symmetrizable: " + name_);
    if (!positive_definite()) throw UnsupportedType("not of finite type: " + name_);
    compute_inverse();
    compute_roots();
  }

  const std::string& name() const { return name_; }
  int rank() const { return n_; }
  int a(int i, int j) const { return a_[i][j]; }
  int d(int i) const { return d_[i]; }
  /// Lattice denominator: fundamental weights lie in (1/r)Q.
  int r() const { return r_; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::vector<int>& symmetrizer() const { return d_; }

  /// (a,b) for root-lattice vectors.
  long bil(const Vec& x, const Vec& y) const {
    long s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += static_cast<long>(x[i]) * d_[i] * a_[i][j] * y[j];
    return s;
  }

  /// r * (x,y); exact whenever x or y lies in the weight lattice and the
  /// other in the root lattice, or both in the weight lattice.
  long bil_scaled(const Weight& x, const Weight& y) const {
    long s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += static_cast<long>(x.s[i]) * d_[i] * a_[i][j] * y.s[j];
    if (s % r_ != 0) throw std::logic_error("bil_scaled: off lattice");
    return s / r_;
  }

  mpq_class bil_q(const Weight& x, const Weight& y) const {
    long s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += static_cast<long>(x.s[i]) * d_[i] * a_[i][j] * y.s[j];
    mpq_class v(s, static_cast<long>(r_) * r_);
    v.canonicalize();
    return v;
  }

  Weight from_root(const Vec& v) const { return {vec_scale(v, r_)}; }

  bool in_root_lattice(const Weight& w) const {
    for (int i = 0; i < n_; ++i)
      if (w.s[i] % r_ != 0) return false;
    return true;
  }

  Vec to_root(const Weight& w) const {
    if (!in_root_lattice(w)) throw std::invalid_argument("weight not in the root lattice");
    Vec v{};
    for (int i = 0; i < n_; ++i) v[i] = w.s[i] / r_;
    return v;
  }

  /// Weight with the given coordinates in the fundamental-weight basis.
  Weight from_fundamental(const std::vector<int>& lam) const {
    if (static_cast<int>(lam.size()) != n_) throw std::invalid_argument("fundamental coordinates: wrong length");
    Weight w;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) w.s[i] += inv_scaled_[i][j] * lam[j];
    return w;
  }

  /// <w, a_i^vee> for every i.
  std::vector<int> to_fundamental(const Weight& w) const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
      long s = 0;
      for (int j = 0; j < n_; ++j) s += static_cast<long>(a_[i][j]) * w.s[j];
      if (s % r_ != 0) throw std::logic_error("to_fundamental: off lattice");
      out[i] = static_cast<int>(s / r_);
    }
    return out;
  }

  bool is_dominant(const Weight& w) const {
    auto f = to_fundamental(w);
    return std::all_of(f.begin(), f.end(), [](int x) { return x >= 0; });
  }

  /// mu <= lam iff lam - mu is a nonnegative integer combination of simple roots.
  bool dominated(const Weight& mu, const Weight& lam) const {
    Weight diff = lam - mu;
    return in_root_lattice(diff) && vec_nonneg(diff.s);
  }

  Weight rho() const { return from_fundamental(std::vector<int>(n_, 1)); }

  /// Exponent vector (scaled by r) of chi(eta, phi) = prod_{i,j} (q^{d_j a_ji} q_ji)^{eta_i phi_j},
  /// q_ij = t_ij for i < j, q_ji = t_ij^{-1}.
  Exponent chi(const Weight& eta, const Weight& phi) const {
    Exponent e{};
    e[0] = static_cast<std::int32_t>(bil_scaled(eta, phi));
    int idx = 1;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++idx) {
        // q_ji^{eta_i phi_j} = t_ij^{-eta_i phi_j}; q_ij^{eta_j phi_i} = t_ij^{eta_j phi_i}
        long v = static_cast<long>(eta.s[j]) * phi.s[i] - static_cast<long>(eta.s[i]) * phi.s[j];
        if (v % r_ != 0) throw std::logic_error("chi: off lattice");
        e[idx] = static_cast<std::int32_t>(v / r_);
      }
    }
    return e;
  }

  Exponent chi(const Vec& eta, const Vec& phi) const { return chi(from_root(eta), from_root(phi)); }

  /// Exponent of q^{k (rho, v)} scaled by r.
  Exponent q_rho(const Vec& v, int k) const {
    Exponent e{};
    long s = 0;
    for (int i = 0; i < n_; ++i) s += static_cast<long>(d_[i]) * v[i];
    e[0] = static_cast<std::int32_t>(k * s * r_);
    return e;
  }

  /// Exponent of q_i^k = q^{d_i k}.
  Exponent q_i(int i, int k) const {
    Exponent e{};
    e[0] = d_[i] * k * r_;
    return e;
  }

  const std::vector<Vec>& positive_roots() const { return roots_; }

  /// Number of ways to write v as a sum of positive roots.
  long kostant_count(const Vec& v) const {
    std::map<std::pair<std::size_t, Vec>, long> memo;
    return kostant_rec(0, v, memo);
  }

 private:
  std::string name_;
  std::vector<std::vector<int>> a_;
  std::vector<int> d_;
  int n_ = 0;
  int r_ = 1;
  std::vector<std::vector<int>> inv_scaled_;  // r * A^{-1}
  std::vector<Vec> roots_;

  bool positive_definite() const {
    std::vector<std::vector<mpq_class>> m(n_, std::vector<mpq_class>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m[i][j] = d_[i] * a_[i][j];
    for (int k = 0; k < n_; ++k) {
      if (m[k][k] <= 0) return false;
      for (int i = k + 1; i < n_; ++i) {
        mpq_class f = m[i][k] / m[k][k];
        for (int j = k; j < n_; ++j) m[i][j] -= f * m[k][j];
      }
    }
    return true;
  }

  void compute_inverse() {
    std::vector<std::vector<mpq_class>> m(n_, std::vector<mpq_class>(2 * n_));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) m[i][j] = a_[i][j];
      m[i][n_ + i] = 1;
    }
    for (int k = 0; k < n_; ++k) {
      int p = k;
      while (m[p][k] == 0) ++p;
      std::swap(m[p], m[k]);
      mpq_class piv = m[k][k];
      for (auto& x : m[k]) x /= piv;
      for (int i = 0; i < n_; ++i) {
        if (i == k || m[i][k] == 0) continue;
        mpq_class f = m[i][k];
        for (int j = 0; j < 2 * n_; ++j) m[i][j] -= f * m[k][j];
      }
    }
    long den = 1;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) den = std::lcm(den, mpz_get_si(m[i][n_ + j].get_den_mpz_t()));
    r_ = static_cast<int>(den);
    inv_scaled_.assign(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        mpq_class v = m[i][n_ + j] * r_;
        inv_scaled_[i][j] = static_cast<int>(mpz_get_si(v.get_num_mpz_t()));
      }
  }

  // <v, a_i^vee> for a root-lattice vector
  int coroot(const Vec& v, int i) const {
    int s = 0;
    for (int j = 0; j < n_; ++j) s += a_[i][j] * v[j];
    return s;
  }

  void compute_roots() {
    std::set<Vec> seen;
    std::vector<Vec> layer;
    for (int i = 0; i < n_; ++i) {
      layer.push_back(unit_vec(i));
      seen.insert(unit_vec(i));
    }
    while (!layer.empty()) {
      std::vector<Vec> next;
      for (const Vec& b : layer) {
        roots_.push_back(b);
        for (int i = 0; i < n_; ++i) {
          int p = 0;
          Vec down = b;
          for (;;) {
            down[i] -= 1;
            if (!seen.count(down)) break;
            ++p;
          }
          if (p - coroot(b, i) > 0) {
            Vec up = b;
            up[i] += 1;
            if (seen.insert(up).second) next.push_back(up);
          }
        }
      }
      std::sort(next.begin(), next.end());
      layer = std::move(next);
    }
  }

  long kostant_rec(std::size_t idx, const Vec& v, std::map<std::pair<std::size_t, Vec>, long>& memo) const {
    if (vec_is_zero(v)) return 1;
    if (idx == roots_.size() || !vec_nonneg(v)) return 0;
    auto key = std::make_pair(idx, v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    Vec rest = v;
    while (vec_nonneg(rest)) {
      total += kostant_rec(idx + 1, rest, memo);
      rest = vec_sub(rest, roots_[idx]);
    }
    memo.emplace(key, total);
    return total;
  }
};

/// Parses "A2", "B2", "G2", "A3", ... (rank at most kMaxRank). B2 uses
/// a_12 = -2, a_21 = -1; "transpose" flips the orientation.
inline CartanDatum make_cartan(const std::string& type, bool transpose = false) {
  if (type.size() < 2) throw UnsupportedType("unknown Cartan type: " + type);
  const char fam = type[0];
  int n = 0;
  try {
    n = std::stoi(type.substr(1));
  } catch (const std::exception&) {
    throw UnsupportedType("unknown Cartan type: " + type);
  }
  if (n < 1 || n > kMaxRank) throw UnsupportedType("rank out of range: " + type);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<int> d(n, 1);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&] {
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (fam) {
    case 'A':
      chain();
      break;
    case 'B':
      if (n < 2) throw UnsupportedType("B needs rank >= 2");
      chain();
      if (n == 2) {
        a[0][1] = -2;
        d = {1, 2};
      } else {
        a[n - 1][n - 2] = -2;
        for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      }
      break;
    case 'C':
      if (n < 2) throw UnsupportedType("C needs rank >= 2");
      chain();
      a[n - 2][n - 1] = -2;
      d[n - 1] = 2;
      break;
    case 'D':
      if (n < 4) throw UnsupportedType("D needs rank >= 4");
      chain();
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'E':
      if (n != 6) throw UnsupportedType("only E6 fits the rank and Weyl-order limits");
      // Bourbaki labels 1-3-4-5-6 with 2 attached to 4
      {
        const int edges[5][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        for (auto& e : edges) a[e[0]][e[1]] = a[e[1]][e[0]] = -1;
      }
      break;
    case 'F':
      if (n != 4) throw UnsupportedType("unknown Cartan type: " + type);
      chain();
      a[2][1] = -2;
      d = {2, 2, 1, 1};
      break;
    case 'G':
      if (n != 2) throw UnsupportedType("unknown Cartan type: " + type);
      chain();
      a[1][0] = -3;
      d = {3, 1};
      break;
    default:
      throw UnsupportedType("unknown Cartan type: " + type);
  }
  if (transpose) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i][j] = a[j][i];
    a = t;
    // the transpose is symmetrized by the reciprocal lengths
    int l = 1;
    for (int x : d) l = std::lcm(l, x);
    for (int& x : d) x = l / x;
  }
  return CartanDatum(type, std::move(a), std::move(d));
}

}  // namespace oyqg
