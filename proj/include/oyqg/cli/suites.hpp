#pragma once

#include "oyqg/center/center.hpp"
#include "oyqg/pairing/oracle.hpp"

#include <chrono>
#include <memory>
#include <sstream>
#include <string_view>

namespace oyqg::cli {

enum class Status { Pass, Fail, Flag };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flag: return "flag";
  }
  return "fail";
}

struct CheckRecord {
  std::string name;
  std::string anchor;  // the property checked, as a formula
  Status status = Status::Pass;
  std::string witness;  // first counterexample
  std::string detail;   // exhibited instances, counts
  double ms = 0;
};

struct Outcome {
  Status status = Status::Pass;
  std::string witness;
  std::string detail;
};

inline Outcome pass(std::string detail = {}) { return {Status::Pass, {}, std::move(detail)}; }
inline Outcome fail(std::string witness, std::string detail = {}) { return {Status::Fail, std::move(witness), std::move(detail)}; }
inline Outcome flag(std::string witness, std::string detail = {}) { return {Status::Flag, std::move(witness), std::move(detail)}; }

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class Fn>
CheckRecord run_check(std::string name, std::string anchor, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const DivisionByZero& e) {
    o = fail(e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(name), std::move(anchor), o.status, std::move(o.witness), std::move(o.detail), ms};
}

inline std::string vec_text(const Vec& v, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Weight label in fundamental coordinates, e.g. "[1,1]".
inline std::string weight_text(const CartanDatum& c, const Weight& w) {
  std::string s = "[";
  const auto f = c.to_fundamental(w);
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

struct SuiteParams {
  int samples = 20;
  std::uint64_t seed = 1;
  int hopf_height = 4;
  int pair_height = 4;
  int rosso_height = 3;
  int char_samples = 50;
  int char_n = 2;                       // search dominant lam >= N rho
  std::vector<Weight> module_lambdas;   // empty: defaults for the type
  std::vector<Weight> center_lambdas;   // empty: defaults for the type
  long dim_cap = 100000;
};

inline int box_height(const CartanDatum& c, const Weight& lam) { return vec_height(weight_box(c, lam)); }

/// Defaults: the A1 and A2 reference weights, otherwise small weights whose
/// modules fit the height bound.
inline std::vector<Weight> default_module_lambdas(const CartanDatum& c, int max_height) {
  if (c.name() == "A1") return {c.from_fundamental({2}), c.from_fundamental({4})};
  if (c.name() == "A2") return {c.from_fundamental({1, 1})};
  std::vector<Weight> out;
  for (int i = 0; i < c.rank(); ++i) {
    std::vector<int> f(c.rank(), 0);
    f[i] = 1;
    const Weight w = c.from_fundamental(f);
    if (box_height(c, w) <= max_height) out.push_back(w);
  }
  return out;
}

inline std::vector<Weight> default_center_lambdas(const CartanDatum& c, int max_height) {
  if (c.name() == "A1") return {c.from_fundamental({2}), c.from_fundamental({4})};
  if (c.name() == "A2") return {c.from_fundamental({1, 1})};
  std::vector<Weight> cands;
  for (int code = 1; code < 1 << (2 * c.rank()); ++code) {
    std::vector<int> f(c.rank());
    for (int i = 0; i < c.rank(); ++i) f[i] = (code >> (2 * i)) & 3;
    if (std::any_of(f.begin(), f.end(), [](int x) { return x > 2; })) continue;
    const Weight w = c.from_fundamental(f);
    // commutators with e_i, f_i reach one degree past the box
    if (c.in_root_lattice(w) && box_height(c, w) + 1 <= max_height) cands.push_back(w);
  }
  std::sort(cands.begin(), cands.end(), [&](const Weight& a, const Weight& b) {
    const int ha = box_height(c, a), hb = box_height(c, b);
    return ha != hb ? ha < hb : a < b;
  });
  if (cands.size() > 2) cands.resize(2);
  return cands;
}

/// All verification checks, generic over the scalar backend.
template <ScalarField F>
class SuiteRunner {
 public:
  using Scalar = typename F::Scalar;
  using Elem = Element<Scalar>;
  using Tens = Tensor<Scalar>;
  using Module = SimpleModule<F>;
  using Mat = Matrix<Scalar>;

  SuiteRunner(const QuantumGroup<F>& U, SuiteParams p) : U_(U), Z_(U), p_(std::move(p)) {
    const CartanDatum& c = U_.cartan();
    if (p_.module_lambdas.empty()) p_.module_lambdas = default_module_lambdas(c, U_.max_height());
    if (p_.center_lambdas.empty()) p_.center_lambdas = default_center_lambdas(c, U_.max_height());
  }

  const QuantumGroup<F>& algebra() const { return U_; }
  const Pairing<F>& pairing() const { return Z_.pairing(); }
  const Center<F>& center() const { return Z_; }
  const SuiteParams& params() const { return p_; }

  static const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hopf", "pairing", "rosso", "modules", "center"};
    return names;
  }

  std::vector<CheckRecord> run(const std::string& suite) {
    if (suite == "all") {
      std::vector<CheckRecord> out;
      for (const auto& s : suite_names()) {
        auto part = run(s);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    if (suite == "hopf") return hopf_suite();
    if (suite == "pairing") return pairing_suite();
    if (suite == "rosso") return rosso_suite();
    if (suite == "modules") return modules_suite();
    if (suite == "center") return center_suite();
    throw std::invalid_argument("unknown suite: " + suite);
  }

  std::vector<CheckRecord> hopf_suite() {
    return {relations(), coassociativity(), counit(), antipode(), coproduct_multiplicative(),
            antipode_antimultiplicative(), serre_coproduct()};
  }

  std::vector<CheckRecord> pairing_suite() {
    return {graded_dimensions(U_.max_height()), nondegenerate(U_.max_height()), literal_oracle(std::max(p_.samples, 30)),
            coproduct_identities(), dual_bases()};
  }

  std::vector<CheckRecord> rosso_suite() {
    return {ad_invariance(), graded_orthogonality(), torus_values(), rho_separation(), rho2_separation(),
            character_distinctness()};
  }

  std::vector<CheckRecord> modules_suite() {
    std::vector<CheckRecord> out;
    for (const Weight& lam : p_.module_lambdas) {
      out.push_back(module_dimensions(lam));
      out.push_back(module_weyl_symmetric(lam));
      out.push_back(module_relations(lam));
      out.push_back(module_theta(lam));
    }
    return out;
  }

  std::vector<CheckRecord> center_suite() {
    std::vector<CheckRecord> out;
    for (const Weight& lam : p_.center_lambdas) {
      out.push_back(central(lam));
      out.push_back(trace_realization(lam));
      out.push_back(hc_image(lam));
      out.push_back(flat_invariant(lam));
      out.push_back(eigenvalues(lam));
      out.push_back(decomposition(lam));
      out.push_back(specialization(lam));
    }
    out.push_back(decomposition(Weight{}));
    out.push_back(mu_range());
    out.push_back(multiplicative());
    out.push_back(injective());
    return out;
  }

  // ---- hopf --------------------------------------------------------------------

  CheckRecord relations() {
    return run_check("hopf.relations", "[e_i, f_j] = delta_ij (w_i - w'_i)/(q_i - q_i^-1); w e_j w^-1 = chi e_j; Serre = 0", [&] {
      const int n = U_.rank();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Elem expect;
          if (i == j) expect = U_.hden(i) * (U_.omega(unit_vec(i)) - U_.omega_p(unit_vec(i)));
          if (!(U_.commutator(U_.e(i), U_.f(j)) == expect)) return fail("[e" + std::to_string(i + 1) + ", f" + std::to_string(j + 1) + "]");
          const Vec phi = unit_vec(i);
          const Elem l = U_.multiply(U_.multiply(U_.omega(phi), U_.e(j)), U_.omega(vec_neg(phi)));
          if (!(l == U_.chi(unit_vec(j), phi) * U_.e(j))) return fail("w" + std::to_string(i + 1) + " e" + std::to_string(j + 1));
          const Elem lf = U_.multiply(U_.multiply(U_.omega_p(phi), U_.f(j)), U_.omega_p(vec_neg(phi)));
          if (!(lf == U_.chi(phi, unit_vec(j)) * U_.f(j))) return fail("w'" + std::to_string(i + 1) + " f" + std::to_string(j + 1));
          if (i == j) continue;
          for (Side s : {Side::E, Side::F}) {
            const Elem serre = U_.serre_element(s, i, j);
            Elem red;
            for (const auto& [m, c] : serre.terms()) red = red + U_.monomial(m, c);
            if (!red.is_zero()) return fail("Serre " + std::to_string(i + 1) + std::to_string(j + 1));
          }
        }
      return pass();
    });
  }

  CheckRecord coassociativity() {
    return run_check("hopf.coassociativity", "(Delta x id) Delta = (id x Delta) Delta", [&] {
      auto rng = rng_for("hopf.coassociativity");
      for (int k = 0; k < p_.samples; ++k) {
        const Elem x = U_.random_element(rng, p_.hopf_height, 2);
        const Tens d = U_.coproduct(x);
        const auto l = U_.apply_to_factor(d, 0, [&](const Elem& z) { return U_.coproduct(z); });
        const auto r = U_.apply_to_factor(d, 1, [&](const Elem& z) { return U_.coproduct(z); });
        if (!(l == r)) return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples");
    });
  }

  CheckRecord counit() {
    return run_check("hopf.counit", "(eps x id) Delta = id = (id x eps) Delta", [&] {
      auto rng = rng_for("hopf.counit");
      for (int k = 0; k < p_.samples; ++k) {
        const Elem x = U_.random_element(rng, p_.hopf_height, 2);
        Elem l, r;
        const Tens d = U_.coproduct(x);
        for (const auto& [key, c] : d.terms()) {
          l.add(key[1], c * U_.counit(Elem::single(key[0], U_.field().one())));
          r.add(key[0], c * U_.counit(Elem::single(key[1], U_.field().one())));
        }
        if (!(l == x) || !(r == x)) return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples");
    });
  }

  CheckRecord antipode() {
    return run_check("hopf.antipode", "m (S x id) Delta = eps = m (id x S) Delta", [&] {
      auto rng = rng_for("hopf.antipode");
      for (int k = 0; k < p_.samples; ++k) {
        const Elem x = U_.random_element(rng, p_.hopf_height, 2);
        const Tens d = U_.coproduct(x);
        const Elem e = U_.scalar(U_.counit(x));
        const Elem sl = U_.contract(U_.map_factor(d, 0, [&](const Elem& z) { return U_.antipode(z); }));
        const Elem sr = U_.contract(U_.map_factor(d, 1, [&](const Elem& z) { return U_.antipode(z); }));
        if (!(sl == e) || !(sr == e)) return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples");
    });
  }

  CheckRecord coproduct_multiplicative() {
    return run_check("hopf.coproduct_multiplicative", "Delta(x y) = Delta(x) Delta(y)", [&] {
      auto rng = rng_for("hopf.coproduct_multiplicative");
      const int h = std::max(1, p_.hopf_height / 2);
      for (int k = 0; k < p_.samples; ++k) {
        const Elem x = U_.random_element(rng, h, 2), y = U_.random_element(rng, h, 2);
        if (!(U_.coproduct(U_.multiply(x, y)) == U_.tensor_multiply(U_.coproduct(x), U_.coproduct(y))))
          return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples");
    });
  }

  CheckRecord antipode_antimultiplicative() {
    return run_check("hopf.antipode_antimultiplicative", "S(x y) = S(y) S(x)", [&] {
      auto rng = rng_for("hopf.antipode_antimultiplicative");
      const int h = std::max(1, p_.hopf_height / 2);
      for (int k = 0; k < p_.samples; ++k) {
        const Elem x = U_.random_element(rng, h, 2), y = U_.random_element(rng, h, 2);
        if (!(U_.antipode(U_.multiply(x, y)) == U_.multiply(U_.antipode(y), U_.antipode(x))))
          return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples");
    });
  }

  CheckRecord serre_coproduct() {
    return run_check("hopf.serre_coproduct", "Delta(Serre element) = 0", [&] {
      const int n = U_.rank();
      int count = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || U_.cartan().a(i, j) == 0) continue;
          for (Side s : {Side::E, Side::F}) {
            const Elem serre = U_.serre_element(s, i, j);
            Tens total;
            for (const auto& [m, c] : serre.terms()) {
              const Word& w = s == Side::E ? m.e : m.f;
              Tens acc = U_.tensor(U_.one(), U_.one());
              for (char g : w) acc = U_.tensor_multiply(acc, U_.coproduct(s == Side::E ? U_.e(g) : U_.f(g)));
              for (const auto& [key, v] : acc.terms()) total.add(key, c * v);
            }
            if (!total.is_zero())
              return fail(std::string(s == Side::E ? "e" : "f") + "-Serre " + std::to_string(i + 1) + std::to_string(j + 1));
            ++count;
          }
        }
      return pass(std::to_string(count) + " Serre elements");
    });
  }

  // ---- pairing -----------------------------------------------------------------

  CheckRecord graded_dimensions(int h) {
    return run_check("basis.kostant", "|graded basis(mu)| = Kostant count(mu)", [&] {
      long degrees = 0;
      std::string bad;
      U_.enumerate_degrees(h, [&](const Vec& mu) {
        ++degrees;
        const long k = U_.cartan().kostant_count(mu);
        for (Side s : {Side::E, Side::F})
          if (static_cast<long>(U_.basis(s, mu).basis.size()) != k && bad.empty()) bad = vec_text(mu, U_.rank());
      });
      if (!bad.empty()) return fail("degree " + bad);
      return pass(std::to_string(degrees) + " degrees up to height " + std::to_string(h));
    });
  }

  CheckRecord nondegenerate(int h) {
    return run_check("pairing.nondegenerate", "det gram(mu) != 0", [&] {
      long degrees = 0;
      std::string bad;
      U_.enumerate_degrees(h, [&](const Vec& mu) {
        ++degrees;
        if (pairing().gram_det(mu).is_zero()) {
          // a zero residue does not prove a zero determinant
          if constexpr (!F::kExact) throw RetryPoint();
          if (bad.empty()) bad = vec_text(mu, U_.rank());
        }
      });
      if (!bad.empty()) return fail("degree " + bad);
      return pass(std::to_string(degrees) + " degrees up to height " + std::to_string(h));
    });
  }

  CheckRecord literal_oracle(int samples) {
    return run_check("pairing.literal_oracle", "recursive <y, x> = literal coproduct expansion", [&] {
      auto rng = rng_for("pairing.literal_oracle");
      LiteralPairing<F> L(U_);
      const auto degrees = degrees_up_to(p_.pair_height);
      for (int k = 0; k < samples; ++k) {
        const Vec mu = degrees[rng() % degrees.size()];
        const Elem y = random_half(Side::F, mu, rng), x = random_half(Side::E, mu, rng);
        if (!(pairing().pair(y, x) == L.pair(y, x))) return fail("sample " + std::to_string(k) + " degree " + vec_text(mu, U_.rank()));
      }
      return pass(std::to_string(samples) + " homogeneous pairs");
    });
  }

  CheckRecord coproduct_identities() {
    return run_check("pairing.coproduct_identities", "<y, x x'> = <Delta y, x' x x>, <y y', x> = <y x y', Delta x>", [&] {
      auto rng = rng_for("pairing.coproduct_identities");
      const auto degrees = degrees_up_to(std::max(1, p_.pair_height / 2));
      const auto& P = pairing();
      auto one = U_.field().one();
      for (int k = 0; k < p_.samples; ++k) {
        const Vec m1 = degrees[rng() % degrees.size()], m2 = degrees[rng() % degrees.size()];
        const Elem x = random_half(Side::E, m1, rng), x2 = random_half(Side::E, m2, rng);
        const Elem y = random_half(Side::F, vec_add(m1, m2), rng);
        Scalar rhs = U_.field().zero();
        const Tens dy = U_.coproduct(y);
        for (const auto& [key, c] : dy.terms())
          rhs += c * P.pair(Elem::single(key[0], one), x2) * P.pair(Elem::single(key[1], one), x);
        if (!(P.pair(y, U_.multiply(x, x2)) == rhs)) return fail("first identity, sample " + std::to_string(k));
        const Elem y1 = random_half(Side::F, m1, rng), y2 = random_half(Side::F, m2, rng);
        const Elem xx = random_half(Side::E, vec_add(m1, m2), rng);
        Scalar rhs2 = U_.field().zero();
        const Tens dxx = U_.coproduct(xx);
        for (const auto& [key, c] : dxx.terms())
          rhs2 += c * P.pair(y1, Elem::single(key[0], one)) * P.pair(y2, Elem::single(key[1], one));
        if (!(P.pair(U_.multiply(y1, y2), xx) == rhs2)) return fail("second identity, sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples of each identity");
    });
  }

  CheckRecord dual_bases() {
    return run_check("pairing.dual_basis", "<v_i, u_j> = delta_ij", [&] {
      long degrees = 0;
      std::string bad;
      U_.enumerate_degrees(p_.pair_height, [&](const Vec& mu) {
        ++degrees;
        const auto& d = pairing().dual_basis(mu);
        for (std::size_t i = 0; i < d.v.size(); ++i)
          for (std::size_t j = 0; j < d.u.size(); ++j) {
            const Scalar v = pairing().pair(d.v[i], Elem::single(Monomial{{}, {}, {}, d.u[j]}, U_.field().one()));
            if (!(v == (i == j ? U_.field().one() : U_.field().zero())) && bad.empty()) bad = vec_text(mu, U_.rank());
          }
      });
      if (!bad.empty()) return fail("degree " + bad);
      return pass(std::to_string(degrees) + " degrees");
    });
  }

  // ---- rosso -------------------------------------------------------------------

  CheckRecord ad_invariance() {
    return run_check("rosso.ad_invariance", "<ad(a) b | c> = <b | ad(S(a)) c>", [&] {
      auto rng = rng_for("rosso.ad_invariance");
      std::vector<std::pair<std::string, Elem>> gens;
      for (int i = 0; i < U_.rank(); ++i) {
        const std::string k = std::to_string(i + 1);
        gens.emplace_back("e" + k, U_.e(i));
        gens.emplace_back("f" + k, U_.f(i));
        gens.emplace_back("w" + k, U_.omega(unit_vec(i)));
        gens.emplace_back("w'" + k, U_.omega_p(unit_vec(i)));
      }
      const auto& P = pairing();
      for (int k = 0; k < p_.samples; ++k) {
        const Elem b = U_.random_element(rng, p_.rosso_height, 2), c = U_.random_element(rng, p_.rosso_height, 2);
        for (const auto& [name, a] : gens)
          if (!(P.rosso(U_.ad_left(a, b), c) == P.rosso(b, U_.ad_left(U_.antipode(a), c))))
            return fail("a = " + name + ", sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " pairs (b, c) against " + std::to_string(gens.size()) + " generators");
    });
  }

  CheckRecord graded_orthogonality() {
    return run_check("rosso.graded_orthogonality", "<u | v> = 0 unless mu1 = nu2 and nu1 = mu2", [&] {
      auto rng = rng_for("rosso.graded_orthogonality");
      int checked = 0;
      for (int k = 0; k < p_.samples; ++k) {
        const Elem u = U_.random_element(rng, p_.rosso_height, 1), v = U_.random_element(rng, p_.rosso_height, 1);
        const Monomial& mu = u.terms().begin()->first;
        const Monomial& mv = v.terms().begin()->first;
        if (mu.e_content() == mv.f_content() && mu.f_content() == mv.e_content()) continue;
        ++checked;
        if (!pairing().rosso(u, v).is_zero()) return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(checked) + " mismatched pairs");
    });
  }

  CheckRecord torus_values() {
    return run_check("rosso.torus_values", "<w'_a w_b | w'_a' w_b'> = <w'_a', w_b> <w'_a, w_b'>", [&] {
      auto rng = rng_for("rosso.torus_values");
      std::uniform_int_distribution<int> coin(-2, 2);
      for (int k = 0; k < p_.samples; ++k) {
        Vec a{}, b{}, a2{}, b2{};
        for (int i = 0; i < U_.rank(); ++i) {
          a[i] = coin(rng);
          b[i] = coin(rng);
          a2[i] = coin(rng);
          b2[i] = coin(rng);
        }
        const Elem u = Elem::single(Monomial{{}, a, b, {}}, U_.field().one());
        const Elem v = Elem::single(Monomial{{}, a2, b2, {}}, U_.field().one());
        if (!(pairing().rosso(u, v) == pairing().torus_pair(a2, b) * pairing().torus_pair(a, b2))) return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.samples) + " samples");
    });
  }

  /// For random (eta, phi) != 0: a dominant lam >= N rho with rho^lam(w'_eta w_phi) != 1.
  CheckRecord rho_separation() {
    return run_check("characters.rho_separation", "rho^lam(w'_eta w_phi) = 1 for all lam >= N rho iff (eta, phi) = 0", [&] {
      if (U_.rank() < 2)
        return flag("rank 1: w'_eta w_eta is central and rho^lam(w'_eta w_eta) = 1 for every lam",
                    "the separation needs at least one parameter t_ij");
      auto rng = rng_for("characters.rho_separation");
      const auto lams = separating_weights();
      std::string first;
      for (int k = 0; k < p_.char_samples; ++k) {
        const auto [eta, phi] = random_nonzero_pair(rng);
        bool found = false;
        for (const Weight& lam : lams)
          if (!(rho_char(U_, lam, eta, phi) == U_.field().one())) {
            found = true;
            if (first.empty()) first = "(" + vec_text(eta, U_.rank()) + ", " + vec_text(phi, U_.rank()) + ") at lam = " + weight_text(U_.cartan(), lam);
            break;
          }
        if (!found) return fail("(" + vec_text(eta, U_.rank()) + ", " + vec_text(phi, U_.rank()) + ")");
      }
      return pass(std::to_string(p_.char_samples) + " pairs separated; first " + first);
    });
  }

  /// For random (eta, phi) != 0: (lam, mu) with rho^{lam,mu}(w'_eta w_phi) != 1.
  CheckRecord rho2_separation() {
    return run_check("characters.rho2_separation", "rho^{lam,mu}(w'_eta w_phi) = 1 for all lam, mu iff (eta, phi) = 0", [&] {
      auto rng = rng_for("characters.rho2_separation");
      std::string first;
      for (int k = 0; k < p_.char_samples; ++k) {
        const auto [eta, phi] = random_nonzero_pair(rng);
        auto hit = separate2(eta, phi, Vec{}, Vec{});
        if (!hit) return fail("(" + vec_text(eta, U_.rank()) + ", " + vec_text(phi, U_.rank()) + ")");
        if (first.empty()) first = *hit;
      }
      return pass(std::to_string(p_.char_samples) + " pairs separated; first " + first);
    });
  }

  /// Distinct (eta, phi) != (eta', phi') are separated by some rho^{lam,mu}.
  CheckRecord character_distinctness() {
    return run_check("characters.distinctness", "kappa_{eta,phi} = kappa_{eta',phi'} iff (eta, phi) = (eta', phi')", [&] {
      auto rng = rng_for("characters.distinctness");
      for (int k = 0; k < p_.char_samples; ++k) {
        auto [eta, phi] = random_nonzero_pair(rng);
        auto [eta2, phi2] = random_nonzero_pair(rng);
        if (eta == eta2 && phi == phi2) continue;
        if (!separate2(eta, phi, eta2, phi2)) return fail("sample " + std::to_string(k));
      }
      return pass(std::to_string(p_.char_samples) + " distinct pairs separated");
    });
  }

  // ---- modules -----------------------------------------------------------------

  CheckRecord module_dimensions(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("module.freudenthal" + tag, "dim L(lam)_mu = classical multiplicity", [&] {
      const Module& M = module(lam);
      const auto expect = freudenthal(U_.cartan(), lam);
      if (M.weight_dims() != expect) return flag("weight multiplicities differ from Freudenthal");
      return pass("dim " + std::to_string(M.dim()));
    });
  }

  CheckRecord module_weyl_symmetric(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("module.weyl_symmetric" + tag, "dim L(lam)_{w mu} = dim L(lam)_mu", [&] {
      const Module& M = module(lam);
      const auto dims = M.weight_dims();
      for (const auto& [w, d] : dims)
        for (const Weight& o : Z_.weyl().orbit(w)) {
          auto it = dims.find(o);
          if (it == dims.end() || it->second != d) return fail("weight " + weight_text(U_.cartan(), w));
        }
      return pass(std::to_string(dims.size()) + " weights");
    });
  }

  CheckRecord module_relations(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("module.relations" + tag, "defining relations hold as matrices on L(lam)", [&] {
      const Module& M = module(lam);
      const int n = U_.rank();
      const Scalar one = U_.field().one();
      auto E = [&](int i) { return M.word_matrix(Side::E, word_of({i})); };
      auto Fm = [&](int i) { return M.word_matrix(Side::F, word_of({i})); };
      for (int i = 0; i < n; ++i) {
        const Vec phi = unit_vec(i);
        const Mat W = M.torus_matrix({}, phi), Wi = M.torus_matrix({}, vec_neg(phi));
        const Mat Wp = M.torus_matrix(phi, {}), Wpi = M.torus_matrix(vec_neg(phi), {});
        // torus generators act by the characters of the weights
        if (!same(W, M.act_matrix(U_.omega(phi))) || !same(Wp, M.act_matrix(U_.omega_p(phi)))) return fail("torus " + std::to_string(i + 1));
        for (int j = 0; j < n; ++j) {
          const std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
          const Scalar c = U_.chi(unit_vec(j), phi), cp = U_.chi(phi, unit_vec(j));
          if (!same(mul(mul(W, E(j)), Wi), scaled(E(j), c))) return fail("w e w^-1, " + ij);
          if (!same(mul(mul(Wp, E(j)), Wpi), scaled(E(j), cp.inverse()))) return fail("w' e w'^-1, " + ij);
          if (!same(mul(mul(W, Fm(j)), Wi), scaled(Fm(j), c.inverse()))) return fail("w f w^-1, " + ij);
          if (!same(mul(mul(Wp, Fm(j)), Wpi), scaled(Fm(j), cp))) return fail("w' f w'^-1, " + ij);
          Mat comm = sub(mul(E(i), Fm(j)), mul(Fm(j), E(i)));
          Mat expect(M.dim(), M.dim(), U_.field().zero());
          if (i == j) expect = scaled(sub(W, Wp), U_.hden(i));
          if (!same(comm, expect)) return fail("[e, f], " + ij);
          if (i == j) continue;
          for (Side s : {Side::E, Side::F}) {
            Mat z(M.dim(), M.dim(), U_.field().zero());
            const Elem serre = U_.serre_element(s, i, j);
            for (const auto& [m, x] : serre.terms()) z = add(z, scaled(M.word_matrix(s, s == Side::E ? m.e : m.f), x));
            if (!is_zero(z)) return fail(std::string(s == Side::E ? "e" : "f") + "-Serre, " + ij);
          }
        }
      }
      (void)one;
      return pass("dim " + std::to_string(M.dim()));
    });
  }

  CheckRecord module_theta(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("module.theta" + tag, "Theta u = S^2(u) Theta", [&] {
      const Module& M = module(lam);
      const Mat th = M.theta_matrix();
      for (int i = 0; i < U_.rank(); ++i)
        for (const Elem& g : {U_.e(i), U_.f(i), U_.omega(unit_vec(i)), U_.omega_p(unit_vec(i))})
          if (!same(mul(th, M.act_matrix(g)), mul(M.act_matrix(U_.antipode(U_.antipode(g))), th)))
            return fail("generator index " + std::to_string(i + 1));
      return pass();
    });
  }

  // ---- center ------------------------------------------------------------------

  CheckRecord central(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.is_central" + tag, "[x, z_lam] = 0 for every generator x", [&] {
      const Elem& z = central_element(lam);
      const auto rep = is_central(U_, z);
      if (!rep.central) return fail("does not commute with " + rep.witness);
      return pass(std::to_string(z.size()) + " terms");
    });
  }

  CheckRecord trace_realization(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.trace_realization" + tag, "<z_lam | v> = tr(v Theta) on L(lam)", [&] {
      const Module& M = module(lam);
      const Elem& z = central_element(lam);
      const auto chk = Z_.verify_trace_realization(z, M, trace_tori());
      if (!chk.ok()) return fail(chk.witness);
      // outside the degree window both sides vanish
      auto rng = rng_for("center.trace_realization" + tag);
      Vec beyond = weight_box(U_.cartan(), lam);
      beyond[0] += 1;
      int spot = 0;
      if (vec_height(beyond) <= U_.max_height()) {
        const auto& bf = U_.basis(Side::F, beyond).basis;
        const auto& be = U_.basis(Side::E, beyond).basis;
        const Elem v = Elem::single(Monomial{bf[rng() % bf.size()], {}, {}, be[rng() % be.size()]}, U_.field().one());
        if (!Z_.pairing().rosso(z, v).is_zero() || !M.quantum_trace(v).is_zero()) return fail("outside the window");
        ++spot;
      }
      for (int k = 0; k < 4; ++k) {
        const Elem v = U_.random_element(rng, 2, 1);
        const Monomial& m = v.terms().begin()->first;
        if (m.f_content() == m.e_content()) continue;
        if (!Z_.pairing().rosso(z, v).is_zero() || !M.quantum_trace(v).is_zero()) return fail("off-diagonal degree");
        ++spot;
      }
      return pass(std::to_string(chk.checked) + " test vectors, " + std::to_string(chk.nonzero) + " with nonzero trace, " +
                  std::to_string(spot) + " vanishing spot checks");
    });
  }

  CheckRecord hc_image(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.hc_image" + tag, "xi(z_lam) = sum_mu dim L(lam)_mu w'_mu w_-mu", [&] {
      if (!(xi(lam) == Z_.expected_xi(module(lam)))) return fail("xi(z_lam) differs from the weighted torus sum");
      return pass(std::to_string(xi(lam).size()) + " torus terms");
    });
  }

  CheckRecord flat_invariant(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.flat_w_invariant" + tag, "xi(z_lam) in span{w'_eta w_-eta}, fixed by W", [&] {
      const Elem& x = xi(lam);
      if (!Center<F>::is_flat(x)) return fail("not flat");
      if (!Z_.is_weyl_invariant(x)) return fail("not W-invariant");
      return pass("|W| = " + std::to_string(Z_.weyl().order()));
    });
  }

  CheckRecord eigenvalues(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.eigenvalue" + tag, "z acts on L(mu) by rho^mu(pi(z))", [&] {
      const Elem& z = central_element(lam);
      std::vector<Weight> targets{Weight{}, lam};
      for (const Weight& w : p_.module_lambdas) targets.push_back(w);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (const Weight& mu : targets) {
        const Module& N = module(mu);
        const auto ev = Z_.eigenvalue(z, N);
        if (!ev) return fail("not scalar on L(" + weight_text(U_.cartan(), mu) + ")");
        if (!(*ev == Z_.predicted_eigenvalue(z, N))) return fail("wrong scalar on L(" + weight_text(U_.cartan(), mu) + ")");
      }
      // on the trivial module the scalar is the quantum dimension of L(lam)
      if (!(Z_.predicted_eigenvalue(z, module(Weight{})) == module(lam).quantum_trace(U_.one())))
        return fail("eigenvalue on L(0) is not the quantum dimension");
      return pass(std::to_string(targets.size()) + " modules");
    });
  }

  CheckRecord decomposition(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.decomposition" + tag, "av(lam) = sum_mu c_mu xi(z_mu), c_lam = 1/|W lam|", [&] {
      const auto d = Z_.surjectivity_decompose(lam);
      if (!d.residual.is_zero()) return fail("nonzero residual");
      const Scalar lead = U_.field().one() / U_.field().from_int(static_cast<long>(Z_.weyl().orbit(lam).size()));
      auto it = d.coeffs.find(lam);
      if (it == d.coeffs.end() || !(it->second == lead)) return fail("leading coefficient is not 1/|W lam|");
      std::string detail;
      for (const auto& [mu, c] : d.coeffs)
        detail += (detail.empty() ? "" : ", ") + weight_text(U_.cartan(), mu) + ": " + U_.field().render(c);
      return pass(detail);
    });
  }

  CheckRecord specialization(const Weight& lam) {
    const std::string tag = weight_text(U_.cartan(), lam);
    return run_check("center.specialization" + tag, "z_lam at t_ij = 1 is central in the one-parameter algebra", [&] {
      const auto& c = U_.cartan();
      const VarSet& vs = U_.field().vars();
      if constexpr (F::kExact) {
        ExactField sf(vs, true);
        QuantumGroup<ExactField> S(c, sf, U_.max_height());
        Element<ParamScalar> zs;
        for (const auto& [m, x] : central_element(lam).terms()) zs.add(m, sf.lift(x));
        const auto rep = is_central(S, zs);
        if (!rep.central) return fail("does not commute with " + rep.witness);
        return pass(std::to_string(zs.size()) + " terms after substitution");
      } else {
        // evaluation at t = 1 is a ring map, so computing in the specialized field is the substitution
        ModPoint pt = U_.field().point();
        pt.specialize_t_to_one();
        QuantumGroup<ModField> S(c, ModField(pt), U_.max_height());
        Center<ModField> ZS(S);
        const Element<ModScalar> zs = ZS.central_element(SimpleModule<ModField>(S, lam, p_.dim_cap));
        const auto rep = is_central(S, zs);
        if (!rep.central) return fail("does not commute with " + rep.witness);
        return pass(std::to_string(zs.size()) + " terms after substitution");
      }
    });
  }

  CheckRecord mu_range() {
    return run_check("center.mu_range", "enlarging the mu range adds only zero terms", [&] {
      if (p_.center_lambdas.empty()) return flag("no weight in the root lattice fits the height bound");
      const Weight& lam = p_.center_lambdas.front();
      const int h = box_height(U_.cartan(), lam) + 1;
      if (h > U_.max_height()) return flag("height bound too small for the enlarged range");
      if (!(Z_.central_element(module(lam), h) == central_element(lam))) return fail("extra terms at lam = " + weight_text(U_.cartan(), lam));
      return pass("lam = " + weight_text(U_.cartan(), lam) + ", mu up to height " + std::to_string(h));
    });
  }

  CheckRecord multiplicative() {
    return run_check("center.xi_multiplicative", "xi(z_lam z_mu) = xi(z_lam) xi(z_mu)", [&] {
      std::vector<Weight> ws{Weight{}};
      ws.insert(ws.end(), p_.center_lambdas.begin(), p_.center_lambdas.end());
      int pairs = 0;
      for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = a; b < ws.size(); ++b) {
          if (box_height(U_.cartan(), ws[a]) + box_height(U_.cartan(), ws[b]) > U_.max_height()) continue;
          const Elem prod = U_.multiply(central_element(ws[a]), central_element(ws[b]));
          const Elem rhs = U_.multiply(xi(ws[a]), xi(ws[b]));
          if (!(Z_.hc_xi(prod) == rhs)) return fail(weight_text(U_.cartan(), ws[a]) + " x " + weight_text(U_.cartan(), ws[b]));
          ++pairs;
        }
      return pass(std::to_string(pairs) + " pairs");
    });
  }

  CheckRecord injective() {
    return run_check("center.xi_independent", "xi(z_lam) for distinct lam are linearly independent", [&] {
      std::vector<Weight> ws{Weight{}};
      ws.insert(ws.end(), p_.center_lambdas.begin(), p_.center_lambdas.end());
      std::map<Monomial, int> col;
      RowEchelon<Scalar> ech;
      for (const Weight& w : ws) {
        typename RowEchelon<Scalar>::Row row;
        for (const auto& [m, x] : xi(w).terms()) row[col.try_emplace(m, static_cast<int>(col.size())).first->second] = x;
        if (!ech.insert(row)) return fail("dependent at lam = " + weight_text(U_.cartan(), w));
      }
      return pass(std::to_string(ws.size()) + " images");
    });
  }

  // ---- shared state ------------------------------------------------------------

  const Module& module(const Weight& lam) {
    auto it = modules_.find(lam);
    if (it == modules_.end()) it = modules_.emplace(lam, std::make_unique<Module>(U_, lam, p_.dim_cap)).first;
    return *it->second;
  }

  const Elem& central_element(const Weight& lam) {
    auto it = central_.find(lam);
    if (it == central_.end()) it = central_.emplace(lam, Z_.central_element(module(lam))).first;
    return it->second;
  }

  const Elem& xi(const Weight& lam) {
    auto it = xi_.find(lam);
    if (it == xi_.end()) it = xi_.emplace(lam, Z_.hc_xi(central_element(lam))).first;
    return it->second;
  }

 private:
  const QuantumGroup<F>& U_;
  Center<F> Z_;
  SuiteParams p_;
  std::map<Weight, std::unique_ptr<Module>> modules_;
  std::map<Weight, Elem> central_;
  std::map<Weight, Elem> xi_;

  std::mt19937_64 rng_for(std::string_view name) const { return std::mt19937_64(p_.seed ^ fnv1a(name)); }

  std::vector<Vec> degrees_up_to(int h) const {
    std::vector<Vec> out;
    U_.enumerate_degrees(h, [&](const Vec& v) { out.push_back(v); });
    return out;
  }

  // two basis monomials of degree mu with random torus factors
  Elem random_half(Side side, const Vec& mu, std::mt19937_64& rng) const {
    Elem out;
    const auto& words = U_.basis(side, mu).basis;
    std::uniform_int_distribution<int> coin(-1, 1);
    for (int t = 0; t < 2; ++t) {
      Monomial m;
      (side == Side::F ? m.f : m.e) = words[rng() % words.size()];
      for (int i = 0; i < U_.rank(); ++i) (side == Side::F ? m.a : m.b)[i] = coin(rng);
      out = out + U_.monomial(m, U_.field().from_int(1 + static_cast<long>(rng() % 5)));
    }
    return out;
  }

  std::pair<Vec, Vec> random_nonzero_pair(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> coin(-3, 3);
    for (;;) {
      Vec eta{}, phi{};
      for (int i = 0; i < U_.rank(); ++i) {
        eta[i] = coin(rng);
        phi[i] = coin(rng);
      }
      if (!vec_is_zero(eta) || !vec_is_zero(phi)) return {eta, phi};
    }
  }

  // dominant lam = N rho + sum c_i varpi_i, c_i in {0, 1, 2}
  std::vector<Weight> separating_weights() const {
    const auto& c = U_.cartan();
    std::vector<Weight> out;
    const int n = c.rank();
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<int> f(n, p_.char_n);
      for (int i = 0, k = code; i < n; ++i, k /= 3) f[i] += k % 3;
      out.push_back(c.from_fundamental(f));
    }
    return out;
  }

  // (lam, mu) with kappa_{eta,phi}(lam, mu) != kappa_{eta2,phi2}(lam, mu)
  std::optional<std::string> separate2(const Vec& eta, const Vec& phi, const Vec& eta2, const Vec& phi2) const {
    const auto& c = U_.cartan();
    std::vector<Weight> cands{Weight{}};
    for (int i = 0; i < c.rank(); ++i) {
      std::vector<int> f(c.rank(), 0);
      f[i] = 1;
      cands.push_back(c.from_fundamental(f));
    }
    for (const Weight& lam : cands)
      for (const Weight& mu : cands)
        if (!(kappa_char(U_, eta, phi, lam, mu) == kappa_char(U_, eta2, phi2, lam, mu)))
          return "(" + vec_text(eta, c.rank()) + ", " + vec_text(phi, c.rank()) + ") at (lam, mu) = (" + weight_text(c, lam) + ", " +
                 weight_text(c, mu) + ")";
    return std::nullopt;
  }

  std::vector<std::pair<Vec, Vec>> trace_tori() const {
    const int n = U_.rank();
    std::vector<std::pair<Vec, Vec>> out;
    if (n <= 2) {
      int total = 1;
      for (int i = 0; i < 2 * n; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        Vec a{}, b{};
        for (int i = 0, k = code; i < 2 * n; ++i, k /= 3) (i < n ? a[i] : b[i - n]) = k % 3 - 1;
        out.emplace_back(a, b);
      }
      return out;
    }
    auto rng = rng_for("center.trace_tori");
    std::uniform_int_distribution<int> coin(-1, 1);
    out.emplace_back(Vec{}, Vec{});
    for (int k = 0; k < p_.samples; ++k) {
      Vec a{}, b{};
      for (int i = 0; i < n; ++i) {
        a[i] = coin(rng);
        b[i] = coin(rng);
      }
      out.emplace_back(a, b);
    }
    return out;
  }

  Mat mul(const Mat& a, const Mat& b) const { return matmul(a, b, U_.field().zero()); }
  static Mat add(Mat a, const Mat& b) {
    for (std::size_t k = 0; k < a.data.size(); ++k) a.data[k] += b.data[k];
    return a;
  }
  static Mat sub(Mat a, const Mat& b) {
    for (std::size_t k = 0; k < a.data.size(); ++k) a.data[k] -= b.data[k];
    return a;
  }
  static Mat scaled(Mat a, const Scalar& c) {
    for (auto& x : a.data) x = x * c;
    return a;
  }
  static bool same(const Mat& a, const Mat& b) {
    for (std::size_t k = 0; k < a.data.size(); ++k)
      if (!(a.data[k] == b.data[k])) return false;
    return true;
  }
  static bool is_zero(const Mat& a) {
    for (const auto& x : a.data)
      if (!x.is_zero()) return false;
    return true;
  }
};

}  // namespace oyqg::cli
