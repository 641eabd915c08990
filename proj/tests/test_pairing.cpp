#include "oyqg/pairing/oracle.hpp"

#include <gtest/gtest.h>

using namespace oyqg;

namespace {

using QG = QuantumGroup<ExactField>;
using El = QG::Elem;

QG make(const std::string& type, int h = 6) {
  auto c = make_cartan(type);
  VarSet vs{c.rank(), c.r()};
  return QG(c, ExactField(vs), h);
}

// random element of U^{<=0} (side F) or U^{>=0} (side E) of degree mu
El random_half(const QG& U, Side side, const Vec& mu, std::mt19937_64& rng) {
  El out;
  const auto& words = U.basis(side, mu).basis;
  std::uniform_int_distribution<int> coin(-1, 1);
  for (int t = 0; t < 2; ++t) {
    Monomial m;
    (side == Side::F ? m.f : m.e) = words[rng() % words.size()];
    for (int i = 0; i < U.rank(); ++i) (side == Side::F ? m.a : m.b)[i] = coin(rng);
    out = out + U.monomial(m, U.field().from_int(1 + static_cast<long>(rng() % 5)));
  }
  return out;
}

Vec random_degree(const QG& U, int h, std::mt19937_64& rng) {
  std::vector<Vec> ds;
  U.enumerate_degrees(h, [&](const Vec& v) { ds.push_back(v); });
  return ds[rng() % ds.size()];
}

}  // namespace

TEST(Pairing, GeneratorValues) {
  auto U = make("B2");
  Pairing<ExactField> P(U);
  const VarSet& vs = U.field().vars();
  EXPECT_EQ(render(P.pair(U.f(0), U.e(0)), vs), "(-q)/(q^2 - 1)");
  EXPECT_TRUE(P.pair(U.f(0), U.e(1)).is_zero());
  EXPECT_EQ(P.torus_pair(unit_vec(0), unit_vec(1)), U.chi(unit_vec(0), unit_vec(1)));
  EXPECT_EQ(P.pair(U.omega_p(unit_vec(0)), U.omega(Vec{})), U.field().one());
  // torus_pair(a_i, a_j) = q_j^{a_ji} q_ji
  const auto& c = U.cartan();
  Exponent ex = c.q_i(1, c.a(1, 0));
  ex[vs.t_index(0, 1)] -= c.r();  // q_21 = t1_2^{-1}, exponents scaled by r
  EXPECT_EQ(P.torus_pair(unit_vec(0), unit_vec(1)), U.field().monomial(ex));
}

TEST(Pairing, MatchesLiteralCoproductOracle) {
  for (auto type : {"A2", "B2"}) {
    auto U = make(type);
    Pairing<ExactField> P(U);
    LiteralPairing<ExactField> L(U);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 30; ++k) {
      const Vec mu = random_degree(U, 4, rng);
      El y = random_half(U, Side::F, mu, rng), x = random_half(U, Side::E, mu, rng);
      EXPECT_EQ(P.pair(y, x), L.pair(y, x)) << type << " " << k;
    }
  }
}

TEST(Pairing, CoproductIdentities) {
  auto U = make("A2");
  Pairing<ExactField> P(U);
  std::mt19937_64 rng(12);
  auto pair_tensor = [&](const QG::Tens& t, const El& a, const El& b) {
    // <t, a (x) b> = sum <t_1, a> <t_2, b>
    auto acc = U.field().zero();
    for (const auto& [key, c] : t.terms())
      acc += c * P.pair(El::single(key[0], U.field().one()), a) * P.pair(El::single(key[1], U.field().one()), b);
    return acc;
  };
  auto pair_tensor_rev = [&](const El& a, const El& b, const QG::Tens& t) {
    auto acc = U.field().zero();
    for (const auto& [key, c] : t.terms())
      acc += c * P.pair(a, El::single(key[0], U.field().one())) * P.pair(b, El::single(key[1], U.field().one()));
    return acc;
  };
  for (int k = 0; k < 10; ++k) {
    const Vec m1 = random_degree(U, 2, rng), m2 = random_degree(U, 2, rng);
    El x = random_half(U, Side::E, m1, rng), x2 = random_half(U, Side::E, m2, rng);
    El y = random_half(U, Side::F, vec_add(m1, m2), rng);
    EXPECT_EQ(P.pair(y, U.multiply(x, x2)), pair_tensor(U.coproduct(y), x2, x));
    El y1 = random_half(U, Side::F, m1, rng), y2 = random_half(U, Side::F, m2, rng);
    El xx = random_half(U, Side::E, vec_add(m1, m2), rng);
    EXPECT_EQ(P.pair(U.multiply(y1, y2), xx), pair_tensor_rev(y1, y2, U.coproduct(xx)));
  }
}

TEST(Pairing, GramNondegenerate) {
  auto U = make("A2");
  Pairing<ExactField> P(U);
  U.enumerate_degrees(4, [&](const Vec& mu) { EXPECT_FALSE(P.gram_det(mu).is_zero()); });
}

TEST(Pairing, DualBasis) {
  auto U = make("B2");
  Pairing<ExactField> P(U);
  Vec mu{};
  mu[0] = 1;
  mu[1] = 2;
  const auto& d = P.dual_basis(mu);
  for (std::size_t i = 0; i < d.v.size(); ++i)
    for (std::size_t j = 0; j < d.u.size(); ++j) {
      auto v = P.pair(d.v[i], El::single(Monomial{{}, {}, {}, d.u[j]}, U.field().one()));
      EXPECT_EQ(v, i == j ? U.field().one() : U.field().zero());
    }
}

TEST(Rosso, TorusValues) {
  auto U = make("A2");
  Pairing<ExactField> P(U);
  Vec a = unit_vec(0), b = unit_vec(1), a2 = vec_neg(unit_vec(1)), b2 = unit_vec(0);
  El u = El::single(Monomial{{}, a, b, {}}, U.field().one());
  El v = El::single(Monomial{{}, a2, b2, {}}, U.field().one());
  EXPECT_EQ(P.rosso(u, v), U.chi(a2, b) * U.chi(a, b2));
}

TEST(Rosso, GradedOrthogonality) {
  auto U = make("A2");
  Pairing<ExactField> P(U);
  EXPECT_TRUE(P.rosso(U.f(0), U.f(0)).is_zero());
  EXPECT_TRUE(P.rosso(U.e(0), U.e(0)).is_zero());
  EXPECT_FALSE(P.rosso(U.f(0), U.e(0)).is_zero());
}

TEST(Rosso, AdInvariance) {
  for (auto type : {"A1", "A2"}) {
    auto U = make(type);
    Pairing<ExactField> P(U);
    std::mt19937_64 rng(13);
    std::vector<El> gens;
    for (int i = 0; i < U.rank(); ++i)
      for (El g : {U.e(i), U.f(i), U.omega(unit_vec(i)), U.omega_p(unit_vec(i))}) gens.push_back(g);
    for (int k = 0; k < 20; ++k) {
      El b = U.random_element(rng, 3, 2), c = U.random_element(rng, 3, 2);
      for (const El& a : gens)
        EXPECT_EQ(P.rosso(U.ad_left(a, b), c), P.rosso(b, U.ad_left(U.antipode(a), c))) << type << " " << k;
    }
  }
}

TEST(Characters, ClosedForms) {
  auto U = make("A2");
  const auto& c = U.cartan();
  // rho^{a_j}(w_j) = q_j^2
  for (int j = 0; j < 2; ++j)
    EXPECT_EQ(rho_char(U, c.from_root(unit_vec(j)), Vec{}, unit_vec(j)), U.q_i(j, 2));
  // rho^{a1}(w'_{a1} w_{-a1}) = q^{-4}
  const VarSet& vs = U.field().vars();
  EXPECT_EQ(render(rho_char(U, c.from_root(unit_vec(0)), unit_vec(0), vec_neg(unit_vec(0))), vs), "q^(-4)");
  // rho^lam(w'_eta w_{-eta}) = q^{-2 (eta, lam)}
  Vec eta{};
  eta[0] = 2;
  eta[1] = -1;
  const Weight lam = c.from_fundamental({1, 2});
  Exponent ex{};
  ex[0] = static_cast<std::int32_t>(-2 * c.bil_scaled(c.from_root(eta), lam));
  EXPECT_EQ(rho_char(U, lam, eta, vec_neg(eta)), U.field().monomial(ex));
  // rho^{0,mu}(w'_eta w_phi) = q^{(eta + phi, mu)}
  Exponent ex2{};
  ex2[0] = static_cast<std::int32_t>(c.bil_scaled(c.from_root(vec_add(eta, unit_vec(1))), lam));
  EXPECT_EQ(rho_char2(U, Weight{}, lam, eta, unit_vec(1)), U.field().monomial(ex2));
}
