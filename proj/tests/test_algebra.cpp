#include "oyqg/algebra/quantum_group.hpp"
#include "oyqg/cartan/weyl.hpp"

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

QuantumGroup<ModField> make_mod(const std::string& type, int h = 6, std::uint64_t seed = 3) {
  auto c = make_cartan(type);
  VarSet vs{c.rank(), c.r()};
  return QuantumGroup<ModField>(c, ModField(vs, kDefaultPrimes[0], seed), h);
}

template <class U>
typename U::Elem mul(const U& u, const typename U::Elem& a, const typename U::Elem& b) {
  return u.multiply(a, b);
}

}  // namespace

TEST(GradedBasis, DimensionsMatchKostant) {
  auto U = make("A2");
  U.enumerate_degrees(4, [&](const Vec& mu) {
    EXPECT_EQ(static_cast<long>(U.basis(Side::E, mu).basis.size()), U.cartan().kostant_count(mu));
    EXPECT_EQ(static_cast<long>(U.basis(Side::F, mu).basis.size()), U.cartan().kostant_count(mu));
  });
}

TEST(GradedBasis, HeightBound) {
  auto U = make("A2", 2);
  Vec mu{};
  mu[0] = 2;
  mu[1] = 1;
  EXPECT_THROW(U.basis(Side::E, mu), HeightBoundExceeded);
}

TEST(Serre, ReducesToZero) {
  for (auto type : {"A2", "B2", "G2"}) {
    auto U = make(type);
    for (int i = 0; i < 2; ++i) {
      int j = 1 - i;
      for (Side s : {Side::E, Side::F}) {
        El free = U.serre_element(s, i, j);
        El reduced;
        for (const auto& [m, c] : free.terms()) reduced = reduced + U.monomial(m, c);
        EXPECT_TRUE(reduced.is_zero()) << type;
      }
    }
  }
}

TEST(Serre, A2Coefficients) {
  auto U = make("A2");
  El s = U.serre_element(Side::E, 0, 1);
  // e1^2 e2 - q12 [2] e1 e2 e1 + q12^2 e2 e1^2
  const VarSet& vs = U.field().vars();
  EXPECT_EQ(render(s.coefficient(Monomial{{}, {}, {}, word_of({0, 0, 1})}), vs), "1");
  EXPECT_EQ(render(s.coefficient(Monomial{{}, {}, {}, word_of({0, 1, 0})}), vs), "-q*t1_2 - q^(-1)*t1_2");
  EXPECT_EQ(render(s.coefficient(Monomial{{}, {}, {}, word_of({1, 0, 0})}), vs), "t1_2^2");
  El sf = U.serre_element(Side::F, 0, 1);
  EXPECT_EQ(render(sf.coefficient(Monomial{word_of({1, 0, 0}), {}, {}, {}}), vs), "t1_2^(-2)");
}

TEST(Relations, Commutator) {
  for (auto type : {"A2", "B2"}) {
    auto U = make(type);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        El c = U.commutator(U.e(i), U.f(j));
        El expect;
        if (i == j) expect = U.hden(i) * (U.omega(unit_vec(i)) - U.omega_p(unit_vec(i)));
        EXPECT_EQ(c, expect);
      }
  }
}

TEST(Relations, TorusConjugation) {
  auto U = make("A2");
  Vec phi{};
  phi[0] = 1;
  phi[1] = -2;
  for (int j = 0; j < 2; ++j) {
    El l = U.multiply(U.multiply(U.omega(phi), U.e(j)), U.omega(vec_neg(phi)));
    EXPECT_EQ(l, U.chi(unit_vec(j), phi) * U.e(j));
    El lp = U.multiply(U.multiply(U.omega_p(phi), U.e(j)), U.omega_p(vec_neg(phi)));
    EXPECT_EQ(lp, U.chi(phi, unit_vec(j)).inverse() * U.e(j));
    El fp = U.multiply(U.multiply(U.omega(phi), U.f(j)), U.omega(vec_neg(phi)));
    EXPECT_EQ(fp, U.chi(unit_vec(j), phi).inverse() * U.f(j));
  }
}

TEST(Multiply, Associative) {
  auto U = make("A2", 9);
  std::mt19937_64 rng(21);
  for (int k = 0; k < 8; ++k) {
    El a = U.random_element(rng, 3, 2), b = U.random_element(rng, 3, 2), c = U.random_element(rng, 3, 2);
    EXPECT_EQ(U.multiply(U.multiply(a, b), c), U.multiply(a, U.multiply(b, c)));
  }
}

TEST(Hopf, CoproductGenerators) {
  auto U = make("A2");
  auto d = U.coproduct(U.f(0));
  QG::Tens expect;
  expect.add({Monomial{word_of({0}), {}, {}, {}}, Monomial{{}, unit_vec(0), {}, {}}}, U.field().one());
  expect.add({Monomial{}, Monomial{word_of({0}), {}, {}, {}}}, U.field().one());
  EXPECT_TRUE(d == expect);
}

TEST(Hopf, AxiomsModular) {
  auto U = make_mod("A2");
  using E = decltype(U)::Elem;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 6; ++k) {
    E x = U.random_element(rng, 3, 2), y = U.random_element(rng, 3, 2);
    // multiplicative
    EXPECT_TRUE(U.coproduct(U.multiply(x, y)) == U.tensor_multiply(U.coproduct(x), U.coproduct(y)));
    // coassociative
    auto d = U.coproduct(x);
    auto l = U.apply_to_factor(d, 0, [&](const E& z) { return U.coproduct(z); });
    auto r = U.apply_to_factor(d, 1, [&](const E& z) { return U.coproduct(z); });
    EXPECT_TRUE(l == r);
    // antipode
    auto sl = U.contract(U.map_factor(d, 0, [&](const E& z) { return U.antipode(z); }));
    auto sr = U.contract(U.map_factor(d, 1, [&](const E& z) { return U.antipode(z); }));
    EXPECT_EQ(sl, U.scalar(U.counit(x)));
    EXPECT_EQ(sr, U.scalar(U.counit(x)));
    // anti-multiplicative
    EXPECT_EQ(U.antipode(U.multiply(x, y)), U.multiply(U.antipode(y), U.antipode(x)));
  }
}

TEST(Hopf, SquareOfAntipode) {
  auto U = make("B2");
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(U.antipode(U.antipode(U.e(i))), U.q_i(i, -2) * U.e(i));
    EXPECT_EQ(U.antipode(U.antipode(U.f(i))), U.q_i(i, 2) * U.f(i));
  }
}
