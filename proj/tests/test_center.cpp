#include "oyqg/center/center.hpp"

#include <gtest/gtest.h>

using namespace oyqg;

namespace {

using QG = QuantumGroup<ExactField>;
using Mod = SimpleModule<ExactField>;
using El = QG::Elem;

QG make(const std::string& type, int h = 6) {
  auto c = make_cartan(type);
  VarSet vs{c.rank(), c.r()};
  return QG(c, ExactField(vs), h);
}

std::vector<std::pair<Vec, Vec>> small_tori(int n) {
  std::vector<std::pair<Vec, Vec>> out;
  std::vector<int> digits(2 * n, -1);
  for (;;) {
    Vec a{}, b{};
    for (int i = 0; i < n; ++i) {
      a[i] = digits[i];
      b[i] = digits[n + i];
    }
    out.emplace_back(a, b);
    int k = 0;
    while (k < 2 * n && digits[k] == 1) digits[k++] = -1;
    if (k == 2 * n) break;
    ++digits[k];
  }
  return out;
}

}  // namespace

TEST(Center, A1AdjointIsCentral) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({2}));
  El z = Z.central_element(M);
  auto rep = is_central(U, z);
  EXPECT_TRUE(rep.central) << rep.witness;
}

TEST(Center, A2AdjointIsCentral) {
  auto U = make("A2");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({1, 1}));
  El z = Z.central_element(M);
  auto rep = is_central(U, z);
  EXPECT_TRUE(rep.central) << rep.witness;
}

TEST(Center, RejectsWeightOutsideRootLattice) {
  auto U = make("A2");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({1, 0}));
  EXPECT_THROW(Z.central_element(M), NotInRootLattice);
}

TEST(Center, TraceRealizationA1) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  for (int l : {2, 4}) {
    Mod M(U, U.cartan().from_fundamental({l}));
    El z = Z.central_element(M);
    auto chk = Z.verify_trace_realization(z, M, small_tori(1));
    EXPECT_TRUE(chk.ok()) << chk.witness;
    EXPECT_GT(chk.nonzero, 0);
  }
}

TEST(Center, TraceRealizationOffDiagonalVanishes) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({2}));
  El z = Z.central_element(M);
  El v = El::single(Monomial{word_of({0}), {}, {}, {}}, U.field().one());
  EXPECT_TRUE(Z.pairing().rosso(z, v).is_zero());
  EXPECT_TRUE(M.quantum_trace(v).is_zero());
}

TEST(Center, RealizeCoefficientA2) {
  auto U = make("A2");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({1, 1}));
  std::mt19937_64 rng(2);
  // m of weight 0 (in Q), f ranging over all coordinates
  const int m = M.space(Weight{})->offset;
  for (int f : {0, m, M.dim() - 1}) {
    El u = Z.realize_coefficient(M, f, m);
    for (int k = 0; k < 6; ++k) {
      El v = U.random_element(rng, 2, 2);
      EXPECT_EQ(Z.pairing().rosso(u, v), M.matrix_coefficient(f, m, v)) << f;
    }
  }
}

TEST(Center, HarishChandraImageA1) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({2}));
  El xi = Z.hc_xi(Z.central_element(M));
  EXPECT_TRUE(Center<ExactField>::is_flat(xi));
  EXPECT_TRUE(Z.is_weyl_invariant(xi));
  EXPECT_EQ(xi, Z.expected_xi(M));
}

TEST(Center, EigenvalueMatchesCharacter) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  El z = Z.central_element(Mod(U, U.cartan().from_fundamental({2})));
  for (int l : {0, 1, 2, 3}) {
    Mod N(U, U.cartan().from_fundamental({l}));
    auto ev = Z.eigenvalue(z, N);
    ASSERT_TRUE(ev.has_value()) << l;
    EXPECT_EQ(*ev, Z.predicted_eigenvalue(z, N)) << l;
  }
}

TEST(Center, SurjectivityA1) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  auto d = Z.surjectivity_decompose(U.cartan().from_fundamental({4}));
  EXPECT_TRUE(d.residual.is_zero());
  EXPECT_FALSE(d.coeffs.empty());
}

// The checks must reject near misses, not only accept the true element.

TEST(CenterNegative, ShiftedElementIsNotCentral) {
  auto U = make("A2");
  Center<ExactField> Z(U);
  El z = Z.central_element(Mod(U, U.cartan().from_fundamental({1, 1})));
  EXPECT_FALSE(is_central(U, z + U.e(0)).central);
  EXPECT_FALSE(is_central(U, z + U.omega(Vec{1, 1})).central);
}

TEST(CenterNegative, PerturbedCoefficientBreaksCentralityAndTrace) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  Mod M(U, U.cartan().from_fundamental({2}));
  El z = Z.central_element(M);
  const auto it = std::find_if(z.terms().begin(), z.terms().end(), [](const auto& t) { return !t.first.is_torus(); });
  ASSERT_NE(it, z.terms().end());
  El bad = z;
  bad.add(it->first, U.field().one());
  EXPECT_FALSE(is_central(U, bad).central);
  EXPECT_FALSE(Z.verify_trace_realization(bad, M, small_tori(1)).ok());
}

TEST(CenterNegative, WrongModuleBreaksTraceAndImage) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  Mod M2(U, U.cartan().from_fundamental({2}));
  Mod M4(U, U.cartan().from_fundamental({4}));
  El z = Z.central_element(M2);
  EXPECT_FALSE(Z.verify_trace_realization(z, M4, small_tori(1)).ok());
  EXPECT_NE(Z.hc_xi(z), Z.expected_xi(M4));
}

TEST(CenterNegative, HarishChandraNeedsDegreeZero) {
  auto U = make("A1");
  Center<ExactField> Z(U);
  EXPECT_ANY_THROW(Z.hc_xi(U.e(0)));
}

TEST(CenterNegative, NonInvariantTorusSum) {
  auto U = make("A2");
  Center<ExactField> Z(U);
  const Vec a1{1, 0}, neg{-1, 0};
  El flat = U.monomial(Monomial{{}, a1, neg, {}}, U.field().one());
  EXPECT_TRUE(Center<ExactField>::is_flat(flat));
  EXPECT_FALSE(Z.is_weyl_invariant(flat));
  EXPECT_FALSE(Center<ExactField>::is_flat(U.omega(a1)));
}
