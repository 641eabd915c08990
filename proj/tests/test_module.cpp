#include "oyqg/module/simple_module.hpp"

#include <gtest/gtest.h>

using namespace oyqg;

namespace {

using QG = QuantumGroup<ExactField>;
using Mod = SimpleModule<ExactField>;
using Mat = Mod::Mat;

QG make(const std::string& type, int h = 6) {
  auto c = make_cartan(type);
  VarSet vs{c.rank(), c.r()};
  return QG(c, ExactField(vs), h);
}

Weight fund(const QG& U, std::vector<int> c) { return U.cartan().from_fundamental(c); }

Mat mul(const Mat& a, const Mat& b, const QG& U) { return matmul(a, b, U.field().zero()); }

bool same(const Mat& a, const Mat& b) {
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

Mat diff(Mat a, const Mat& b) {
  for (std::size_t k = 0; k < a.data.size(); ++k) a.data[k] -= b.data[k];
  return a;
}

struct Case {
  const char* type;
  std::vector<int> lam;
};

const std::vector<Case> kCases = {{"A1", {2}}, {"A1", {4}}, {"A2", {1, 1}}, {"A2", {1, 0}}, {"B2", {1, 0}}, {"B2", {0, 1}}};

}  // namespace

TEST(SimpleModule, WeightDimensionsMatchFreudenthal) {
  for (const auto& cs : kCases) {
    auto U = make(cs.type);
    const Weight lam = fund(U, cs.lam);
    Mod M(U, lam);
    EXPECT_EQ(M.weight_dims(), freudenthal(U.cartan(), lam)) << cs.type;
    EXPECT_EQ(M.dim(), weyl_dimension(U.cartan(), lam)) << cs.type;
  }
}

TEST(SimpleModule, DimensionCap) {
  auto U = make("A2");
  EXPECT_THROW(Mod(U, fund(U, {1, 1}), 7), DimensionCapExceeded);
}

TEST(SimpleModule, GeneratorRelations) {
  for (const auto& cs : kCases) {
    auto U = make(cs.type);
    Mod M(U, fund(U, cs.lam));
    const int n = U.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat ef = diff(mul(M.word_matrix(Side::E, word_of({i})), M.word_matrix(Side::F, word_of({j})), U),
                      mul(M.word_matrix(Side::F, word_of({j})), M.word_matrix(Side::E, word_of({i})), U));
        Mat expect = M.act_matrix(U.commutator(U.e(i), U.f(j)));
        EXPECT_TRUE(same(ef, expect)) << cs.type << " " << i << j;
      }
    // Serre relations act as zero
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (Side s : {Side::E, Side::F}) {
          Mat z(M.dim(), M.dim(), U.field().zero());
          const auto serre = U.serre_element(s, i, j);
          for (const auto& [m, c] : serre.terms()) {
            Mat w = M.word_matrix(s, s == Side::E ? m.e : m.f);
            for (std::size_t k = 0; k < z.data.size(); ++k) z.data[k] += c * w.data[k];
          }
          EXPECT_TRUE(same(z, Mat(M.dim(), M.dim(), U.field().zero()))) << cs.type;
        }
      }
  }
}

TEST(SimpleModule, TorusActsDiagonally) {
  auto U = make("A2");
  Mod M(U, fund(U, {1, 1}));
  Vec a = unit_vec(0), b = unit_vec(1);
  for (int i = 0; i < 2; ++i) {
    Mat lhs = mul(mul(M.torus_matrix(a, b), M.word_matrix(Side::E, word_of({i})), U), M.torus_matrix(vec_neg(a), vec_neg(b)), U);
    Mat rhs = M.act_matrix(U.multiply(U.multiply(U.multiply(U.omega_p(a), U.omega(b)), U.e(i)),
                                      U.multiply(U.omega_p(vec_neg(a)), U.omega(vec_neg(b)))));
    EXPECT_TRUE(same(lhs, rhs));
  }
}

TEST(SimpleModule, HighestVectorIsKilledByE) {
  auto U = make("B2", 7);
  Mod M(U, fund(U, {1, 1}));
  EXPECT_EQ(M.dim(), 16);
  for (int i = 0; i < 2; ++i) EXPECT_TRUE(M.apply_generator(Side::E, i, M.basis_vector(0)).empty());
}

TEST(SimpleModule, ThetaTwistsBySquaredAntipode) {
  auto U = make("A2");
  Mod M(U, fund(U, {1, 1}));
  std::mt19937_64 rng(4);
  const Mat th = M.theta_matrix();
  for (int k = 0; k < 5; ++k) {
    auto u = U.random_element(rng, 2, 2);
    EXPECT_TRUE(same(mul(th, M.act_matrix(u), U), mul(M.act_matrix(U.antipode(U.antipode(u))), th, U)));
  }
}

TEST(SimpleModule, ActionIsMultiplicative) {
  auto U = make("A2");
  Mod M(U, fund(U, {1, 1}));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5; ++k) {
    auto x = U.random_element(rng, 2, 2), y = U.random_element(rng, 2, 2);
    EXPECT_TRUE(same(M.act_matrix(U.multiply(x, y)), mul(M.act_matrix(x), M.act_matrix(y), U)));
  }
}

TEST(SimpleModule, QuantumDimensionOfA1) {
  // t_lam(1) = sum q^{-2(rho, wt)} = [3]_q for L(2 varpi)
  auto U = make("A1");
  Mod M(U, fund(U, {2}));
  EXPECT_EQ(render(M.quantum_trace(U.one()), U.field().vars()), "q^2 + 1 + q^(-2)");
}
