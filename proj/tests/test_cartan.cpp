#include "oyqg/cartan/weyl.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace oyqg;

namespace {

// Brute-force oracle: count multisets of positive roots summing to v.
long brute_kostant(const std::vector<Vec>& roots, std::size_t idx, Vec v) {
  if (vec_is_zero(v)) return 1;
  if (idx == roots.size()) return 0;
  long total = 0;
  for (Vec rest = v; vec_nonneg(rest); rest = vec_sub(rest, roots[idx])) total += brute_kostant(roots, idx + 1, rest);
  return total;
}

}  // namespace

TEST(Cartan, TypesAndSymmetrizers) {
  auto b2 = make_cartan("B2");
  EXPECT_EQ(b2.a(0, 1), -2);
  EXPECT_EQ(b2.a(1, 0), -1);
  EXPECT_EQ(b2.symmetrizer(), (std::vector<int>{1, 2}));
  auto g2 = make_cartan("G2");
  EXPECT_EQ(g2.symmetrizer(), (std::vector<int>{3, 1}));
  EXPECT_EQ(make_cartan("A1").r(), 2);
  EXPECT_EQ(make_cartan("A2").r(), 3);
  EXPECT_EQ(b2.r(), 2);
  EXPECT_EQ(g2.r(), 1);
  EXPECT_EQ(make_cartan("A3").r(), 4);
  EXPECT_THROW(make_cartan("X2"), UnsupportedType);
  EXPECT_THROW(make_cartan("A9"), UnsupportedType);
}

TEST(Cartan, PositiveRoots) {
  EXPECT_EQ(make_cartan("A2").positive_roots().size(), 3u);
  EXPECT_EQ(make_cartan("B2").positive_roots().size(), 4u);
  EXPECT_EQ(make_cartan("G2").positive_roots().size(), 6u);
  EXPECT_EQ(make_cartan("A3").positive_roots().size(), 6u);
  EXPECT_EQ(make_cartan("D4").positive_roots().size(), 12u);
  EXPECT_EQ(make_cartan("F4").positive_roots().size(), 24u);
  EXPECT_EQ(make_cartan("E6").positive_roots().size(), 36u);
  auto g2 = make_cartan("G2");
  // highest root of G2 with a long first node: 2 a1 + 3 a2
  Vec top{};
  top[0] = 2;
  top[1] = 3;
  EXPECT_EQ(g2.positive_roots().back(), top);
}

TEST(Cartan, BilinearForm) {
  auto a2 = make_cartan("A2");
  EXPECT_EQ(a2.bil(unit_vec(0), unit_vec(1)), -1);
  EXPECT_EQ(a2.bil(unit_vec(0), unit_vec(0)), 2);
  auto b2 = make_cartan("B2");
  EXPECT_EQ(b2.bil(unit_vec(1), unit_vec(1)), 4);
  // (rho, a_i) = d_i
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto c = make_cartan(name);
    for (int i = 0; i < c.rank(); ++i) EXPECT_EQ(c.bil_scaled(c.rho(), c.from_root(unit_vec(i))), c.d(i) * c.r());
  }
}

TEST(Cartan, FundamentalCoordinates) {
  auto a2 = make_cartan("A2");
  Weight w1 = a2.from_fundamental({1, 0});
  EXPECT_EQ(w1.s[0], 2);
  EXPECT_EQ(w1.s[1], 1);
  EXPECT_EQ(a2.to_fundamental(w1), (std::vector<int>{1, 0}));
  EXPECT_FALSE(a2.in_root_lattice(w1));
  EXPECT_TRUE(a2.in_root_lattice(a2.from_fundamental({1, 1})));
}

TEST(Weyl, Orders) {
  EXPECT_EQ(WeylGroup(make_cartan("A1")).order(), 2u);
  EXPECT_EQ(WeylGroup(make_cartan("A2")).order(), 6u);
  EXPECT_EQ(WeylGroup(make_cartan("B2")).order(), 8u);
  EXPECT_EQ(WeylGroup(make_cartan("G2")).order(), 12u);
  EXPECT_EQ(WeylGroup(make_cartan("A3")).order(), 24u);
  EXPECT_EQ(WeylGroup(make_cartan("F4")).order(), 1152u);
}

TEST(Weyl, OrbitsPreserveForm) {
  auto c = make_cartan("B2");
  WeylGroup W(c);
  Weight lam = c.from_fundamental({1, 1});
  auto orb = W.orbit(lam);
  EXPECT_EQ(orb.size(), 8u);
  for (const auto& w : orb) EXPECT_EQ(c.bil_q(w, w), c.bil_q(lam, lam));
  EXPECT_EQ(W.stabilizer_size(c.from_fundamental({1, 0})), 2u);
}

TEST(Kostant, MatchesBruteForce) {
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto c = make_cartan(name);
    Vec v{};
    std::function<void(int)> rec = [&](int i) {
      if (i == c.rank()) {
        EXPECT_EQ(c.kostant_count(v), brute_kostant(c.positive_roots(), 0, v)) << name;
        return;
      }
      for (int k = 0; k <= 3; ++k) {
        v[i] = k;
        rec(i + 1);
      }
      v[i] = 0;
    };
    rec(0);
  }
  auto a2 = make_cartan("A2");
  Vec v{};
  v[0] = 1;
  v[1] = 1;
  EXPECT_EQ(a2.kostant_count(v), 2);
}

TEST(Freudenthal, MatchesWeylDimension) {
  for (auto name : {"A1", "A2", "B2", "G2", "A3"}) {
    auto c = make_cartan(name);
    std::vector<std::vector<int>> lams;
    if (c.rank() == 1) lams = {{0}, {1}, {2}, {4}};
    else if (c.rank() == 2) lams = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}};
    else lams = {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}};
    for (const auto& l : lams) {
      Weight lam = c.from_fundamental(l);
      long total = 0;
      for (const auto& [w, m] : freudenthal(c, lam)) total += m;
      EXPECT_EQ(total, weyl_dimension(c, lam).get_si()) << name;
    }
  }
  auto a2 = make_cartan("A2");
  auto mult = freudenthal(a2, a2.from_fundamental({1, 1}));
  EXPECT_EQ(mult.size(), 7u);
  EXPECT_EQ(mult.at(Weight{}), 2);
}

TEST(Freudenthal, WeylSymmetric) {
  auto c = make_cartan("G2");
  WeylGroup W(c);
  auto mult = freudenthal(c, c.from_fundamental({1, 1}));
  for (const auto& [w, m] : mult)
    for (const auto& e : W.elements()) EXPECT_EQ(mult.at(W.act(e, w)), m);
}
