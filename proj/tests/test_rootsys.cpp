#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "eispole/error.hpp"
#include "eispole/rootsys.hpp"
#include "eispole/weylsym.hpp"
#include "support.hpp"

using namespace eispole;
using testsupport::make_system;

TEST(RootSystemKind, ParsesAndPrints) {
  EXPECT_EQ(parse_kind("E8"), (RootSystemKind{Family::E, 8}));
  EXPECT_EQ(parse_kind("b3"), (RootSystemKind{Family::B, 3}));
  EXPECT_EQ(to_string(parse_kind("G2")), "G2");
  EXPECT_THROW(parse_kind("X3"), ConfigurationError);
  EXPECT_THROW(parse_kind("A"), ConfigurationError);
  EXPECT_THROW(parse_kind("A2x"), ConfigurationError);
}

TEST(RootSystemKind, Admissibility) {
  EXPECT_TRUE(is_admissible({Family::A, 1}));
  EXPECT_FALSE(is_admissible({Family::B, 1}));
  EXPECT_FALSE(is_admissible({Family::D, 2}));
  EXPECT_TRUE(is_admissible({Family::D, 3}));
  EXPECT_FALSE(is_admissible({Family::E, 5}));
  EXPECT_FALSE(is_admissible({Family::F, 3}));
  EXPECT_FALSE(is_admissible({Family::G, 3}));
  EXPECT_THROW(validate({Family::A, 9}), ConfigurationError);
  EXPECT_NO_THROW(validate({Family::A, 9}, 9));
  EXPECT_THROW(build_root_system({Family::F, 3}), ConfigurationError);
}

TEST(RootSystemKind, AllKindsUpToRankEight) {
  const auto kinds = all_kinds();
  // A1..A8, B2..B8, C2..C8, D3..D8, E6..E8, F4, G2
  EXPECT_EQ(kinds.size(), 8u + 7u + 7u + 6u + 3u + 1u + 1u);
  EXPECT_TRUE(std::is_sorted(kinds.begin(), kinds.end()));
}

TEST(PairingMatrix, RejectsNonCartanInput) {
  EXPECT_THROW(PairingMatrix(2, {2, -1, -1}), Error);
  EXPECT_THROW(PairingMatrix(2, {2, 1, 1, 2}), ConfigurationError);
  EXPECT_THROW(PairingMatrix(2, {2, -1, 0, 2}), ConfigurationError);
  EXPECT_THROW(PairingMatrix(2, {3, -1, -1, 2}), ConfigurationError);
}

TEST(PairingMatrix, AffineTypeIsNotFinite) {
  // Affine A1: the reflection closure never terminates.
  EXPECT_THROW(RootSystem({Family::A, 2}, PairingMatrix(2, {2, -2, -2, 2})), ConfigurationError);
}

TEST(PairingMatrix, BourbakiOrientation) {
  const auto b3 = PairingMatrix::cartan({Family::B, 3});
  EXPECT_EQ(b3(1, 2), -2);  // <alpha_2, alpha_3^vee>, alpha_3 short
  EXPECT_EQ(b3(2, 1), -1);
  const auto c3 = PairingMatrix::cartan({Family::C, 3});
  EXPECT_EQ(c3(2, 1), -2);
  EXPECT_EQ(c3, b3.transposed());
  const auto g2 = PairingMatrix::cartan({Family::G, 2});
  EXPECT_EQ(g2(0, 1), -1);
  EXPECT_EQ(g2(1, 0), -3);
  const auto d4 = PairingMatrix::cartan({Family::D, 4});
  EXPECT_EQ(d4(1, 0), -1);
  EXPECT_EQ(d4(1, 2), -1);
  EXPECT_EQ(d4(1, 3), -1);
  EXPECT_EQ(d4(2, 3), 0);
  const auto e6 = PairingMatrix::cartan({Family::E, 6});
  EXPECT_EQ(e6(0, 2), -1);
  EXPECT_EQ(e6(1, 3), -1);
  EXPECT_EQ(e6(0, 1), 0);
}

TEST(RootSystem, CountsMatchClosedForms) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    EXPECT_EQ(rs->size(), testsupport::classical_positive_count(kind)) << to_string(kind);
  }
}

TEST(RootSystem, AgreesWithRootStringConstruction) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    std::set<std::vector<int>> ours;
    for (const auto& rp : rs->positive_roots()) ours.insert(rp.root.coeffs);
    EXPECT_EQ(ours, testsupport::roots_by_strings(rs->pairing())) << to_string(kind);

    // Coroots are the roots of the transposed system.
    std::set<std::vector<int>> coroots;
    for (const auto& rp : rs->positive_roots()) coroots.insert(rp.coroot.coeffs);
    EXPECT_EQ(coroots, testsupport::roots_by_strings(rs->pairing().transposed())) << to_string(kind);
  }
}

TEST(RootSystem, EveryPairNormalized) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    for (const auto& rp : rs->positive_roots()) {
      EXPECT_EQ(rs->pair(rp.root, rp.coroot), 2);
      EXPECT_EQ(rp.height, height(rp.root));
    }
  }
}

TEST(RootSystem, ClosureIsIdempotent) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    std::set<std::vector<int>> roots;
    for (const auto& rp : rs->positive_roots()) roots.insert(rp.root.coeffs);
    for (const auto& rp : rs->positive_roots()) {
      for (int j = 0; j < rs->rank(); ++j) {
        auto v = rs->reflect_root(rp.root.coeffs, j);
        if (std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; }))
          for (int& x : v) x = -x;
        EXPECT_TRUE(roots.contains(v)) << to_string(kind);
        auto c = rs->reflect_coroot(rp.coroot.coeffs, j);
        if (std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; }))
          for (int& x : c) x = -x;
        EXPECT_TRUE(rs->index_of(Coroot{c}).has_value()) << to_string(kind);
      }
    }
  }
}

TEST(RootSystem, HeightProfile) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    std::map<int, int> by_height;
    for (const auto& rp : rs->positive_roots()) ++by_height[rp.height];
    EXPECT_EQ(by_height[1], rs->rank());
    int previous = by_height[1];
    for (const auto& [h, n] : by_height) {
      EXPECT_LE(n, previous) << to_string(kind) << " height " << h;
      previous = n;
    }
    if (kind.family == Family::A)
      for (int i = 1; i <= kind.rank; ++i) EXPECT_EQ(by_height[i], kind.rank - i + 1);
  }
}

TEST(RootSystem, Exceptional) {
  const auto e8 = make_system("E8");
  EXPECT_EQ(e8->size(), 120u);
  EXPECT_EQ(e8->max_height(), 29);
  EXPECT_EQ(e8->positive_roots().back().root.coeffs, (std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2}));

  const auto g2 = make_system("G2");
  std::set<std::vector<int>> roots;
  for (const auto& rp : g2->positive_roots()) roots.insert(rp.root.coeffs);
  EXPECT_EQ(roots, (std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}));
  const auto idx = g2->index_of(Root{{3, 1}});
  ASSERT_TRUE(idx);
  // 3 alpha_1 + alpha_2 is long, so its coroot is alpha_1^vee + alpha_2^vee.
  EXPECT_EQ(g2->positive_roots()[*idx].coroot.coeffs, (std::vector<int>{1, 1}));

  const auto f4 = make_system("F4");
  EXPECT_EQ(f4->positive_roots().back().root.coeffs, (std::vector<int>{2, 3, 4, 2}));
}

TEST(RootSystem, SimpleIndices) {
  const auto rs = make_system("D5");
  for (int i = 0; i < rs->rank(); ++i) {
    const auto& rp = rs->positive_roots()[rs->simple_index(i)];
    EXPECT_EQ(rp.height, 1);
    EXPECT_EQ(rp.root.coeffs[static_cast<std::size_t>(i)], 1);
    EXPECT_EQ(rp.coroot.coeffs, rp.root.coeffs);
  }
  EXPECT_FALSE(rs->index_of(Root{{1, 0, 1, 0, 0}}).has_value());
}

TEST(Dual, IsStandardAfterRelabel) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    const auto d = dual(*rs);
    EXPECT_EQ(d.system.pairing(), rs->pairing().transposed());
    EXPECT_EQ(d.system.pairing().relabeled(d.relabel), PairingMatrix::cartan(d.standard_kind)) << to_string(kind);
    EXPECT_EQ(d.system.size(), rs->size());
  }
  EXPECT_EQ(dual(*make_system("B4")).standard_kind, (RootSystemKind{Family::C, 4}));
  EXPECT_EQ(dual(*make_system("C4")).standard_kind, (RootSystemKind{Family::B, 4}));
  EXPECT_EQ(dual(*make_system("E7")).standard_kind, (RootSystemKind{Family::E, 7}));
}

TEST(Dual, IsAnInvolution) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    const auto d = dual(*rs);
    const auto dd = dual(d.system);
    std::vector<int> composed(d.relabel.size());
    for (std::size_t i = 0; i < composed.size(); ++i)
      composed[i] = dd.relabel[static_cast<std::size_t>(d.relabel[i])];
    EXPECT_EQ(dd.system.pairing(), rs->pairing());
    EXPECT_EQ(dd.standard_kind, kind);
    std::vector<int> identity(composed.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    EXPECT_EQ(composed, identity) << to_string(kind);
    // Swapping roots and coroots recovers the original pairs.
    for (const auto& rp : d.system.positive_roots()) EXPECT_TRUE(rs->index_of(Root{rp.coroot.coeffs}));
  }
}

TEST(Kostant, A2Example) {
  const auto k = kostant_multisets(*make_system("A2"));
  // <rho, coroot> = 1, 1, 2; lhs = {2, 2, 3}; rhs = {2}.
  EXPECT_EQ(k.lhs, (Multiset<Rational>{Rational(2), Rational(2), Rational(3)}));
  EXPECT_EQ(k.rhs_roots, (Multiset<Rational>{Rational(2)}));
  EXPECT_EQ(k.residual, (Multiset<Rational>{Rational(2), Rational(3)}));
}

TEST(Kostant, ResidualIsTheDegrees) {
  const std::map<std::string, std::vector<int>> degrees = {
      {"G2", {2, 6}}, {"F4", {2, 6, 8, 12}}, {"E6", {2, 5, 6, 8, 9, 12}},
      {"E7", {2, 6, 8, 10, 12, 14, 18}}, {"E8", {2, 8, 12, 14, 18, 20, 24, 30}},
      {"B4", {2, 4, 6, 8}}, {"D4", {2, 4, 4, 6}}, {"A5", {2, 3, 4, 5, 6}}};
  for (const auto& [name, ds] : degrees) {
    Multiset<Rational> expected;
    for (int d : ds) expected.insert(Rational(d));
    EXPECT_EQ(kostant_multisets(*make_system(name.c_str())).residual, expected) << name;
  }
}

TEST(Kostant, StructureForAllKinds) {
  for (const auto kind : all_kinds()) {
    const auto rs = make_system(kind);
    const auto k = kostant_multisets(*rs);
    EXPECT_TRUE(k.rhs_roots.is_subset_of(k.lhs));
    EXPECT_EQ(k.residual.size(), static_cast<std::size_t>(kind.rank));
    EXPECT_GE(k.residual.begin()->first, Rational(2));
    EXPECT_EQ(weyl_order_from_degrees(*rs), testsupport::known_weyl_order(kind)) << to_string(kind);
  }
}

TEST(Kostant, OrderMatchesIndependentOrbitCount) {
  for (const auto kind : all_kinds()) {
    if (testsupport::known_weyl_order(kind) > 51840) continue;
    const auto rs = make_system(kind);
    EXPECT_EQ(weyl_order_from_degrees(*rs), testsupport::weyl_orbit_of_rho(rs->pairing())) << to_string(kind);
  }
}
