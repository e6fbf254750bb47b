#include <gtest/gtest.h>

#include <algorithm>

#include "eispole/error.hpp"
#include "eispole/residue_oracle.hpp"
#include "support.hpp"

using namespace eispole;

namespace {

std::vector<AffineForm> sorted(std::vector<AffineForm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

AffineForm form(Rational a, int j) { return AffineForm{a, j}; }

} // namespace

TEST(ResidueFunction, SL3) {
  const auto pd = parabolic_data(testsupport::make_system("A2"), 2);
  const auto raw = raw_residue_function(pd);
  EXPECT_EQ(sorted(raw.numerator), sorted({form(1, 0), form(Rational(-1, 2), 1), form(Rational(1, 2), 1)}));
  EXPECT_EQ(sorted(raw.denominator), sorted({form(Rational(-3, 2), 1), form(Rational(-1, 2), 1)}));

  // (s + 1/2) / (s - 3/2)
  const auto reduced = reduce(raw);
  EXPECT_EQ(reduced.numerator_roots(), (Multiset<Rational>{Rational(-1, 2)}));
  EXPECT_EQ(reduced.denominator_roots(), (Multiset<Rational>{Rational(3, 2)}));
  const auto report = cross_check(pd);
  EXPECT_TRUE(report.match);
  EXPECT_EQ(report.denominator_roots, (Multiset<Rational>{Rational(3, 2)}));
}

TEST(ResidueFunction, A1) {
  const auto pd = parabolic_data(testsupport::make_system("A1"), 1);
  const auto raw = raw_residue_function(pd);
  EXPECT_EQ(raw.numerator, (std::vector<AffineForm>{form(0, 1)}));
  EXPECT_EQ(raw.denominator, (std::vector<AffineForm>{form(-1, 1)}));
  const auto reduced = reduce(raw);
  EXPECT_EQ(reduced.numerator, raw.numerator);
  EXPECT_EQ(reduced.denominator, raw.denominator);
  EXPECT_TRUE(cross_check(pd).match);
}

TEST(ResidueFunction, G2) {
  const auto pd = parabolic_data(testsupport::make_system("G2"), 2);
  const auto raw = raw_residue_function(pd);
  const std::vector<AffineForm> num{form(1, 0),  form(Rational(-1, 2), 1), form(Rational(1, 2), 1),
                                    form(0, 2), form(Rational(-1, 2), 3), form(Rational(1, 2), 3)};
  EXPECT_EQ(sorted(raw.numerator), sorted(num));
  std::vector<AffineForm> den;
  for (const auto& f : num)
    if (!f.is_constant()) den.push_back(f.shifted(Rational(-1)));
  EXPECT_EQ(sorted(raw.denominator), sorted(den));

  const auto reduced = reduce(raw);
  EXPECT_EQ(reduced.denominator_roots(), (Multiset<Rational>{Rational(3, 2), Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(reduced.numerator_roots(), (Multiset<Rational>{Rational(-1, 2), Rational(0), Rational(-1, 6)}));
}

TEST(Reduce, CancelsByLocusNotByScale) {
  // (s - 1/2) against (3s - 3/2)
  FactorLists fl;
  fl.numerator = {form(Rational(-1, 2), 1), form(2, 0)};
  fl.denominator = {form(Rational(-3, 2), 3), form(2, 0), form(3, 0)};
  const auto r = reduce(fl);
  EXPECT_TRUE(r.numerator.empty());
  EXPECT_EQ(r.denominator, (std::vector<AffineForm>{form(3, 0)}));
}

TEST(Reduce, ZeroConstantIsDegenerate) {
  FactorLists fl;
  fl.numerator = {form(0, 0), form(Rational(1, 2), 1)};
  fl.denominator = {form(Rational(-1, 2), 1)};
  EXPECT_THROW(reduce(fl), DegenerateConfigurationError);
}

class ResidueSweep : public ::testing::TestWithParam<RootSystemKind> {};

TEST_P(ResidueSweep, ReducedFunctionMatchesPolePolynomial) {
  const auto rs = testsupport::make_system(GetParam());
  for (int node = 1; node <= rs->rank(); ++node) {
    SCOPED_TRACE(to_string(GetParam()) + " P" + std::to_string(node));
    const auto pd = parabolic_data(rs, node);
    const auto raw = raw_residue_function(pd);

    // Constants come from Levi coroots and never hide a zero.
    for (const auto& f : raw.numerator)
      if (f.is_constant()) EXPECT_GE(f.a, Rational(1));
    for (const auto& f : raw.denominator)
      if (f.is_constant()) EXPECT_GE(f.a, Rational(1));

    const auto reduced = reduce(raw);
    EXPECT_EQ(static_cast<long>(raw.numerator.size()) - static_cast<long>(raw.denominator.size()),
              static_cast<long>(reduced.numerator.size()) - static_cast<long>(reduced.denominator.size()));
    for (const auto& [z, n] : reduced.numerator_roots()) EXPECT_LE(z, Rational(0));
    for (const auto& [z, n] : reduced.denominator_roots()) EXPECT_GT(z, Rational(0));

    const auto report = cross_check(pd);
    EXPECT_TRUE(report.match) << report.error;
    EXPECT_EQ(report.p_zeros, analyze(pd).poles.as_multiset());
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, ResidueSweep, ::testing::ValuesIn(all_kinds()),
                         [](const auto& info) { return to_string(info.param); });
