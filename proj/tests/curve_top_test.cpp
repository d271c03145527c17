#include <gtest/gtest.h>

#include <random>

#include "ruledforms/curve_top.hpp"
#include "support/random_presentations.hpp"

namespace ruledforms {
namespace {

constexpr CurveTopType kLine{0, 1, DividingType::Dividing};
constexpr CurveTopType kTorus2{1, 2, DividingType::NonDividing};

TEST(CurveTopType, ValidityRules) {
  EXPECT_TRUE(validate_curve_type({0, 1, DividingType::Dividing}));
  EXPECT_FALSE(validate_curve_type({2, 4, DividingType::NonDividing}));
  EXPECT_TRUE(validate_curve_type({1, 2, DividingType::Dividing}));

  EXPECT_FALSE(validate_curve_type({1, 0, DividingType::Dividing}));  // mu = 0
  EXPECT_FALSE(validate_curve_type({1, 1, DividingType::Dividing}));  // parity
  EXPECT_TRUE(validate_curve_type({1, 1, DividingType::NonDividing}));
  EXPECT_TRUE(validate_curve_type({3, 0, DividingType::NonDividing}));
  EXPECT_FALSE(validate_curve_type({-1, 0, DividingType::NonDividing}));
}

TEST(PointLabel, RealComponentMustExist) {
  EXPECT_NO_THROW(real_point(kTorus2, "p", 1));
  try {
    real_point(kTorus2, "p", 2);
    FAIL() << "expected InvalidPoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPoint);
  }
  EXPECT_THROW(conjugate_pair(kTorus2, "x", "x"), Error);
}

TEST(ConjDivisor, ActsOnLabels) {
  auto [x, xbar] = conjugate_pair(kTorus2, "x", "xb");
  auto p = real_point(kTorus2, "p", 0);

  EXPECT_EQ(conj_divisor(Divisor::of(x)), Divisor::of(xbar));
  EXPECT_EQ(conj_divisor(Divisor::of(p, 2)), Divisor::of(p, 2));

  Divisor d = Divisor::of(x) - Divisor::of(xbar);
  EXPECT_EQ(conj_divisor(d), Divisor::of(xbar) - Divisor::of(x));
  EXPECT_EQ(conj_divisor(d), -d);
}

TEST(ConjDivisor, InvariantAndAntiInvariant) {
  auto [x, xbar] = conjugate_pair(kTorus2, "x", "xb");
  Divisor anti = Divisor::of(x) - Divisor::of(xbar);
  Divisor inv = Divisor::of(x) + Divisor::of(xbar);
  EXPECT_TRUE(is_anti_invariant(anti));
  EXPECT_FALSE(is_invariant(anti));
  EXPECT_TRUE(is_invariant(inv));
  EXPECT_FALSE(is_anti_invariant(inv));
  EXPECT_TRUE(is_invariant(Divisor{}));
  EXPECT_TRUE(is_anti_invariant(Divisor{}));
}

TEST(ConjDivisor, MixedCurvesRejected) {
  auto p = real_point(kTorus2, "p", 0);
  auto q = real_point(kLine, "q", 0);
  Divisor d = Divisor::of(p);
  try {
    d.add_term(q, 1);
    FAIL() << "expected MixedCurves";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedCurves);
  }

  // Same id used for a real point and a non-real one.
  auto [x, xbar] = conjugate_pair(kTorus2, "p", "pb");
  EXPECT_THROW(Divisor::of(p).add_term(x, 1), Error);

  // x -> y but y -> z: not an involution.
  PointLabel a{"a", NonReal{"b"}, kTorus2};
  PointLabel b{"b", NonReal{"c"}, kTorus2};
  Divisor bad = Divisor::of(a) + Divisor::of(b);
  try {
    conj_divisor(bad);
    FAIL() << "expected MixedCurves";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedCurves);
  }
}

TEST(Divisor, NoZeroCoefficientsStored) {
  auto p = real_point(kTorus2, "p", 0);
  Divisor d = Divisor::of(p, 3);
  d.add_term(p, -3);
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.degree(), 0);
  EXPECT_TRUE(Divisor::of(p, 0).empty());
}

// Random divisors over a pool of labels on one curve.
Divisor random_divisor(std::mt19937_64& rng) {
  const CurveTopType curve{3, 4, DividingType::Dividing};
  std::vector<PointLabel> pool;
  for (int c = 0; c < 4; ++c) pool.push_back(real_point(curve, "r" + std::to_string(c), c));
  for (int i = 0; i < 4; ++i) {
    auto [x, xb] = conjugate_pair(curve, "x" + std::to_string(i), "y" + std::to_string(i));
    pool.push_back(x);
    pool.push_back(xb);
  }
  Divisor d;
  const int terms = testing::uniform(rng, 0, 8);
  for (int i = 0; i < terms; ++i) {
    d.add_term(pool[testing::uniform(rng, 0, static_cast<int>(pool.size()) - 1)],
               testing::uniform(rng, -5, 5));
  }
  return d;
}

TEST(ConjDivisorProperty, InvolutionDegreeAndRealCoefficients) {
  std::mt19937_64 rng(testing::seed_from_env());
  for (int iter = 0; iter < 500; ++iter) {
    Divisor d = random_divisor(rng);
    Divisor c = conj_divisor(d);
    EXPECT_EQ(conj_divisor(c), d);
    EXPECT_EQ(c.degree(), d.degree());
    if (is_anti_invariant(d)) {
      for (const auto& [id, term] : d.terms()) EXPECT_FALSE(term.point.is_real()) << id;
    }
    // d - conj(d) is always anti-invariant, d + conj(d) invariant.
    EXPECT_TRUE(is_anti_invariant(d - c));
    EXPECT_TRUE(is_invariant(d + c));
  }
}

}  // namespace
}  // namespace ruledforms
