#include <gtest/gtest.h>

#include <map>

#include "ruledforms/pic_symbolic.hpp"

namespace ruledforms {
namespace {

constexpr CurveTopType kCurve{1, 2, DividingType::Dividing};

TEST(TensorDegree, Formula) {
  EXPECT_EQ(tensor_degree(2, 3, 1), 5);
  EXPECT_EQ(tensor_degree(7, 5, 0), 7);
  EXPECT_EQ(tensor_degree(1, 4, -1), -3);
  EXPECT_THROW(tensor_degree(0, 1, 1), Error);
}

TEST(SectionClass, RewritesIntoCanonicalGenerators) {
  auto [x, xb] = conjugate_pair(kCurve, "x", "xb");
  auto p = real_point(kCurve, "p", 0);

  EXPECT_EQ(section_class_of(LineBundleRep::trivial()), (PicSurfaceExpr{1, {}}));

  LineBundleRep l{Divisor::of(x) - Divisor::of(xb)};
  EXPECT_EQ(section_class_of(l), (PicSurfaceExpr{1, {Divisor::of(xb) - Divisor::of(x)}}));

  LineBundleRep two_p{Divisor::of(p, 2)};
  EXPECT_EQ(section_class_of(two_p), (PicSurfaceExpr{1, {Divisor::of(p, -2)}}));
}

TEST(NormalBundle, Summands) {
  auto [x, xb] = conjugate_pair(kCurve, "x", "xb");
  auto p = real_point(kCurve, "p", 1);
  LineBundleRep l{Divisor::of(x, 2) + Divisor::of(p)};

  auto trivial = normal_bundle(LineBundleRep::trivial(), {LineBundleRep::trivial()});
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial[0], (PicSurfaceExpr{1, {}}));

  auto with_l0 = normal_bundle(l, {LineBundleRep::trivial()});
  ASSERT_EQ(with_l0.size(), 1u);
  EXPECT_EQ(with_l0[0], (PicSurfaceExpr{1, l.dual()}));

  LineBundleRep m{Divisor::of(xb)};
  auto several = normal_bundle(l, {LineBundleRep::trivial(), m, l});
  EXPECT_EQ(several.size(), 3u);

  EXPECT_THROW(normal_bundle(l, {}), Error);
}

// L (x) L^* computed by adding coefficients point by point, without the
// library's divisor arithmetic.
TEST(NormalBundle, SelfTwistIsTrivial) {
  auto [x, xb] = conjugate_pair(kCurve, "x", "xb");
  auto p = real_point(kCurve, "p", 0);
  LineBundleRep l{Divisor::of(x, 3) + Divisor::of(xb, -1) + Divisor::of(p, 2)};

  std::map<std::string, std::int64_t> sum;
  for (const auto& [id, term] : l.divisor.terms()) sum[id] += term.coeff;
  for (const auto& [id, term] : l.divisor.terms()) sum[id] -= term.coeff;
  bool all_zero = true;
  for (const auto& [id, c] : sum) all_zero = all_zero && c == 0;
  ASSERT_TRUE(all_zero);

  auto n = normal_bundle(l, {l});
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0].a, 1);
  EXPECT_TRUE(n[0].m.is_trivial());
}

TEST(SurfaceClassSum, ReductionIsIdempotent) {
  auto [x, xb] = conjugate_pair(kCurve, "x", "xb");
  LineBundleRep l{Divisor::of(x) - Divisor::of(xb)};
  SurfaceClassSum s;
  s.add_section(l, 2).add_zero_section(-1).add_pullback(LineBundleRep{Divisor::of(x)});
  EXPECT_FALSE(s.reduced());
  PicSurfaceExpr once = s.reduce();
  EXPECT_EQ(once.a, 1);
  EXPECT_EQ(once.m.divisor, Divisor::of(x) + (Divisor::of(xb) - Divisor::of(x)).scaled(2));
  SurfaceClassSum again(once);
  EXPECT_TRUE(again.reduced());
  EXPECT_EQ(again.reduce(), once);
}

TEST(RealityConstraint, InvariantBaseTwist) {
  auto [x, xb] = conjugate_pair(kCurve, "x", "xb");
  PicSurfaceExpr sym{1, {Divisor::of(x) + Divisor::of(xb)}};
  PicSurfaceExpr anti{1, {Divisor::of(x) - Divisor::of(xb)}};
  PicSurfaceExpr none{1, {}};

  EXPECT_EQ(reality_constraint(sym), RealityConstraint::RequiresInvariant);
  EXPECT_TRUE(satisfies(reality_constraint(sym), sym.m));
  EXPECT_EQ(reality_constraint(anti), RealityConstraint::RequiresInvariant);
  EXPECT_FALSE(satisfies(reality_constraint(anti), anti.m));
  EXPECT_EQ(reality_constraint(none), RealityConstraint::None);
  EXPECT_TRUE(satisfies(reality_constraint(none), none.m));

  EXPECT_EQ(twist_reality_constraint(anti.m), RealityConstraint::RequiresAntiInvariant);
  EXPECT_TRUE(satisfies(twist_reality_constraint(anti.m), anti.m));
  EXPECT_FALSE(satisfies(twist_reality_constraint(sym.m), sym.m));
}

TEST(LineBundleRep, DegreeAdditivity) {
  auto [x, xb] = conjugate_pair(kCurve, "x", "xb");
  auto p = real_point(kCurve, "p", 0);
  LineBundleRep a{Divisor::of(x, 2) + Divisor::of(p, -1)};
  LineBundleRep b{Divisor::of(xb, 4) + Divisor::of(p, 3)};
  EXPECT_EQ(tensor(a, b).degree(), a.degree() + b.degree());
  EXPECT_EQ(a.dual().degree(), -a.degree());
}

}  // namespace
}  // namespace ruledforms
