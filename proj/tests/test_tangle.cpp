#include <gtest/gtest.h>

#include "planar/json_io.hpp"
#include "planar/tangle.hpp"

using namespace planar;

namespace {

// Straight strings from outer point i to hole point i; `hole_first` moves
// only the hole's white mark.
PlanarTangle identity_tangle(int k, int hole_first = 0) {
  std::vector<std::pair<PointRef, PointRef>> s;
  for (int i = 0; i < 2 * k; ++i) s.push_back({{kOuter, i}, {0, i}});
  return PlanarTangle(k, {{k, hole_first}}, s);
}

const Family kFamilies[] = {Family::TL, Family::FC};

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(identity_tangle(3)).ok());
  for (auto kind : {TangleKind::Multiplication, TangleKind::Inclusion, TangleKind::ConditionalExpectation, TangleKind::Rotation,
                    TangleKind::JonesProjection, TangleKind::Unit})
    for (int n = 2; n <= 4; ++n) EXPECT_TRUE(validate(elementary(kind, n)).ok());

  PlanarTangle crossing(2, {}, {{{kOuter, 0}, {kOuter, 2}}, {{kOuter, 1}, {kOuter, 3}}});
  auto r = validate(crossing);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostic->kind, TangleDiagnostic::Kind::Planarity);

  // white mark moved by one: strings stay planar but shading breaks
  auto shifted = identity_tangle(2, 1);
  auto s = validate(shifted);
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.diagnostic->kind, TangleDiagnostic::Kind::Shading);
}

TEST(Tangle, ConstructorRejectsBadStrings) {
  EXPECT_THROW(PlanarTangle(1, {}, {{{kOuter, 0}, {kOuter, 0}}}), DomainError);
  EXPECT_THROW(PlanarTangle(1, {}, {}), DomainError);
  EXPECT_THROW(PlanarTangle(1, {}, {{{kOuter, 0}, {kOuter, 5}}}), DomainError);
  EXPECT_THROW(PlanarTangle(1, {}, {{{kOuter, 0}, {kOuter, 1}}}, 0, 2), DomainError);
}

TEST(Compose, UnitLaw) {
  for (auto kind : {TangleKind::Multiplication, TangleKind::Rotation, TangleKind::Inclusion, TangleKind::JonesProjection}) {
    auto s = elementary(kind, 2);
    EXPECT_EQ(compose(identity_tangle(s.k()), 0, s).normalized(), s.normalized());
    for (int j = 0; j < s.hole_count(); ++j)
      EXPECT_EQ(compose(s, j, identity_tangle(s.holes()[j].arity)).normalized(), s.normalized());
  }
}

TEST(Compose, Preconditions) {
  auto unit = elementary(TangleKind::Unit, 2);
  EXPECT_THROW(compose(unit, 0, unit), DomainError);
  EXPECT_THROW(compose(elementary(TangleKind::Multiplication, 2), 0, elementary(TangleKind::Unit, 3)), DomainError);
  EXPECT_THROW(compose(elementary(TangleKind::Multiplication, 2), 2, elementary(TangleKind::Unit, 2)), DomainError);
}

TEST(Compose, MultiplicationWithIdentityKeepsEvaluation) {
  Rng rng(31);
  auto mul = elementary(TangleKind::Multiplication, 2);
  auto t = compose(mul, 0, identity_tangle(2));
  EXPECT_EQ(t.hole_count(), 2);
  for (Family f : kFamilies) {
    auto x = random_element(f, 2, rng), y = random_element(f, 2, rng);
    EXPECT_EQ(eval(t, {x, y}, f), eval(mul, {x, y}, f));
  }
}

TEST(Eval, ElementaryTangles) {
  Rng rng(32);
  for (Family f : kFamilies) {
    for (int n = 1; n <= 3; ++n) {
      auto x = random_element(f, n, rng), y = random_element(f, n, rng);
      EXPECT_EQ(eval(elementary(TangleKind::Multiplication, n), {x, y}, f), x * y);
      EXPECT_EQ(eval(elementary(TangleKind::Inclusion, n), {x}, f), include(x));
      EXPECT_EQ(eval(elementary(TangleKind::ConditionalExpectation, n + 1), {include(x)}, f), ParamScalar::delta_power(1) * x);
      EXPECT_EQ(eval(elementary(TangleKind::Unit, n), {}, f), AlgebraElement::identity(f, n));
    }
    EXPECT_EQ(eval(elementary(TangleKind::JonesProjection, 2), {}, f), AlgebraElement(cup_cap(f, 2, 1)));
  }
}

TEST(Eval, FreeLoopsAndArityChecks) {
  auto unit = elementary(TangleKind::Unit, 1);
  PlanarTangle looped(1, {}, unit.strings(), 2);
  for (Family f : kFamilies) EXPECT_EQ(eval(looped, {}, f), ParamScalar::delta_power(2) * AlgebraElement::identity(f, 1));
  auto mul = elementary(TangleKind::Multiplication, 2);
  auto x = AlgebraElement::identity(Family::TL, 2);
  EXPECT_THROW(eval(mul, {x}, Family::TL), DomainError);
  EXPECT_THROW(eval(mul, {x, AlgebraElement::identity(Family::TL, 3)}, Family::TL), DomainError);
  EXPECT_THROW(eval(mul, {x, x}, Family::FC), DomainError);
}

TEST(TangleProperty, MultiplicationAssociative) {
  Rng rng(33);
  auto mul = elementary(TangleKind::Multiplication, 2);
  for (Family f : kFamilies) {
    auto left = TangleTree::node(mul, {TangleTree::node(mul), TangleTree::input()});
    auto right = TangleTree::node(mul, {TangleTree::input(), TangleTree::node(mul)});
    for (int s = 0; s < 20; ++s) {
      std::vector<AlgebraElement> in{random_element(f, 2, rng), random_element(f, 2, rng), random_element(f, 2, rng)};
      EXPECT_EQ(flatten_eval(left, in, f), flatten_eval(right, in, f));
      EXPECT_EQ(flatten_eval(left, in, f), in[0] * in[1] * in[2]);
    }
  }
}

TEST(TangleProperty, Multilinear) {
  Rng rng(34);
  for (Family f : kFamilies) {
    auto mul = elementary(TangleKind::Multiplication, 2);
    for (int s = 0; s < 30; ++s) {
      auto x = random_element(f, 2, rng), y = random_element(f, 2, rng), z = random_element(f, 2, rng);
      auto alpha = random_scalar(rng), beta = random_scalar(rng);
      EXPECT_EQ(eval(mul, {alpha * x + beta * y, z}, f), alpha * eval(mul, {x, z}, f) + beta * eval(mul, {y, z}, f));
      EXPECT_EQ(eval(mul, {z, alpha * x + beta * y}, f), alpha * eval(mul, {z, x}, f) + beta * eval(mul, {z, y}, f));
    }
  }
}

TEST(TangleProperty, HolePermutationInvariance) {
  Rng rng(35);
  auto mul = elementary(TangleKind::Multiplication, 2);
  auto swapped = mul.permute_holes({1, 0});
  for (Family f : kFamilies) {
    auto x = random_element(f, 2, rng), y = random_element(f, 2, rng);
    EXPECT_EQ(eval(swapped, {y, x}, f), eval(mul, {x, y}, f));
  }
}

TEST(TangleProperty, Naturality) {
  Rng rng(36);
  for (Family f : kFamilies)
    for (int s = 0; s < 60; ++s) {
      auto tree = random_tree(uniform_int(rng, 0, 3), 3, rng);
      std::vector<int> arities;
      tree.input_arities(arities);
      ASSERT_EQ(static_cast<int>(arities.size()), flatten(tree).hole_count());
      std::vector<AlgebraElement> in;
      for (int a : arities) in.push_back(random_element(f, a, rng, 2));
      ASSERT_EQ(flatten_eval(tree, in, f), recursive_eval(tree, in, f));
    }
}

TEST(TangleProperty, RotationPeriod) {
  Rng rng(37);
  for (Family f : kFamilies)
    for (int n = 1; n <= 4; ++n) {
      auto rot = elementary(TangleKind::Rotation, n);
      auto x = random_element(f, n, rng), y = x;
      for (int k = 0; k < n; ++k) y = eval(rot, {y}, f);
      EXPECT_EQ(y, x);
    }
}

TEST(TangleProperty, RotationTwiceIsDoubleShift) {
  Rng rng(38);
  for (int n = 2; n <= 4; ++n) {
    auto rot = elementary(TangleKind::Rotation, n);
    std::vector<std::pair<PointRef, PointRef>> s;
    for (int i = 0; i < 2 * n; ++i) s.push_back({{kOuter, i}, {0, (i + 4) % (2 * n)}});
    PlanarTangle shift(n, {{n, 0}}, s);
    ASSERT_TRUE(validate(shift).ok());
    EXPECT_EQ(compose(rot, 0, rot).normalized(), shift.normalized());
    for (Family f : kFamilies) {
      auto x = random_element(f, n, rng);
      EXPECT_EQ(eval(rot, {eval(rot, {x}, f)}, f), eval(shift, {x}, f));
    }
  }
}

TEST(TangleJson, RoundTrip) {
  Rng rng(39);
  for (int s = 0; s < 10; ++s) {
    auto t = flatten(random_tree(uniform_int(rng, 1, 3), 2, rng));
    EXPECT_EQ(tangle_from_json(Json::parse(to_json(t).dump())), t);
  }
  for (Family f : kFamilies) {
    auto x = random_element(f, 3, rng);
    EXPECT_EQ(element_from_json(Json::parse(to_json(x).dump())), x);
  }
  EXPECT_THROW(tangle_from_json(Json::parse(R"({"k": 1})")), ParseError);
  EXPECT_THROW(element_from_json(Json::parse(R"({"family": "XX", "n": 1, "terms": []})")), ParseError);
}
