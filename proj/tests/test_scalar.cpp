#include <gtest/gtest.h>

#include <cmath>

#include "planar/random.hpp"
#include "planar/scalar.hpp"

using planar::ParamScalar;

namespace {

const ParamScalar A = ParamScalar::a();
const ParamScalar B = ParamScalar::b();

}  // namespace

TEST(Scalar, AddExamples) {
  EXPECT_EQ((A + B) + (A - B), ParamScalar(2L) * A);
  EXPECT_EQ(A + ParamScalar(0L), A);
  ParamScalar x = ParamScalar::monomial(-1, 1);
  EXPECT_EQ(x + x, ParamScalar::monomial(2, -1, 1));
}

TEST(Scalar, MulExamples) {
  EXPECT_EQ(A * B, ParamScalar::monomial(1, 1));
  EXPECT_EQ(ParamScalar::delta_power(-1) * ParamScalar::delta_power(1), ParamScalar(1L));
  EXPECT_EQ((A + B) * (A - B), A * A - B * B);
}

TEST(Scalar, EvalExamples) {
  EXPECT_DOUBLE_EQ((A * B).eval(2, 3), 6.0);
  EXPECT_DOUBLE_EQ(A.inverse().eval(2, 1), 0.5);
  EXPECT_DOUBLE_EQ((A * A - B * B).eval(3, 2), 5.0);
  EXPECT_THROW(A.eval(0.0, 1.0), planar::DomainError);
  EXPECT_THROW(A.eval(1.0, -2.0), planar::DomainError);
}

TEST(Scalar, ZeroCoefficientsAreDropped) {
  ParamScalar z = A - A;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.size(), 0u);
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Scalar, InverseOnlyForMonomials) {
  EXPECT_EQ(ParamScalar::monomial(mpq_class(3, 2), 2, -1).inverse(), ParamScalar::monomial(mpq_class(2, 3), -2, 1));
  EXPECT_THROW((A + B).inverse(), planar::DomainError);
  EXPECT_THROW(ParamScalar(0L).inverse(), planar::DomainError);
  EXPECT_EQ(ParamScalar::monomial(1, 1).pow(-3), ParamScalar::delta_power(-3));
  EXPECT_EQ((A + B).pow(2), A * A + ParamScalar(2L) * A * B + B * B);
}

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(ParamScalar::parse("1*a^1*b^1"), A * B);
  EXPECT_EQ(ParamScalar::parse(" 3/4 * a ^ -2 * b - 1/2 "), ParamScalar::monomial(mpq_class(3, 4), -2, 1) - ParamScalar(mpq_class(1, 2)));
  EXPECT_EQ(ParamScalar::parse("(a+b)*(a-b)"), A * A - B * B);
  EXPECT_EQ(ParamScalar::parse("-a"), -A);
  EXPECT_EQ(ParamScalar::parse("0"), ParamScalar(0L));
  EXPECT_THROW(ParamScalar::parse("a^"), planar::ParseError);
  EXPECT_THROW(ParamScalar::parse("c"), planar::ParseError);
  EXPECT_THROW(ParamScalar::parse("1/0"), planar::ParseError);
  EXPECT_THROW(ParamScalar::parse("(a"), planar::ParseError);
}

TEST(ScalarProperty, TextRoundTrip) {
  planar::Rng rng(7);
  for (int s = 0; s < 300; ++s) {
    ParamScalar x = planar::random_scalar(rng, 4, 3);
    EXPECT_EQ(ParamScalar::parse(x.to_string()), x) << x.to_string();
  }
}

TEST(ScalarProperty, RingAxioms) {
  planar::Rng rng(11);
  for (int s = 0; s < 1000; ++s) {
    ParamScalar x = planar::random_scalar(rng), y = planar::random_scalar(rng), z = planar::random_scalar(rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * ParamScalar(1L), x);
    ASSERT_TRUE((x - x).is_zero());
  }
}

TEST(ScalarProperty, EvalIsHomomorphism) {
  planar::Rng rng(13);
  std::uniform_real_distribution<double> point(0.5, 2.0);
  for (int s = 0; s < 500; ++s) {
    ParamScalar x = planar::random_scalar(rng), y = planar::random_scalar(rng);
    double a = point(rng), b = point(rng);
    double xv = x.eval(a, b), yv = y.eval(a, b);
    double scale = 1.0 + std::abs(xv) + std::abs(yv) + std::abs(xv * yv);
    EXPECT_NEAR((x + y).eval(a, b), xv + yv, 1e-12 * scale);
    EXPECT_NEAR((x * y).eval(a, b), xv * yv, 1e-12 * scale);
  }
}
