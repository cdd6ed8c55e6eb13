#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "planar/trace.hpp"

using namespace planar;

TEST(Trace, Examples) {
  for (Family f : {Family::TL, Family::FC})
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(markov_trace(AlgebraElement::identity(f, n)), ParamScalar(1L));
  EXPECT_EQ(markov_trace(jones_e(1, 2, Family::TL)), ParamScalar::delta_power(-2));
  EXPECT_EQ(markov_trace(intermediate_p(1, 2)), ParamScalar::monomial(0, -2));
  EXPECT_EQ(markov_trace(jones_e(1, 2, Family::FC)), ParamScalar::delta_power(-2));
}

TEST(Trace, MarkovIdentityCases) {
  // x = 1 reduces to tr(e_n) and tr(p_n)
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(markov_trace(jones_e(n, n + 1, Family::TL)), ParamScalar::delta_power(-2));
    auto ratio = n % 2 ? ParamScalar::monomial(0, -2) : ParamScalar::monomial(-2, 0);
    EXPECT_EQ(markov_trace(intermediate_p(n, n + 1)), ratio) << n;
  }
}

TEST(TraceProperty, Cyclic) {
  Rng rng(21);
  for (int s = 0; s < 200; ++s) {
    Family f = s % 2 ? Family::TL : Family::FC;
    int n = uniform_int(rng, 1, 3);
    auto x = random_element(f, n, rng), y = random_element(f, n, rng);
    ASSERT_EQ(markov_trace(x * y), markov_trace(y * x));
  }
}

TEST(TraceProperty, MarkovProperty) {
  Rng rng(22);
  auto tl = markov_property_check(3, Family::TL, 50, rng);
  EXPECT_TRUE(tl.passed());
  EXPECT_EQ(tl.samples, 50);
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(markov_property_check(n, Family::FC, 10, rng).passed()) << n;
  EXPECT_THROW(markov_property_check(0, Family::TL, 1, rng), DomainError);
}

TEST(Gram, Examples) {
  GramMatrix g(Family::TL, 2);
  ASSERT_EQ(g.dim(), 2u);
  // basis order puts the identity first or second; locate it
  std::size_t id = g.basis()[0] == Diagram::identity(Family::TL, 2) ? 0 : 1;
  EXPECT_EQ(g(id, id), ParamScalar(1L));
  EXPECT_EQ(g(1 - id, 1 - id), ParamScalar(1L));
  EXPECT_EQ(g(0, 1), ParamScalar::delta_power(-1));
  EXPECT_EQ(g(1, 0), ParamScalar::delta_power(-1));

  GramMatrix fc(Family::FC, 1);
  ASSERT_EQ(fc.dim(), 1u);
  EXPECT_EQ(fc(0, 0), ParamScalar(1L));

  GramMatrix g3(Family::TL, 3);
  ASSERT_EQ(g3.dim(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(g3(i, i), ParamScalar(1L));
}

TEST(Gram, Symmetric) {
  for (Family f : {Family::TL, Family::FC}) {
    GramMatrix g(f, 3);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(g(i, j), g(j, i));
  }
}

TEST(Scan, Examples) {
  auto r = positivity_scan(2, {1.0, 2.0, 3.0});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0].det, 0.0, 1e-12);
  EXPECT_EQ(r[0].rank, 1);
  EXPECT_NEAR(r[1].det, 0.75, 1e-12);
  EXPECT_EQ(r[1].rank, 2);
  EXPECT_TRUE(r[2].positive_definite(1e-9));
  EXPECT_THROW(positivity_scan(2, {1.0}, 0.0), DomainError);
}

TEST(Scan, DeterminantMatchesClosedForm) {
  for (double delta : {0.7, 1.3, 2.2}) {
    auto r = positivity_scan(2, {delta}).front();
    EXPECT_NEAR(r.det, 1.0 - 1.0 / (delta * delta), 1e-12);
  }
}

TEST(Quantize, Examples) {
  auto near = [](const std::vector<double>& roots, double x) {
    for (double r : roots)
      if (std::abs(r - x) < 1e-6) return true;
    return false;
  };
  auto r2 = quantization_detect(2, {});
  EXPECT_TRUE(near(r2, 1.0));
  auto r3 = quantization_detect(3, {});
  EXPECT_TRUE(near(r3, std::numbers::sqrt2));
  auto r4 = quantization_detect(4, {});
  EXPECT_TRUE(near(r4, std::numbers::phi));
  for (double r : r4) EXPECT_TRUE(r > 0.5 && r < 2.0);
  EXPECT_THROW(quantization_detect(2, {2.0, 1.0, 10}), DomainError);
}
