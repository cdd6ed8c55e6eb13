#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "planar/diagram.hpp"
#include "planar/oracle.hpp"

using namespace planar;

namespace {

std::set<std::vector<int>> pairings(const std::vector<Diagram>& ds) {
  std::set<std::vector<int>> out;
  for (const auto& d : ds) out.insert(d.pairing());
  return out;
}

}  // namespace

TEST(Enumerate, TlCounts) {
  EXPECT_EQ(enumerate_tl(0).size(), 1u);
  EXPECT_EQ(enumerate_tl(3).size(), 5u);
  EXPECT_EQ(enumerate_tl(8).size(), 1430u);
  auto c = oracle::catalan(8);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(static_cast<long>(enumerate_tl(n).size()), c[n]) << n;
}

TEST(Enumerate, FcCounts) {
  EXPECT_EQ(enumerate_fc(1).size(), 1u);
  EXPECT_EQ(enumerate_fc(2).size(), 3u);
  EXPECT_EQ(enumerate_fc(4).size(), 55u);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(static_cast<long>(enumerate_fc(n).size()), oracle::fuss_catalan(n)) << n;
}

// Same sets as the brute-force filter over all perfect matchings.
TEST(Enumerate, MatchesBruteForceSets) {
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::vector<int>> brute;
    oracle::tl_matchings(n, &brute);
    EXPECT_EQ(pairings(enumerate_tl(n)), std::set<std::vector<int>>(brute.begin(), brute.end())) << n;
  }
  for (int n = 0; n <= 4; ++n) {
    std::vector<std::vector<int>> brute;
    oracle::fc_matchings(n, &brute);
    EXPECT_EQ(pairings(enumerate_fc(n)), std::set<std::vector<int>>(brute.begin(), brute.end())) << n;
  }
}

TEST(Enumerate, SortedAndDistinct) {
  for (Family f : {Family::TL, Family::FC}) {
    auto ds = enumerate(f, 4);
    EXPECT_TRUE(std::is_sorted(ds.begin(), ds.end()));
    EXPECT_EQ(std::adjacent_find(ds.begin(), ds.end()), ds.end());
  }
}

TEST(Diagram, RejectsInvalidPairings) {
  EXPECT_THROW(Diagram(Family::TL, 2, {2, 3, 0, 1}), DomainError);  // crossing
  EXPECT_THROW(Diagram(Family::TL, 2, {1, 0, 2, 3}), DomainError);  // fixed points
  EXPECT_THROW(Diagram(Family::TL, 2, {1, 0}), DomainError);
  EXPECT_THROW(Diagram(Family::FC, 1, {1, 0, 3, 2}), DomainError);  // a paired with b
  EXPECT_NO_THROW(Diagram(Family::FC, 1, {3, 2, 1, 0}));
}

TEST(Diagram, FcColoursAlternateAbba) {
  EXPECT_EQ(fc_color(0), Color::A);
  EXPECT_EQ(fc_color(1), Color::B);
  EXPECT_EQ(fc_color(2), Color::B);
  EXPECT_EQ(fc_color(3), Color::A);
  EXPECT_EQ(fc_color(4), Color::A);
}

TEST(Involute, Examples) {
  for (Family f : {Family::TL, Family::FC}) {
    auto id = Diagram::identity(f, 3);
    EXPECT_EQ(id.involute(), id);
  }
  auto e = cup_cap(Family::TL, 2, 1);
  EXPECT_EQ(e.involute(), e);

  std::vector<Diagram> asymmetric;
  for (const auto& d : enumerate_tl(3))
    if (d.involute() != d) asymmetric.push_back(d);
  ASSERT_EQ(asymmetric.size(), 2u);
  EXPECT_EQ(asymmetric[0].involute(), asymmetric[1]);
  EXPECT_EQ(asymmetric[1].involute(), asymmetric[0]);
}

TEST(Involute, IsAnInvolution) {
  for (Family f : {Family::TL, Family::FC})
    for (const auto& d : enumerate(f, 4)) EXPECT_EQ(d.involute().involute(), d);
}

TEST(Closure, Examples) {
  EXPECT_EQ(Diagram::identity(Family::TL, 3).closure_loops(), (LoopCount{3, 3}));
  EXPECT_EQ(cup_cap(Family::TL, 2, 1).closure_loops(), (LoopCount{1, 1}));
  EXPECT_EQ(single_cup_cap(2, 1).closure_loops(), (LoopCount{2, 1}));
  EXPECT_EQ(Diagram::identity(Family::FC, 2).closure_loops(), (LoopCount{2, 2}));
}

TEST(Diagram, CupCapShapes) {
  // doubled E_1 at n=2: a-cup 0-3 around b-cup 1-2, mirrored below
  auto e = cup_cap(Family::FC, 2, 1);
  EXPECT_EQ(e.partner(0), 3);
  EXPECT_EQ(e.partner(1), 2);
  EXPECT_EQ(e.partner(e.bottom(0)), e.bottom(3));
  EXPECT_EQ(e.partner(e.bottom(1)), e.bottom(2));
  auto p = single_cup_cap(2, 1);
  EXPECT_EQ(p.partner(1), 2);
  EXPECT_EQ(p.partner(0), p.bottom(0));
  EXPECT_EQ(p.through_strands(), 2);
  EXPECT_THROW(cup_cap(Family::TL, 3, 3), DomainError);
  EXPECT_THROW(single_cup_cap(3, 0), DomainError);
}
