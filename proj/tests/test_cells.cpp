#include <gtest/gtest.h>

#include <map>

#include "planar/algebra.hpp"
#include "planar/cells.hpp"

using namespace planar;

namespace {

std::map<std::string, std::size_t> dims(int n, Family f) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : half_diagrams(n, f)) out[c.label] = c.dim();
  return out;
}

}  // namespace

TEST(HalfDiagrams, Examples) {
  EXPECT_EQ(dims(3, Family::TL), (std::map<std::string, std::size_t>{{"3", 1}, {"1", 2}}));
  EXPECT_EQ(dims(2, Family::FC), (std::map<std::string, std::size_t>{{"abba", 1}, {"aa", 1}, {"∅", 1}}));
  EXPECT_EQ(dims(3, Family::FC), (std::map<std::string, std::size_t>{{"abbaab", 1}, {"aaab", 1}, {"abbb", 1}, {"ab", 3}}));
}

TEST(HalfDiagrams, SumOfSquaresIsDimension) {
  for (auto [f, top] : {std::pair{Family::TL, 7}, std::pair{Family::FC, 5}})
    for (int n = 0; n <= top; ++n) {
      std::size_t sum = 0;
      for (const auto& c : half_diagrams(n, f)) sum += c.dim() * c.dim();
      EXPECT_EQ(sum, enumerate(f, n).size()) << family_name(f) << n;
    }
}

TEST(HalfDiagrams, LongerLabelsFirst) {
  auto cells = half_diagrams(4, Family::TL);
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0].label, "4");
  EXPECT_EQ(cells[2].label, "0");
}

TEST(Bratteli, TlIsHalfLine) {
  auto g = bratteli(6, Family::TL);
  for (std::size_t n = 0; n + 1 < g.levels.size(); ++n)
    for (const auto& e : g.levels[n].edges) {
      int u = std::stoi(g.levels[n].vertices[e.from].label), v = std::stoi(g.levels[n + 1].vertices[e.to].label);
      EXPECT_EQ(std::abs(u - v), 1);
      EXPECT_EQ(e.multiplicity, 1);
    }
}

TEST(Bratteli, FcFirstLevels) {
  auto g = bratteli(3, Family::FC);
  ASSERT_EQ(g.levels.size(), 3u);
  EXPECT_EQ(g.levels[0].vertices.size(), 1u);
  EXPECT_EQ(g.levels[1].vertices.size(), 1u);
  EXPECT_EQ(g.levels[2].vertices.size(), 3u);
  EXPECT_NO_THROW(path_counts(g));
}

TEST(PathCounts, Examples) {
  auto tl = bratteli(5, Family::TL);
  auto c = path_counts(tl);
  int v = tl.find(4, "0");
  ASSERT_GE(v, 0);
  EXPECT_EQ(c[4][v], 2);

  auto fc = bratteli(4, Family::FC);
  auto cf = path_counts(fc);
  int ab = fc.find(3, "ab");
  ASSERT_GE(ab, 0);
  EXPECT_EQ(cf[3][ab], 3);

  auto single = bratteli(1, Family::FC);
  EXPECT_EQ(path_counts(single), (std::vector<std::vector<long>>{{1}}));
}

TEST(PathCounts, ReportsMismatch) {
  auto g = bratteli(4, Family::TL);
  g.levels[3].vertices[0].dim += 1;
  EXPECT_THROW(path_counts(g), DomainError);
}

TEST(Dot, Export) {
  auto one = export_dot(bratteli(1, Family::TL));
  EXPECT_EQ(one, "graph bratteli_TL {\n  v0_0 [label=\"0/0/1\"];\n}\n");
  auto tl = export_dot(bratteli(3, Family::TL));
  EXPECT_NE(tl.find("v1_0 -- v2_0;"), std::string::npos);
  EXPECT_NE(tl.find("v1_0 -- v2_1;"), std::string::npos);
  auto fc = export_dot(bratteli(3, Family::FC));
  EXPECT_NE(fc.find("2/∅/1"), std::string::npos);
}
