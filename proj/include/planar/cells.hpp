#pragma once

// Through-string combinatorics of the cell modules and the Bratteli diagram
// of the tower.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "planar/diagram.hpp"
#include "planar/error.hpp"

namespace planar {

/// Top half of a basis diagram: a partial non-crossing matching of one row
/// in which no unmatched ("through") point lies under an arc.
struct HalfDiagram {
  Family family;
  int n;
  /// partner[i] is the matched point, or -1 for a through point.
  std::vector<int> partner;

  int row_size() const { return static_cast<int>(partner.size()); }

  /// TL: decimal through count. FC: colour word of the through points, or
  /// "∅" for the empty word.
  std::string label() const {
    if (family == Family::TL) {
      int through = 0;
      for (int q : partner) through += q < 0;
      return std::to_string(through);
    }
    std::string word;
    for (int i = 0; i < row_size(); ++i)
      if (partner[i] < 0) word += fc_color(i) == Color::A ? 'a' : 'b';
    return word.empty() ? "∅" : word;
  }

  /// Removes the last `count` points. A removed point that was matched frees
  /// its partner, which becomes a through point.
  HalfDiagram truncated(int count) const {
    HalfDiagram h{family, n - 1, partner};
    for (int k = 0; k < count; ++k) {
      int last = h.row_size() - 1;
      if (h.partner[last] >= 0) h.partner[h.partner[last]] = -1;
      h.partner.pop_back();
    }
    return h;
  }

  friend bool operator==(const HalfDiagram&, const HalfDiagram&) = default;
};

struct CellLabel {
  std::string label;
  std::vector<HalfDiagram> halves;

  std::size_t dim() const { return halves.size(); }
};

namespace detail {

inline void extend_half(Family family, int n, std::vector<int>& partner, std::vector<int>& open, int next,
                        std::vector<HalfDiagram>& out) {
  const int rows = static_cast<int>(partner.size());
  if (next == rows) {
    if (open.empty()) out.push_back({family, n, partner});
    return;
  }
  if (rows - next < static_cast<int>(open.size())) return;
  auto color = [&](int i) { return family == Family::TL ? Color::A : fc_color(i); };
  if (open.empty()) {
    partner[next] = -1;
    extend_half(family, n, partner, open, next + 1, out);
  }
  open.push_back(next);
  extend_half(family, n, partner, open, next + 1, out);
  open.pop_back();
  if (!open.empty() && color(open.back()) == color(next)) {
    int p = open.back();
    open.pop_back();
    partner[p] = next;
    partner[next] = p;
    extend_half(family, n, partner, open, next + 1, out);
    partner[p] = partner[next] = -1;
    open.push_back(p);
  }
}

}  // namespace detail

/// Ordering for labels: longer words (more through strings) first, then
/// lexicographic.
inline bool label_before(const std::string& x, const std::string& y) {
  auto weight = [](const std::string& s) -> long {
    if (s == "∅") return 0;
    if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) return std::stol(s);
    return static_cast<long>(s.size());
  };
  long wx = weight(x), wy = weight(y);
  if (wx != wy) return wx > wy;
  return x < y;
}

/// All half-diagrams at level n grouped by label.
inline std::vector<CellLabel> half_diagrams(int n, Family family) {
  if (n < 0) throw DomainError("level must be non-negative");
  std::vector<int> partner(points_per_row(family, n), -1);
  std::vector<int> open;
  std::vector<HalfDiagram> all;
  detail::extend_half(family, n, partner, open, 0, all);
  std::map<std::string, std::vector<HalfDiagram>> grouped;
  for (auto& h : all) grouped[h.label()].push_back(std::move(h));
  std::vector<CellLabel> out;
  for (auto& [label, halves] : grouped) out.push_back({label, std::move(halves)});
  std::sort(out.begin(), out.end(), [](const CellLabel& x, const CellLabel& y) { return label_before(x.label, y.label); });
  return out;
}

struct GraphVertex {
  std::string label;
  long dim = 0;
};

struct GraphEdge {
  int from;  // vertex index at this level
  int to;    // vertex index at the next level
  int multiplicity;
};

struct GraphLevel {
  std::vector<GraphVertex> vertices;
  /// Edges to the next level.
  std::vector<GraphEdge> edges;
};

struct PrincipalGraph {
  Family family = Family::TL;
  std::vector<GraphLevel> levels;

  int find(int level, const std::string& label) const {
    const auto& vs = levels.at(static_cast<std::size_t>(level)).vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].label == label) return static_cast<int>(i);
    return -1;
  }
};

/// Levels 0 .. levels-1 of the Bratteli diagram. The multiplicity of the
/// edge u -> v is the number of half-diagrams with label v at level n+1 that
/// restrict to one fixed half-diagram with label u at level n; the
/// construction fails if that number depends on the chosen half-diagram.
inline PrincipalGraph bratteli(int levels, Family family) {
  if (levels < 1) throw DomainError("need at least one level");
  PrincipalGraph g{family, {}};
  std::vector<std::vector<CellLabel>> cells;
  for (int n = 0; n < levels; ++n) {
    cells.push_back(half_diagrams(n, family));
    GraphLevel level;
    for (const auto& c : cells.back()) level.vertices.push_back({c.label, static_cast<long>(c.dim())});
    g.levels.push_back(std::move(level));
  }
  const int removed = family == Family::TL ? 1 : 2;
  for (int n = 0; n + 1 < levels; ++n) {
    const auto& lower = cells[n];
    const auto& upper = cells[n + 1];
    for (std::size_t v = 0; v < upper.size(); ++v) {
      // preimage count per lower half-diagram, keyed by (label index, half index)
      std::map<std::pair<std::size_t, std::size_t>, int> hits;
      for (const auto& h : upper[v].halves) {
        HalfDiagram r = h.truncated(removed);
        std::size_t u = 0;
        for (; u < lower.size(); ++u)
          if (lower[u].label == r.label()) break;
        if (u == lower.size()) throw DomainError("restriction produced unknown label " + r.label());
        auto it = std::find(lower[u].halves.begin(), lower[u].halves.end(), r);
        if (it == lower[u].halves.end()) throw DomainError("restriction produced a non-basis half-diagram");
        ++hits[{u, static_cast<std::size_t>(it - lower[u].halves.begin())}];
      }
      for (std::size_t u = 0; u < lower.size(); ++u) {
        int mult = -1;
        for (std::size_t k = 0; k < lower[u].halves.size(); ++k) {
          auto it = hits.find({u, k});
          int count = it == hits.end() ? 0 : it->second;
          if (mult >= 0 && count != mult)
            throw DomainError("restriction from " + upper[v].label + " to " + lower[u].label + " is not uniform");
          mult = count;
        }
        if (mult > 0) g.levels[n].edges.push_back({static_cast<int>(u), static_cast<int>(v), mult});
      }
    }
    std::sort(g.levels[n].edges.begin(), g.levels[n].edges.end(),
              [](const GraphEdge& x, const GraphEdge& y) { return std::pair(x.from, x.to) < std::pair(y.from, y.to); });
  }
  return g;
}

/// Weighted path counts from the level-0 vertices. Throws DomainError naming
/// the first vertex whose count differs from its stored dimension.
inline std::vector<std::vector<long>> path_counts(const PrincipalGraph& g) {
  std::vector<std::vector<long>> counts;
  for (std::size_t n = 0; n < g.levels.size(); ++n) {
    const auto& level = g.levels[n];
    std::vector<long> c(level.vertices.size(), 0);
    if (n == 0) {
      std::fill(c.begin(), c.end(), 1);
    } else {
      for (const auto& e : g.levels[n - 1].edges) c.at(static_cast<std::size_t>(e.to)) += e.multiplicity * counts[n - 1].at(static_cast<std::size_t>(e.from));
    }
    for (std::size_t v = 0; v < c.size(); ++v)
      if (c[v] != level.vertices[v].dim)
        throw DomainError("path count " + std::to_string(c[v]) + " differs from dimension " + std::to_string(level.vertices[v].dim) +
                          " at level " + std::to_string(n) + " vertex " + level.vertices[v].label);
    counts.push_back(std::move(c));
  }
  return counts;
}

inline std::string export_dot(const PrincipalGraph& g) {
  std::ostringstream out;
  out << "graph bratteli_" << family_name(g.family) << " {\n";
  for (std::size_t n = 0; n < g.levels.size(); ++n)
    for (std::size_t v = 0; v < g.levels[n].vertices.size(); ++v) {
      const auto& vertex = g.levels[n].vertices[v];
      out << "  v" << n << '_' << v << " [label=\"" << n << '/' << vertex.label << '/' << vertex.dim << "\"];\n";
    }
  for (std::size_t n = 0; n < g.levels.size(); ++n)
    for (const auto& e : g.levels[n].edges)
      for (int k = 0; k < e.multiplicity; ++k) out << "  v" << n << '_' << e.from << " -- v" << n + 1 << '_' << e.to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace planar
