#pragma once

// Shaded planar tangles as combinatorial maps, their composition, and their
// action on TL / FC elements.
//
// Every disk (the outer disk and each hole) is a vertex of a map on the
// sphere. A disk of arity m carries 2m marked points at raw positions
// 0..2m-1; its first marked point `first_point` fixes the marked white
// region, which lies just before the first point. Logical position of raw r
// is (r - first_point) mod 2m, and the region between logical q and q+1 is
// white iff q is odd.
//
// Face tracing turns to the next raw position on a hole and to the previous
// raw position on the outer disk (the outer boundary is seen from inside).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planar/algebra.hpp"
#include "planar/diagram.hpp"
#include "planar/error.hpp"
#include "planar/random.hpp"

namespace planar {

inline constexpr int kOuter = -1;

struct PointRef {
  int disk = kOuter;
  int position = 0;

  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

struct Hole {
  int arity = 0;
  int first_point = 0;

  friend bool operator==(const Hole&, const Hole&) = default;
};

struct TangleDiagnostic {
  enum class Kind { Planarity, Shading };
  Kind kind;
  std::string message;
};

struct ValidationResult {
  std::optional<TangleDiagnostic> diagnostic;

  bool ok() const { return !diagnostic; }
  explicit operator bool() const { return ok(); }
};

class PlanarTangle {
 public:
  PlanarTangle() = default;

  /// Builds a tangle from its string list. Throws DomainError unless every
  /// marked point lies on exactly one string.
  PlanarTangle(int k, std::vector<Hole> holes, const std::vector<std::pair<PointRef, PointRef>>& strings,
               int free_loops = 0, int outer_first_point = 0)
      : k_(k), outer_first_(outer_first_point), free_loops_(free_loops), holes_(std::move(holes)) {
    if (k_ < 0) throw DomainError("output arity must be non-negative");
    if (free_loops_ < 0) throw DomainError("free loop count must be non-negative");
    offsets_ = {0, 2 * k_};
    for (const auto& h : holes_) {
      if (h.arity < 0) throw DomainError("hole arity must be non-negative");
      offsets_.push_back(offsets_.back() + 2 * h.arity);
    }
    check_first(outer_first_, 2 * k_, "outer disk");
    for (std::size_t j = 0; j < holes_.size(); ++j) check_first(holes_[j].first_point, 2 * holes_[j].arity, "hole " + std::to_string(j));
    link_.assign(static_cast<std::size_t>(offsets_.back()), -1);
    for (const auto& [x, y] : strings) {
      int gx = index(x), gy = index(y);
      if (gx == gy) throw DomainError("string joins a point to itself: " + describe(x));
      if (link_[gx] >= 0) throw DomainError("point on two strings: " + describe(x));
      if (link_[gy] >= 0) throw DomainError("point on two strings: " + describe(y));
      link_[gx] = gy;
      link_[gy] = gx;
    }
    for (std::size_t g = 0; g < link_.size(); ++g)
      if (link_[g] < 0) throw DomainError("point without a string: " + describe(ref(static_cast<int>(g))));
  }

  int k() const { return k_; }
  int outer_first_point() const { return outer_first_; }
  int free_loops() const { return free_loops_; }
  const std::vector<Hole>& holes() const { return holes_; }
  int hole_count() const { return static_cast<int>(holes_.size()); }

  int points_on(int disk) const { return disk == kOuter ? 2 * k_ : 2 * holes_.at(static_cast<std::size_t>(disk)).arity; }
  int first_point(int disk) const { return disk == kOuter ? outer_first_ : holes_.at(static_cast<std::size_t>(disk)).first_point; }
  int logical(PointRef p) const {
    int m = points_on(p.disk);
    return ((p.position - first_point(p.disk)) % m + m) % m;
  }
  PointRef raw(int disk, int logical_position) const {
    int m = points_on(disk);
    return {disk, (logical_position + first_point(disk)) % m};
  }

  PointRef partner(PointRef p) const { return ref(link_[static_cast<std::size_t>(index(p))]); }

  /// Strings as point pairs, each listed once with the smaller point first.
  std::vector<std::pair<PointRef, PointRef>> strings() const {
    std::vector<std::pair<PointRef, PointRef>> out;
    for (std::size_t g = 0; g < link_.size(); ++g)
      if (static_cast<int>(g) < link_[g]) out.emplace_back(ref(static_cast<int>(g)), ref(link_[g]));
    return out;
  }

  int total_points() const { return offsets_.back(); }
  int index(PointRef p) const {
    int m = p.disk == kOuter ? 2 * k_ : (p.disk >= 0 && p.disk < hole_count() ? points_on(p.disk) : -1);
    if (m < 0) throw DomainError("no disk " + std::to_string(p.disk));
    if (p.position < 0 || p.position >= m) throw DomainError("no point " + describe(p));
    return offsets_[static_cast<std::size_t>(p.disk + 1)] + p.position;
  }
  PointRef ref(int g) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), g);
    int slot = static_cast<int>(it - offsets_.begin()) - 1;
    return {slot - 1, g - offsets_[static_cast<std::size_t>(slot)]};
  }
  int link(int g) const { return link_[static_cast<std::size_t>(g)]; }

  /// Same tangle with raw positions relabelled so every first point is 0.
  PlanarTangle normalized() const {
    std::vector<Hole> holes = holes_;
    for (auto& h : holes) h.first_point = 0;
    auto to_logical = [&](PointRef p) { return PointRef{p.disk, logical(p)}; };
    std::vector<std::pair<PointRef, PointRef>> s;
    for (const auto& [x, y] : strings()) s.emplace_back(to_logical(x), to_logical(y));
    return PlanarTangle(k_, std::move(holes), s, free_loops_, 0);
  }

  /// Renumbers holes: new hole perm[j] is old hole j.
  PlanarTangle permute_holes(const std::vector<int>& perm) const {
    if (perm.size() != holes_.size()) throw DomainError("permutation size mismatch");
    std::vector<Hole> holes(holes_.size());
    for (std::size_t j = 0; j < perm.size(); ++j) holes.at(static_cast<std::size_t>(perm[j])) = holes_[j];
    auto move = [&](PointRef p) { return p.disk == kOuter ? p : PointRef{perm[static_cast<std::size_t>(p.disk)], p.position}; };
    std::vector<std::pair<PointRef, PointRef>> s;
    for (const auto& [x, y] : strings()) s.emplace_back(move(x), move(y));
    return PlanarTangle(k_, std::move(holes), s, free_loops_, outer_first_);
  }

  friend bool operator==(const PlanarTangle& x, const PlanarTangle& y) {
    return x.k_ == y.k_ && x.outer_first_ == y.outer_first_ && x.free_loops_ == y.free_loops_ && x.holes_ == y.holes_ &&
           x.link_ == y.link_;
  }

  std::string describe(PointRef p) const {
    return (p.disk == kOuter ? std::string("outer") : "hole " + std::to_string(p.disk)) + " point " + std::to_string(p.position);
  }

 private:
  static void check_first(int first, int points, const std::string& what) {
    if (points == 0 ? first != 0 : (first < 0 || first >= points))
      throw DomainError(what + ": first point " + std::to_string(first) + " out of range");
  }

  int k_ = 0;
  int outer_first_ = 0;
  int free_loops_ = 0;
  std::vector<Hole> holes_;
  std::vector<int> offsets_{0, 0};
  std::vector<int> link_;
};

/// Checks genus 0 of every connected component (faces = E - V + 2C over
/// disks with at least one point) and that every traced face has one shade.
inline ValidationResult validate(const PlanarTangle& t) {
  const int total = t.total_points();
  std::vector<int> disk_of(static_cast<std::size_t>(total));
  for (int g = 0; g < total; ++g) disk_of[static_cast<std::size_t>(g)] = t.ref(g).disk;

  auto next_on_disk = [&](int g) {
    PointRef p = t.ref(g);
    int m = t.points_on(p.disk);
    int step = p.disk == kOuter ? m - 1 : 1;
    return t.index({p.disk, (p.position + step) % m});
  };
  // Shade of the boundary arc leaving g in the tracing direction: true = white.
  auto arc_white = [&](int g) {
    PointRef p = t.ref(g);
    int m = t.points_on(p.disk);
    int q = t.logical(p);
    int lower = p.disk == kOuter ? (q + m - 1) % m : q;
    return lower % 2 == 1;
  };

  // Components over disks that carry points.
  const int disks = t.hole_count() + 1;
  std::vector<int> parent(static_cast<std::size_t>(disks));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int g = 0; g < total; ++g) {
    int a = find(disk_of[static_cast<std::size_t>(g)] + 1), b = find(disk_of[static_cast<std::size_t>(t.link(g))] + 1);
    parent[static_cast<std::size_t>(a)] = b;
  }
  std::vector<int> faces(static_cast<std::size_t>(disks), 0), edges(static_cast<std::size_t>(disks), 0), vertices(static_cast<std::size_t>(disks), 0);
  for (int d = -1; d < t.hole_count(); ++d)
    if (t.points_on(d) > 0) ++vertices[static_cast<std::size_t>(find(d + 1))];
  for (int g = 0; g < total; ++g)
    if (g < t.link(g)) ++edges[static_cast<std::size_t>(find(disk_of[static_cast<std::size_t>(g)] + 1))];

  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::optional<TangleDiagnostic> shading;
  for (int start = 0; start < total; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++faces[static_cast<std::size_t>(find(disk_of[static_cast<std::size_t>(start)] + 1))];
    int g = start;
    std::optional<bool> shade;
    do {
      seen[static_cast<std::size_t>(g)] = 1;
      int arrive = t.link(g);
      bool white = arc_white(arrive);
      if (!shade) shade = white;
      if (*shade != white && !shading)
        shading = TangleDiagnostic{TangleDiagnostic::Kind::Shading,
                                   "shading: face through " + t.describe(t.ref(start)) + " borders both shades at " + t.describe(t.ref(arrive))};
      g = next_on_disk(arrive);
    } while (g != start);
  }
  for (int c = 0; c < disks; ++c) {
    if (find(c) != c || vertices[static_cast<std::size_t>(c)] == 0) continue;
    int expected = edges[static_cast<std::size_t>(c)] - vertices[static_cast<std::size_t>(c)] + 2;
    if (faces[static_cast<std::size_t>(c)] != expected) {
      int witness = kOuter;
      for (int d = kOuter; d < t.hole_count(); ++d)
        if (find(d + 1) == c && t.points_on(d) > 0) {
          witness = d;
          break;
        }
      return {TangleDiagnostic{TangleDiagnostic::Kind::Planarity,
                               "planarity: component containing " + std::string(witness == kOuter ? "the outer disk" : "hole " + std::to_string(witness)) +
                                   " traces " + std::to_string(faces[static_cast<std::size_t>(c)]) + " faces, genus 0 needs " +
                                   std::to_string(expected)}};
    }
  }
  if (shading) return {shading};
  return {};
}

/// Pastes s into hole j (0-based) of t, matching logical positions so the
/// marked white regions agree. Hole j is replaced by the holes of s, in order.
inline PlanarTangle compose(const PlanarTangle& t, int j, const PlanarTangle& s) {
  if (j < 0 || j >= t.hole_count()) throw DomainError("compose: tangle has no hole " + std::to_string(j));
  const int m = t.holes()[static_cast<std::size_t>(j)].arity;
  if (s.k() != m)
    throw DomainError("compose: arity mismatch, hole " + std::to_string(j) + " has arity " + std::to_string(m) + " but the inserted tangle has " +
                      std::to_string(s.k()));
  for (const auto* x : {&t, &s})
    if (auto v = validate(*x); !v) throw DomainError("compose: shading mismatch or invalid input, " + v.diagnostic->message);

  // Combined numbering: t points, then s points.
  const int tn = t.total_points(), sn = t.total_points() + s.total_points();
  std::vector<int> link(static_cast<std::size_t>(sn)), glue(static_cast<std::size_t>(sn), -1);
  for (int g = 0; g < tn; ++g) link[static_cast<std::size_t>(g)] = t.link(g);
  for (int g = 0; g < s.total_points(); ++g) link[static_cast<std::size_t>(tn + g)] = tn + s.link(g);
  for (int r = 0; r < 2 * m; ++r) {
    PointRef hp{j, r};
    PointRef sp = s.raw(kOuter, t.logical(hp));
    int a = t.index(hp), b = tn + s.index(sp);
    glue[static_cast<std::size_t>(a)] = b;
    glue[static_cast<std::size_t>(b)] = a;
  }

  const int inserted = s.hole_count();
  auto result_ref = [&](int g) -> PointRef {
    if (g < tn) {
      PointRef p = t.ref(g);
      if (p.disk > j) p.disk += inserted - 1;
      return p;
    }
    PointRef p = s.ref(g - tn);
    return {j + p.disk, p.position};
  };

  std::vector<char> used(static_cast<std::size_t>(sn), 0);
  std::vector<std::pair<PointRef, PointRef>> strings;
  for (int g = 0; g < sn; ++g) {
    if (glue[static_cast<std::size_t>(g)] >= 0 || used[static_cast<std::size_t>(g)]) continue;
    int y = link[static_cast<std::size_t>(g)];
    while (glue[static_cast<std::size_t>(y)] >= 0) {
      used[static_cast<std::size_t>(y)] = used[static_cast<std::size_t>(glue[static_cast<std::size_t>(y)])] = 1;
      y = link[static_cast<std::size_t>(glue[static_cast<std::size_t>(y)])];
    }
    used[static_cast<std::size_t>(g)] = used[static_cast<std::size_t>(y)] = 1;
    strings.emplace_back(result_ref(g), result_ref(y));
  }
  int loops = 0;
  for (int g = 0; g < tn; ++g) {
    if (glue[static_cast<std::size_t>(g)] < 0 || used[static_cast<std::size_t>(g)]) continue;
    ++loops;
    int y = g;
    do {
      used[static_cast<std::size_t>(y)] = used[static_cast<std::size_t>(glue[static_cast<std::size_t>(y)])] = 1;
      y = link[static_cast<std::size_t>(glue[static_cast<std::size_t>(y)])];
    } while (y != g);
  }

  std::vector<Hole> holes;
  for (int h = 0; h < t.hole_count(); ++h) {
    if (h == j)
      holes.insert(holes.end(), s.holes().begin(), s.holes().end());
    else
      holes.push_back(t.holes()[static_cast<std::size_t>(h)]);
  }
  return PlanarTangle(t.k(), std::move(holes), strings, t.free_loops() + s.free_loops() + loops, t.outer_first_point());
}

namespace detail {

// One basis diagram per hole; returns the output diagram and loop counts.
inline StackResult eval_basis(const PlanarTangle& t, const std::vector<const Diagram*>& inputs, Family family) {
  const int cable = family == Family::TL ? 1 : 2;
  const int disks = t.hole_count() + 1;
  std::vector<int> offset(static_cast<std::size_t>(disks + 1), 0);
  for (int d = -1; d < t.hole_count(); ++d) offset[static_cast<std::size_t>(d + 2)] = offset[static_cast<std::size_t>(d + 1)] + cable * t.points_on(d);
  const int total = offset.back();
  const int outer_points = cable * t.points_on(kOuter);
  auto at = [&](int disk, int local) { return offset[static_cast<std::size_t>(disk + 1)] + local; };

  // Strings, expanded to 2-cables for FC: the a-strand borders the white side.
  std::vector<int> link(static_cast<std::size_t>(total), -1);
  auto join = [&](int x, int y) {
    link[static_cast<std::size_t>(x)] = y;
    link[static_cast<std::size_t>(y)] = x;
  };
  for (const auto& [x, y] : t.strings()) {
    int qx = t.logical(x), qy = t.logical(y);
    if (cable == 1) {
      join(at(x.disk, qx), at(y.disk, qy));
    } else {
      int ax = qx % 2 == 0 ? 2 * qx : 2 * qx + 1, ay = qy % 2 == 0 ? 2 * qy : 2 * qy + 1;
      int bx = ax ^ 1, by = ay ^ 1;
      join(at(x.disk, ax), at(y.disk, ay));
      join(at(x.disk, bx), at(y.disk, by));
    }
  }
  std::vector<int> inner(static_cast<std::size_t>(total), -1);
  for (int h = 0; h < t.hole_count(); ++h) {
    const Diagram& d = *inputs[static_cast<std::size_t>(h)];
    for (int i = 0; i < d.size(); ++i) inner[static_cast<std::size_t>(at(h, i))] = at(h, d.partner(i));
  }

  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::vector<int> out(static_cast<std::size_t>(outer_points));
  for (int o = 0; o < outer_points; ++o) {
    int y = link[static_cast<std::size_t>(o)];
    while (y >= outer_points) {
      seen[static_cast<std::size_t>(y)] = 1;
      y = inner[static_cast<std::size_t>(y)];
      seen[static_cast<std::size_t>(y)] = 1;
      y = link[static_cast<std::size_t>(y)];
    }
    out[static_cast<std::size_t>(o)] = y;
  }
  LoopCount loops{t.free_loops(), t.free_loops()};
  for (int h = 0; h < t.hole_count(); ++h)
    for (int i = 0; i < cable * t.points_on(h); ++i) {
      int start = at(h, i);
      if (seen[static_cast<std::size_t>(start)]) continue;
      int y = start;
      do {
        seen[static_cast<std::size_t>(y)] = 1;
        y = inner[static_cast<std::size_t>(y)];
        seen[static_cast<std::size_t>(y)] = 1;
        y = link[static_cast<std::size_t>(y)];
      } while (y != start);
      if (family == Family::TL || fc_color(i) == Color::A) ++loops.la;
      if (family == Family::TL || fc_color(i) == Color::B) ++loops.lb;
    }
  return {Diagram(family, t.k(), std::move(out)), loops};
}

}  // namespace detail

/// Z(t)(inputs): multilinear in the inputs, one per hole, at the hole's arity.
inline AlgebraElement eval(const PlanarTangle& t, const std::vector<AlgebraElement>& inputs, Family family) {
  if (static_cast<int>(inputs.size()) != t.hole_count())
    throw DomainError("eval: " + std::to_string(t.hole_count()) + " holes but " + std::to_string(inputs.size()) + " inputs");
  for (int h = 0; h < t.hole_count(); ++h) {
    const auto& x = inputs[static_cast<std::size_t>(h)];
    if (x.family() != family) throw DomainError("eval: input " + std::to_string(h) + " has the wrong family");
    if (x.level() != t.holes()[static_cast<std::size_t>(h)].arity)
      throw DomainError("eval: input " + std::to_string(h) + " has level " + std::to_string(x.level()) + ", hole arity is " +
                        std::to_string(t.holes()[static_cast<std::size_t>(h)].arity));
  }
  if (auto v = validate(t); !v) throw DomainError("eval: " + v.diagnostic->message);

  AlgebraElement result(family, t.k());
  std::vector<AlgebraElement::Terms::const_iterator> cursor;
  for (const auto& x : inputs) {
    if (x.is_zero()) return result;
    cursor.push_back(x.terms().begin());
  }
  std::vector<const Diagram*> diagrams(inputs.size());
  for (;;) {
    ParamScalar coeff(1L);
    for (std::size_t h = 0; h < inputs.size(); ++h) {
      diagrams[h] = &cursor[h]->first;
      coeff *= cursor[h]->second;
    }
    auto r = detail::eval_basis(t, diagrams, family);
    result.add(r.diagram, coeff.scaled(mpq_class(1), r.loops.la, r.loops.lb));
    std::size_t h = 0;
    for (; h < inputs.size(); ++h) {
      if (++cursor[h] != inputs[h].terms().end()) break;
      cursor[h] = inputs[h].terms().begin();
    }
    if (h == inputs.size()) break;
  }
  return result;
}

enum class TangleKind { Multiplication, Inclusion, ConditionalExpectation, Rotation, JonesProjection, Unit };

/// Standard tangles at level n. Hole positions follow the rectangle
/// convention of the diagram basis (top left to right, bottom right to left).
inline PlanarTangle elementary(TangleKind kind, int n) {
  const int min_n = kind == TangleKind::JonesProjection ? 2 : 1;
  if (n < min_n) throw DomainError("elementary tangle needs n >= " + std::to_string(min_n));
  std::vector<std::pair<PointRef, PointRef>> s;
  auto add = [&](PointRef x, PointRef y) { s.emplace_back(x, y); };
  switch (kind) {
    case TangleKind::Unit:
      for (int t = 0; t < n; ++t) add({kOuter, t}, {kOuter, 2 * n - 1 - t});
      return PlanarTangle(n, {}, s);
    case TangleKind::JonesProjection:
      for (int t = 0; t < n - 2; ++t) add({kOuter, t}, {kOuter, 2 * n - 1 - t});
      add({kOuter, n - 2}, {kOuter, n - 1});
      add({kOuter, n}, {kOuter, n + 1});
      return PlanarTangle(n, {}, s);
    case TangleKind::Multiplication:
      for (int t = 0; t < n; ++t) {
        add({kOuter, t}, {0, t});
        add({0, 2 * n - 1 - t}, {1, t});
        add({1, n + t}, {kOuter, n + t});
      }
      return PlanarTangle(n, {{n, 0}, {n, 0}}, s);
    case TangleKind::Inclusion:
      for (int t = 0; t < n; ++t) {
        add({kOuter, t}, {0, t});
        add({0, 2 * n - 1 - t}, {kOuter, 2 * n + 1 - t});
      }
      add({kOuter, n}, {kOuter, n + 1});
      return PlanarTangle(n + 1, {{n, 0}}, s);
    case TangleKind::ConditionalExpectation:
      for (int t = 0; t < n - 1; ++t) {
        add({kOuter, t}, {0, t});
        add({0, 2 * n - 1 - t}, {kOuter, 2 * n - 3 - t});
      }
      add({0, n - 1}, {0, n});
      return PlanarTangle(n - 1, {{n, 0}}, s);
    case TangleKind::Rotation:
      for (int i = 0; i < 2 * n; ++i) add({kOuter, i}, {0, (i + 2) % (2 * n)});
      return PlanarTangle(n, {{n, 0}}, s);
  }
  throw DomainError("unknown tangle kind");
}

/// Composition tree: a node is a tangle whose holes are filled by subtrees
/// or left open as inputs (children[j] without a tangle).
struct TangleTree {
  std::optional<PlanarTangle> tangle;
  std::vector<TangleTree> children;

  static TangleTree input() { return {}; }
  static TangleTree node(PlanarTangle t, std::vector<TangleTree> children) {
    if (static_cast<int>(children.size()) != t.hole_count()) throw DomainError("tree node needs one child per hole");
    return {std::move(t), std::move(children)};
  }
  static TangleTree node(PlanarTangle t) {
    std::vector<TangleTree> leaves(static_cast<std::size_t>(t.hole_count()));
    return node(std::move(t), std::move(leaves));
  }

  bool is_input() const { return !tangle; }

  int input_count() const {
    if (is_input()) return 1;
    int c = 0;
    for (const auto& ch : children) c += ch.input_count();
    return c;
  }

  /// Arity each input must have, in depth-first order.
  void input_arities(std::vector<int>& out) const {
    for (std::size_t j = 0; j < children.size(); ++j) {
      if (children[j].is_input())
        out.push_back(tangle->holes()[j].arity);
      else
        children[j].input_arities(out);
    }
  }
};

/// Composes the whole tree into one tangle. Holes of the result are the
/// open inputs in depth-first order.
inline PlanarTangle flatten(const TangleTree& tree) {
  if (tree.is_input()) throw DomainError("cannot flatten a bare input");
  PlanarTangle t = *tree.tangle;
  for (int j = t.hole_count() - 1; j >= 0; --j) {
    const auto& child = tree.children[static_cast<std::size_t>(j)];
    if (!child.is_input()) t = compose(t, j, flatten(child));
  }
  return t;
}

namespace detail {

inline AlgebraElement eval_tree(const TangleTree& tree, const std::vector<AlgebraElement>& inputs, std::size_t& next, Family family) {
  std::vector<AlgebraElement> args;
  for (const auto& child : tree.children) {
    if (child.is_input()) {
      if (next >= inputs.size()) throw DomainError("not enough inputs for the composition tree");
      args.push_back(inputs[next++]);
    } else {
      args.push_back(eval_tree(child, inputs, next, family));
    }
  }
  return eval(*tree.tangle, args, family);
}

}  // namespace detail

/// Evaluates node by node, bottom-up.
inline AlgebraElement recursive_eval(const TangleTree& tree, const std::vector<AlgebraElement>& inputs, Family family) {
  if (tree.is_input()) throw DomainError("cannot evaluate a bare input");
  std::size_t next = 0;
  AlgebraElement r = detail::eval_tree(tree, inputs, next, family);
  if (next != inputs.size()) throw DomainError("too many inputs for the composition tree");
  return r;
}

/// Flattens the tree with compose, then evaluates once.
inline AlgebraElement flatten_eval(const TangleTree& tree, const std::vector<AlgebraElement>& inputs, Family family) {
  return eval(flatten(tree), inputs, family);
}

/// Random composition tree with output arity k, hole arities <= max_arity
/// and depth <= depth.
inline TangleTree random_tree(int k, int depth, Rng& rng, int max_arity = 3) {
  std::vector<std::pair<TangleKind, int>> options;
  if (k >= 1) {
    options.push_back({TangleKind::Multiplication, k});
    options.push_back({TangleKind::Rotation, k});
    options.push_back({TangleKind::Unit, k});
  }
  if (k >= 2) {
    options.push_back({TangleKind::JonesProjection, k});
    options.push_back({TangleKind::Inclusion, k - 1});
  }
  if (k + 1 <= max_arity) options.push_back({TangleKind::ConditionalExpectation, k + 1});
  if (options.empty()) throw DomainError("no elementary tangle has output arity " + std::to_string(k));
  auto [kind, n] = options[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(options.size()) - 1))];
  PlanarTangle t = elementary(kind, n);
  std::vector<TangleTree> children;
  for (const auto& h : t.holes()) {
    if (depth > 1 && uniform_int(rng, 0, 1) == 1)
      children.push_back(random_tree(h.arity, depth - 1, rng, max_arity));
    else
      children.push_back(TangleTree::input());
  }
  return TangleTree::node(std::move(t), std::move(children));
}

}  // namespace planar
