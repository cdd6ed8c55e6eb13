#pragma once

// Basis diagrams of TL_n and FC_n: non-crossing perfect matchings of the
// boundary points of a rectangle, read as one cyclic traversal.
//
// Position convention (points per row N = n for TL, 2n for FC):
//   0 .. N-1     top row, left to right
//   N .. 2N-1    bottom row, right to left
// so bottom point u (left to right) sits at position 2N-1-u.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "planar/error.hpp"

namespace planar {

enum class Family { TL, FC };

inline const char* family_name(Family f) { return f == Family::TL ? "TL" : "FC"; }

enum class Color { A, B };

/// FC colour of a cyclic boundary position. The word a,b,b,a repeats around
/// the whole circle, which matches the top-row rule (t mod 4 in {0,3} is a)
/// and the same rule on the bottom row read left to right.
constexpr Color fc_color(int position) {
  int r = position % 4;
  return (r == 0 || r == 3) ? Color::A : Color::B;
}

/// Number of boundary points per row at level n.
constexpr int points_per_row(Family f, int n) { return f == Family::TL ? n : 2 * n; }

/// Closed loops removed from a diagram, by colour. A TL loop counts once in
/// each colour (the loop value is ab).
struct LoopCount {
  int la = 0;
  int lb = 0;

  friend bool operator==(const LoopCount&, const LoopCount&) = default;
};

class Diagram {
 public:
  Diagram() = default;

  /// Checked constructor; throws DomainError if the pairing is not a valid
  /// basis diagram for the family.
  Diagram(Family family, int n, std::vector<int> pairing)
      : family_(family), n_(n), pairing_(std::move(pairing)) {
    if (auto why = defect(); !why.empty()) throw DomainError("invalid " + std::string(family_name(family_)) + " diagram: " + why);
  }

  static Diagram identity(Family family, int n) {
    int total = 2 * points_per_row(family, n);
    std::vector<int> p(total);
    for (int i = 0; i < total; ++i) p[i] = total - 1 - i;
    return Diagram(family, n, std::move(p), Unchecked{});
  }

  Family family() const { return family_; }
  int level() const { return n_; }
  int row_size() const { return points_per_row(family_, n_); }
  int size() const { return static_cast<int>(pairing_.size()); }
  const std::vector<int>& pairing() const { return pairing_; }
  int partner(int position) const { return pairing_[position]; }

  int top(int t) const { return t; }
  int bottom(int u) const { return size() - 1 - u; }

  /// Vertical reflection: top point t is exchanged with bottom point t.
  Diagram involute() const {
    int total = size();
    std::vector<int> p(total);
    for (int i = 0; i < total; ++i) p[total - 1 - i] = total - 1 - pairing_[i];
    return Diagram(family_, n_, std::move(p), Unchecked{});
  }

  /// Loops of the parallel closure (top t joined to bottom t).
  LoopCount closure_loops() const {
    int total = size();
    std::vector<char> seen(total, 0);
    LoopCount count;
    for (int start = 0; start < total; ++start) {
      if (seen[start]) continue;
      int p = start;
      do {
        seen[p] = 1;
        int q = pairing_[p];
        seen[q] = 1;
        p = total - 1 - q;
      } while (p != start);
      if (family_ == Family::TL || fc_color(start) == Color::A) ++count.la;
      if (family_ == Family::TL || fc_color(start) == Color::B) ++count.lb;
    }
    return count;
  }

  /// Number of strands joining the top row to the bottom row.
  int through_strands() const {
    int rows = row_size(), count = 0;
    for (int t = 0; t < rows; ++t) count += pairing_[t] >= rows;
    return count;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << family_name(family_) << n_ << '[';
    for (int i = 0; i < size(); ++i) out << (i ? "," : "") << pairing_[i];
    out << ']';
    return out.str();
  }

  /// Empty string when valid, otherwise a description of the first defect.
  std::string defect() const {
    if (n_ < 0) return "negative level";
    int total = 2 * row_size();
    if (static_cast<int>(pairing_.size()) != total)
      return "expected " + std::to_string(total) + " positions, got " + std::to_string(pairing_.size());
    for (int p = 0; p < total; ++p) {
      int q = pairing_[p];
      if (q < 0 || q >= total) return "position " + std::to_string(p) + " paired out of range";
      if (q == p) return "position " + std::to_string(p) + " is a fixed point";
      if (pairing_[q] != p) return "pairing is not an involution at " + std::to_string(p);
      if (family_ == Family::FC && fc_color(p) != fc_color(q))
        return "positions " + std::to_string(p) + " and " + std::to_string(q) + " have different colours";
    }
    // Chords p<q and r<s cross iff exactly one of r, s lies strictly inside (p, q).
    for (int p = 0; p < total; ++p) {
      int q = pairing_[p];
      if (q < p) continue;
      for (int r = p + 1; r < q; ++r)
        if (pairing_[r] < p || pairing_[r] > q)
          return "chords at " + std::to_string(p) + " and " + std::to_string(r) + " cross";
    }
    return {};
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& x, const Diagram& y) {
    if (auto c = x.family_ <=> y.family_; c != 0) return c;
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.pairing_ <=> y.pairing_;
  }

  struct Unchecked {};
  Diagram(Family family, int n, std::vector<int> pairing, Unchecked)
      : family_(family), n_(n), pairing_(std::move(pairing)) {}

 private:
  Family family_ = Family::TL;
  int n_ = 0;
  std::vector<int> pairing_;
};

namespace detail {

// Fills the intervals on the stack with non-crossing (colour-respecting)
// chords, emitting each complete pairing.
template <typename Emit>
void fill_intervals(Family family, std::vector<int>& pairing, std::vector<std::pair<int, int>>& stack, Emit& emit) {
  while (!stack.empty() && stack.back().first >= stack.back().second) stack.pop_back();
  if (stack.empty()) {
    emit(pairing);
    return;
  }
  auto [lo, hi] = stack.back();
  stack.pop_back();
  for (int j = lo + 1; j < hi; j += 2) {
    if (family == Family::FC && fc_color(lo) != fc_color(j)) continue;
    pairing[lo] = j;
    pairing[j] = lo;
    auto saved = stack.size();
    stack.emplace_back(j + 1, hi);
    stack.emplace_back(lo + 1, j);
    fill_intervals(family, pairing, stack, emit);
    stack.resize(saved);
  }
  stack.emplace_back(lo, hi);
}

}  // namespace detail

/// All basis diagrams at level n, sorted lexicographically by pairing array.
inline std::vector<Diagram> enumerate(Family family, int n) {
  if (n < 0) throw DomainError("level must be non-negative");
  int total = 2 * points_per_row(family, n);
  std::vector<int> pairing(total, -1);
  std::vector<std::pair<int, int>> stack{{0, total}};
  std::vector<Diagram> out;
  auto emit = [&](const std::vector<int>& p) { out.emplace_back(family, n, p, Diagram::Unchecked{}); };
  detail::fill_intervals(family, pairing, stack, emit);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Diagram> enumerate_tl(int n) { return enumerate(Family::TL, n); }
inline std::vector<Diagram> enumerate_fc(int n) { return enumerate(Family::FC, n); }

/// Unnormalized cup-cap diagram joining strands i and i+1 (1-based) on top
/// and on bottom, all other strands through. For FC the strands are 2-cables.
inline Diagram cup_cap(Family family, int n, int i) {
  if (i < 1 || i >= n) throw DomainError("cup-cap index " + std::to_string(i) + " out of range for level " + std::to_string(n));
  Diagram id = Diagram::identity(family, n);
  std::vector<int> p = id.pairing();
  int total = static_cast<int>(p.size());
  auto join = [&](int x, int y) {
    p[x] = y;
    p[y] = x;
  };
  if (family == Family::TL) {
    join(i - 1, i);
    join(total - i, total - 1 - i);
  } else {
    int l = 2 * (i - 1);  // first point of cable i
    join(l, l + 3);
    join(l + 1, l + 2);
    join(total - 1 - l, total - 4 - l);
    join(total - 2 - l, total - 3 - l);
  }
  return Diagram(family, n, std::move(p), Diagram::Unchecked{});
}

/// FC diagram cupping the two adjacent single-colour points between cables
/// i and i+1 on top and on bottom (b-points for odd i, a-points for even i).
inline Diagram single_cup_cap(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("intermediate index " + std::to_string(i) + " out of range for level " + std::to_string(n));
  Diagram id = Diagram::identity(Family::FC, n);
  std::vector<int> p = id.pairing();
  int total = static_cast<int>(p.size());
  int l = 2 * i - 1;
  p[l] = l + 1;
  p[l + 1] = l;
  p[total - 1 - l] = total - 2 - l;
  p[total - 2 - l] = total - 1 - l;
  return Diagram(Family::FC, n, std::move(p), Diagram::Unchecked{});
}

}  // namespace planar
