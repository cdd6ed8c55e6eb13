#pragma once

// TL_n(ab) and FC_n(a,b): linear combinations of basis diagrams with
// multiplication by stacking.

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "planar/diagram.hpp"
#include "planar/error.hpp"
#include "planar/scalar.hpp"

namespace planar {

/// Result of stacking two basis diagrams: the boundary diagram and the
/// number of closed loops removed.
struct StackResult {
  Diagram diagram;
  LoopCount loops;
};

/// Stacks `upper` on top of `lower`: the bottom row of `upper` is glued to the
/// top row of `lower` and closed loops are removed.
inline StackResult stack(const Diagram& upper, const Diagram& lower) {
  if (upper.family() != lower.family() || upper.level() != lower.level())
    throw DomainError("cannot stack " + upper.to_string() + " on " + lower.to_string());
  const auto& x = upper.pairing();
  const auto& y = lower.pairing();
  const int rows = upper.row_size();
  const int total = 2 * rows;
  std::vector<char> middle(rows, 0);
  std::vector<int> out(total);

  // Middle point u is x's bottom point u (position total-1-u) and y's top point u.
  auto from_upper = [&](int p) {
    for (;;) {
      int q = x[p];
      if (q < rows) return q;
      int u = total - 1 - q;
      middle[u] = 1;
      int r = y[u];
      if (r >= rows) return r;
      middle[r] = 1;
      p = total - 1 - r;
    }
  };
  auto from_lower = [&](int p) {
    for (;;) {
      int q = y[p];
      if (q >= rows) return q;
      middle[q] = 1;
      int r = x[total - 1 - q];
      if (r < rows) return r;
      int u = total - 1 - r;
      middle[u] = 1;
      p = u;
    }
  };
  for (int t = 0; t < rows; ++t) out[t] = from_upper(t);
  for (int p = rows; p < total; ++p) out[p] = from_lower(p);

  LoopCount loops;
  for (int start = 0; start < rows; ++start) {
    if (middle[start]) continue;
    int u = start;
    do {
      middle[u] = 1;
      int v = y[u];  // stays on the top row of `lower`
      middle[v] = 1;
      u = total - 1 - x[total - 1 - v];
    } while (u != start);
    if (upper.family() == Family::TL || fc_color(start) == Color::A) ++loops.la;
    if (upper.family() == Family::TL || fc_color(start) == Color::B) ++loops.lb;
  }
  return {Diagram(upper.family(), upper.level(), std::move(out), Diagram::Unchecked{}), loops};
}

/// Sorted basis at (family, n), computed once and shared.
inline const std::vector<Diagram>& basis(Family family, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Family, int>, std::unique_ptr<const std::vector<Diagram>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{family, n}];
  if (!slot) slot = std::make_unique<const std::vector<Diagram>>(enumerate(family, n));
  return *slot;
}

/// Structure constants of the diagram basis: the product of two basis
/// diagrams is a single basis diagram times a^la b^lb.
class StructureConstants {
 public:
  struct Entry {
    int index;
    LoopCount loops;
  };

  static constexpr std::size_t kMaxCachedDim = 512;

  StructureConstants(Family family, int n) : basis_(planar::basis(family, n)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].pairing(), static_cast<int>(i));
    const std::size_t dim = basis_.size();
    table_.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto r = stack(basis_[i], basis_[j]);
        table_.push_back({index_.at(r.diagram.pairing()), r.loops});
      }
  }

  /// Shared table for (family, n), or nullptr when the basis is too large to tabulate.
  static std::shared_ptr<const StructureConstants> get(Family family, int n) {
    if (basis(family, n).size() > kMaxCachedDim) return nullptr;
    static std::mutex mutex;
    static std::map<std::pair<Family, int>, std::shared_ptr<const StructureConstants>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{family, n}];
    if (!slot) slot = std::make_shared<const StructureConstants>(family, n);
    return slot;
  }

  int index_of(const Diagram& d) const { return index_.at(d.pairing()); }
  const Diagram& diagram(int index) const { return basis_[index]; }
  const Entry& product(int i, int j) const { return table_[static_cast<std::size_t>(i) * basis_.size() + j]; }

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
      return h;
    }
  };

  const std::vector<Diagram>& basis_;
  std::unordered_map<std::vector<int>, int, VectorHash> index_;
  std::vector<Entry> table_;
};

/// Loop scalar a^la b^lb.
inline ParamScalar loop_value(LoopCount loops) { return ParamScalar::monomial(loops.la, loops.lb); }

/// Element of TL_n or FC_n: basis diagram -> non-zero coefficient.
class AlgebraElement {
 public:
  using Terms = std::map<Diagram, ParamScalar>;

  AlgebraElement(Family family, int n) : family_(family), n_(n) {
    if (n < 0) throw DomainError("level must be non-negative");
  }
  explicit AlgebraElement(const Diagram& d, ParamScalar coeff = ParamScalar(1L))
      : family_(d.family()), n_(d.level()) {
    add(d, coeff);
  }

  static AlgebraElement identity(Family family, int n) { return AlgebraElement(Diagram::identity(family, n)); }

  Family family() const { return family_; }
  int level() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ParamScalar coefficient(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? ParamScalar() : it->second;
  }

  void add(const Diagram& d, const ParamScalar& coeff) {
    if (d.family() != family_ || d.level() != n_)
      throw DomainError("diagram " + d.to_string() + " does not belong to " + family_name(family_) + std::to_string(n_));
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    require_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    require_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }

  friend AlgebraElement operator*(const ParamScalar& s, const AlgebraElement& x) {
    AlgebraElement r(x.family_, x.n_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : x.terms_) r.add(d, s * c);
    return r;
  }

  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

  friend AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    x.require_compatible(y);
    AlgebraElement r(x.family_, x.n_);
    if (auto table = StructureConstants::get(x.family_, x.n_)) {
      std::vector<std::pair<int, const ParamScalar*>> left, right;
      for (const auto& [d, c] : x.terms_) left.emplace_back(table->index_of(d), &c);
      for (const auto& [d, c] : y.terms_) right.emplace_back(table->index_of(d), &c);
      for (const auto& [i, cx] : left)
        for (const auto& [j, cy] : right) {
          const auto& e = table->product(i, j);
          r.add(table->diagram(e.index), (*cx * *cy).scaled(mpq_class(1), e.loops.la, e.loops.lb));
        }
      return r;
    }
    for (const auto& [dx, cx] : x.terms_)
      for (const auto& [dy, cy] : y.terms_) {
        auto s = stack(dx, dy);
        r.add(s.diagram, (cx * cy).scaled(mpq_class(1), s.loops.la, s.loops.lb));
      }
    return r;
  }

  /// Reflection of every diagram; coefficients are rational in the real
  /// parameters, so they are unchanged.
  AlgebraElement involute() const {
    AlgebraElement r(family_, n_);
    for (const auto& [d, c] : terms_) r.add(d.involute(), c);
    return r;
  }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.family_ == y.family_ && x.n_ == y.n_ && x.terms_ == y.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")*" + d.to_string();
    }
    return out;
  }

 private:
  void require_compatible(const AlgebraElement& o) const {
    if (family_ != o.family_ || n_ != o.n_)
      throw DomainError(std::string("level/family mismatch: ") + family_name(family_) + std::to_string(n_) + " vs " +
                        family_name(o.family_) + std::to_string(o.n_));
  }

  Family family_;
  int n_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) { return os << x.to_string(); }

/// Embeds level n into level n+1 by adding one strand (TL) or one 2-cable
/// (FC) on the right.
inline Diagram include(const Diagram& d) {
  const int rows = d.row_size();
  const int extra = d.family() == Family::TL ? 1 : 2;
  const int total = 2 * (rows + extra);
  auto relabel = [&](int p) { return p < rows ? p : p + 2 * extra; };
  std::vector<int> out(total);
  for (int p = 0; p < 2 * rows; ++p) out[relabel(p)] = relabel(d.partner(p));
  for (int k = 0; k < extra; ++k) {
    int t = rows + k, b = rows + 2 * extra - 1 - k;
    out[t] = b;
    out[b] = t;
  }
  return Diagram(d.family(), d.level() + 1, std::move(out), Diagram::Unchecked{});
}

inline AlgebraElement include(const AlgebraElement& x) {
  AlgebraElement r(x.family(), x.level() + 1);
  for (const auto& [d, c] : x.terms()) r.add(include(d), c);
  return r;
}

/// Cables every TL strand into an (a,b) pair. In cyclic positions point p
/// becomes 2p, 2p+1 and a chord p<q becomes the nested chords (2p, 2q+1)
/// and (2p+1, 2q).
inline Diagram doubling(const Diagram& d) {
  if (d.family() != Family::TL) throw DomainError("doubling expects a TL diagram");
  std::vector<int> out(2 * d.size());
  for (int p = 0; p < d.size(); ++p) {
    int q = d.partner(p);
    if (p < q) {
      out[2 * p] = 2 * q + 1;
      out[2 * q + 1] = 2 * p;
      out[2 * p + 1] = 2 * q;
      out[2 * q] = 2 * p + 1;
    }
  }
  return Diagram(Family::FC, d.level(), std::move(out), Diagram::Unchecked{});
}

/// TL_n(ab) -> FC_n(a,b).
inline AlgebraElement doubling(const AlgebraElement& x) {
  if (x.family() != Family::TL) throw DomainError("doubling expects a TL element");
  AlgebraElement r(Family::FC, x.level());
  for (const auto& [d, c] : x.terms()) r.add(doubling(d), c);
  return r;
}

/// Jones projection e_i = (ab)^-1 E_i, 1 <= i <= n-1.
inline AlgebraElement jones_e(int i, int n, Family family) {
  return AlgebraElement(cup_cap(family, n, i), ParamScalar::delta_power(-1));
}

/// Intermediate projection p_i in FC_n: b^-1 times the b-cup-cap for odd i,
/// a^-1 times the a-cup-cap for even i.
inline AlgebraElement intermediate_p(int i, int n) {
  ParamScalar scale = (i % 2 == 1) ? ParamScalar::monomial(0, -1) : ParamScalar::monomial(-1, 0);
  return AlgebraElement(single_cup_cap(n, i), scale);
}

/// Generators used by the relation checker: e[i-1] = e_i, p[i-1] = p_i.
struct Generators {
  Family family;
  int n;
  std::vector<AlgebraElement> e;
  std::vector<AlgebraElement> p;

  static Generators standard(Family family, int n) {
    Generators g{family, n, {}, {}};
    for (int i = 1; i < n; ++i) {
      g.e.push_back(jones_e(i, n, family));
      if (family == Family::FC) g.p.push_back(intermediate_p(i, n));
    }
    return g;
  }
};

struct RelationCheck {
  std::string relation;
  bool passed = false;
  /// lhs - rhs when the relation fails.
  std::optional<AlgebraElement> witness;
};

struct RelationReport {
  Family family;
  int n;
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const RelationCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
};

/// Exact check of the Temperley-Lieb relations among the e_i and, for FC,
/// the relations involving the p_i.
inline RelationReport check_relations(const Generators& g) {
  if (g.n < 2) throw DomainError("relation check needs n >= 2");
  RelationReport report{g.family, g.n, {}};
  auto record = [&](std::string name, const AlgebraElement& lhs, const AlgebraElement& rhs) {
    AlgebraElement diff = lhs - rhs;
    RelationCheck c{std::move(name), diff.is_zero(), std::nullopt};
    if (!c.passed) c.witness = std::move(diff);
    report.checks.push_back(std::move(c));
  };
  const ParamScalar tl_ratio = ParamScalar::delta_power(-2);
  const int m = g.n - 1;
  auto e_name = [](int i) { return "e_" + std::to_string(i); };
  auto p_name = [](int i) { return "p_" + std::to_string(i); };

  for (int i = 1; i <= m; ++i) {
    const auto& ei = g.e[i - 1];
    record(e_name(i) + "^2 = " + e_name(i), ei * ei, ei);
    record(e_name(i) + "* = " + e_name(i), ei.involute(), ei);
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const auto& ei = g.e[i - 1];
      const auto& ej = g.e[j - 1];
      if (std::abs(i - j) == 1)
        record(e_name(i) + " " + e_name(j) + " " + e_name(i) + " = (ab)^-2 " + e_name(i), ei * ej * ei, tl_ratio * ei);
      else if (j > i + 1)
        record(e_name(i) + " " + e_name(j) + " = " + e_name(j) + " " + e_name(i), ei * ej, ej * ei);
    }
  if (g.family == Family::FC) {
    for (int i = 1; i <= m; ++i) {
      const auto& pi = g.p[i - 1];
      const auto& ei = g.e[i - 1];
      record(p_name(i) + "^2 = " + p_name(i), pi * pi, pi);
      record(p_name(i) + "* = " + p_name(i), pi.involute(), pi);
      record(p_name(i) + " " + e_name(i) + " = " + e_name(i), pi * ei, ei);
      record(e_name(i) + " " + p_name(i) + " = " + e_name(i), ei * pi, ei);
    }
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        record(p_name(i) + " " + p_name(j) + " = " + p_name(j) + " " + p_name(i), g.p[i - 1] * g.p[j - 1],
               g.p[j - 1] * g.p[i - 1]);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j)
        if (std::abs(i - j) >= 2)
          record(p_name(i) + " " + e_name(j) + " = " + e_name(j) + " " + p_name(i), g.p[i - 1] * g.e[j - 1],
                 g.e[j - 1] * g.p[i - 1]);
  }
  return report;
}

inline RelationReport check_relations(int n, Family family) { return check_relations(Generators::standard(family, n)); }

}  // namespace planar
