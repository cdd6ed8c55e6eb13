#pragma once

// Reference computations that share no code with the library's algorithms.
// Used by the test suites and by `selftest` only.

#include <functional>
#include <gmpxx.h>
#include <vector>

namespace planar::oracle {

/// Counts (and optionally collects) non-crossing perfect matchings of
/// `points` cyclic points by pairing the smallest free point with every
/// admissible partner and discarding a pair as soon as it crosses an
/// existing chord. `compatible(p, q)` restricts which points may pair.
class MatchingFilter {
 public:
  MatchingFilter(int points, std::function<bool(int, int)> compatible, bool collect)
      : points_(points), compatible_(std::move(compatible)), collect_(collect), partner_(static_cast<std::size_t>(points), -1) {}

  long run() {
    count_ = 0;
    found_.clear();
    if (points_ % 2 == 0) recurse();
    return count_;
  }

  const std::vector<std::vector<int>>& matchings() const { return found_; }

 private:
  bool crosses(int p, int q) const {
    for (int r = 0; r < points_; ++r) {
      int s = partner_[static_cast<std::size_t>(r)];
      if (s < 0 || s < r) continue;
      bool r_in = p < r && r < q, s_in = p < s && s < q;
      if (r_in != s_in) return true;
    }
    return false;
  }

  void recurse() {
    int p = 0;
    while (p < points_ && partner_[static_cast<std::size_t>(p)] >= 0) ++p;
    if (p == points_) {
      ++count_;
      if (collect_) found_.push_back(partner_);
      return;
    }
    for (int q = p + 1; q < points_; ++q) {
      if (partner_[static_cast<std::size_t>(q)] >= 0 || !compatible_(p, q) || crosses(p, q)) continue;
      partner_[static_cast<std::size_t>(p)] = q;
      partner_[static_cast<std::size_t>(q)] = p;
      recurse();
      partner_[static_cast<std::size_t>(p)] = partner_[static_cast<std::size_t>(q)] = -1;
    }
  }

  int points_;
  std::function<bool(int, int)> compatible_;
  bool collect_;
  std::vector<int> partner_;
  long count_ = 0;
  std::vector<std::vector<int>> found_;
};

/// Non-crossing perfect matchings of 2n points.
inline long tl_matchings(int n, std::vector<std::vector<int>>* out = nullptr) {
  MatchingFilter f(2 * n, [](int, int) { return true; }, out != nullptr);
  long c = f.run();
  if (out) *out = f.matchings();
  return c;
}

/// Colour-respecting non-crossing perfect matchings of 4n points coloured by
/// the cyclic word a,b,b,a.
inline long fc_matchings(int n, std::vector<std::vector<int>>* out = nullptr) {
  auto colour = [](int p) { return (p % 4 == 0 || p % 4 == 3) ? 0 : 1; };
  MatchingFilter f(4 * n, [&](int p, int q) { return colour(p) == colour(q); }, out != nullptr);
  long c = f.run();
  if (out) *out = f.matchings();
  return c;
}

/// Catalan numbers by the recurrence C_{k+1} = sum_i C_i C_{k-i}.
inline std::vector<long> catalan(int up_to) {
  std::vector<long> c{1};
  for (int k = 0; k < up_to; ++k) {
    long next = 0;
    for (int i = 0; i <= k; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
    c.push_back(next);
  }
  return c;
}

/// (1/(2n+1)) * binomial(3n, n).
inline long fuss_catalan(int n) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(3 * n), static_cast<unsigned long>(n));
  mpz_class q = binom / (2 * n + 1);
  return q.get_si();
}

}  // namespace planar::oracle
