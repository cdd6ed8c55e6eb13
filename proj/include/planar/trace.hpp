#pragma once

// Markov trace, Gram form, and numeric rank/positivity analysis.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planar/algebra.hpp"
#include "planar/random.hpp"
#include "planar/scalar.hpp"

namespace planar {

/// tr(d) = a^(la-n) b^(lb-n) for the closure loops (la, lb) of d, extended
/// linearly. tr(1) = 1.
inline ParamScalar markov_trace(const Diagram& d) {
  LoopCount loops = d.closure_loops();
  return ParamScalar::monomial(loops.la - d.level(), loops.lb - d.level());
}

inline ParamScalar markov_trace(const AlgebraElement& x) {
  ParamScalar sum;
  const int n = x.level();
  for (const auto& [d, c] : x.terms()) {
    LoopCount loops = d.closure_loops();
    sum += c.scaled(mpq_class(1), loops.la - n, loops.lb - n);
  }
  return sum;
}

struct MarkovReport {
  Family family;
  int n;
  int samples = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks tr(include(x) e_n) = (ab)^-2 tr(x) and, for FC, tr(include(x) p_n)
/// = b^-2 tr(x) (odd n) or a^-2 tr(x) (even n). The first sample is the
/// identity; the rest are random.
inline MarkovReport markov_property_check(int n, Family family, int samples, Rng& rng) {
  if (n < 1) throw DomainError("Markov check needs n >= 1");
  MarkovReport report{family, n, 0, {}};
  const AlgebraElement e = jones_e(n, n + 1, family);
  std::optional<AlgebraElement> p;
  ParamScalar p_ratio;
  if (family == Family::FC) {
    p = intermediate_p(n, n + 1);
    p_ratio = n % 2 == 1 ? ParamScalar::monomial(0, -2) : ParamScalar::monomial(-2, 0);
  }
  const ParamScalar e_ratio = ParamScalar::delta_power(-2);
  for (int s = 0; s < samples; ++s) {
    AlgebraElement x = s == 0 ? AlgebraElement::identity(family, n) : random_element(family, n, rng);
    ParamScalar base = markov_trace(x);
    AlgebraElement up = include(x);
    ++report.samples;
    if (markov_trace(up * e) != e_ratio * base) report.failures.push_back("e_" + std::to_string(n) + " fails on " + x.to_string());
    if (p && markov_trace(up * *p) != p_ratio * base)
      report.failures.push_back("p_" + std::to_string(n) + " fails on " + x.to_string());
  }
  return report;
}

/// Gram matrix G[i][j] = tr(involute(b_j) b_i) over the sorted basis.
class GramMatrix {
 public:
  static constexpr std::size_t kMaxDim = 2000;

  GramMatrix(Family family, int n) : family_(family), n_(n), basis_(planar::basis(family, n)) {
    const std::size_t dim = basis_.size();
    if (dim > kMaxDim) throw DomainError("Gram matrix of dimension " + std::to_string(dim) + " exceeds guard " + std::to_string(kMaxDim));
    std::vector<Diagram> reflected;
    reflected.reserve(dim);
    for (const auto& d : basis_) reflected.push_back(d.involute());
    entries_.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        auto s = stack(reflected[j], basis_[i]);
        LoopCount closure = s.diagram.closure_loops();
        entries_[i * dim + j] = ParamScalar::monomial(s.loops.la + closure.la - n, s.loops.lb + closure.lb - n);
      }
  }

  Family family() const { return family_; }
  int level() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Diagram>& basis() const { return basis_; }
  const ParamScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }

  Eigen::MatrixXd evaluate(double a_val, double b_val) const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) m(i, j) = (*this)(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).eval(a_val, b_val);
    return m;
  }

 private:
  Family family_;
  int n_;
  const std::vector<Diagram>& basis_;
  std::vector<ParamScalar> entries_;
};

inline GramMatrix gram_matrix(int n, Family family) { return GramMatrix(family, n); }

/// Spectrum summary of an evaluated Gram matrix. Rank counts eigenvalues
/// with |lambda| > tol * max|lambda|.
struct SpectrumReport {
  double delta = 0.0;
  double det = 0.0;
  double min_eig = 0.0;
  double max_eig = 0.0;
  int rank = 0;
  int negative = 0;

  bool positive_definite(double tol) const { return min_eig > tol * std::max(std::abs(max_eig), std::abs(min_eig)); }
};

inline SpectrumReport analyze_spectrum(const Eigen::MatrixXd& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  SpectrumReport r;
  if (m.rows() == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  r.min_eig = ev.minCoeff();
  r.max_eig = ev.maxCoeff();
  double scale = ev.cwiseAbs().maxCoeff();
  r.det = 1.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    r.det *= ev(i);
    if (std::abs(ev(i)) > tol * scale) ++r.rank;
    if (ev(i) < 0.0) ++r.negative;
  }
  return r;
}

/// Spectrum of the Gram matrix at (a, b).
inline SpectrumReport gram_spectrum(const GramMatrix& g, double a_val, double b_val, double tol = 1e-9) {
  return analyze_spectrum(g.evaluate(a_val, b_val), tol);
}

/// TL Gram spectrum at loop value delta (a = b = sqrt(delta)).
inline SpectrumReport tl_spectrum(const GramMatrix& g, double delta, double tol = 1e-9) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  double root = std::sqrt(delta);
  SpectrumReport r = gram_spectrum(g, root, root, tol);
  r.delta = delta;
  return r;
}

inline std::vector<SpectrumReport> positivity_scan(int n, const std::vector<double>& deltas, double tol = 1e-9) {
  GramMatrix g(Family::TL, n);
  std::vector<SpectrumReport> out;
  out.reserve(deltas.size());
  for (double delta : deltas) out.push_back(tl_spectrum(g, delta, tol));
  return out;
}

struct Grid {
  double lo = 0.5;
  double hi = 2.0;
  int steps = 2000;
};

/// Loop values in (lo, hi) where the TL Gram matrix at level n degenerates.
///
/// Roots are bracketed on the grid by a change in the number of negative
/// eigenvalues (the sign of det flips with it) and refined by bisection to
/// 1e-8. Grid-local minima of min|lambda|/max|lambda| that do not change the
/// inertia are refined by golden-section search and kept if the refined
/// ratio is below 1e-7.
inline std::vector<double> quantization_detect(int n, const Grid& grid) {
  if (grid.steps < 1 || !(grid.lo > 0.0) || !(grid.hi > grid.lo)) throw DomainError("empty grid");
  GramMatrix g(Family::TL, n);
  constexpr double kWidth = 1e-8;

  struct Sample {
    int negative;
    double ratio;
  };
  auto sample = [&](double delta) {
    double root = std::sqrt(delta);
    Eigen::MatrixXd m = g.evaluate(root, root);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    int negative = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) negative += ev(i) < 0.0;
    double scale = ev.cwiseAbs().maxCoeff();
    return Sample{negative, ev.cwiseAbs().minCoeff() / scale};
  };

  const double step = (grid.hi - grid.lo) / grid.steps;
  std::vector<double> xs(grid.steps + 1);
  std::vector<Sample> ys;
  ys.reserve(xs.size());
  for (int k = 0; k <= grid.steps; ++k) {
    xs[k] = k == grid.steps ? grid.hi : grid.lo + k * step;
    ys.push_back(sample(xs[k]));
  }

  std::vector<double> roots;
  auto keep = [&](double r) {
    for (double existing : roots)
      if (std::abs(existing - r) < 1e-6) return;
    roots.push_back(r);
  };

  std::vector<char> bracketed(xs.size(), 0);
  for (int k = 0; k < grid.steps; ++k) {
    if (ys[k].negative == ys[k + 1].negative) continue;
    bracketed[k] = bracketed[k + 1] = 1;
    double lo = xs[k], hi = xs[k + 1];
    int lo_neg = ys[k].negative;
    while (hi - lo > kWidth) {
      double mid = 0.5 * (lo + hi);
      if (sample(mid).negative == lo_neg)
        lo = mid;
      else
        hi = mid;
    }
    keep(0.5 * (lo + hi));
  }

  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int k = 1; k < grid.steps; ++k) {
    if (bracketed[k] || ys[k].ratio > ys[k - 1].ratio || ys[k].ratio > ys[k + 1].ratio || ys[k].ratio > 1e-2) continue;
    double lo = xs[k - 1], hi = xs[k + 1];
    double c = hi - golden * (hi - lo), d = lo + golden * (hi - lo);
    double fc = sample(c).ratio, fd = sample(d).ratio;
    while (hi - lo > kWidth) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - golden * (hi - lo);
        fc = sample(c).ratio;
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + golden * (hi - lo);
        fd = sample(d).ratio;
      }
    }
    double x = 0.5 * (lo + hi);
    if (sample(x).ratio < 1e-7) keep(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace planar
