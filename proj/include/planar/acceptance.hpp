#pragma once

// The acceptance criteria as executable checks. Shared by the acceptance
// test binary and `planar selftest`.

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "planar/algebra.hpp"
#include "planar/cells.hpp"
#include "planar/oracle.hpp"
#include "planar/random.hpp"
#include "planar/tangle.hpp"
#include "planar/trace.hpp"

namespace planar::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

class Recorder {
 public:
  void fail(const std::string& why) {
    if (!failures_.empty()) failures_ += "; ";
    failures_ += why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += s;
  }
  bool ok() const { return failures_.empty(); }
  std::string detail() const { return ok() ? notes_ : failures_; }

 private:
  std::string failures_;
  std::string notes_;
};

inline CriterionResult timed(int id, std::string name, double limit_seconds, const std::function<void(Recorder&)>& body) {
  Recorder rec;
  auto start = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0.0 && seconds >= limit_seconds) {
    std::ostringstream why;
    why << "took " << seconds << " s, limit " << limit_seconds << " s";
    rec.fail(why.str());
  }
  return {id, std::move(name), rec.ok(), rec.detail(), seconds};
}

}  // namespace detail

inline CriterionResult fc_dimension_formula() {
  return detail::timed(1, "FC dimension formula n=0..6", 60.0, [](detail::Recorder& r) {
    const long expected[] = {1, 1, 3, 12, 55, 273, 1428};
    for (int n = 0; n <= 6; ++n) {
      long got = static_cast<long>(enumerate_fc(n).size());
      r.require(got == expected[n], "FC_" + std::to_string(n) + " has " + std::to_string(got) + " diagrams");
      r.require(oracle::fuss_catalan(n) == expected[n], "Fuss-Catalan formula disagrees at n=" + std::to_string(n));
    }
    r.note("sizes 1 1 3 12 55 273 1428");
  });
}

inline CriterionResult fc_small_dimensions() {
  return detail::timed(2, "FC dim P2 = 3, dim P3 = 12", 0.0, [](detail::Recorder& r) {
    r.require(enumerate_fc(2).size() == 3, "dim P2 != 3");
    r.require(enumerate_fc(3).size() == 12, "dim P3 != 12");
  });
}

inline CriterionResult tl_catalan_sizes() {
  return detail::timed(3, "TL sizes are Catalan numbers n=0..8", 30.0, [](detail::Recorder& r) {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    auto rec = oracle::catalan(8);
    for (int n = 0; n <= 8; ++n) {
      long got = static_cast<long>(enumerate_tl(n).size());
      r.require(got == expected[n], "TL_" + std::to_string(n) + " has " + std::to_string(got) + " diagrams");
      r.require(oracle::tl_matchings(n) == expected[n], "brute-force oracle disagrees at n=" + std::to_string(n));
      r.require(rec[static_cast<std::size_t>(n)] == expected[n], "Catalan recurrence disagrees at n=" + std::to_string(n));
    }
  });
}

inline CriterionResult relation_suite() {
  return detail::timed(4, "TL relations n<=6, FC relations n<=5", 0.0, [](detail::Recorder& r) {
    int checked = 0;
    for (auto [family, top] : {std::pair{Family::TL, 6}, std::pair{Family::FC, 5}})
      for (int n = 2; n <= top; ++n) {
        auto report = check_relations(n, family);
        checked += static_cast<int>(report.checks.size());
        if (auto f = report.first_failure())
          r.fail(std::string(family_name(family)) + std::to_string(n) + ": " + f->relation + " fails, witness " + f->witness->to_string());
      }
    // the named relations must actually be among those checked
    auto fc = check_relations(3, Family::FC);
    for (const char* name : {"e_1 e_2 e_1 = (ab)^-2 e_1", "p_1^2 = p_1", "p_1 e_1 = e_1", "e_1 p_1 = e_1"}) {
      bool present = false;
      for (const auto& c : fc.checks) present = present || c.relation == name;
      r.require(present, std::string("relation not checked: ") + name);
    }
    r.note(std::to_string(checked) + " relation instances");
  });
}

inline CriterionResult trace_contracts(std::uint64_t seed) {
  return detail::timed(5, "Markov trace contracts", 0.0, [seed](detail::Recorder& r) {
    Rng rng(seed);
    for (Family f : {Family::TL, Family::FC}) {
      const std::string fam = family_name(f);
      for (int n = 0; n <= 4; ++n)
        r.require(markov_trace(AlgebraElement::identity(f, n)) == ParamScalar(1L), fam + ": tr(1) != 1 at n=" + std::to_string(n));
      for (int s = 0; s < 200; ++s) {
        int n = uniform_int(rng, 1, 4);
        auto x = random_element(f, n, rng), y = random_element(f, n, rng);
        if (markov_trace(x * y) != markov_trace(y * x)) {
          r.fail(fam + ": tr(xy) != tr(yx) for x=" + x.to_string() + " y=" + y.to_string());
          break;
        }
      }
      for (int n = 1; n <= 4; ++n) {
        auto report = markov_property_check(n, f, 20, rng);
        if (!report.passed()) r.fail(fam + ": " + report.failures.front());
      }
    }
  });
}

inline CriterionResult index_quantization() {
  return detail::timed(6, "index quantization 2cos(pi/m) and positivity above 2", 120.0, [](detail::Recorder& r) {
    for (int n = 2; n <= 5; ++n) {
      auto roots = quantization_detect(n, {0.5, 2.0, 2000});
      for (int m = 3; m <= n + 1; ++m) {
        double target = 2.0 * std::cos(std::numbers::pi / m);
        double best = 1e9;
        for (double x : roots) best = std::min(best, std::abs(x - target));
        r.require(best <= 1e-6, "n=" + std::to_string(n) + ": 2cos(pi/" + std::to_string(m) + ") not found within 1e-6");
      }
      GramMatrix g(Family::TL, n);
      for (double delta : {2.0, 2.5, 3.0}) {
        auto s = tl_spectrum(g, delta, 1e-9);
        r.require(s.min_eig > 1e-9 * s.max_eig, "n=" + std::to_string(n) + ": Gram matrix not positive definite at delta=" + std::to_string(delta));
      }
    }
  });
}

inline CriterionResult semisimplicity() {
  return detail::timed(7, "sum d^2 = dim, path counts, A-type TL graph", 0.0, [](detail::Recorder& r) {
    for (auto [family, top] : {std::pair{Family::TL, 7}, std::pair{Family::FC, 5}}) {
      for (int n = 0; n <= top; ++n) {
        long sum = 0;
        for (const auto& c : half_diagrams(n, family)) sum += static_cast<long>(c.dim() * c.dim());
        long dim = static_cast<long>(enumerate(family, n).size());
        r.require(sum == dim, std::string(family_name(family)) + std::to_string(n) + ": sum d^2 = " + std::to_string(sum) + " != " + std::to_string(dim));
      }
      auto g = bratteli(top + 1, family);
      path_counts(g);
    }
    auto g = bratteli(8, Family::TL);
    for (std::size_t n = 0; n + 1 < g.levels.size(); ++n) {
      std::size_t expected_edges = 0;
      for (const auto& u : g.levels[n].vertices)
        for (const auto& v : g.levels[n + 1].vertices)
          expected_edges += std::abs(std::stoi(u.label) - std::stoi(v.label)) == 1;
      r.require(g.levels[n].edges.size() == expected_edges, "TL level " + std::to_string(n) + " misses A-type edges");
      for (const auto& e : g.levels[n].edges) {
        int u = std::stoi(g.levels[n].vertices[static_cast<std::size_t>(e.from)].label);
        int v = std::stoi(g.levels[n + 1].vertices[static_cast<std::size_t>(e.to)].label);
        r.require(std::abs(u - v) == 1 && e.multiplicity == 1, "TL edge " + std::to_string(u) + "-" + std::to_string(v) + " is not A-type");
      }
    }
  });
}

inline CriterionResult planar_operad(std::uint64_t seed) {
  return detail::timed(8, "planar operad: multiplication, naturality, rotation period", 0.0, [seed](detail::Recorder& r) {
    Rng rng(seed + 1);
    for (Family f : {Family::TL, Family::FC}) {
      const std::string fam = family_name(f);
      for (int s = 0; s < 50; ++s) {
        int n = uniform_int(rng, 1, 3);
        auto x = random_element(f, n, rng), y = random_element(f, n, rng);
        if (eval(elementary(TangleKind::Multiplication, n), {x, y}, f) != x * y) {
          r.fail(fam + ": multiplication tangle disagrees with multiply");
          break;
        }
      }
      int trees = 0;
      for (int s = 0; s < 60; ++s) {
        TangleTree tree = random_tree(uniform_int(rng, 0, 3), 3, rng, 3);
        std::vector<int> arities;
        tree.input_arities(arities);
        std::vector<AlgebraElement> inputs;
        for (int a : arities) inputs.push_back(random_element(f, a, rng, 2));
        ++trees;
        if (flatten_eval(tree, inputs, f) != recursive_eval(tree, inputs, f)) {
          r.fail(fam + ": flattened and recursive evaluation differ");
          break;
        }
      }
      r.note(fam + " " + std::to_string(trees) + " trees");
      for (int n = 1; n <= 4; ++n) {
        auto rot = elementary(TangleKind::Rotation, n);
        auto x = random_element(f, n, rng);
        auto y = x;
        for (int k = 0; k < n; ++k) y = eval(rot, {y}, f);
        r.require(y == x, fam + ": rotation does not have period " + std::to_string(n));
      }
      // on P_3 every basis diagram returns after three rotations
      auto rot3 = elementary(TangleKind::Rotation, 3);
      for (const auto& d : basis(f, 3)) {
        AlgebraElement x(d), y = x;
        for (int k = 0; k < 3; ++k) y = eval(rot3, {y}, f);
        r.require(y == x, fam + ": rotation^3 moves " + d.to_string());
      }
      // the identity has an orbit of exact length 3
      auto one = AlgebraElement::identity(f, 3);
      auto once = eval(rot3, {one}, f);
      r.require(once != one && eval(rot3, {once}, f) != one, fam + ": identity orbit under rotation is shorter than 3");
    }
  });
}

inline CriterionResult doubling_homomorphism(std::uint64_t seed) {
  return detail::timed(9, "doubling TL -> FC is multiplicative", 0.0, [seed](detail::Recorder& r) {
    Rng rng(seed + 2);
    for (int s = 0; s < 100; ++s) {
      int n = uniform_int(rng, 1, 4);
      auto x = random_element(Family::TL, n, rng), y = random_element(Family::TL, n, rng);
      if (doubling(x * y) != doubling(x) * doubling(y)) {
        r.fail("double(xy) != double(x) double(y) for x=" + x.to_string() + " y=" + y.to_string());
        break;
      }
    }
  });
}

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 1) {
  return {fc_dimension_formula(), fc_small_dimensions(), tl_catalan_sizes(), relation_suite(),
          trace_contracts(seed),  index_quantization(),  semisimplicity(),   planar_operad(seed),
          doubling_homomorphism(seed)};
}

}  // namespace planar::acceptance
