#pragma once

// JSON forms of diagrams, elements, tangles, graphs and Gram data.

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "json.hpp"
#include "planar/algebra.hpp"
#include "planar/cells.hpp"
#include "planar/diagram.hpp"
#include "planar/error.hpp"
#include "planar/scalar.hpp"
#include "planar/tangle.hpp"
#include "planar/trace.hpp"

namespace planar {

using Json = nlohmann::json;

inline Family parse_family(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (text == "TL") return Family::TL;
  if (text == "FC") return Family::FC;
  throw ParseError("unknown family '" + text + "' (expected TL or FC)");
}

namespace detail {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace detail

inline Json to_json(const Diagram& d) { return Json{{"family", family_name(d.family())}, {"n", d.level()}, {"pairing", d.pairing()}}; }

inline Diagram diagram_from_json(const Json& j) {
  return detail::guarded("diagram", [&] {
    return Diagram(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>(), j.at("pairing").get<std::vector<int>>());
  });
}

inline Json to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", c.to_string()}});
  return Json{{"family", family_name(x.family())}, {"n", x.level()}, {"terms", terms}};
}

inline AlgebraElement element_from_json(const Json& j) {
  return detail::guarded("element", [&] {
    AlgebraElement x(parse_family(j.at("family").get<std::string>()), j.at("n").get<int>());
    for (const auto& term : j.at("terms")) x.add(diagram_from_json(term.at("diagram")), ParamScalar::parse(term.at("coeff").get<std::string>()));
    return x;
  });
}

inline Json to_json(const PointRef& p) { return Json::array({p.disk, p.position}); }

inline Json to_json(const PlanarTangle& t) {
  Json holes = Json::array();
  for (const auto& h : t.holes()) holes.push_back({{"arity", h.arity}, {"first_point", h.first_point}});
  Json strings = Json::array();
  for (const auto& [x, y] : t.strings()) strings.push_back(Json::array({to_json(x), to_json(y)}));
  return Json{{"k", t.k()}, {"holes", holes}, {"strings", strings}, {"free_loops", t.free_loops()}, {"outer_first_point", t.outer_first_point()}};
}

inline PlanarTangle tangle_from_json(const Json& j) {
  return detail::guarded("tangle", [&] {
    std::vector<Hole> holes;
    for (const auto& h : j.at("holes")) holes.push_back({h.at("arity").get<int>(), h.value("first_point", 0)});
    std::vector<std::pair<PointRef, PointRef>> strings;
    for (const auto& s : j.at("strings")) {
      if (s.size() != 2) throw ParseError("a string needs exactly two endpoints");
      auto point = [](const Json& p) {
        if (p.size() != 2) throw ParseError("a point reference is [disk, position]");
        return PointRef{p[0].get<int>(), p[1].get<int>()};
      };
      strings.emplace_back(point(s[0]), point(s[1]));
    }
    return PlanarTangle(j.at("k").get<int>(), std::move(holes), strings, j.value("free_loops", 0), j.value("outer_first_point", 0));
  });
}

inline Json to_json(const PrincipalGraph& g) {
  Json levels = Json::array();
  for (const auto& level : g.levels) {
    Json vertices = Json::array();
    for (const auto& v : level.vertices) vertices.push_back({{"label", v.label}, {"dim", v.dim}});
    Json edges = Json::array();
    for (const auto& e : level.edges) edges.push_back(Json::array({e.from, e.to, e.multiplicity}));
    levels.push_back({{"vertices", vertices}, {"edges", edges}});
  }
  return Json{{"family", family_name(g.family)}, {"levels", levels}};
}

/// Gram matrix as nested arrays of scalar text.
inline Json to_json(const GramMatrix& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(g(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace planar
