#pragma once

// Command-line front end. Exit codes: 0 success, 1 computation-domain
// error (or a failed check), 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "planar/acceptance.hpp"
#include "planar/json_io.hpp"

namespace planar::cli {

struct CommandConfig {
  std::string command;
  std::string family = "tl";
  int n = 2;
  std::optional<double> a, b;
  std::vector<double> delta;
  double tol = 1e-9;
  std::vector<double> grid{0.5, 2.0, 2000};
  std::string format;
  std::uint64_t seed = 1;
  int samples = 50;
  std::string out;
  std::vector<std::string> inputs;
};

namespace detail {

inline std::string fixed8(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", x);
  return buf;
}

inline Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_format(const CommandConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError("--format " + c.format + " is not supported by " + c.command + " (use " + list + ")");
}

/// (a, b) evaluation point from --a/--b, or from --delta as a = b = sqrt(delta).
inline std::optional<std::pair<double, double>> evaluation_point(const CommandConfig& c) {
  if (c.a || c.b) {
    if (!c.a || !c.b) throw UsageError("--a and --b must be given together");
    return std::pair{*c.a, *c.b};
  }
  if (!c.delta.empty()) {
    if (!(c.delta.front() > 0.0)) throw DomainError("delta must be positive");
    double r = std::sqrt(c.delta.front());
    return std::pair{r, r};
  }
  return std::nullopt;
}

inline void run_command(const CommandConfig& c, std::ostream& out) {
  const std::string& cmd = c.command;
  Family family = parse_family(c.family);

  if (cmd == "dim") {
    require_format(c, {"text", "json"});
    out << enumerate(family, c.n).size() << '\n';
  } else if (cmd == "basis") {
    require_format(c, {"json", "text"});
    const auto& b = basis(family, c.n);
    if (c.format == "json") {
      Json arr = Json::array();
      for (const auto& d : b) arr.push_back(to_json(d));
      out << arr.dump() << '\n';
    } else {
      for (const auto& d : b) out << d.to_string() << '\n';
    }
  } else if (cmd == "mul") {
    require_format(c, {"json", "text"});
    if (c.inputs.size() < 2) throw UsageError("mul needs at least two element files");
    AlgebraElement product = element_from_json(read_json(c.inputs[0]));
    for (std::size_t i = 1; i < c.inputs.size(); ++i) product = product * element_from_json(read_json(c.inputs[i]));
    out << (c.format == "json" ? to_json(product).dump() : product.to_string()) << '\n';
  } else if (cmd == "relations") {
    require_format(c, {"text", "json"});
    auto report = check_relations(c.n, family);
    if (c.format == "json") {
      Json arr = Json::array();
      for (const auto& r : report.checks) {
        Json j{{"relation", r.relation}, {"passed", r.passed}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        arr.push_back(j);
      }
      out << arr.dump() << '\n';
    } else {
      for (const auto& r : report.checks) {
        out << (r.passed ? "PASS " : "FAIL ") << r.relation;
        if (r.witness) out << "  witness: " << r.witness->to_string();
        out << '\n';
      }
      out << (report.all_passed() ? "all relations hold" : "some relations fail") << '\n';
    }
    if (!report.all_passed()) throw DomainError("relation check failed");
  } else if (cmd == "trace") {
    require_format(c, {"text", "json"});
    if (c.inputs.empty()) {
      Rng rng(c.seed);
      auto report = markov_property_check(c.n, family, c.samples, rng);
      if (c.format == "json")
        out << Json{{"family", family_name(family)}, {"n", c.n}, {"samples", report.samples}, {"failures", report.failures}}.dump() << '\n';
      else
        out << "Markov property at " << family_name(family) << c.n << ": " << report.samples << " samples, " << report.failures.size()
            << " failures\n";
      if (!report.passed()) throw DomainError("Markov property fails: " + report.failures.front());
      return;
    }
    AlgebraElement x = element_from_json(read_json(c.inputs[0]));
    ParamScalar tr = markov_trace(x);
    auto point = evaluation_point(c);
    if (c.format == "json") {
      Json j{{"trace", tr.to_string()}};
      if (point) j["value"] = std::stod(fixed8(tr.eval(point->first, point->second)));
      out << j.dump() << '\n';
    } else {
      out << tr.to_string() << '\n';
      if (point) out << fixed8(tr.eval(point->first, point->second)) << '\n';
    }
  } else if (cmd == "gram") {
    require_format(c, {"json", "csv"});
    GramMatrix g(family, c.n);
    if (c.format == "json") {
      out << to_json(g).dump() << '\n';
    } else {
      auto point = evaluation_point(c);
      if (!point) throw UsageError("gram --format csv needs --a and --b or --delta");
      Eigen::MatrixXd m = g.evaluate(point->first, point->second);
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << fixed8(m(i, j));
        out << '\n';
      }
    }
  } else if (cmd == "scan") {
    require_format(c, {"json", "csv"});
    if (family != Family::TL) throw DomainError("scan is defined for the TL family");
    if (c.delta.empty()) throw UsageError("scan needs --delta values");
    auto reports = positivity_scan(c.n, c.delta, c.tol);
    if (c.format == "csv") out << "delta,det,min_eig,rank\n";
    if (c.format == "json") out << '[';
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      if (c.format == "json")
        out << (i ? "," : "") << "{\"delta\":" << fixed8(r.delta) << ",\"det\":" << fixed8(r.det) << ",\"min_eig\":" << fixed8(r.min_eig)
            << ",\"rank\":" << r.rank << '}';
      else
        out << fixed8(r.delta) << ',' << fixed8(r.det) << ',' << fixed8(r.min_eig) << ',' << r.rank << '\n';
    }
    if (c.format == "json") out << "]\n";
  } else if (cmd == "quantize") {
    require_format(c, {"text", "json"});
    if (c.grid.size() != 3) throw UsageError("--grid takes lo hi steps");
    double steps = c.grid[2];
    if (steps != std::floor(steps)) throw UsageError("--grid steps must be an integer");
    auto roots = quantization_detect(c.n, {c.grid[0], c.grid[1], static_cast<int>(steps)});
    if (c.format == "json") {
      out << '[';
      for (std::size_t i = 0; i < roots.size(); ++i) out << (i ? "," : "") << fixed8(roots[i]);
      out << "]\n";
    } else {
      for (double r : roots) out << fixed8(r) << '\n';
    }
  } else if (cmd == "bratteli") {
    require_format(c, {"json", "dot"});
    auto g = bratteli(c.n + 1, family);
    path_counts(g);
    out << (c.format == "json" ? to_json(g).dump() + "\n" : export_dot(g));
  } else if (cmd == "tangle-eval") {
    require_format(c, {"json", "text"});
    if (c.inputs.empty()) throw UsageError("tangle-eval needs a tangle file");
    PlanarTangle t = tangle_from_json(read_json(c.inputs[0]));
    std::vector<AlgebraElement> args;
    for (std::size_t i = 1; i < c.inputs.size(); ++i) {
      args.push_back(element_from_json(read_json(c.inputs[i])));
      family = args.back().family();
    }
    auto result = eval(t, args, family);
    out << (c.format == "json" ? to_json(result).dump() : result.to_string()) << '\n';
  } else if (cmd == "selftest") {
    require_format(c, {"text", "json"});
    auto results = acceptance::run_all(c.seed);
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      if (c.format == "json")
        arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      else
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    }
    if (c.format == "json") out << arr.dump() << '\n';
    if (!all) throw DomainError("acceptance suite failed");
  }
}

}  // namespace detail

inline const char* default_format(const std::string& command) {
  if (command == "basis" || command == "mul" || command == "gram" || command == "scan" || command == "bratteli" || command == "tangle-eval")
    return "json";
  return "text";
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Temperley-Lieb / Fuss-Catalan diagram algebra and planar tangle calculator", "planar"};
  app.require_subcommand(1);
  CommandConfig config;

  struct Command {
    const char* name;
    const char* help;
    bool takes_files;
  };
  const Command commands[] = {
      {"dim", "number of basis diagrams", false},
      {"basis", "list basis diagrams", false},
      {"mul", "multiply elements given as JSON files", true},
      {"relations", "check the generator relations exactly", false},
      {"trace", "Markov trace of an element file, or a Markov property check", true},
      {"gram", "Gram matrix (symbolic JSON or numeric CSV)", false},
      {"scan", "Gram spectrum at given delta values (TL)", false},
      {"quantize", "degenerate loop values on a grid (TL)", false},
      {"bratteli", "Bratteli diagram up to level n", false},
      {"tangle-eval", "evaluate a tangle file on element files", true},
      {"selftest", "run the acceptance suite", false},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--family", config.family, "tl or fc")->check(CLI::IsMember({"tl", "fc", "TL", "FC"}));
    sub->add_option("--n", config.n, "level")->check(CLI::NonNegativeNumber);
    sub->add_option("--a", config.a, "value of a");
    sub->add_option("--b", config.b, "value of b");
    sub->add_option("--delta", config.delta, "loop value(s) delta");
    sub->add_option("--tol", config.tol, "relative rank tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--grid", config.grid, "lo hi steps")->expected(3);
    sub->add_option("--format", config.format, "json, csv, dot or text")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--samples", config.samples, "random samples")->check(CLI::PositiveNumber);
    sub->add_option("--out", config.out, "write output to this file");
    if (s.takes_files) sub->add_option("files", config.inputs, "input JSON files");
    sub->callback([&config, sub] { config.command = sub->get_name(); });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  if (config.format.empty()) config.format = default_format(config.command);

  std::ostringstream buffer;
  try {
    detail::run_command(config, buffer);
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    out << buffer.str();
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (config.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.out);
    if (!file) {
      err << "error: cannot write " << config.out << '\n';
      return 1;
    }
    file << buffer.str();
  }
  return 0;
}

}  // namespace planar::cli
