// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 malformed input or usage.

#ifndef TWOCOGRAPH_CLI_HPP
#define TWOCOGRAPH_CLI_HPP

#include "twocograph/acceptance.hpp"
#include "twocograph/canonical.hpp"
#include "twocograph/enumerate.hpp"
#include "twocograph/io.hpp"
#include "twocograph/minimality.hpp"
#include "twocograph/recognition.hpp"
#include "twocograph/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace twocograph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

namespace detail {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph6 argument, or "-" for one graph6 record per line on `in`.
inline std::vector<SmallGraph> load(const std::string& arg, std::istream& in) {
  try {
    if (arg == "-") return read_graph6_stream(in);
    return {parse_graph6(arg)};
  } catch (const Graph6Error& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline SmallGraph load_one(const std::string& arg, std::istream& in) {
  auto graphs = load(arg, in);
  if (graphs.size() != 1) throw InputError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return graphs.front();
}

inline std::string vertex_list(VertexSet s) {
  std::string out;
  for_each_vertex(s, [&](Vertex v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out;
}

inline const char* yes_no(bool b) { return b ? "YES" : "NO"; }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize 2-cographs, test induced-minor minimality and enumerate minimal non-2-cographs", "twocograph"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string second_arg;
  std::optional<int> k;
  int order = 0;
  int jobs = 1;
  int max_order = 10;
  std::string input_path;
  std::string out_path;
  std::string emit_g6_path;
  bool green_red = false;

  auto* recognize = app.add_subcommand("recognize", "cograph / 2-cograph / k-cograph verdicts");
  recognize->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();
  recognize->add_option("--k", k, "also test k-cograph membership (k >= 2)")->check(CLI::Range(2, 32));

  auto* decompose = app.add_subcommand("decompose", "print a 2-cograph build tree or a witness");
  decompose->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();

  auto* minimal = app.add_subcommand("minimal", "induced-minor minimality and class membership");
  minimal->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();

  auto* enumerate = app.add_subcommand("enumerate", "census of the class on one order");
  enumerate->add_option("--order", order, "number of vertices (5..10; 1..4 give empty censuses)")
      ->required()
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  enumerate->add_option("--input", input_path, "read graphs from a graph6 file instead of generating them");
  enumerate->add_option("--out", out_path, "write the JSON report here instead of stdout");
  enumerate->add_option("--emit-g6", emit_g6_path, "write every member as graph6, one per line");

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--max-order", max_order, "largest census order to run")->check(CLI::Range(1, kMaxEnumerationOrder));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("first", graph_arg, "graph6 string")->required();
  iso->add_option("second", second_arg, "graph6 string")->required();

  auto* dot = app.add_subcommand("dot", "Graphviz DOT export");
  dot->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();
  dot->add_flag("--green-red", green_red, "also draw non-edges, dashed red");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (*recognize) {
      for (const SmallGraph& g : detail::load(graph_arg, in)) {
        const TwoCographResult res = is_2cograph(g);
        out << "cograph: " << detail::yes_no(is_cograph(g)) << '\n';
        out << "2-cograph: " << detail::yes_no(res.is_2cograph);
        if (!res.is_2cograph) out << " (witness: " << detail::vertex_list(res.witness.support) << ')';
        out << '\n';
        if (k) {
          if (g.order() > 20) throw detail::InputError("k-cograph test supports at most 20 vertices");
          out << *k << "-cograph: " << detail::yes_no(is_k_cograph(g, *k)) << '\n';
        }
      }
    } else if (*decompose) {
      for (const SmallGraph& g : detail::load(graph_arg, in)) {
        const TwoCographResult res = is_2cograph(g);
        if (res.is_2cograph) {
          out << "tree: " << to_sexpr(res.tree) << '\n';
          out << "labels:";
          for (Vertex v : res.labels) out << ' ' << v;
          out << '\n';
        } else {
          out << "witness: " << detail::vertex_list(res.witness.support) << '\n';
        }
      }
    } else if (*minimal) {
      for (const SmallGraph& g : detail::load(graph_arg, in)) {
        if (g.order() > 16) throw detail::InputError("minimality test supports at most 16 vertices");
        const MinimalityVerdict v = is_minimal_non_2cograph(g);
        out << "minimal non-2-cograph: " << detail::yes_no(v.is_minimal) << " (" << to_string(v.reason);
        if (v.failing_reduction) out << ": " << to_string(*v.failing_reduction) << " stays a non-2-cograph";
        out << ")\n";
        out << "in class: " << detail::yes_no(in_class_g(g)) << '\n';
      }
    } else if (*enumerate) {
      ClassGReport report;
      if (!input_path.empty()) {
        std::ifstream file(input_path);
        if (!file) throw detail::InputError("cannot open " + input_path);
        const auto graphs = read_graph6_stream(file);
        report = enumerate_class_g(order, graphs);
      } else {
        report = enumerate_class_g(order, jobs);
      }
      const std::string doc = census_document(report).dump(2);
      if (out_path.empty()) {
        out << doc << '\n';
      } else {
        std::ofstream file(out_path);
        file << doc << '\n';
        if (!file) throw std::runtime_error("cannot write " + out_path);
      }
      if (!emit_g6_path.empty()) {
        std::ofstream file(emit_g6_path);
        for (const CanonicalForm& f : report.members) file << emit_graph6(f.graph()) << '\n';
        if (!file) throw std::runtime_error("cannot write " + emit_g6_path);
      }
    } else if (*verify) {
      acceptance::Suite suite(max_order, jobs);
      bool all = true;
      suite.run_all([&](const acceptance::CriterionResult& r) {
        all = all && r.passed;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << std::endl;
      });
      return all ? kExitOk : kExitVerifyFailed;
    } else if (*iso) {
      const SmallGraph a = detail::load_one(graph_arg, in);
      const SmallGraph b = detail::load_one(second_arg, in);
      out << (are_isomorphic(a, b) ? "isomorphic" : "not isomorphic") << '\n';
    } else if (*dot) {
      for (const SmallGraph& g : detail::load(graph_arg, in))
        out << emit_dot(g, green_red ? DotStyle::green_red : DotStyle::plain);
    }
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace twocograph::cli

#endif  // TWOCOGRAPH_CLI_HPP
