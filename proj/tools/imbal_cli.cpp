// imbal: command-line front end for the r-graph imbalance library.
//
// Exit status: 0 success / feasible, 1 domain-negative answer (infeasible,
// gcd too large, oracle disagreement), 2 input or validation error, 3 internal
// invariant breach.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imbal/imbal.hpp"

namespace {

using namespace imbal;

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInternal = 3 };

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::infeasible:
    case Errc::gcd_exceeds_capacity:
      return kNegative;
    case Errc::internal_contradiction:
    case Errc::not_realizable:
      return kInternal;
    default:
      return kInputError;
  }
}

Order parse_order(const std::string& text) {
  if (text == "nondecreasing" || text == "non-decreasing" || text == "asc") {
    return Order::non_decreasing;
  }
  if (text == "nonincreasing" || text == "non-increasing" || text == "desc") {
    return Order::non_increasing;
  }
  throw Error(Errc::parse_error, "unknown order \"" + text + "\"");
}

RGraph read_graph_file(const std::string& path) {
  if (path == "-") return io::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  try {
    return io::parse_graph(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

// Report lines are '#' comments, so stdout stays a valid graph file when the
// graph itself is printed after them.
void emit_graph(const RGraph& g, const std::string& out_path, const std::string& report) {
  std::cout << report;
  if (out_path.empty()) {
    std::cout << io::serialize_graph(g);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + out_path);
  out << io::serialize_graph(g);
}

std::string format_set(const std::set<Imbalance>& values) {
  return "{" + io::join(values, ",") + "}";
}

std::string format_witness(const Witness& w) {
  return "at k=" + std::to_string(w.k) + ": " + std::to_string(w.lhs) + " vs " +
         std::to_string(w.rhs);
}

int cmd_check(const std::string& seq, std::int64_t r, const std::string& order_text) {
  const auto values = io::parse_int_list(seq);
  const auto verdict = check_feasible(values, r, parse_order(order_text));
  if (verdict) {
    std::cout << "FEASIBLE\n";
    return kOk;
  }
  std::cout << "INFEASIBLE " << format_witness(*verdict.witness) << "\n";
  return kNegative;
}

int cmd_realize(const std::string& seq, std::int64_t r, const std::string& out_path) {
  const auto values = io::parse_int_list(seq);
  RealizationResult result = [&] {
    try {
      return realize(values, r);
    } catch (const InfeasibleError& e) {
      std::cout << "INFEASIBLE " << format_witness(e.witness()) << "\n";
      throw;
    }
  }();
  std::ostringstream report;
  report << "# arcs: " << result.arc_count << "\n# vertex-map:";
  for (std::size_t i = 0; i < result.vertex_map.size(); ++i) {
    report << " b" << (i + 1) << "->v" << result.vertex_map[i];
  }
  report << "\n";
  emit_graph(result.graph, out_path, report.str());
  return kOk;
}

int cmd_reduce(const std::string& in_path, const std::string& out_path) {
  const auto g = read_graph_file(in_path);
  const auto before = g.arc_count();
  auto [reduced, log] = reduce_with_log(g);
  std::ostringstream report;
  report << "# arcs before: " << before << "\n# arcs after: " << reduced.arc_count() << "\n";
  for (const auto& m : log) report << "# move: " << to_string(m) << "\n";
  emit_graph(reduced, out_path, report.str());
  return kOk;
}

int cmd_imbalance_set(const std::string& p_text, const std::string& q_text, std::int64_t r,
                      const std::string& out_path) {
  auto built = construct_from_imbalance_set(io::parse_int_list(p_text),
                                            io::parse_int_list(q_text), r);
  std::ostringstream report;
  report << "# t: " << built.spec.t << "\n";
  for (const auto& block : built.layout.blocks) {
    report << "# block " << block.name() << ": size " << block.size << ", vertices "
           << block.first_vertex << ".." << block.first_vertex + block.size - 1 << "\n";
  }
  report << "# vertices: " << built.layout.total_vertices << "\n";
  report << "# imbalance set: " << format_set(imbalance_set_of(built.graph)) << "\n";
  emit_graph(built.graph, out_path, report.str());
  return kOk;
}

int cmd_diagnose(const std::string& in_path) {
  const auto g = read_graph_file(in_path);
  const auto r = g.capacity();
  const auto up = imbalance_sequence(g, Order::non_decreasing).values;
  const auto down = imbalance_sequence(g, Order::non_increasing).values;
  const auto feasible = check_feasible_nondecreasing(up, r);
  const auto positional = positional_bounds(up, r);
  const auto square = square_inequality(down, r);
  auto verdict_text = [](const Verdict& v) {
    return v ? std::string("pass") : "FAIL " + format_witness(*v.witness);
  };
  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "capacity: " << r << "\n"
            << "arcs: " << g.arc_count() << "\n"
            << "sequence (non-decreasing): " << io::join(up) << "\n"
            << "sequence (non-increasing): " << io::join(down) << "\n"
            << "imbalance set: " << format_set(imbalance_set_of(g)) << "\n"
            << "min-arc lower bound: " << min_arc_lower_bound(up) << "\n"
            << "transitive: " << (is_transitive(g) ? "yes" : "no") << "\n"
            << "feasibility: " << verdict_text(feasible) << "\n"
            << "positional bounds: " << verdict_text(positional) << "\n"
            << "square inequality: " << verdict_text(square) << "\n";
  return feasible && positional && square ? kOk : kInternal;
}

int cmd_enumerate(std::size_t n, std::int64_t r, const std::string& mode,
                  std::uint64_t hard_cap) {
  const EnumerationLimits limits{n, r, hard_cap};
  if (mode == "sequences") {
    for (const auto& seq : enumerate_imbalance_sequences(limits)) {
      std::cout << io::join(seq) << "\n";
    }
    return kOk;
  }
  if (mode != "verify") throw Error(Errc::parse_error, "mode must be sequences or verify");
  const auto realized = enumerate_imbalance_sequences(limits);
  std::set<std::vector<Imbalance>> accepted;
  for_each_candidate_sequence(n, r, [&](const std::vector<Imbalance>& seq) {
    if (check_feasible_nondecreasing(seq, r)) accepted.insert(seq);
  });
  for (const auto& seq : realized) {
    if (!accepted.count(seq)) {
      std::cout << "COUNTEREXAMPLE " << io::join(seq) << ": realized but rejected\n";
      return kNegative;
    }
  }
  for (const auto& seq : accepted) {
    if (!realized.count(seq)) {
      std::cout << "COUNTEREXAMPLE " << io::join(seq) << ": accepted but not realized\n";
      return kNegative;
    }
  }
  std::cout << "EQUIVALENT (" << realized.size() << " sequences)\n";
  return kOk;
}

int cmd_dot(const std::string& in_path) {
  std::cout << io::to_dot(read_graph_file(in_path));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Imbalance sequences of r-graphs (directed multigraphs)"};
  app.require_subcommand(1);

  std::int64_t r = 1;
  std::string seq, order = "nondecreasing", out_path, in_path, p_text, q_text,
                   mode = "sequences";
  std::size_t n = 1;
  std::uint64_t hard_cap = EnumerationLimits{}.hard_cap;

  auto* check = app.add_subcommand("check", "Decide whether a sequence is realizable");
  check->add_option("-r", r, "Per-pair arc capacity")->capture_default_str();
  check->add_option("--order", order, "nondecreasing (default) or nonincreasing");
  check->add_option("sequence", seq, "Comma-separated integers")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Build a minimum-arc realization");
  realize_cmd->add_option("-r", r, "Per-pair arc capacity")->capture_default_str();
  realize_cmd->add_option("sequence", seq, "Non-decreasing comma-separated integers")
      ->required();
  realize_cmd->add_option("-o,--out", out_path, "Graph file to write (default: stdout)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply reducing moves until transitive");
  reduce_cmd->add_option("input", in_path, "Graph file ('-' for stdin)")->required();
  reduce_cmd->add_option("-o,--out", out_path, "Graph file to write (default: stdout)");

  auto* set_cmd =
      app.add_subcommand("imbalance-set", "Build an r-graph with imbalance set P and -Q");
  set_cmd->add_option("-r", r, "Per-pair arc capacity")->capture_default_str();
  set_cmd->add_option("--p", p_text, "Positive imbalances, increasing")->required();
  set_cmd->add_option("--q", q_text, "Magnitudes of negative imbalances, increasing")
      ->required();
  set_cmd->add_option("-o,--out", out_path, "Graph file to write (default: stdout)");

  auto* diagnose = app.add_subcommand("diagnose", "Report sequence, set and bound checks");
  diagnose->add_option("input", in_path, "Graph file ('-' for stdin)")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive small-instance oracle");
  enumerate->add_option("-n", n, "Vertex count")->required();
  enumerate->add_option("-r", r, "Per-pair arc capacity")->capture_default_str();
  enumerate->add_option("mode", mode, "sequences (default) or verify");
  enumerate->add_option("--hard-cap", hard_cap, "Maximum number of graphs to enumerate")
      ->capture_default_str();

  auto* dot = app.add_subcommand("dot", "Print a graph file as Graphviz DOT");
  dot->add_option("input", in_path, "Graph file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(seq, r, order);
    if (realize_cmd->parsed()) return cmd_realize(seq, r, out_path);
    if (reduce_cmd->parsed()) return cmd_reduce(in_path, out_path);
    if (set_cmd->parsed()) return cmd_imbalance_set(p_text, q_text, r, out_path);
    if (diagnose->parsed()) return cmd_diagnose(in_path);
    if (enumerate->parsed()) return cmd_enumerate(n, r, mode, hard_cap);
    if (dot->parsed()) return cmd_dot(in_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kInputError;
}
