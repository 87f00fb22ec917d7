#pragma once

// Command-line driver; kept in a header so the test suite can run it in-process.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cocoblock/cocoblock.hpp"
#include "cocoblock/oracle.hpp"

namespace cocoblock::cli {

enum ExitCode : int { kOk = 0, kNo = 1, kInputError = 2 };

struct RunConfig {
  std::string command;
  std::string input;
  std::string ordering;
  std::string problem;
  int d = 0;
  int k = 0;
  bool clique = false;
  bool json = false;
  bool levels = false;
  std::string dot;
  std::string solution;
  int n = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

// The graph the solver works on: the input itself, or its complement in
// clique mode.
inline Instance load_instance(const RunConfig& cfg) {
  Graph g = parse_graph(read_file(cfg.input));
  if (cfg.clique) g = complement(g);
  std::optional<std::vector<Vertex>> order;
  if (!cfg.ordering.empty()) order = parse_ordering(read_file(cfg.ordering));
  return make_instance(std::move(g), order);
}

inline void print_solution(std::ostream& out, const RunConfig& cfg, const Solution& sol, int n) {
  if (cfg.json) {
    out << to_json(sol, n).dump() << '\n';
    return;
  }
  out << "# problem=" << to_string(sol.problem) << (cfg.clique ? " (clique)" : "") << " n=" << n
      << (cfg.clique ? " omega=" : " alpha=") << sol.alpha << " d=" << sol.d << '\n';
  if (!sol.feasible) {
    out << "# infeasible\n";
    return;
  }
  out << "# min_size " << *sol.min_size << '\n';
  out << join(sol.vertices) << '\n';
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  auto inst = load_instance(cfg);
  auto trace = solve_traced(inst, parse_problem(cfg.problem), cfg.d);
  if (!cfg.dot.empty() && trace.digraph) write_file(cfg.dot, export_dot(*trace.digraph));
  print_solution(out, cfg, trace.solution, inst.graph.n());
  return kOk;
}

inline int cmd_decide(const RunConfig& cfg, std::ostream& out) {
  auto inst = load_instance(cfg);
  auto sol = solve(inst, parse_problem(cfg.problem), cfg.d);
  bool yes = decide(inst, sol.problem, cfg.d, cfg.k);
  if (cfg.json) {
    auto j = to_json(sol, inst.graph.n());
    j["k"] = cfg.k;
    j["decision"] = yes;
    out << j.dump() << '\n';
  } else {
    out << (yes ? "yes" : "no") << '\n';
  }
  return yes ? kOk : kNo;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto inst = load_instance(cfg);
  std::vector<Vertex> set;
  std::string text = read_file(cfg.solution);
  if (text.find_first_not_of(" \t\r\n") != std::string::npos && text.front() == '{') {
    set = solution_from_json(nlohmann::json::parse(text)).vertices;
  } else {
    set = parse_ordering(text);
  }
  bool ok = verify_solution(inst, parse_problem(cfg.problem), cfg.d, set);
  if (cfg.json)
    out << nlohmann::json{{"problem", cfg.problem}, {"d", cfg.d}, {"solution", set}, {"valid", ok}}.dump()
        << '\n';
  else
    out << (ok ? "valid" : "invalid") << '\n';
  return ok ? kOk : kNo;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 0) throw InputError("--n must be non-negative");
  auto inst = oracle::gen_cocomparability(cfg.n, cfg.density, cfg.seed);
  if (!cfg.ordering.empty()) write_file(cfg.ordering, serialize_ordering(inst.ordering));
  out << "# co-comparability graph: n=" << cfg.n << " density=" << cfg.density
      << " seed=" << cfg.seed << '\n';
  write_graph(out, inst.graph);
  return kOk;
}

inline int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  auto inst = load_instance(cfg);
  const int alpha = inst.levels.alpha;
  std::vector<Problem> problems;
  if (cfg.problem.empty())
    problems = {Problem::Transversal, Problem::Blocker};
  else
    problems = {parse_problem(cfg.problem)};
  int lo = cfg.d > 0 ? cfg.d : 1;
  int hi = cfg.d > 0 ? cfg.d : alpha;
  bool all_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (Problem p : problems) {
    for (int d = lo; d <= hi; ++d) {
      auto sol = solve(inst, p, d);
      auto brute = p == Problem::Transversal ? oracle::brute_transversal(inst.graph, d)
                                             : oracle::brute_blocker(inst.graph, d);
      bool ok = sol.min_size == brute;
      all_ok = all_ok && ok;
      auto show = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("infeasible");
      };
      if (cfg.json) {
        rows.push_back({{"problem", to_string(p)}, {"d", d}, {"solver", show(sol.min_size)},
                        {"oracle", show(brute)}, {"match", ok}});
      } else {
        out << to_string(p) << " d=" << d << " solver=" << show(sol.min_size)
            << " oracle=" << show(brute) << (ok ? " OK" : " MISMATCH") << '\n';
      }
    }
  }
  if (cfg.json) out << nlohmann::json{{"alpha", alpha}, {"checks", rows}, {"ok", all_ok}}.dump() << '\n';
  return all_ok ? kOk : kNo;
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out) {
  auto inst = load_instance(cfg);
  if (cfg.levels) {
    out << dump_levels(inst.levels, inst.ordering);
    return kOk;
  }
  auto gp = build_digraph(inst, parse_problem(cfg.problem), cfg.d);
  std::string text = cfg.json ? export_json(gp).dump(2) + "\n" : export_dot(gp);
  if (cfg.dot.empty())
    out << text;
  else
    write_file(cfg.dot, text);
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Minimum d-transversals and d-deletion blockers on co-comparability graphs",
               "cocoblock"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Edge-list graph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--ordering", cfg.ordering, "Co-comparability ordering file")
        ->check(CLI::ExistingFile);
    sub->add_flag("--clique", cfg.clique, "Solve the clique-number variant (works on the complement)");
    sub->add_flag("--json", cfg.json, "JSON output");
  };
  auto add_problem = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--problem", cfg.problem, "transversal or blocker")
                    ->check(CLI::IsMember({"transversal", "blocker"}));
    auto* d = sub->add_option("--d", cfg.d, "Threshold d >= 1")->check(CLI::PositiveNumber);
    if (required) {
      opt->required();
      d->required();
    }
  };

  auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum solution");
  add_input(solve_cmd);
  add_problem(solve_cmd, true);
  solve_cmd->add_option("--dot", cfg.dot, "Write the reduction digraph as DOT");

  auto* decide_cmd = app.add_subcommand("decide", "Is there a solution of size at most k?");
  add_input(decide_cmd);
  add_problem(decide_cmd, true);
  decide_cmd->add_option("--k", cfg.k, "Budget k >= 1")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate solution");
  add_input(verify_cmd);
  add_problem(verify_cmd, true);
  verify_cmd->add_option("--solution", cfg.solution, "Solution file (id list or solve --json output)")
      ->required()
      ->check(CLI::ExistingFile);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random co-comparability graph");
  gen_cmd->add_option("--n", cfg.n, "Vertex count")->required();
  gen_cmd->add_option("--density", cfg.density, "Probability of a comparable pair before closure")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", cfg.seed, "RNG seed");
  gen_cmd->add_option("--ordering", cfg.ordering, "Also write the ordering to this file");

  auto* check_cmd = app.add_subcommand("oracle-check", "Compare the solver with brute force");
  add_input(check_cmd);
  add_problem(check_cmd, false);

  auto* export_cmd = app.add_subcommand("export", "Export the reduction digraph or level table");
  add_input(export_cmd);
  add_problem(export_cmd, false);
  export_cmd->add_option("--dot", cfg.dot, "Output file (default: standard output)");
  export_cmd->add_flag("--levels", cfg.levels, "Print \"v pos beta leftext rightext\" per vertex");

  std::vector<const char*> argv{"cocoblock"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (solve_cmd->parsed()) return detail::cmd_solve(cfg, out);
    if (decide_cmd->parsed()) return detail::cmd_decide(cfg, out);
    if (verify_cmd->parsed()) return detail::cmd_verify(cfg, out);
    if (gen_cmd->parsed()) return detail::cmd_gen(cfg, out);
    if (check_cmd->parsed()) return detail::cmd_oracle_check(cfg, out);
    if (export_cmd->parsed()) {
      if (!cfg.levels && (cfg.problem.empty() || cfg.d == 0))
        throw InputError("export needs --problem and --d unless --levels is given");
      return detail::cmd_export(cfg, out);
    }
  } catch (const NotCoComparability& e) {
    err << "error: " << e.what() << '\n';
    auto [a, b] = e.forcing();
    auto [c, w] = e.forced();
    err << "witness: " << a << "->" << b << " forces " << c << "->" << w << '\n';
    return kInputError;
  } catch (const NotCocoOrdering& e) {
    err << "error: " << e.what() << '\n';
    err << "witness: " << e.u() << ' ' << e.v() << ' ' << e.w() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cocoblock::cli
