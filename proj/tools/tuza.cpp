// tuza: triangle covers with certified bounds.
//
// exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 budget exceeded

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tuza/tuza.hpp"

namespace {

enum Exit { ok = 0, parse_failure = 2, precondition_failure = 3, budget_failure = 4 };

void emit(const tuza::json& j) { std::cout << j.dump(2) << '\n'; }

tuza::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tuza::parse_error(0, "cannot open '" + path + "'");
  try {
    return tuza::json::parse(in);
  } catch (const tuza::json::parse_error& e) {
    throw tuza::parse_error(0, std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle covers with certified bounds"};
  app.require_subcommand(1);

  std::string file, cert_file, strategy = "best", estimator = "steiner-seeded", csv_path;
  bool explain = false, oracle = false;
  tuza::ExperimentSpec spec;

  auto* cover = app.add_subcommand("cover", "Triangle cover with a JSON certificate");
  cover->add_option("graph", file, "edge-list file")->required();
  cover->add_option("--strategy", strategy, "fvs|fes|bipartite|best")
      ->check(CLI::IsMember({"fvs", "fes", "bipartite", "best"}));
  cover->add_flag("--explain", explain, "include the cycle-breaking trace");

  auto* analyze = app.add_subcommand("analyze", "Report which sufficient conditions hold");
  analyze->add_option("graph", file, "edge-list file")->required();
  analyze->add_flag("--oracle", oracle, "compute the packing number exactly");

  auto* fvs = app.add_subcommand("fvs", "Feedback vertex set of a linear 3-uniform hypergraph");
  fvs->add_option("hypergraph", file, "hyperedge-list file")->required();
  auto* fes = app.add_subcommand("fes", "Minimal feedback edge set of a hypergraph");
  fes->add_option("hypergraph", file, "hyperedge-list file")->required();
  auto* acyclic = app.add_subcommand("solve-acyclic", "Minimum transversal and maximum matching of an acyclic hypergraph");
  acyclic->add_option("hypergraph", file, "hyperedge-list file")->required();

  auto* experiment = app.add_subcommand("random-experiment", "Packing and cover statistics on G(n, p)");
  experiment->add_option("--n", spec.n, "vertex count")->required();
  experiment->add_option("--p", spec.p, "edge probability")->required();
  experiment->add_option("--trials", spec.trials, "number of trials")->required();
  experiment->add_option("--seed", spec.seed, "base seed; trial i uses seed + i")->required();
  experiment->add_option("--estimator", estimator, "steiner-seeded|greedy")
      ->check(CLI::IsMember({"steiner-seeded", "greedy"}));
  experiment->add_option("--csv", csv_path, "also write per-trial rows to this file");

  auto* verify = app.add_subcommand("verify", "Re-check a cover certificate against its graph");
  verify->add_option("graph", file, "edge-list file")->required();
  verify->add_option("certificate", cert_file, "JSON from `cover`")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (cover->parsed()) {
      const auto lg = tuza::read_graph_file(file);
      std::optional<tuza::Strategy> s;
      if (strategy == "fvs") s = tuza::Strategy::fvs;
      if (strategy == "fes") s = tuza::Strategy::fes;
      if (strategy == "bipartite") s = tuza::Strategy::bipartite;
      emit(tuza::certificate_json(lg, tuza::cover_with(lg.graph, s), explain));
    } else if (analyze->parsed()) {
      const auto lg = tuza::read_graph_file(file);
      emit(tuza::condition_report_json(tuza::condition_report(lg.graph, oracle)));
    } else if (fvs->parsed()) {
      const auto lh = tuza::read_hypergraph_file(file);
      emit(tuza::fvs_json(lh, tuza::fvs_alg1(lh.hypergraph)));
    } else if (fes->parsed()) {
      const auto lh = tuza::read_hypergraph_file(file);
      emit(tuza::fes_json(lh, tuza::minimal_fes(lh.hypergraph)));
    } else if (acyclic->parsed()) {
      const auto lh = tuza::read_hypergraph_file(file);
      emit(tuza::dual_pair_json(lh, tuza::solve_acyclic(lh.hypergraph)));
    } else if (experiment->parsed()) {
      spec.estimator =
          estimator == "greedy" ? tuza::PackingEstimator::greedy : tuza::PackingEstimator::steiner_seeded;
      const auto result = tuza::run_experiment(spec);
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw tuza::precondition_error("cannot write '" + csv_path + "'");
        tuza::write_csv(out, result);
      }
      emit(tuza::experiment_json(result));
    } else if (verify->parsed()) {
      const auto lg = tuza::read_graph_file(file);
      const auto problems = tuza::verify_certificate_json(lg, read_json_file(cert_file));
      tuza::json j = tuza::detail::header("verification");
      j["valid"] = problems.empty();
      j["problems"] = problems;
      emit(j);
      return problems.empty() ? ok : precondition_failure;
    }
  } catch (const tuza::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const tuza::budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return budget_failure;
  } catch (const tuza::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return precondition_failure;
  }
  return ok;
}
