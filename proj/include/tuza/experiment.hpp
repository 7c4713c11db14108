#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tuza/cover.hpp"
#include "tuza/errors.hpp"
#include "tuza/graph.hpp"
#include "tuza/oracles.hpp"

namespace tuza {

enum class PackingEstimator { steiner_seeded, greedy };

inline std::string_view to_string(PackingEstimator e) {
  return e == PackingEstimator::steiner_seeded ? "steiner-seeded" : "greedy";
}

struct ExperimentSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  PackingEstimator estimator = PackingEstimator::steiner_seeded;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;        // spec.seed + trial
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::size_t steiner_survivors = 0;  // Steiner triangles fully present; 0 for the greedy estimator
  std::size_t packing_lower_bound = 0;
  std::size_t cover_size = 0;         // cover_via_bipartite

  bool packing_at_least_quarter_edges() const noexcept { return 4 * packing_lower_bound >= edges; }
  bool cover_within_twice_packing() const noexcept { return cover_size <= 2 * packing_lower_bound; }
};

struct ExperimentAggregate {
  std::size_t trials = 0;
  std::size_t packing_at_least_quarter_edges = 0;
  std::size_t cover_within_twice_packing = 0;

  double fraction_packing() const noexcept { return trials ? double(packing_at_least_quarter_edges) / double(trials) : 0.0; }
  double fraction_cover() const noexcept { return trials ? double(cover_within_twice_packing) / double(trials) : 0.0; }
  friend bool operator==(const ExperimentAggregate&, const ExperimentAggregate&) = default;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<TrialRecord> records;
  ExperimentAggregate aggregate;
};

inline ExperimentAggregate aggregate_records(const std::vector<TrialRecord>& records) {
  ExperimentAggregate a;
  a.trials = records.size();
  for (const auto& r : records) {
    a.packing_at_least_quarter_edges += r.packing_at_least_quarter_edges();
    a.cover_within_twice_packing += r.cover_within_twice_packing();
  }
  return a;
}

inline void validate(const ExperimentSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw precondition_error("p must lie in [0, 1]");
  if (spec.trials < 1) throw precondition_error("trials must be at least 1");
  if (spec.estimator == PackingEstimator::steiner_seeded && (spec.n < 3 || (spec.n % 6 != 1 && spec.n % 6 != 3)))
    throw precondition_error("steiner-seeded estimator needs n = 1 or 3 (mod 6), n >= 3; got n = " +
                             std::to_string(spec.n));
}

/// One trial: G(n, p) with seed spec.seed + index. The steiner-seeded
/// estimator counts the triangles of a fixed decomposition of K_n that survive
/// in G and then extends them greedily; the greedy estimator packs from scratch.
inline TrialRecord run_trial(const ExperimentSpec& spec, std::size_t index, const PackingWitness& steiner) {
  TrialRecord r;
  r.trial = index;
  r.seed = spec.seed + index;
  const Graph g = random_gnp(spec.n, spec.p, r.seed);
  r.edges = g.num_edges();
  r.triangles = enumerate_triangles(g).size();
  if (spec.estimator == PackingEstimator::steiner_seeded) {
    for (const Triangle& t : steiner.triangles) {
      const auto [a, b, c] = t.vertices;
      r.steiner_survivors += g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
    }
    r.packing_lower_bound = extend_packing(g, steiner.triangles).size();
  } else {
    r.packing_lower_bound = greedy_triangle_packing(g).size();
  }
  r.cover_size = bipartite_cut_cover(g).size();
  return r;
}

inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  const PackingWitness steiner =
      spec.estimator == PackingEstimator::steiner_seeded ? steiner_triple_system(spec.n) : PackingWitness{};
  ExperimentResult out{spec, {}, {}};
  for (std::size_t i = 0; i < spec.trials; ++i) out.records.push_back(run_trial(spec, i, steiner));
  out.aggregate = aggregate_records(out.records);
  return out;
}

inline void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << "trial,seed,edges,triangles,steiner_survivors,packing_lower_bound,cover_size,"
         "packing_ge_quarter_edges,cover_le_twice_packing\n";
  for (const auto& r : result.records) {
    out << r.trial << ',' << r.seed << ',' << r.edges << ',' << r.triangles << ',' << r.steiner_survivors << ','
        << r.packing_lower_bound << ',' << r.cover_size << ',' << int(r.packing_at_least_quarter_edges()) << ','
        << int(r.cover_within_twice_packing()) << '\n';
  }
}

}  // namespace tuza
