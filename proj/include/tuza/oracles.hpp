#pragma once

// Exact ground truth at desk scale. Nothing here calls into the cover engine,
// the cycle breakers or the acyclic solver; results from those are checked
// against these values.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "tuza/errors.hpp"
#include "tuza/graph.hpp"
#include "tuza/hypergraph.hpp"

namespace tuza {

/// Caps on exact searches. Hitting any cap throws budget_exceeded.
struct OracleBudget {
  std::size_t max_edges = 40;  // |E| for graph oracles, |E(H)| for hypergraph ones
  std::size_t max_nodes = 50'000'000;
  std::chrono::milliseconds time_cap{60'000};

  static OracleBudget for_graphs() { return {}; }
  static OracleBudget for_hypergraphs() { return {14, 50'000'000, std::chrono::milliseconds{60'000}}; }
};

/// Optimum value plus a witness (element or set indices, meaning per oracle).
struct ExactResult {
  std::size_t value = 0;
  std::vector<std::size_t> witness;
};

namespace detail {

class SearchMeter {
 public:
  explicit SearchMeter(const OracleBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    if (++nodes_ > budget_.max_nodes) throw budget_exceeded("oracle search-node cap exceeded");
    if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_cap)
      throw budget_exceeded("oracle time cap exceeded");
  }

 private:
  const OracleBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  std::size_t nodes_ = 0;
};

/// Maximum number of pairwise disjoint sets. Branches include/exclude on the
/// sets in the given order; the bound is the smaller of the count of sets
/// still usable and free elements / smallest set size.
inline ExactResult max_disjoint_sets(const std::vector<std::vector<std::size_t>>& sets, std::size_t universe,
                                     const OracleBudget& budget) {
  SearchMeter meter(budget);
  std::size_t min_size = universe + 1;
  for (const auto& s : sets) min_size = std::min(min_size, std::max<std::size_t>(s.size(), 1));
  std::vector<char> used(universe, 0);
  std::vector<std::size_t> current, best;
  std::size_t free_elements = universe;

  auto usable = [&](std::size_t i) {
    return std::none_of(sets[i].begin(), sets[i].end(), [&](std::size_t x) { return used[x]; });
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    meter.tick();
    if (current.size() > best.size()) best = current;
    std::size_t open = 0;
    for (std::size_t j = i; j < sets.size(); ++j) open += usable(j);
    const std::size_t bound = current.size() + std::min(open, free_elements / min_size);
    if (bound <= best.size()) return;
    while (i < sets.size() && !usable(i)) ++i;
    if (i == sets.size()) return;
    for (std::size_t x : sets[i]) used[x] = 1;
    free_elements -= sets[i].size();
    current.push_back(i);
    self(self, i + 1);
    current.pop_back();
    free_elements += sets[i].size();
    for (std::size_t x : sets[i]) used[x] = 0;
    self(self, i + 1);
  };
  rec(rec, 0);
  return {best.size(), best};
}

/// Minimum hitting set. Branches on the elements of the first set not yet
/// hit; branch j forbids the elements tried in branches before it. The lower
/// bound is a greedy family of disjoint unhit sets.
inline ExactResult min_hitting_set(const std::vector<std::vector<std::size_t>>& sets, std::size_t universe,
                                   const OracleBudget& budget) {
  for (const auto& s : sets)
    if (s.empty()) throw precondition_error("cannot hit an empty set");
  SearchMeter meter(budget);
  std::vector<int> hits(sets.size(), 0);
  std::vector<std::vector<std::size_t>> containing(universe);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t x : sets[i]) containing[x].push_back(i);

  std::vector<char> chosen(universe, 0), banned(universe, 0);
  std::vector<std::size_t> current, best;
  // Start from the trivial solution: one element per set, greedily.
  {
    std::vector<char> taken(universe, 0);
    for (const auto& s : sets) {
      if (std::any_of(s.begin(), s.end(), [&](std::size_t x) { return taken[x]; })) continue;
      taken[s[0]] = 1;
      best.push_back(s[0]);
    }
  }
  auto choose = [&](std::size_t x, int delta) {
    for (std::size_t i : containing[x]) hits[i] += delta;
  };
  auto rec = [&](auto&& self) -> void {
    meter.tick();
    std::size_t first = sets.size();
    std::vector<char> blocked(universe, 0);
    std::size_t lower = current.size();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (hits[i]) continue;
      if (first == sets.size()) first = i;
      if (std::none_of(sets[i].begin(), sets[i].end(), [&](std::size_t x) { return blocked[x]; })) {
        ++lower;
        for (std::size_t x : sets[i]) blocked[x] = 1;
      }
    }
    if (first == sets.size()) {
      if (current.size() < best.size()) best = current;
      return;
    }
    if (lower >= best.size()) return;
    std::vector<std::size_t> tried;
    for (std::size_t x : sets[first]) {
      if (banned[x]) continue;
      chosen[x] = 1;
      choose(x, 1);
      current.push_back(x);
      self(self);
      current.pop_back();
      choose(x, -1);
      chosen[x] = 0;
      banned[x] = 1;
      tried.push_back(x);
    }
    for (std::size_t x : tried) banned[x] = 0;
  };
  rec(rec);
  std::sort(best.begin(), best.end());
  return {best.size(), best};
}

inline std::vector<std::vector<std::size_t>> live_edge_sets(const Hypergraph& h, std::vector<hedge_id>& ids) {
  ids = h.edges();
  std::vector<std::vector<std::size_t>> sets;
  for (hedge_id e : ids) sets.emplace_back(h.edge(e).begin(), h.edge(e).end());
  return sets;
}

inline void check_hypergraph_budget(const Hypergraph& h, const OracleBudget& budget) {
  if (h.num_edges() > budget.max_edges)
    throw budget_exceeded("oracle limited to " + std::to_string(budget.max_edges) + " hyperedges, got " +
                          std::to_string(h.num_edges()));
}

inline void check_graph_budget(const Graph& g, const OracleBudget& budget) {
  if (g.num_edges() > budget.max_edges)
    throw budget_exceeded("oracle limited to " + std::to_string(budget.max_edges) + " edges, got " +
                          std::to_string(g.num_edges()));
}

/// Incidence-forest test written independently of the library's own version.
inline bool acyclic_without(const Hypergraph& h, const std::vector<char>& dead_vertex, const std::vector<char>& dead_edge) {
  std::vector<std::size_t> parent(h.vertex_capacity());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (hedge_id e : h.edges()) {
    if (dead_edge[e]) continue;
    const auto m = h.edge(e);
    if (std::any_of(m.begin(), m.end(), [&](hvertex_id v) { return dead_vertex[v]; })) continue;
    std::vector<std::size_t> roots;
    for (hvertex_id v : m) roots.push_back(find(v));
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) return false;
    for (std::size_t r : roots) parent[r] = roots[0];
  }
  return true;
}

/// Smallest r such that some r-subset of `pool` satisfies `ok`, by
/// enumerating subsets in increasing size.
template <typename Ok>
ExactResult smallest_subset(const std::vector<std::size_t>& pool, Ok ok, SearchMeter& meter) {
  for (std::size_t r = 0; r <= pool.size(); ++r) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      meter.tick();
      std::vector<std::size_t> pick;
      for (std::size_t i : idx) pick.push_back(pool[i]);
      if (ok(pick)) return {r, pick};
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {pool.size(), pool};
}

}  // namespace detail

/// Maximum edge-disjoint triangle packing.
inline PackingWitness exact_nu_t(const Graph& g, const OracleBudget& budget = OracleBudget::for_graphs()) {
  detail::check_graph_budget(g, budget);
  const auto triangles = enumerate_triangles(g);
  std::vector<std::vector<std::size_t>> sets;
  for (const Triangle& t : triangles) sets.push_back({t.edges[0], t.edges[1], t.edges[2]});
  const ExactResult r = detail::max_disjoint_sets(sets, g.num_edges(), budget);
  PackingWitness out;
  for (std::size_t i : r.witness) out.triangles.push_back(triangles[i]);
  return out;
}

/// Minimum triangle cover; witness holds edge ids.
inline ExactResult exact_tau_t(const Graph& g, const OracleBudget& budget = OracleBudget::for_graphs()) {
  detail::check_graph_budget(g, budget);
  std::vector<std::vector<std::size_t>> sets;
  for (const Triangle& t : enumerate_triangles(g)) sets.push_back({t.edges[0], t.edges[1], t.edges[2]});
  return detail::min_hitting_set(sets, g.num_edges(), budget);
}

/// Maximum matching; witness holds hyperedge ids.
inline ExactResult exact_nu(const Hypergraph& h, const OracleBudget& budget = OracleBudget::for_hypergraphs()) {
  detail::check_hypergraph_budget(h, budget);
  std::vector<hedge_id> ids;
  const auto sets = detail::live_edge_sets(h, ids);
  ExactResult r = detail::max_disjoint_sets(sets, h.vertex_capacity(), budget);
  for (auto& i : r.witness) i = ids[i];
  std::sort(r.witness.begin(), r.witness.end());
  return r;
}

/// Minimum transversal; witness holds vertex ids.
inline ExactResult exact_tau(const Hypergraph& h, const OracleBudget& budget = OracleBudget::for_hypergraphs()) {
  detail::check_hypergraph_budget(h, budget);
  std::vector<hedge_id> ids;
  return detail::min_hitting_set(detail::live_edge_sets(h, ids), h.vertex_capacity(), budget);
}

/// Minimum feedback vertex set; witness holds vertex ids.
inline ExactResult exact_min_fvs(const Hypergraph& h, const OracleBudget& budget = OracleBudget::for_hypergraphs()) {
  detail::check_hypergraph_budget(h, budget);
  detail::SearchMeter meter(budget);
  const std::vector<char> no_edges(h.edge_capacity(), 0);
  return detail::smallest_subset(
      h.non_isolated_vertices(),
      [&](const std::vector<std::size_t>& pick) {
        std::vector<char> dead(h.vertex_capacity(), 0);
        for (std::size_t v : pick) dead[v] = 1;
        return detail::acyclic_without(h, dead, no_edges);
      },
      meter);
}

/// Minimum feedback edge set; witness holds hyperedge ids.
inline ExactResult exact_min_fes(const Hypergraph& h, const OracleBudget& budget = OracleBudget::for_hypergraphs()) {
  detail::check_hypergraph_budget(h, budget);
  detail::SearchMeter meter(budget);
  const std::vector<char> no_vertices(h.vertex_capacity(), 0);
  return detail::smallest_subset(
      h.edges(),
      [&](const std::vector<std::size_t>& pick) {
        std::vector<char> dead(h.edge_capacity(), 0);
        for (std::size_t e : pick) dead[e] = 1;
        return detail::acyclic_without(h, no_vertices, dead);
      },
      meter);
}

/// Decomposition of K_n into n(n-1)/6 edge-disjoint triangles, n = 1 or 3 mod 6.
/// Bose's construction for n = 3 mod 6, Skolem's for n = 1 mod 6.
inline PackingWitness steiner_triple_system(std::size_t n) {
  if (n < 3 || (n % 6 != 1 && n % 6 != 3))
    throw precondition_error("Steiner triple systems exist only for n = 1 or 3 (mod 6), n >= 3; got " +
                             std::to_string(n));
  std::vector<std::array<vertex_id, 3>> triples;
  if (n % 6 == 3) {
    // Points (x, i) -> 3x + i over Z_q x Z_3 with q = 2m+1 and the idempotent
    // commutative quasigroup x o y = (x + y)(m + 1) mod q.
    const std::size_t q = n / 3, m = (q - 1) / 2;
    auto pt = [](std::size_t x, std::size_t i) { return 3 * x + i; };
    auto op = [&](std::size_t x, std::size_t y) { return (x + y) * (m + 1) % q; };
    for (std::size_t x = 0; x < q; ++x) triples.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = x + 1; y < q; ++y)
        for (std::size_t i = 0; i < 3; ++i) triples.push_back({pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)});
  } else {
    // Points: infinity -> n-1, (x, i) -> 3x + i over Z_2m x Z_3, with the
    // half-idempotent commutative quasigroup obtained from addition mod 2m
    // by renaming symbol 2s -> s and 2s+1 -> m+s.
    const std::size_t m = (n - 1) / 6, q = 2 * m, inf = n - 1;
    auto pt = [](std::size_t x, std::size_t i) { return 3 * x + i; };
    auto op = [&](std::size_t x, std::size_t y) {
      const std::size_t s = (x + y) % q;
      return s % 2 == 0 ? s / 2 : m + s / 2;
    };
    for (std::size_t x = 0; x < m; ++x) triples.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t i = 0; i < 3; ++i) triples.push_back({inf, pt(x + m, i), pt(x, (i + 1) % 3)});
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = x + 1; y < q; ++y)
        for (std::size_t i = 0; i < 3; ++i) triples.push_back({pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)});
  }
  const Graph kn = complete_graph(n);
  PackingWitness out;
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    out.triangles.push_back(Triangle{t, {*kn.find_edge(t[0], t[1]), *kn.find_edge(t[0], t[2]), *kn.find_edge(t[1], t[2])}});
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

/// Fano plane on points 0..6 (lines {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},{3,4,7},{3,5,6} shifted down by one).
inline Hypergraph fano_plane() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace tuza
