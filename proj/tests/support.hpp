#pragma once

// Generators and brute-force references shared by the test binaries. The
// brute-force routines deliberately avoid the library's own search code:
// they enumerate bitmasks or sequences directly.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tuza/tuza.hpp"

namespace testing_support {

using tuza::Graph;
using tuza::Hypergraph;
using Sets = std::vector<std::vector<std::size_t>>;

// ---------------------------------------------------------------------------
// generators

/// Linear 3-uniform hypergraph on `n` vertices with up to `m` hyperedges,
/// built by rejection: a random triple is kept when it shares no pair with
/// an earlier one. Vertices that end up isolated are kept.
inline Hypergraph random_linear_3uniform(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::set<std::pair<std::size_t, std::size_t>> used;
  Sets edges;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t attempt = 0; attempt < 40 * m && edges.size() < m; ++attempt) {
    std::array<std::size_t, 3> t{pick(rng), pick(rng), pick(rng)};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) continue;
    const std::pair<std::size_t, std::size_t> p[] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    if (used.count(p[0]) || used.count(p[1]) || used.count(p[2])) continue;
    used.insert(p, p + 3);
    edges.push_back({t[0], t[1], t[2]});
  }
  return Hypergraph(n, edges);
}

/// Connected acyclic linear 3-uniform hypergraph with m hyperedges: each new
/// hyperedge hangs off one existing vertex with two fresh ones.
inline Sets random_tree_edges(std::size_t m, std::mt19937_64& rng, std::size_t offset = 0) {
  Sets edges;
  if (m == 0) return edges;
  edges.push_back({offset, offset + 1, offset + 2});
  std::size_t next = offset + 3;
  for (std::size_t i = 1; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(offset, next - 1);
    edges.push_back({pick(rng), next, next + 1});
    next += 2;
  }
  return edges;
}

inline Hypergraph random_tree(std::size_t m, std::mt19937_64& rng) {
  return Hypergraph(m == 0 ? 0 : 2 * m + 1, random_tree_edges(m, rng));
}

/// Acyclic forest: several random trees, vertex ids shuffled, plus a few
/// isolated vertices; hyperedge order shuffled too.
inline Hypergraph random_forest(std::size_t m, std::mt19937_64& rng) {
  Sets edges;
  std::size_t offset = 0;
  while (edges.size() < m) {
    std::uniform_int_distribution<std::size_t> size(1, m - edges.size());
    const std::size_t k = size(rng);
    for (auto& e : random_tree_edges(k, rng, offset)) edges.push_back(e);
    offset += 2 * k + 1;
  }
  const std::size_t n = offset + (rng() % 3);
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  for (auto& e : edges)
    for (auto& v : e) v = relabel[v];
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(n, edges);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) { return tuza::random_gnp(n, p, rng()); }

/// Graph with exactly m edges chosen uniformly among the pairs (m capped).
inline Graph random_graph_m(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(m, pairs.size()));
  return Graph(n, pairs);
}

inline Graph book_graph(std::size_t pages) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}};
  for (std::size_t i = 0; i < pages; ++i) {
    pairs.emplace_back(0, 2 + i);
    pairs.emplace_back(1, 2 + i);
  }
  return Graph(pages + 2, pairs);
}

// ---------------------------------------------------------------------------
// brute force

/// All triangles by scanning every vertex triple.
inline std::vector<std::array<std::size_t, 3>> brute_triangles(const Graph& g) {
  std::vector<std::array<std::size_t, 3>> out;
  const std::size_t n = g.num_vertices();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
  return out;
}

/// Live hyperedges as plain vectors, indexed by position.
inline Sets live_sets(const Hypergraph& h) {
  Sets out;
  for (auto e : h.edges()) {
    auto m = h.edge(e);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

inline Sets triangle_sets(const Graph& g) {
  Sets out;
  for (const auto& t : tuza::enumerate_triangles(g)) out.push_back({t.edges[0], t.edges[1], t.edges[2]});
  return out;
}

/// Largest pairwise disjoint subfamily, by trying every subset (|sets| <= 24).
inline std::size_t brute_nu(const Sets& sets) {
  const std::size_t m = sets.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const std::size_t k = std::popcount(mask);
    if (k <= best) continue;
    std::set<std::size_t> seen;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if (mask >> i & 1)
        for (auto v : sets[i]) ok = ok && seen.insert(v).second;
    if (ok) best = k;
  }
  return best;
}

/// Smallest hitting set by bounded search: the first set not yet hit must
/// contain a chosen element, so try each of its elements with one less budget.
inline bool hit_within(const Sets& sets, std::vector<std::size_t>& chosen, std::size_t budget) {
  const auto open = std::find_if(sets.begin(), sets.end(), [&](const auto& s) {
    return std::none_of(s.begin(), s.end(), [&](std::size_t v) { return std::ranges::count(chosen, v) > 0; });
  });
  if (open == sets.end()) return true;
  if (budget == 0) return false;
  for (std::size_t v : *open) {
    chosen.push_back(v);
    const bool ok = hit_within(sets, chosen, budget - 1);
    chosen.pop_back();
    if (ok) return true;
  }
  return false;
}

inline std::size_t brute_tau(const Sets& sets) {
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0;; ++k)
    if (hit_within(sets, chosen, k)) return k;
}

/// Cycle in the sense of alternating distinct vertices and hyperedges:
/// v_1 e_1 v_2 ... v_k e_k v_1 with k >= 2. Counts every cycle by DFS over
/// sequences starting at their least hyperedge; returns the shortest length,
/// or nothing when there is no cycle. With `through`, only cycles using that
/// set count. Exponential, small inputs only.
inline std::optional<std::size_t> brute_girth(const Sets& sets, std::optional<std::size_t> through = std::nullopt) {
  const std::size_t m = sets.size();
  std::optional<std::size_t> best;
  auto contains = [&](std::size_t e, std::size_t v) {
    return std::find(sets[e].begin(), sets[e].end(), v) != sets[e].end();
  };
  std::vector<char> used_edge(m, 0);
  std::set<std::size_t> used_vertex;
  // Path so far: v_1 e_1 v_2 ... e_j v_(j+1). Close when e_j's successor can return to v_1.
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> extend =
      [&](std::size_t start_edge, std::size_t first, std::size_t last, std::size_t len) {
        // try closing with a new hyperedge f > start_edge containing last and first
        for (std::size_t f = start_edge + 1; f < m; ++f) {
          if (used_edge[f] || !contains(f, last) || !contains(f, first)) continue;
          if (through && !used_edge[*through] && f != *through) continue;
          if (!best || len + 1 < *best) best = len + 1;
        }
        if (best && len + 1 >= *best) return;
        for (std::size_t f = start_edge + 1; f < m; ++f) {
          if (used_edge[f] || !contains(f, last)) continue;
          for (auto w : sets[f]) {
            if (w == last || used_vertex.count(w)) continue;
            used_edge[f] = 1;
            used_vertex.insert(w);
            extend(start_edge, first, w, len + 1);
            used_vertex.erase(w);
            used_edge[f] = 0;
          }
        }
      };
  for (std::size_t e = 0; e < m; ++e) {
    for (auto a : sets[e])
      for (auto b : sets[e]) {
        if (a == b) continue;
        used_edge[e] = 1;
        used_vertex = {a, b};
        extend(e, a, b, 1);
        used_edge[e] = 0;
      }
  }
  return best;
}

inline bool brute_acyclic(const Sets& sets) { return !brute_girth(sets).has_value(); }

/// Sets after dropping those touching a vertex in `mask_vertices`.
inline Sets drop_touching(const Sets& sets, const std::vector<std::size_t>& vertices) {
  Sets out;
  for (const auto& s : sets) {
    bool touched = false;
    for (auto v : s) touched = touched || std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    if (!touched) out.push_back(s);
  }
  return out;
}

/// Minimum number of vertices whose removal leaves no cycle.
inline std::size_t brute_min_fvs(const Sets& sets) {
  std::vector<std::size_t> universe;
  for (const auto& s : sets) universe.insert(universe.end(), s.begin(), s.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  std::size_t best = universe.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    const std::size_t k = std::popcount(mask);
    if (k >= best) continue;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) chosen.push_back(universe[i]);
    if (brute_acyclic(drop_touching(sets, chosen))) best = k;
  }
  return best;
}

/// Minimum number of sets whose removal leaves no cycle.
inline std::size_t brute_min_fes(const Sets& sets) {
  std::size_t best = sets.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets.size()); ++mask) {
    const std::size_t k = std::popcount(mask);
    if (k >= best) continue;
    Sets kept;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!(mask >> i & 1)) kept.push_back(sets[i]);
    if (brute_acyclic(kept)) best = k;
  }
  return best;
}

/// Triangle-free check on g minus the given edges, by triple scan.
inline bool brute_is_cover(const Graph& g, const std::vector<std::size_t>& cover) {
  std::set<std::size_t> removed(cover.begin(), cover.end());
  for (const auto& t : brute_triangles(g)) {
    const auto ab = *g.find_edge(t[0], t[1]), ac = *g.find_edge(t[0], t[2]), bc = *g.find_edge(t[1], t[2]);
    if (!removed.count(ab) && !removed.count(ac) && !removed.count(bc)) return false;
  }
  return true;
}

/// Non-isolated vertex count and their component count, by flood fill.
inline std::pair<std::size_t, std::size_t> touched_vertices_and_components(const Sets& sets) {
  std::map<std::size_t, std::size_t> parent;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& s : sets)
    for (auto v : s) parent.emplace(v, v);
  for (const auto& s : sets)
    for (auto v : s) parent[find(v)] = find(s[0]);
  std::set<std::size_t> roots;
  for (auto& [v, _] : parent) roots.insert(find(v));
  return {parent.size(), roots.size()};
}

}  // namespace testing_support
