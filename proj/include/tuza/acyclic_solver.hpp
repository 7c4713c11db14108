#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "tuza/cycle_breaking.hpp"
#include "tuza/errors.hpp"
#include "tuza/hypergraph.hpp"

namespace tuza {

/// Rooted forest over the vertex/hyperedge incidence graph of an acyclic
/// hypergraph. Roots are vertices: the least non-isolated vertex id of each
/// component. Isolated vertices are left out.
struct IncidenceForest {
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::vector<hvertex_id> roots;
  std::vector<hedge_id> vertex_parent;     // hyperedge above a vertex, `none` for roots and absent vertices
  std::vector<hvertex_id> edge_parent;     // vertex above a hyperedge, `none` for absent hyperedges
  std::vector<std::size_t> edge_depth;     // hyperedges at depth d sit 2d+1 incidence steps below their root
  std::vector<hvertex_id> vertex_nodes;    // ascending
  std::vector<hedge_id> edge_nodes;        // ascending

  std::size_t num_trees() const noexcept { return roots.size(); }
  std::size_t num_nodes() const noexcept { return vertex_nodes.size() + edge_nodes.size(); }
};

/// Breadth-first decomposition from each root; incident hyperedges and their
/// members are visited in id order.
inline IncidenceForest forest_decompose(const Hypergraph& h) {
  if (!is_acyclic(h)) throw precondition_error("hypergraph has a cycle");
  IncidenceForest f;
  f.vertex_parent.assign(h.vertex_capacity(), IncidenceForest::none);
  f.edge_parent.assign(h.edge_capacity(), IncidenceForest::none);
  f.edge_depth.assign(h.edge_capacity(), 0);
  std::vector<char> seen(h.vertex_capacity(), 0);
  for (hvertex_id root : h.non_isolated_vertices()) {
    if (seen[root]) continue;
    f.roots.push_back(root);
    seen[root] = 1;
    std::deque<std::pair<hvertex_id, std::size_t>> queue{{root, 0}};
    while (!queue.empty()) {
      const auto [x, depth] = queue.front();
      queue.pop_front();
      f.vertex_nodes.push_back(x);
      for (hedge_id e : h.incident(x)) {
        if (e == f.vertex_parent[x]) continue;
        f.edge_parent[e] = x;
        f.edge_depth[e] = depth;
        f.edge_nodes.push_back(e);
        for (hvertex_id y : h.edge(e)) {
          if (y == x) continue;
          seen[y] = 1;
          f.vertex_parent[y] = e;
          queue.emplace_back(y, depth + 1);
        }
      }
    }
  }
  std::sort(f.vertex_nodes.begin(), f.vertex_nodes.end());
  std::sort(f.edge_nodes.begin(), f.edge_nodes.end());
  return f;
}

/// Minimum transversal and maximum matching of equal size. Equal sizes plus
/// weak duality (every matching edge needs its own transversal vertex) make
/// the pair its own optimality certificate.
struct DualPair {
  std::vector<hvertex_id> transversal;  // sorted
  std::vector<hedge_id> matching;       // sorted
};

/// Exact transversal/matching on an acyclic hypergraph.
///
/// Hyperedges are handled deepest first (ties by id). A hyperedge not yet hit
/// joins the matching and its parent-side vertex joins the transversal. Any
/// hyperedge sharing a vertex with it is either its parent-side sibling (now
/// hit) or hangs below it (already handled), so the matching stays disjoint
/// and both sets grow in lockstep.
inline DualPair solve_acyclic(const Hypergraph& h) {
  for (hedge_id e : h.edges())
    if (h.edge(e).empty()) throw precondition_error("empty hyperedge " + std::to_string(e));
  const IncidenceForest forest = forest_decompose(h);

  std::vector<hedge_id> order = forest.edge_nodes;
  std::stable_sort(order.begin(), order.end(),
                   [&](hedge_id a, hedge_id b) { return forest.edge_depth[a] > forest.edge_depth[b]; });

  DualPair out;
  std::vector<char> chosen(h.vertex_capacity(), 0);
  std::vector<std::pair<hvertex_id, hedge_id>> pairs;
  for (hedge_id e : order) {
    const auto m = h.edge(e);
    if (std::any_of(m.begin(), m.end(), [&](hvertex_id v) { return chosen[v]; })) continue;
    const hvertex_id top = forest.edge_parent[e];
    chosen[top] = 1;
    pairs.emplace_back(top, e);
  }

  // Canonical matching: each matched hyperedge is swapped for the least-id
  // hyperedge through the same transversal vertex that stays disjoint from
  // the rest. Ids only decrease, so this settles.
  std::vector<char> used(h.vertex_capacity(), 0);
  for (auto [t, e] : pairs)
    for (hvertex_id v : h.edge(e)) used[v] = 1;
  std::sort(pairs.begin(), pairs.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [t, e] : pairs) {
      for (hvertex_id v : h.edge(e)) used[v] = 0;
      for (hedge_id f : h.incident(t)) {
        if (f >= e) continue;
        const auto m = h.edge(f);
        if (std::none_of(m.begin(), m.end(), [&](hvertex_id v) { return used[v]; })) {
          e = f;
          changed = true;
          break;
        }
      }
      for (hvertex_id v : h.edge(e)) used[v] = 1;
    }
  }
  for (auto [t, e] : pairs) {
    out.transversal.push_back(t);
    out.matching.push_back(e);
  }
  std::sort(out.transversal.begin(), out.transversal.end());
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

inline bool is_transversal(const Hypergraph& h, std::span<const hvertex_id> vs) {
  std::vector<char> in(h.vertex_capacity(), 0);
  for (hvertex_id v : vs)
    if (v < in.size()) in[v] = 1;
  for (hedge_id e : h.edges()) {
    const auto m = h.edge(e);
    if (std::none_of(m.begin(), m.end(), [&](hvertex_id v) { return in[v]; })) return false;
  }
  return true;
}

inline bool is_matching(const Hypergraph& h, std::span<const hedge_id> es) {
  std::vector<char> used(h.vertex_capacity(), 0);
  for (hedge_id e : es) {
    if (!h.has_edge(e)) return false;
    for (hvertex_id v : h.edge(e)) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

}  // namespace tuza
