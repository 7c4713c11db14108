#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tuza/errors.hpp"
#include "tuza/rng.hpp"

namespace tuza {

using vertex_id = std::size_t;
using edge_id = std::size_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  vertex_id u;
  vertex_id v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edge ids are the positions of the pairs in lexicographic order, so they do
/// not depend on insertion order. The triangle hypergraph reuses them as its
/// vertex ids.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), adjacency_(n) {}

  /// Throws precondition_error on self-loops, duplicates or out-of-range ends.
  Graph(std::size_t n, std::vector<std::pair<vertex_id, vertex_id>> pairs) : n_(n), adjacency_(n) {
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) throw precondition_error("edge endpoint out of range");
      if (a == b) throw precondition_error("self-loop at vertex " + std::to_string(a));
      edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
      throw precondition_error("duplicate edge {" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + "}");
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(edge_id e) const { return edges_.at(e); }
  std::span<const vertex_id> neighbors(vertex_id v) const { return adjacency_.at(v); }

  std::optional<edge_id> find_edge(vertex_id a, vertex_id b) const {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<edge_id>(it - edges_.begin());
  }

  bool has_edge(vertex_id a, vertex_id b) const { return find_edge(a, b).has_value(); }

  std::vector<std::pair<vertex_id, vertex_id>> edge_pairs() const {
    std::vector<std::pair<vertex_id, vertex_id>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<vertex_id>> adjacency_;
};

/// Triangle {a, b, c} with a < b < c. edges holds the ids of ab, ac, bc, which
/// are increasing because edge ids follow lexicographic pair order.
struct Triangle {
  std::array<vertex_id, 3> vertices;
  std::array<edge_id, 3> edges;

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Pairwise edge-disjoint triangles; a lower-bound witness for the packing number.
struct PackingWitness {
  std::vector<Triangle> triangles;

  std::size_t size() const noexcept { return triangles.size(); }
};

/// All triangles, each once, sorted by vertex triple.
inline std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  const auto edges = g.edges();
  for (edge_id uv = 0; uv < edges.size(); ++uv) {
    const auto [u, v] = edges[uv];
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    auto iu = std::upper_bound(nu.begin(), nu.end(), v);
    auto iv = std::upper_bound(nv.begin(), nv.end(), v);
    while (iu != nu.end() && iv != nv.end()) {
      if (*iu < *iv) {
        ++iu;
      } else if (*iv < *iu) {
        ++iv;
      } else {
        const vertex_id w = *iu;
        out.push_back(Triangle{{u, v, w}, {uv, *g.find_edge(u, w), *g.find_edge(v, w)}});
        ++iu;
        ++iv;
      }
    }
  }
  return out;
}

/// Keeps the same vertex set and drops every edge that lies on no triangle.
/// One pass is enough: a dropped edge belongs to no triangle, so no triangle
/// loses an edge.
inline Graph irreducible_subgraph(const Graph& g) {
  std::vector<char> on_triangle(g.num_edges(), 0);
  for (const Triangle& t : enumerate_triangles(g))
    for (edge_id e : t.edges) on_triangle[e] = 1;
  std::vector<std::pair<vertex_id, vertex_id>> kept;
  for (edge_id e = 0; e < g.num_edges(); ++e)
    if (on_triangle[e]) kept.emplace_back(g.edge(e).u, g.edge(e).v);
  return Graph(g.num_vertices(), std::move(kept));
}

inline bool is_irreducible(const Graph& g) { return irreducible_subgraph(g).num_edges() == g.num_edges(); }

/// g minus the given edge ids (vertex set unchanged).
inline Graph remove_edges(const Graph& g, std::span<const edge_id> removed) {
  std::vector<char> drop(g.num_edges(), 0);
  for (edge_id e : removed) {
    if (e >= g.num_edges()) throw precondition_error("unknown edge id " + std::to_string(e));
    drop[e] = 1;
  }
  std::vector<std::pair<vertex_id, vertex_id>> kept;
  for (edge_id e = 0; e < g.num_edges(); ++e)
    if (!drop[e]) kept.emplace_back(g.edge(e).u, g.edge(e).v);
  return Graph(g.num_vertices(), std::move(kept));
}

/// True when removing `cover` leaves no triangle. Re-enumerates on the residual graph.
inline bool is_triangle_cover(const Graph& g, std::span<const edge_id> cover) {
  return enumerate_triangles(remove_edges(g, cover)).empty();
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.num_vertices(), -1);
  std::vector<vertex_id> stack;
  for (vertex_id s = 0; s < g.num_vertices(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const vertex_id x = stack.back();
      stack.pop_back();
      for (vertex_id y : g.neighbors(x)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Two-sided vertex partition from single-vertex local search.
///
/// Everything starts on side 0. Vertices are scanned in id order and a vertex
/// switches sides whenever more of its neighbours share its side than not;
/// this stops after a full pass without a move. At that point every vertex has
/// at least half its edges cut, so the cut holds at least half of all edges.
inline std::vector<char> local_search_bipartition(const Graph& g) {
  std::vector<char> side(g.num_vertices(), 0);
  bool moved = true;
  while (moved) {
    moved = false;
    for (vertex_id v = 0; v < g.num_vertices(); ++v) {
      std::size_t same = 0;
      for (vertex_id w : g.neighbors(v)) same += side[w] == side[v];
      if (2 * same > g.neighbors(v).size()) {
        side[v] = static_cast<char>(1 - side[v]);
        moved = true;
      }
    }
  }
  return side;
}

/// Edges left uncut by local_search_bipartition. Always a triangle cover of
/// size at most floor(|E| / 2).
inline std::vector<edge_id> bipartite_cut_cover(const Graph& g) {
  const auto side = local_search_bipartition(g);
  std::vector<edge_id> uncut;
  for (edge_id e = 0; e < g.num_edges(); ++e)
    if (side[g.edge(e).u] == side[g.edge(e).v]) uncut.push_back(e);
  return uncut;
}

/// Scan order for greedy packing: canonical triangle order, or a seeded shuffle of it.
struct PackingOrder {
  std::optional<std::uint64_t> seed;

  static PackingOrder canonical() { return {}; }
  static PackingOrder seeded(std::uint64_t s) { return {s}; }
};

/// Greedily extends `initial` (which must be edge-disjoint triangles of g) to a
/// maximal packing. Triangles of `initial` absent from g are skipped, which is
/// how surviving triangles of a fixed decomposition are counted.
inline PackingWitness extend_packing(const Graph& g, std::span<const Triangle> initial, PackingOrder order = {}) {
  std::vector<char> used(g.num_edges(), 0);
  PackingWitness out;
  auto try_take = [&](const Triangle& t) {
    if (used[t.edges[0]] || used[t.edges[1]] || used[t.edges[2]]) return;
    for (edge_id e : t.edges) used[e] = 1;
    out.triangles.push_back(t);
  };
  for (const Triangle& seed_tri : initial) {
    const auto [a, b, c] = seed_tri.vertices;
    auto ab = g.find_edge(a, b), ac = g.find_edge(a, c), bc = g.find_edge(b, c);
    if (!ab || !ac || !bc) continue;
    try_take(Triangle{seed_tri.vertices, {*ab, *ac, *bc}});
  }
  auto triangles = enumerate_triangles(g);
  if (order.seed) {
    Rng rng(*order.seed);
    shuffle(triangles, rng);
  }
  for (const Triangle& t : triangles) try_take(t);
  return out;
}

/// Maximal (not maximum) edge-disjoint triangle set.
inline PackingWitness greedy_triangle_packing(const Graph& g, PackingOrder order = {}) {
  return extend_packing(g, {}, order);
}

inline bool is_edge_disjoint(const Graph& g, const PackingWitness& packing) {
  std::vector<char> used(g.num_edges(), 0);
  for (const Triangle& t : packing.triangles) {
    for (edge_id e : t.edges) {
      if (e >= g.num_edges() || used[e]) return false;
      used[e] = 1;
    }
  }
  return true;
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<vertex_id, vertex_id>> pairs;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return Graph(n, std::move(pairs));
}

/// b's vertices are shifted past a's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto pairs = a.edge_pairs();
  const std::size_t shift = a.num_vertices();
  for (auto [u, v] : b.edge_pairs()) pairs.emplace_back(u + shift, v + shift);
  return Graph(a.num_vertices() + b.num_vertices(), std::move(pairs));
}

enum class Gadget { K4, K5 };

/// g plus k vertex-disjoint copies of K4 or K5.
inline Graph gadget_augment(const Graph& g, std::size_t k, Gadget gadget) {
  const Graph copy = complete_graph(gadget == Gadget::K4 ? 4 : 5);
  Graph out = g;
  for (std::size_t i = 0; i < k; ++i) out = disjoint_union(out, copy);
  return out;
}

/// G(n, p): pairs are visited in lexicographic order and each is kept when a
/// uniform01 draw falls below p.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw precondition_error("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<vertex_id, vertex_id>> pairs;
  for (vertex_id u = 0; u < n; ++u)
    for (vertex_id v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) pairs.emplace_back(u, v);
  return Graph(n, std::move(pairs));
}

}  // namespace tuza
