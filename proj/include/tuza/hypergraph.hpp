#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tuza/errors.hpp"
#include "tuza/graph.hpp"

namespace tuza {

using hvertex_id = std::size_t;
using hedge_id = std::size_t;

/// Hypergraph with stable ids.
///
/// Vertex ids live in [0, vertex_capacity()) and hyperedge ids in
/// [0, edge_capacity()). Deleting vertices or hyperedges marks them dead and
/// keeps every other id unchanged, so sub-hypergraphs report results in the
/// ids of the hypergraph they came from.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Each hyperedge is stored sorted; repeated or out-of-range vertices throw.
  Hypergraph(std::size_t num_vertices, std::vector<std::vector<hvertex_id>> edges)
      : vertex_alive_(num_vertices, 1), edges_(std::move(edges)), edge_alive_(edges_.size(), 1),
        incidence_(num_vertices) {
    for (hedge_id e = 0; e < edges_.size(); ++e) {
      auto& members = edges_[e];
      std::sort(members.begin(), members.end());
      if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw precondition_error("hyperedge " + std::to_string(e) + " repeats a vertex");
      for (hvertex_id v : members) {
        if (v >= num_vertices) throw precondition_error("hyperedge " + std::to_string(e) + " has an unknown vertex");
        incidence_[v].push_back(e);
      }
    }
    live_vertices_ = num_vertices;
    live_edges_ = edges_.size();
  }

  std::size_t vertex_capacity() const noexcept { return vertex_alive_.size(); }
  std::size_t edge_capacity() const noexcept { return edges_.size(); }
  std::size_t num_vertices() const noexcept { return live_vertices_; }
  /// Number of live hyperedges.
  std::size_t num_edges() const noexcept { return live_edges_; }

  bool has_vertex(hvertex_id v) const noexcept { return v < vertex_alive_.size() && vertex_alive_[v]; }
  bool has_edge(hedge_id e) const noexcept { return e < edges_.size() && edge_alive_[e]; }

  std::span<const hvertex_id> edge(hedge_id e) const {
    require_edge(e);
    return edges_[e];
  }

  /// Live hyperedges through v, ascending.
  std::span<const hedge_id> incident(hvertex_id v) const {
    require_vertex(v);
    return incidence_[v];
  }

  std::size_t degree(hvertex_id v) const { return incident(v).size(); }

  std::vector<hvertex_id> vertices() const {
    std::vector<hvertex_id> out;
    for (hvertex_id v = 0; v < vertex_alive_.size(); ++v)
      if (vertex_alive_[v]) out.push_back(v);
    return out;
  }

  std::vector<hedge_id> edges() const {
    std::vector<hedge_id> out;
    for (hedge_id e = 0; e < edges_.size(); ++e)
      if (edge_alive_[e]) out.push_back(e);
    return out;
  }

  /// Live vertices of positive degree.
  std::vector<hvertex_id> non_isolated_vertices() const {
    std::vector<hvertex_id> out;
    for (hvertex_id v = 0; v < vertex_alive_.size(); ++v)
      if (vertex_alive_[v] && !incidence_[v].empty()) out.push_back(v);
    return out;
  }

  /// Removes the vertices and every hyperedge touching one of them.
  Hypergraph without_vertices(std::span<const hvertex_id> removed) const {
    for (hvertex_id v : removed) require_vertex(v);
    Hypergraph out = *this;
    for (hvertex_id v : removed) {
      if (!out.vertex_alive_[v]) continue;
      const auto through = out.incidence_[v];
      for (hedge_id e : through) out.kill_edge(e);
      out.vertex_alive_[v] = 0;
      --out.live_vertices_;
    }
    return out;
  }

  /// Removes the hyperedges; all vertices stay.
  Hypergraph without_edges(std::span<const hedge_id> removed) const {
    for (hedge_id e : removed) require_edge(e);
    Hypergraph out = *this;
    for (hedge_id e : removed) out.kill_edge(e);
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_alive_ == b.vertex_alive_ && a.edge_alive_ == b.edge_alive_ && a.edges_ == b.edges_;
  }

 private:
  void require_vertex(hvertex_id v) const {
    if (!has_vertex(v)) throw precondition_error("unknown vertex " + std::to_string(v));
  }
  void require_edge(hedge_id e) const {
    if (!has_edge(e)) throw precondition_error("unknown hyperedge " + std::to_string(e));
  }

  void kill_edge(hedge_id e) {
    if (!edge_alive_[e]) return;
    edge_alive_[e] = 0;
    --live_edges_;
    for (hvertex_id v : edges_[e]) {
      auto& inc = incidence_[v];
      inc.erase(std::find(inc.begin(), inc.end(), e));
    }
  }

  std::vector<char> vertex_alive_;
  std::vector<std::vector<hvertex_id>> edges_;
  std::vector<char> edge_alive_;
  std::vector<std::vector<hedge_id>> incidence_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
};

inline Hypergraph delete_vertices(const Hypergraph& h, std::span<const hvertex_id> s) { return h.without_vertices(s); }
inline Hypergraph delete_hyperedges(const Hypergraph& h, std::span<const hedge_id> f) { return h.without_edges(f); }

/// Vertices are the edge ids of g, hyperedges are the edge-id triples of its
/// triangles in canonical triangle order. Always linear and 3-uniform.
inline Hypergraph triangle_hypergraph(const Graph& g) {
  std::vector<std::vector<hvertex_id>> edges;
  for (const Triangle& t : enumerate_triangles(g)) edges.push_back({t.edges[0], t.edges[1], t.edges[2]});
  return Hypergraph(g.num_edges(), std::move(edges));
}

inline bool is_k_uniform(const Hypergraph& h, std::size_t k) {
  for (hedge_id e : h.edges())
    if (h.edge(e).size() != k) return false;
  return true;
}

/// Any two live hyperedges share at most one vertex.
inline bool is_linear(const Hypergraph& h) {
  // Two hyperedges sharing two vertices share a pair; look for a repeated pair.
  std::vector<std::pair<hvertex_id, hvertex_id>> pairs;
  for (hedge_id e : h.edges()) {
    const auto m = h.edge(e);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) pairs.emplace_back(m[i], m[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

inline void require_linear(const Hypergraph& h) {
  if (!is_linear(h)) throw precondition_error("hypergraph is not linear");
}

/// Connected components. Isolated live vertices form singleton components.
/// Components are ordered by their least vertex id.
struct Components {
  std::vector<std::vector<hvertex_id>> vertices;
  std::vector<std::vector<hedge_id>> edges;

  std::size_t count() const noexcept { return vertices.size(); }
};

inline Components components(const Hypergraph& h) {
  Components out;
  std::vector<char> seen_v(h.vertex_capacity(), 0), seen_e(h.edge_capacity(), 0);
  for (hvertex_id root : h.vertices()) {
    if (seen_v[root]) continue;
    std::vector<hvertex_id> vs{root};
    std::vector<hedge_id> es;
    seen_v[root] = 1;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (hedge_id e : h.incident(vs[i])) {
        if (seen_e[e]) continue;
        seen_e[e] = 1;
        es.push_back(e);
        for (hvertex_id w : h.edge(e)) {
          if (!seen_v[w]) {
            seen_v[w] = 1;
            vs.push_back(w);
          }
        }
      }
    }
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    out.vertices.push_back(std::move(vs));
    out.edges.push_back(std::move(es));
  }
  return out;
}

/// Components that contain at least one hyperedge.
inline std::size_t count_nontrivial_components(const Hypergraph& h) {
  const Components c = components(h);
  return static_cast<std::size_t>(
      std::count_if(c.edges.begin(), c.edges.end(), [](const auto& es) { return !es.empty(); }));
}

/// v_1 e_1 v_2 ... e_k v_1 with distinct vertices, distinct hyperedges and
/// {v_i, v_(i+1)} inside e_i (indices mod k).
struct Cycle {
  std::vector<hvertex_id> vertices;
  std::vector<hedge_id> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// v_1 e_1 v_2 ... e_k v_(k+1); a single vertex is a path of length 0.
struct Path {
  std::vector<hvertex_id> vertices;
  std::vector<hedge_id> edges;

  std::size_t length() const noexcept { return edges.size(); }
};

namespace detail {

inline bool contains(std::span<const hvertex_id> members, hvertex_id v) {
  return std::binary_search(members.begin(), members.end(), v);
}

/// Breadth-first shortest path avoiding one hyperedge. Incident hyperedges and
/// their members are expanded in id order, so the result is deterministic.
inline std::optional<Path> bfs_path(const Hypergraph& h, hvertex_id from, hvertex_id to,
                                    std::optional<hedge_id> skip) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<hedge_id> via(h.vertex_capacity(), none);
  std::vector<hvertex_id> prev(h.vertex_capacity(), none);
  std::vector<char> seen(h.vertex_capacity(), 0);
  std::deque<hvertex_id> queue{from};
  seen[from] = 1;
  while (!queue.empty() && !seen[to]) {
    const hvertex_id x = queue.front();
    queue.pop_front();
    for (hedge_id e : h.incident(x)) {
      if (skip && e == *skip) continue;
      for (hvertex_id y : h.edge(e)) {
        if (seen[y]) continue;
        seen[y] = 1;
        via[y] = e;
        prev[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  Path p;
  for (hvertex_id x = to; x != from; x = prev[x]) {
    p.vertices.push_back(x);
    p.edges.push_back(via[x]);
  }
  p.vertices.push_back(from);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

/// Hop distances (in hyperedges) from `source` using only hyperedges with id
/// greater than `floor_edge`.
inline std::vector<std::size_t> distances_above(const Hypergraph& h, hvertex_id source, hedge_id floor_edge) {
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(h.vertex_capacity(), inf);
  std::deque<hvertex_id> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const hvertex_id x = queue.front();
    queue.pop_front();
    for (hedge_id e : h.incident(x)) {
      if (e <= floor_edge) continue;
      for (hvertex_id y : h.edge(e)) {
        if (dist[y] != inf) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

/// Shortest cycle through hyperedge e, assuming linearity. Tries the ordered
/// vertex pairs (a, b) of e with a < b and closes a shortest b..a path in
/// h minus e; the first pair reaching the minimum length wins.
inline std::optional<Cycle> shortest_cycle_through_edge(const Hypergraph& h, hedge_id e) {
  std::optional<Cycle> best;
  const auto members = h.edge(e);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      auto path = bfs_path(h, members[j], members[i], e);
      if (!path) continue;
      if (best && path->length() + 1 >= best->length()) continue;
      Cycle c;
      c.vertices.push_back(members[i]);
      c.edges.push_back(e);
      c.vertices.insert(c.vertices.end(), path->vertices.begin(), path->vertices.end() - 1);
      c.edges.insert(c.edges.end(), path->edges.begin(), path->edges.end());
      best = std::move(c);
    }
  }
  return best;
}

}  // namespace detail

/// Checks the cycle definition against h (any hypergraph, any length >= 2).
inline bool is_valid_cycle(const Hypergraph& h, const Cycle& c) {
  const std::size_t k = c.length();
  if (k < 2 || c.vertices.size() != k) return false;
  auto vs = c.vertices;
  auto es = c.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!h.has_edge(c.edges[i])) return false;
    const auto m = h.edge(c.edges[i]);
    if (!detail::contains(m, c.vertices[i]) || !detail::contains(m, c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

/// Shortest path between two live vertices, or nothing if disconnected.
inline std::optional<Path> shortest_path(const Hypergraph& h, hvertex_id from, hvertex_id to) {
  if (!h.has_vertex(from) || !h.has_vertex(to)) throw precondition_error("unknown vertex");
  return detail::bfs_path(h, from, to, std::nullopt);
}

/// A shortest cycle containing hyperedge e. Requires a linear hypergraph.
inline std::optional<Cycle> find_cycle_through_edge(const Hypergraph& h, hedge_id e) {
  if (!h.has_edge(e)) throw precondition_error("unknown hyperedge " + std::to_string(e));
  require_linear(h);
  return detail::shortest_cycle_through_edge(h, e);
}

/// A cycle whose hyperedges include v, i.e. v lies in the cycle viewed as a
/// sub-hypergraph (v need not be one of the v_i). Among the incident hyperedges
/// the shortest cycle wins, ties going to the least hyperedge id.
inline std::optional<Cycle> find_cycle_through_vertex(const Hypergraph& h, hvertex_id v) {
  if (!h.has_vertex(v)) throw precondition_error("unknown vertex " + std::to_string(v));
  require_linear(h);
  std::optional<Cycle> best;
  for (hedge_id e : h.incident(v)) {
    auto c = detail::shortest_cycle_through_edge(h, e);
    if (c && (!best || c->length() < best->length())) best = std::move(c);
  }
  return best;
}

/// A minimum-length cycle, or nothing for acyclic input. Requires linearity.
///
/// Ties are broken by the sorted hyperedge-id list, then by the vertex
/// sequence of the canonical rotation (least hyperedge first, smaller end of it
/// first). All shortest cycles whose least hyperedge is the smallest possible
/// are enumerated by a depth-bounded search pruned with BFS distances.
inline std::optional<Cycle> shortest_cycle(const Hypergraph& h) {
  require_linear(h);
  std::size_t girth = static_cast<std::size_t>(-1);
  for (hedge_id e : h.edges()) {
    if (auto c = detail::shortest_cycle_through_edge(h, e)) girth = std::min(girth, c->length());
  }
  if (girth == static_cast<std::size_t>(-1)) return std::nullopt;

  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  for (hedge_id first : h.edges()) {
    // Cycles of length `girth` through `first` whose other hyperedges all have
    // larger ids: first = {.., a, .., b, ..}, then a path b -> a of girth-1 edges.
    std::optional<std::pair<std::vector<hedge_id>, Cycle>> best;
    const auto members = h.edge(first);
    for (hvertex_id a : members) {
      const auto dist = detail::distances_above(h, a, first);
      for (hvertex_id b : members) {
        if (b <= a || dist[b] == inf || dist[b] > girth - 1) continue;
        Cycle cur;
        cur.vertices = {a, b};
        cur.edges = {first};
        std::vector<char> on_path(h.vertex_capacity(), 0), used(h.edge_capacity(), 0);
        on_path[a] = on_path[b] = 1;
        used[first] = 1;
        auto dfs = [&](auto&& self, hvertex_id x) -> void {
          const std::size_t remaining = girth - cur.edges.size();
          for (hedge_id f : h.incident(x)) {
            if (f <= first || used[f]) continue;
            if (remaining == 1) {
              if (!detail::contains(h.edge(f), a)) continue;
              cur.edges.push_back(f);
              auto key = cur.edges;
              std::sort(key.begin(), key.end());
              if (!best || std::tie(key, cur) < std::tie(best->first, best->second)) best.emplace(key, cur);
              cur.edges.pop_back();
              continue;
            }
            used[f] = 1;
            cur.edges.push_back(f);
            for (hvertex_id y : h.edge(f)) {
              if (on_path[y] || dist[y] == inf || dist[y] > remaining - 1) continue;
              on_path[y] = 1;
              cur.vertices.push_back(y);
              self(self, y);
              cur.vertices.pop_back();
              on_path[y] = 0;
            }
            cur.edges.pop_back();
            used[f] = 0;
          }
        };
        dfs(dfs, b);
      }
    }
    if (best) return best->second;
  }
  return std::nullopt;
}

}  // namespace tuza
