#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tuza/errors.hpp"
#include "tuza/hypergraph.hpp"

namespace tuza {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Adds hyperedge `members` to the forest tracked by `sets`. Returns false
/// (leaving `sets` partially merged) if two members were already connected,
/// which is exactly when the incidence graph would gain a cycle.
inline bool join_if_acyclic(DisjointSets& sets, std::span<const hvertex_id> members) {
  for (std::size_t i = 1; i < members.size(); ++i)
    if (sets.find(members[0]) == sets.find(members[i])) return false;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (!sets.unite(members[0], members[i])) return false;
  return true;
}

}  // namespace detail

/// True iff h has no cycle, i.e. its vertex/hyperedge incidence graph is a
/// forest. Valid for any hypergraph; for linear ones this agrees with
/// shortest_cycle(h) being empty.
inline bool is_acyclic(const Hypergraph& h) {
  detail::DisjointSets sets(h.vertex_capacity());
  for (hedge_id e : h.edges())
    if (!detail::join_if_acyclic(sets, h.edge(e))) return false;
  return true;
}

/// Hyperedges lying on at least one cycle. e is on a cycle iff two of its
/// vertices are connected in h minus e.
inline std::vector<hedge_id> edges_on_cycles(const Hypergraph& h) {
  const auto live = h.edges();
  std::vector<hedge_id> out;
  for (hedge_id e : live) {
    detail::DisjointSets sets(h.vertex_capacity());
    for (hedge_id f : live) {
      if (f == e) continue;
      const auto m = h.edge(f);
      for (std::size_t i = 1; i < m.size(); ++i) sets.unite(m[0], m[i]);
    }
    const auto m = h.edge(e);
    bool closes = false;
    for (std::size_t i = 0; i < m.size() && !closes; ++i)
      for (std::size_t j = i + 1; j < m.size() && !closes; ++j) closes = sets.find(m[i]) == sets.find(m[j]);
    if (closes) out.push_back(e);
  }
  return out;
}

/// Which branch of the recursion produced a step.
enum class FvsRule {
  few_edges,        // at most two hyperedges left: nothing to add
  prune_off_cycle,  // drop hyperedges (and with them vertices) lying on no cycle
  high_degree,      // vertex of degree >= 3 joins the set
  degree_one,       // degree-1 vertex: take v_3 of a cycle through its hyperedge
  cycle_k0,         // 2-regular, shortest cycle length = 0 mod 3
  cycle_k1,         // length = 1 mod 3 with f_1 != f_3 after relabelling
  cycle_k1_paired,  // length 4 with f_1 = f_3 and f_2 = f_4
  cycle_k2,         // length = 2 mod 3
};

inline std::string_view to_string(FvsRule r) {
  switch (r) {
    case FvsRule::few_edges: return "few-edges";
    case FvsRule::prune_off_cycle: return "prune-off-cycle";
    case FvsRule::high_degree: return "high-degree";
    case FvsRule::degree_one: return "degree-one";
    case FvsRule::cycle_k0: return "cycle-k0";
    case FvsRule::cycle_k1: return "cycle-k1";
    case FvsRule::cycle_k1_paired: return "cycle-k1-paired";
    case FvsRule::cycle_k2: return "cycle-k2";
  }
  return "?";
}

struct FvsStep {
  FvsRule rule;
  std::vector<hvertex_id> added;          // vertices put into the feedback set
  std::vector<hvertex_id> deleted_vertices;
  std::vector<hedge_id> deleted_edges;    // hyperedges removed before recursing (explicitly or via deleted vertices)
  std::size_t cycle_length = 0;           // for the cycle rules and degree_one
};

struct FvsResult {
  std::vector<hvertex_id> removed_vertices;  // sorted
  std::vector<FvsStep> trace;
};

/// Feedback vertex set of at most floor(|E| / 3) vertices for a linear
/// 3-uniform hypergraph.
///
/// Each level applies the first matching rule, in this order:
///  1. at most 2 hyperedges: stop;
///  2. some element lies on no cycle: delete it;
///  3. a vertex of degree >= 3: take it, delete it;
///  4. a vertex v of degree 1 with hyperedge e_1: on a cycle
///     v_1 e_1 v_2 e_2 v_3 ... through e_1, take v_3 and delete e_1, e_2, e_3;
///  5. the hypergraph is 2-regular: branch on the length of a shortest cycle
///     mod 3.
/// Every level is a tail call, so the recursion runs as a loop. Rule 2 deletes
/// all off-cycle hyperedges at once, which is the same as deleting them one by
/// one: removing an element that lies on no cycle leaves every cycle intact.
inline FvsResult fvs_alg1(const Hypergraph& input) {
  if (!is_k_uniform(input, 3)) throw precondition_error("not 3-uniform");
  require_linear(input);

  FvsResult result;
  Hypergraph h = input;
  auto take = [&](FvsStep step, Hypergraph next) {
    result.removed_vertices.insert(result.removed_vertices.end(), step.added.begin(), step.added.end());
    result.trace.push_back(std::move(step));
    h = std::move(next);
  };
  auto other_edge_at = [&](hvertex_id u, hedge_id not_this) {
    const auto inc = h.incident(u);
    return inc[0] == not_this ? inc[1] : inc[0];
  };
  auto third_vertex = [&](hedge_id e, hvertex_id a, hvertex_id b) {
    for (hvertex_id x : h.edge(e))
      if (x != a && x != b) return x;
    return a;  // unreachable for 3-uniform input
  };

  while (true) {
    if (h.num_edges() <= 2) {
      result.trace.push_back(FvsStep{FvsRule::few_edges, {}, {}, {}, 0});
      break;
    }

    const auto on_cycle = edges_on_cycles(h);
    if (on_cycle.size() < h.num_edges()) {
      const auto live = h.edges();
      std::vector<hedge_id> off;
      std::set_difference(live.begin(), live.end(), on_cycle.begin(), on_cycle.end(), std::back_inserter(off));
      auto next = h.without_edges(off);
      take(FvsStep{FvsRule::prune_off_cycle, {}, {}, off, 0}, std::move(next));
      continue;
    }

    const auto vs = h.non_isolated_vertices();
    if (auto it = std::find_if(vs.begin(), vs.end(), [&](hvertex_id v) { return h.degree(v) >= 3; });
        it != vs.end()) {
      const hvertex_id s = *it;
      std::vector<hedge_id> gone(h.incident(s).begin(), h.incident(s).end());
      const hvertex_id removed[] = {s};
      auto next = h.without_vertices(removed);
      take(FvsStep{FvsRule::high_degree, {s}, {s}, gone, 0}, std::move(next));
      continue;
    }

    if (auto it = std::find_if(vs.begin(), vs.end(), [&](hvertex_id v) { return h.degree(v) == 1; });
        it != vs.end()) {
      const hedge_id e1 = h.incident(*it)[0];
      // Every hyperedge is on a cycle here, and the cycle returned for e_1
      // starts v_1 e_1 v_2 e_2 v_3 ...; linearity makes its length >= 3.
      const Cycle c = *detail::shortest_cycle_through_edge(h, e1);
      const hvertex_id v3 = c.vertices[2];
      std::vector<hedge_id> gone{c.edges[0], c.edges[1], c.edges[2]};
      auto next = h.without_edges(gone);
      take(FvsStep{FvsRule::degree_one, {v3}, {}, gone, c.length()}, std::move(next));
      continue;
    }

    // 2-regular. C = v_1 e_1 ... v_k e_k v_1 shortest; u_i is the third vertex
    // of e_i and f_i the other hyperedge at u_i. Indices below are 0-based:
    // v_i lives at position i-1.
    Cycle c = *shortest_cycle(h);
    const std::size_t k = c.length();
    auto u_of = [&](std::size_t i) { return third_vertex(c.edges[i % k], c.vertices[i % k], c.vertices[(i + 1) % k]); };
    auto f_of = [&](std::size_t i) { return other_edge_at(u_of(i), c.edges[i % k]); };
    std::vector<hedge_id> gone(c.edges.begin(), c.edges.end());
    std::vector<hvertex_id> added;
    FvsRule rule{};

    if (k % 3 == 0) {
      rule = FvsRule::cycle_k0;
      for (std::size_t i = 3; i <= k; i += 3) added.push_back(c.vertices[i - 1]);
    } else if (k % 3 == 1) {
      if (f_of(0) != f_of(2) || f_of(1) != f_of(3)) {
        if (f_of(0) == f_of(2)) {
          // Relabel by rotating one step so that the new f_1 and f_3 are the
          // old f_2 and f_4, which differ.
          std::rotate(c.vertices.begin(), c.vertices.begin() + 1, c.vertices.end());
          std::rotate(c.edges.begin(), c.edges.begin() + 1, c.edges.end());
        }
        rule = FvsRule::cycle_k1;
        added = {u_of(0), u_of(2)};
        for (std::size_t i = 6; i <= k; i += 3) added.push_back(c.vertices[i - 1]);
        gone.assign(c.edges.begin(), c.edges.end());
        gone.push_back(f_of(0));
        gone.push_back(f_of(2));
      } else {
        rule = FvsRule::cycle_k1_paired;
        added = {u_of(1), u_of(3)};
        gone.push_back(f_of(0));
        gone.push_back(f_of(1));
      }
    } else {
      rule = FvsRule::cycle_k2;
      added = {u_of(0)};
      for (std::size_t i = 4; i <= k; i += 3) added.push_back(c.vertices[i - 1]);
      gone.push_back(f_of(0));
    }
    auto next = h.without_edges(gone);
    take(FvsStep{rule, std::move(added), {}, std::move(gone), k}, std::move(next));
  }

  std::sort(result.removed_vertices.begin(), result.removed_vertices.end());
  result.removed_vertices.erase(std::unique(result.removed_vertices.begin(), result.removed_vertices.end()),
                                result.removed_vertices.end());
  return result;
}

struct FesResult {
  std::vector<hedge_id> removed_hyperedges;  // sorted
};

/// Minimal feedback edge set by the greedy scan: start from all hyperedges
/// and, in id order, drop each one whose return to the kept (acyclic) part
/// creates no cycle. Kept hyperedges only accumulate, so every hyperedge left
/// in the set still closes a cycle at the end, which is minimality.
inline FesResult minimal_fes(const Hypergraph& h) {
  FesResult out;
  detail::DisjointSets sets(h.vertex_capacity());
  for (hedge_id e : h.edges()) {
    // Probe first so a rejected hyperedge leaves the forest untouched.
    const auto m = h.edge(e);
    bool closes = false;
    for (std::size_t i = 0; i < m.size() && !closes; ++i)
      for (std::size_t j = i + 1; j < m.size() && !closes; ++j) closes = sets.find(m[i]) == sets.find(m[j]);
    if (closes) {
      out.removed_hyperedges.push_back(e);
    } else {
      detail::join_if_acyclic(sets, m);
    }
  }
  return out;
}

/// 2|E| - |V'| + p with V' the non-isolated vertices and p their components.
/// Meaningful as a bound for linear 3-uniform hypergraphs. May be negative
/// only for inputs outside that class.
inline long long fes_size_bound(const Hypergraph& h) {
  return 2 * static_cast<long long>(h.num_edges()) - static_cast<long long>(h.non_isolated_vertices().size()) +
         static_cast<long long>(count_nontrivial_components(h));
}

}  // namespace tuza
