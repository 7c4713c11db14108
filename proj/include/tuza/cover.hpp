#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tuza/acyclic_solver.hpp"
#include "tuza/cycle_breaking.hpp"
#include "tuza/errors.hpp"
#include "tuza/graph.hpp"
#include "tuza/hypergraph.hpp"
#include "tuza/oracles.hpp"

namespace tuza {

enum class Strategy { fvs, fes, bipartite };

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::fvs: return "fvs";
    case Strategy::fes: return "fes";
    case Strategy::bipartite: return "bipartite";
  }
  return "?";
}

/// A cover plus everything needed to audit it.
///
/// For graph strategies `cover` and `breaker_part` hold graph edge ids, which
/// are also the vertex ids of the triangle hypergraph, and `packing` holds
/// hyperedge ids of that hypergraph, i.e. indices into enumerate_triangles(g).
/// For hypergraph_cover both refer to the hypergraph directly.
struct CoverCertificate {
  Strategy strategy = Strategy::fvs;
  std::vector<std::size_t> cover;
  std::vector<std::size_t> breaker_part;       // S: FVS, or one vertex per FES hyperedge
  std::optional<DualPair> residual_pair;       // acyclic solver output on what the breaker left
  std::size_t claimed_bound = 0;
  std::string bound_expression;
  std::vector<std::size_t> packing;            // pairwise disjoint hyperedges: a lower bound on nu
  bool condition_proven = false;               // the strategy's sufficient condition holds, proven by `packing` or exact counts
  std::optional<FvsResult> fvs;
  std::optional<FesResult> fes;
  std::vector<std::pair<Strategy, std::size_t>> candidates;  // best_cover: size per strategy

  std::size_t size() const noexcept { return cover.size(); }
  /// |cover| <= 2 |packing| <= 2 nu.
  bool within_twice_packing() const noexcept { return cover.size() <= 2 * packing.size(); }
};

namespace detail {

/// Grows a matching greedily with the remaining hyperedges in id order.
inline std::vector<hedge_id> extend_matching(const Hypergraph& h, std::vector<hedge_id> matching) {
  std::vector<char> used(h.vertex_capacity(), 0);
  for (hedge_id e : matching)
    for (hvertex_id v : h.edge(e)) used[v] = 1;
  for (hedge_id e : h.edges()) {
    const auto m = h.edge(e);
    if (std::any_of(m.begin(), m.end(), [&](hvertex_id v) { return used[v]; })) continue;
    for (hvertex_id v : m) used[v] = 1;
    matching.push_back(e);
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

inline std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// FVS route on a linear 3-uniform hypergraph.
inline CoverCertificate transversal_via_fvs(const Hypergraph& h) {
  CoverCertificate c;
  c.strategy = Strategy::fvs;
  FvsResult fvs = fvs_alg1(h);
  DualPair rest = solve_acyclic(h.without_vertices(fvs.removed_vertices));
  c.breaker_part = fvs.removed_vertices;
  c.cover = sorted_union(fvs.removed_vertices, rest.transversal);
  c.claimed_bound = h.num_edges() / 3 + rest.transversal.size();
  c.bound_expression = "floor(|T|/3) + |R|";
  c.packing = extend_matching(h, rest.matching);
  c.condition_proven = 3 * c.packing.size() >= h.num_edges();
  c.residual_pair = std::move(rest);
  c.fvs = std::move(fvs);
  return c;
}

/// FES route: one vertex (the least) per FES hyperedge plus an exact
/// transversal of the acyclic remainder.
inline CoverCertificate transversal_via_fes(const Hypergraph& h) {
  CoverCertificate c;
  c.strategy = Strategy::fes;
  FesResult fes = minimal_fes(h);
  DualPair rest = solve_acyclic(h.without_edges(fes.removed_hyperedges));
  for (hedge_id f : fes.removed_hyperedges) c.breaker_part.push_back(h.edge(f)[0]);
  std::sort(c.breaker_part.begin(), c.breaker_part.end());
  c.breaker_part.erase(std::unique(c.breaker_part.begin(), c.breaker_part.end()), c.breaker_part.end());
  c.cover = sorted_union(c.breaker_part, rest.transversal);
  c.claimed_bound = rest.transversal.size() + fes.removed_hyperedges.size();
  c.bound_expression = "|R| + |F|";
  c.packing = extend_matching(h, rest.matching);
  // |V'| >= 2|E| over non-isolated vertices forces |F| <= p <= nu.
  c.condition_proven = h.num_edges() > 0 && h.non_isolated_vertices().size() >= 2 * h.num_edges();
  c.residual_pair = std::move(rest);
  c.fes = std::move(fes);
  return c;
}

}  // namespace detail

/// S = fvs_alg1(H_G), R = exact transversal of H_G - S. |S| <= |T|/3, so
/// nu_t >= |T|/3 gives |S u R| <= 2 nu_t.
inline CoverCertificate cover_via_fvs(const Graph& g) {
  return detail::transversal_via_fvs(triangle_hypergraph(g));
}

/// F = minimal FES of H_G, S = least edge id of each triangle in F, R = exact
/// transversal of H_G - F. Edges on no triangle are isolated in H_G and never
/// enter the cover, which is the same as working on the irreducible subgraph.
/// For irreducible g with |E| >= 2|T|: |F| <= p <= nu_t.
inline CoverCertificate cover_via_fes(const Graph& g) {
  return detail::transversal_via_fes(triangle_hypergraph(g));
}

/// Edges left uncut by local_search_bipartition; at most floor(|E|/2), hence
/// within 2 nu_t whenever nu_t >= |E|/4.
inline CoverCertificate cover_via_bipartite(const Graph& g) {
  CoverCertificate c;
  c.strategy = Strategy::bipartite;
  c.cover = bipartite_cut_cover(g);
  c.claimed_bound = g.num_edges() / 2;
  c.bound_expression = "floor(|E|/2)";
  const Hypergraph h = triangle_hypergraph(g);
  c.packing = detail::extend_matching(h, {});
  c.condition_proven = g.num_edges() > 0 && 4 * c.packing.size() >= g.num_edges();
  return c;
}

/// Runs all three strategies and keeps the smallest cover (ties: fvs, fes,
/// bipartite). The result carries the largest packing seen and is marked
/// condition_proven if any strategy's condition was proven, since the smallest
/// cover is no larger than that strategy's.
inline CoverCertificate best_cover(const Graph& g) {
  CoverCertificate candidates[] = {cover_via_fvs(g), cover_via_fes(g), cover_via_bipartite(g)};
  std::size_t pick = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (candidates[i].size() < candidates[pick].size()) pick = i;
  CoverCertificate out = candidates[pick];
  out.candidates.clear();
  for (const auto& c : candidates) {
    out.candidates.emplace_back(c.strategy, c.size());
    if (c.packing.size() > out.packing.size()) out.packing = c.packing;
    out.condition_proven = out.condition_proven || c.condition_proven;
  }
  return out;
}

inline CoverCertificate cover_with(const Graph& g, std::optional<Strategy> s) {
  if (!s) return best_cover(g);
  switch (*s) {
    case Strategy::fvs: return cover_via_fvs(g);
    case Strategy::fes: return cover_via_fes(g);
    case Strategy::bipartite: return cover_via_bipartite(g);
  }
  return best_cover(g);
}

/// Transversal of a linear 3-uniform hypergraph without isolated vertices:
/// the smaller of the FVS and FES routes (ties: fvs). Within 2 nu if
/// nu >= |E|/3 or |V| >= 2|E|.
inline CoverCertificate hypergraph_cover(const Hypergraph& h) {
  if (!is_k_uniform(h, 3)) throw precondition_error("not 3-uniform");
  require_linear(h);
  if (h.non_isolated_vertices().size() != h.num_vertices()) throw precondition_error("hypergraph has isolated vertices");
  CoverCertificate via_fvs = detail::transversal_via_fvs(h);
  CoverCertificate via_fes = detail::transversal_via_fes(h);
  CoverCertificate out = via_fes.size() < via_fvs.size() ? via_fes : via_fvs;
  out.candidates = {{Strategy::fvs, via_fvs.size()}, {Strategy::fes, via_fes.size()}};
  if (via_fvs.packing.size() > out.packing.size()) out.packing = via_fvs.packing;
  if (via_fes.packing.size() > out.packing.size()) out.packing = via_fes.packing;
  out.condition_proven = via_fvs.condition_proven || via_fes.condition_proven;
  return out;
}

/// Re-checks a graph certificate from scratch.
inline bool verify_certificate(const Graph& g, const CoverCertificate& c) {
  for (std::size_t e : c.cover)
    if (e >= g.num_edges()) return false;
  if (!is_triangle_cover(g, c.cover) || c.cover.size() > c.claimed_bound) return false;
  const auto triangles = enumerate_triangles(g);
  PackingWitness p;
  for (std::size_t t : c.packing) {
    if (t >= triangles.size()) return false;
    p.triangles.push_back(triangles[t]);
  }
  return is_edge_disjoint(g, p);
}

// ---------------------------------------------------------------------------
// Condition report

enum class ConditionStatus { proven_true, proven_false, unknown, not_applicable };

inline std::string_view to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::proven_true: return "proven-true";
    case ConditionStatus::proven_false: return "proven-false";
    case ConditionStatus::unknown: return "unknown";
    case ConditionStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

struct Fraction {
  std::size_t num = 0;
  std::size_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// One sufficient condition "quantity / denominator >= threshold", together
/// with the weaker critical threshold below which nothing is claimed.
struct ConditionCheck {
  Fraction threshold;
  Fraction critical;
  ConditionStatus status = ConditionStatus::not_applicable;
  ConditionStatus critical_status = ConditionStatus::not_applicable;
  std::optional<Fraction> lower;  // ratio using the lower bound on the numerator
  std::optional<Fraction> upper;  // ratio using the upper bound on the numerator
};

struct ConditionReport {
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::size_t n_edges_irreducible = 0;
  std::size_t n_triangles = 0;
  std::size_t nu_lower = 0;              // size of a packing witness
  std::size_t nu_upper = 0;              // smallest cover found; nu_t <= tau_t <= this
  std::optional<std::size_t> nu_exact;
  ConditionCheck cond_i;                 // nu_t / |T| >= 1/3
  ConditionCheck cond_ii;                // nu_t / |E| >= 1/4
  ConditionCheck cond_iii;               // |E_irr| / |T| >= 2, decided exactly
  std::optional<Fraction> edges_per_triangle_raw;
};

namespace detail {

inline ConditionStatus compare_at_least(std::size_t lo, std::size_t hi, std::size_t den, Fraction t) {
  // lo/den >= t  <=>  lo * t.den >= t.num * den
  if (lo * t.den >= t.num * den) return ConditionStatus::proven_true;
  if (hi * t.den < t.num * den) return ConditionStatus::proven_false;
  return ConditionStatus::unknown;
}

inline ConditionCheck check_ratio(std::size_t lo, std::size_t hi, std::size_t den, Fraction threshold, Fraction critical) {
  ConditionCheck c;
  c.threshold = threshold;
  c.critical = critical;
  if (den == 0) return c;
  c.status = compare_at_least(lo, hi, den, threshold);
  c.critical_status = compare_at_least(lo, hi, den, critical);
  c.lower = Fraction{lo, den};
  c.upper = Fraction{hi, den};
  return c;
}

}  // namespace detail

/// Condition statuses for the three sufficient conditions. Without the oracle
/// the packing number is bracketed by a packing witness (below) and the
/// smallest cover found (above), which can prove a condition true or false;
/// with the oracle it is exact. Triangle-free graphs report not-applicable.
inline ConditionReport condition_report(const Graph& g, bool use_oracle,
                                        const OracleBudget& budget = OracleBudget::for_graphs()) {
  ConditionReport r;
  r.n_vertices = g.num_vertices();
  r.n_edges = g.num_edges();
  r.n_edges_irreducible = irreducible_subgraph(g).num_edges();
  r.n_triangles = enumerate_triangles(g).size();
  if (use_oracle) r.nu_exact = exact_nu_t(g, budget).size();

  const CoverCertificate best = best_cover(g);
  r.nu_lower = std::max(best.packing.size(), greedy_triangle_packing(g).size());
  r.nu_upper = best.size();
  std::size_t lo = r.nu_lower, hi = r.nu_upper;
  if (r.nu_exact) lo = hi = *r.nu_exact;

  if (r.n_triangles > 0) {
    r.cond_i = detail::check_ratio(lo, hi, r.n_triangles, {1, 3}, {1, 4});
    r.cond_ii = detail::check_ratio(lo, hi, r.n_edges, {1, 4}, {1, 5});
    r.cond_iii = detail::check_ratio(r.n_edges_irreducible, r.n_edges_irreducible, r.n_triangles, {2, 1}, {3, 2});
    r.edges_per_triangle_raw = Fraction{r.n_edges, r.n_triangles};
  } else {
    r.cond_i = detail::check_ratio(0, 0, 0, {1, 3}, {1, 4});
    r.cond_ii = detail::check_ratio(0, 0, 0, {1, 4}, {1, 5});
    r.cond_iii = detail::check_ratio(0, 0, 0, {2, 1}, {3, 2});
  }
  return r;
}

inline bool any_condition_proven(const ConditionReport& r) {
  return r.cond_i.status == ConditionStatus::proven_true || r.cond_ii.status == ConditionStatus::proven_true ||
         r.cond_iii.status == ConditionStatus::proven_true;
}

}  // namespace tuza
