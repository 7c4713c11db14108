#pragma once

// JSON documents emitted by the command-line tool. Every document carries
// "schema": 1 and a "kind". Keys keep insertion order so output is stable
// byte for byte.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tuza/acyclic_solver.hpp"
#include "tuza/cover.hpp"
#include "tuza/cycle_breaking.hpp"
#include "tuza/experiment.hpp"
#include "tuza/io.hpp"

namespace tuza {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

namespace detail {

inline json header(const char* kind) {
  json j;
  j["schema"] = schema_version;
  j["kind"] = kind;
  return j;
}

inline json fraction_json(const std::optional<Fraction>& f) {
  if (!f) return nullptr;
  return json{{"num", f->num}, {"den", f->den}, {"value", f->value()}};
}

inline std::string fraction_text(Fraction f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

/// Renders hypergraph vertex and hyperedge ids for output.
struct Renderer {
  std::function<json(std::size_t)> vertex;
  std::function<json(std::size_t)> edge;

  template <typename Ids, typename Fn>
  static json list(const Ids& ids, const Fn& fn) {
    json arr = json::array();
    for (std::size_t id : ids) arr.push_back(fn(id));
    return arr;
  }
  template <typename Ids>
  json vertices(const Ids& ids) const { return list(ids, vertex); }
  template <typename Ids>
  json edges(const Ids& ids) const { return list(ids, edge); }
};

/// Graph edges render as [u, v] label pairs, triangles as [a, b, c].
inline Renderer graph_renderer(const LabeledGraph& lg, const std::vector<Triangle>& triangles) {
  return Renderer{
      [&lg](std::size_t e) { return json::array({lg.labels[lg.graph.edge(e).u], lg.labels[lg.graph.edge(e).v]}); },
      [&lg, &triangles](std::size_t t) {
        const auto& v = triangles[t].vertices;
        return json::array({lg.labels[v[0]], lg.labels[v[1]], lg.labels[v[2]]});
      }};
}

inline Renderer hypergraph_renderer(const LabeledHypergraph& lh) {
  return Renderer{[&lh](std::size_t v) { return json(lh.labels[v]); },
                  [&lh](std::size_t e) {
                    json arr = json::array();
                    for (hvertex_id v : lh.hypergraph.edge(e)) arr.push_back(lh.labels[v]);
                    return arr;
                  }};
}

}  // namespace detail

inline json fvs_trace_json(const FvsResult& r, const detail::Renderer& render) {
  json steps = json::array();
  for (const FvsStep& s : r.trace) {
    json step;
    step["rule"] = std::string(to_string(s.rule));
    step["added"] = render.vertices(s.added);
    step["deleted_hyperedges"] = render.edges(s.deleted_edges);
    if (s.cycle_length) step["cycle_length"] = s.cycle_length;
    steps.push_back(std::move(step));
  }
  return steps;
}

inline json certificate_json(const LabeledGraph& lg, const CoverCertificate& c, bool explain) {
  const auto triangles = enumerate_triangles(lg.graph);
  const auto render = detail::graph_renderer(lg, triangles);
  json j = detail::header("triangle-cover");
  j["strategy"] = std::string(to_string(c.strategy));
  j["graph"] = {{"vertices", lg.graph.num_vertices()}, {"edges", lg.graph.num_edges()}, {"triangles", triangles.size()}};
  j["cover"] = render.vertices(c.cover);
  j["cover_size"] = c.size();
  j["claimed_bound"] = c.claimed_bound;
  j["bound_expression"] = c.bound_expression;
  j["valid"] = is_triangle_cover(lg.graph, c.cover) && c.size() <= c.claimed_bound;
  j["packing"] = render.edges(c.packing);
  j["packing_lower_bound"] = c.packing.size();
  j["within_twice_packing"] = c.within_twice_packing();
  j["condition_proven"] = c.condition_proven;
  if (!c.candidates.empty()) {
    json cand = json::object();
    for (auto [s, n] : c.candidates) cand[std::string(to_string(s))] = n;
    j["candidates"] = std::move(cand);
  }
  if (explain) {
    json ex;
    ex["breaker_part"] = render.vertices(c.breaker_part);
    if (c.residual_pair) {
      ex["residual"] = {{"transversal", render.vertices(c.residual_pair->transversal)},
                        {"matching", render.edges(c.residual_pair->matching)}};
    }
    if (c.fvs) ex["fvs_trace"] = fvs_trace_json(*c.fvs, render);
    if (c.fes) ex["fes"] = render.edges(c.fes->removed_hyperedges);
    j["explain"] = std::move(ex);
  }
  return j;
}

namespace detail {

inline json condition_json(const char* statement, const ConditionCheck& c) {
  json j;
  j["statement"] = statement;
  j["threshold"] = fraction_text(c.threshold);
  j["status"] = std::string(to_string(c.status));
  const bool exact = c.lower && c.upper && *c.lower == *c.upper;
  j["ratio"] = exact ? fraction_json(c.lower) : json(nullptr);
  j["ratio_lower"] = fraction_json(c.lower);
  j["ratio_upper"] = fraction_json(c.upper);
  j["critical_threshold"] = fraction_text(c.critical);
  j["critical_status"] = std::string(to_string(c.critical_status));
  return j;
}

}  // namespace detail

inline json condition_report_json(const ConditionReport& r) {
  json j = detail::header("condition-report");
  j["graph"] = {{"vertices", r.n_vertices},
                {"edges", r.n_edges},
                {"edges_irreducible", r.n_edges_irreducible},
                {"triangles", r.n_triangles}};
  j["nu_t"] = {{"lower", r.nu_lower}, {"upper", r.nu_upper}, {"exact", r.nu_exact ? json(*r.nu_exact) : json(nullptr)}};
  json cond;
  cond["i"] = detail::condition_json("nu_t / |T| >= 1/3", r.cond_i);
  cond["ii"] = detail::condition_json("nu_t / |E| >= 1/4", r.cond_ii);
  cond["iii"] = detail::condition_json("|E_irreducible| / |T| >= 2", r.cond_iii);
  cond["iii"]["ratio_raw"] = detail::fraction_json(r.edges_per_triangle_raw);
  j["conditions"] = std::move(cond);
  j["any_condition_proven"] = any_condition_proven(r);
  return j;
}

inline json fvs_json(const LabeledHypergraph& lh, const FvsResult& r) {
  const Hypergraph& h = lh.hypergraph;
  const auto render = detail::hypergraph_renderer(lh);
  json j = detail::header("fvs");
  j["hypergraph"] = {{"vertices", h.num_vertices()}, {"hyperedges", h.num_edges()}};
  j["fvs"] = render.vertices(r.removed_vertices);
  j["size"] = r.removed_vertices.size();
  j["bound"] = h.num_edges() / 3;
  j["within_bound"] = r.removed_vertices.size() <= h.num_edges() / 3;
  j["acyclic_after_removal"] = is_acyclic(h.without_vertices(r.removed_vertices));
  j["trace"] = fvs_trace_json(r, render);
  return j;
}

inline json fes_json(const LabeledHypergraph& lh, const FesResult& r) {
  const Hypergraph& h = lh.hypergraph;
  const auto render = detail::hypergraph_renderer(lh);
  json j = detail::header("fes");
  j["hypergraph"] = {{"vertices", h.num_vertices()}, {"hyperedges", h.num_edges()}};
  j["fes"] = render.edges(r.removed_hyperedges);
  j["size"] = r.removed_hyperedges.size();
  const bool bound_applies = is_k_uniform(h, 3) && is_linear(h);
  if (bound_applies) {
    const long long bound = fes_size_bound(h);
    j["bound"] = bound;
    j["within_bound"] = static_cast<long long>(r.removed_hyperedges.size()) <= bound;
  } else {
    j["bound"] = nullptr;
    j["within_bound"] = nullptr;
  }
  const Hypergraph rest = h.without_edges(r.removed_hyperedges);
  bool minimal = true;
  for (hedge_id e : r.removed_hyperedges) {
    std::vector<hedge_id> others;
    for (hedge_id f : r.removed_hyperedges)
      if (f != e) others.push_back(f);
    minimal = minimal && !is_acyclic(h.without_edges(others));
  }
  j["acyclic_after_removal"] = is_acyclic(rest);
  j["minimal"] = minimal;
  return j;
}

inline json dual_pair_json(const LabeledHypergraph& lh, const DualPair& d) {
  const auto render = detail::hypergraph_renderer(lh);
  json j = detail::header("solve-acyclic");
  j["hypergraph"] = {{"vertices", lh.hypergraph.num_vertices()}, {"hyperedges", lh.hypergraph.num_edges()}};
  j["transversal"] = render.vertices(d.transversal);
  j["matching"] = render.edges(d.matching);
  j["tau"] = d.transversal.size();
  j["nu"] = d.matching.size();
  j["optimal"] = d.transversal.size() == d.matching.size() && is_transversal(lh.hypergraph, d.transversal) &&
                 is_matching(lh.hypergraph, d.matching);
  return j;
}

inline json experiment_json(const ExperimentResult& r) {
  json j = detail::header("random-experiment");
  j["spec"] = {{"n", r.spec.n},
               {"p", r.spec.p},
               {"trials", r.spec.trials},
               {"seed", r.spec.seed},
               {"estimator", std::string(to_string(r.spec.estimator))},
               {"rng", "mt19937_64, seed + trial, uniform01 = (x >> 11) * 2^-53"}};
  json trials = json::array();
  for (const auto& t : r.records) {
    json rec;
    rec["trial"] = t.trial;
    rec["seed"] = t.seed;
    rec["edges"] = t.edges;
    rec["triangles"] = t.triangles;
    rec["steiner_survivors"] = t.steiner_survivors;
    rec["packing_lower_bound"] = t.packing_lower_bound;
    rec["cover_size"] = t.cover_size;
    const json na = std::string(to_string(ConditionStatus::not_applicable));
    rec["packing_per_edge"] = t.edges ? json(double(t.packing_lower_bound) / double(t.edges)) : na;
    rec["cover_per_packing"] =
        t.packing_lower_bound ? json(double(t.cover_size) / double(t.packing_lower_bound)) : na;
    rec["packing_ge_quarter_edges"] = t.packing_at_least_quarter_edges();
    rec["cover_le_twice_packing"] = t.cover_within_twice_packing();
    trials.push_back(std::move(rec));
  }
  j["trials"] = std::move(trials);
  j["aggregate"] = {{"trials", r.aggregate.trials},
                    {"packing_ge_quarter_edges", r.aggregate.packing_at_least_quarter_edges},
                    {"cover_le_twice_packing", r.aggregate.cover_within_twice_packing},
                    {"fraction_packing_ge_quarter_edges", r.aggregate.fraction_packing()},
                    {"fraction_cover_le_twice_packing", r.aggregate.fraction_cover()}};
  return j;
}

/// Independent re-check of an emitted triangle-cover document against the
/// graph it was produced from. Returns a list of problems; empty means valid.
inline std::vector<std::string> verify_certificate_json(const LabeledGraph& lg, const json& cert) {
  std::vector<std::string> problems;
  const Graph& g = lg.graph;
  std::unordered_map<std::string, vertex_id> id;
  for (vertex_id v = 0; v < lg.labels.size(); ++v) id.emplace(lg.labels[v], v);
  auto lookup = [&](const json& label, vertex_id& out) {
    if (!label.is_string()) return false;
    auto it = id.find(label.get<std::string>());
    if (it == id.end()) return false;
    out = it->second;
    return true;
  };
  if (!cert.contains("schema") || cert["schema"] != schema_version) problems.push_back("unsupported schema");
  if (!cert.contains("cover") || !cert["cover"].is_array()) {
    problems.push_back("missing cover");
    return problems;
  }
  std::vector<edge_id> cover;
  for (const json& pair : cert["cover"]) {
    vertex_id a = 0, b = 0;
    std::optional<edge_id> e;
    if (pair.is_array() && pair.size() == 2 && lookup(pair[0], a) && lookup(pair[1], b)) e = g.find_edge(a, b);
    if (!e) {
      problems.push_back("cover entry " + pair.dump() + " is not an edge of the graph");
      continue;
    }
    cover.push_back(*e);
  }
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  if (!is_triangle_cover(g, cover)) problems.push_back("cover misses a triangle");
  if (cert.contains("claimed_bound") && cert["claimed_bound"].is_number_unsigned() &&
      cover.size() > cert["claimed_bound"].get<std::size_t>())
    problems.push_back("cover exceeds claimed bound");
  if (cert.contains("packing")) {
    PackingWitness p;
    for (const json& tri : cert["packing"]) {
      vertex_id a = 0, b = 0, c = 0;
      if (!(tri.is_array() && tri.size() == 3 && lookup(tri[0], a) && lookup(tri[1], b) && lookup(tri[2], c))) {
        problems.push_back("packing entry " + tri.dump() + " is malformed");
        continue;
      }
      auto ab = g.find_edge(a, b), ac = g.find_edge(a, c), bc = g.find_edge(b, c);
      if (!ab || !ac || !bc) {
        problems.push_back("packing entry " + tri.dump() + " is not a triangle");
        continue;
      }
      p.triangles.push_back(Triangle{{a, b, c}, {*ab, *ac, *bc}});
    }
    if (!is_edge_disjoint(g, p)) problems.push_back("packing triangles share an edge");
    if (cert.value("within_twice_packing", false) && cover.size() > 2 * p.size())
      problems.push_back("cover is larger than twice the packing");
  }
  return problems;
}

}  // namespace tuza
