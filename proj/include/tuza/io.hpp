#pragma once

// Text formats.
//
//   graph file:       one edge per line, "u v"
//   hypergraph file:  one hyperedge per line, "a b c ..."
//
// Tokens are whitespace-separated labels. '#' starts a comment that runs to
// the end of the line; blank lines are skipped. Labels become dense ids in
// order of first occurrence. Hyperedge ids are line order.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tuza/errors.hpp"
#include "tuza/graph.hpp"
#include "tuza/hypergraph.hpp"

namespace tuza {

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // by vertex id
};

struct LabeledHypergraph {
  Hypergraph hypergraph;
  std::vector<std::string> labels;      // by vertex id
  std::vector<std::size_t> edge_lines;  // 1-based source line by hyperedge id
};

namespace detail {

struct LabelTable {
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::string> labels;

  std::size_t intern(const std::string& s) {
    auto [it, fresh] = ids.emplace(s, labels.size());
    if (fresh) labels.push_back(s);
    return it->second;
  }
};

/// Splits each line into tokens, dropping comments and blank lines.
template <typename Fn>
void for_each_record(std::istream& in, Fn fn) {
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
    if (!tokens.empty()) fn(lineno, tokens);
  }
}

}  // namespace detail

inline LabeledGraph parse_graph(std::istream& in) {
  detail::LabelTable table;
  std::vector<std::pair<vertex_id, vertex_id>> pairs;
  std::map<std::pair<vertex_id, vertex_id>, std::size_t> seen;
  detail::for_each_record(in, [&](std::size_t lineno, const std::vector<std::string>& tok) {
    if (tok.size() != 2)
      throw parse_error(lineno, "expected 2 labels per edge, got " + std::to_string(tok.size()));
    if (tok[0] == tok[1]) throw parse_error(lineno, "self-loop at '" + tok[0] + "'");
    const vertex_id a = table.intern(tok[0]), b = table.intern(tok[1]);
    const auto key = std::minmax(a, b);
    if (auto [it, fresh] = seen.emplace(key, lineno); !fresh)
      throw parse_error(lineno, "duplicate edge '" + tok[0] + " " + tok[1] + "' (first on line " +
                                    std::to_string(it->second) + ")");
    pairs.emplace_back(a, b);
  });
  return LabeledGraph{Graph(table.labels.size(), std::move(pairs)), std::move(table.labels)};
}

inline LabeledHypergraph parse_hypergraph(std::istream& in) {
  detail::LabelTable table;
  std::vector<std::vector<hvertex_id>> edges;
  std::vector<std::size_t> lines;
  std::map<std::vector<hvertex_id>, std::size_t> seen;
  detail::for_each_record(in, [&](std::size_t lineno, const std::vector<std::string>& tok) {
    std::vector<hvertex_id> members;
    for (const auto& t : tok) members.push_back(table.intern(t));
    auto key = members;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw parse_error(lineno, "hyperedge repeats a vertex");
    if (auto [it, fresh] = seen.emplace(key, lineno); !fresh)
      throw parse_error(lineno, "duplicate hyperedge (first on line " + std::to_string(it->second) + ")");
    edges.push_back(std::move(members));
    lines.push_back(lineno);
  });
  return LabeledHypergraph{Hypergraph(table.labels.size(), std::move(edges)), std::move(table.labels),
                           std::move(lines)};
}

inline LabeledGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline LabeledHypergraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

inline LabeledGraph read_graph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_graph(in);
}

inline LabeledHypergraph read_hypergraph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_hypergraph(in);
}

/// Labels default to the decimal vertex ids.
inline LabeledGraph with_default_labels(Graph g) {
  std::vector<std::string> labels;
  for (vertex_id v = 0; v < g.num_vertices(); ++v) labels.push_back(std::to_string(v));
  return LabeledGraph{std::move(g), std::move(labels)};
}

/// Writes the edge list so that parsing it back yields the same ids. Each
/// vertex is introduced in id order by an edge to a smaller vertex, or paired
/// with the next id when it has no smaller neighbour; the remaining edges
/// follow in id order. Graphs that cannot be introduced this way (for example
/// with isolated vertices) are written in plain id order.
inline void write_graph(std::ostream& out, const LabeledGraph& lg) {
  const Graph& g = lg.graph;
  std::vector<edge_id> order;
  std::vector<char> written(g.num_edges(), 0), introduced(g.num_vertices(), 0);
  bool faithful = true;
  auto emit = [&](edge_id e) {
    order.push_back(e);
    written[e] = 1;
    introduced[g.edge(e).u] = introduced[g.edge(e).v] = 1;
  };
  for (vertex_id v = 0; v < g.num_vertices() && faithful; ++v) {
    if (introduced[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (!nbrs.empty() && nbrs.front() < v) {
      emit(*g.find_edge(nbrs.front(), v));
    } else if (auto e = g.find_edge(v, v + 1); v + 1 < g.num_vertices() && e) {
      emit(*e);
    } else {
      faithful = false;
    }
  }
  if (!faithful) {
    order.clear();
    std::fill(written.begin(), written.end(), 0);
  }
  for (edge_id e = 0; e < g.num_edges(); ++e)
    if (!written[e]) order.push_back(e);
  for (edge_id e : order) out << lg.labels[g.edge(e).u] << ' ' << lg.labels[g.edge(e).v] << '\n';
}

/// One line per live hyperedge in id order, members in id order.
inline void write_hypergraph(std::ostream& out, const LabeledHypergraph& lh) {
  for (hedge_id e : lh.hypergraph.edges()) {
    const auto m = lh.hypergraph.edge(e);
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << lh.labels[m[i]];
    out << '\n';
  }
}

}  // namespace tuza
