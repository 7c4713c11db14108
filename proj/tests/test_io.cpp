#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace tuza;
using namespace testing_support;

namespace {

std::size_t error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const parse_error& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error";
  return 0;
}

}  // namespace

TEST(ParseGraph, Triangle) {
  const LabeledGraph lg = parse_graph_text("1 2\n2 3\n1 3\n");
  EXPECT_EQ(lg.graph, complete_graph(3));
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"1", "2", "3"}));
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const LabeledGraph lg = parse_graph_text("# comment\n\n1 2");
  EXPECT_EQ(lg.graph.num_vertices(), 2u);
  EXPECT_EQ(lg.graph.num_edges(), 1u);
  EXPECT_EQ(parse_graph_text("a b # trailing\n  \n\tb c\n").graph.num_edges(), 2u);
}

TEST(ParseGraph, LabelsInFirstOccurrenceOrder) {
  const LabeledGraph lg = parse_graph_text("z y\nx z\n");
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"z", "y", "x"}));
  EXPECT_TRUE(lg.graph.has_edge(0, 1));
  EXPECT_TRUE(lg.graph.has_edge(0, 2));
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(error_line([] { parse_graph_text("1 1"); }), 1u);
  EXPECT_EQ(error_line([] { parse_graph_text("1 2\n\n2 1\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_graph_text("a b\na b c d\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_graph_text("a\n"); }), 1u);
  try {
    parse_graph_text("a b\na b c d\n");
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseHypergraph, BasicAndErrors) {
  const LabeledHypergraph lh = parse_hypergraph_text("# lines\na b c\nc d e\n");
  EXPECT_EQ(lh.hypergraph.num_edges(), 2u);
  EXPECT_EQ(lh.edge_lines, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(error_line([] { parse_hypergraph_text("a b c\nc b a\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_hypergraph_text("a a b\n"); }), 1u);
  EXPECT_EQ(parse_hypergraph_text("a b c d\n").hypergraph.edge(0).size(), 4u);
}

TEST(ParseFiles, MissingFileIsParseError) {
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), parse_error);
  EXPECT_THROW(read_hypergraph_file("/nonexistent/h.txt"), parse_error);
}

TEST(RoundTrip, GraphsReparseIdentically) {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 200; ++round) {
    LabeledGraph lg = with_default_labels(random_graph(2 + rng() % 15, uniform01(rng), rng));
    for (auto& l : lg.labels) l = "v" + l;
    std::ostringstream out;
    write_graph(out, lg);
    const LabeledGraph back = parse_graph_text(out.str());
    // Isolated vertices cannot be written; compare on the relabelled structure.
    std::map<std::string, std::size_t> id;
    for (std::size_t v = 0; v < back.labels.size(); ++v) id[back.labels[v]] = v;
    ASSERT_EQ(back.graph.num_edges(), lg.graph.num_edges());
    for (const Edge& e : lg.graph.edges()) EXPECT_TRUE(back.graph.has_edge(id[lg.labels[e.u]], id[lg.labels[e.v]]));
    std::ostringstream again;
    write_graph(again, back);
    EXPECT_EQ(parse_graph_text(again.str()).graph, back.graph);
  }
}

TEST(RoundTrip, GraphWithoutIsolatedVerticesKeepsIds) {
  const LabeledGraph lg = with_default_labels(complete_graph(6));
  std::ostringstream out;
  write_graph(out, lg);
  const LabeledGraph back = parse_graph_text(out.str());
  EXPECT_EQ(back.graph, lg.graph);
  EXPECT_EQ(back.labels, lg.labels);
  const LabeledGraph book = with_default_labels(book_graph(4));
  std::ostringstream b;
  write_graph(b, book);
  EXPECT_EQ(parse_graph_text(b.str()).graph, book.graph);
}

TEST(RoundTrip, Hypergraphs) {
  std::mt19937_64 rng(72);
  for (int round = 0; round < 100; ++round) {
    const Hypergraph h = random_linear_3uniform(12, 1 + rng() % 10, rng);
    LabeledHypergraph lh{h, {}, {}};
    for (std::size_t v = 0; v < h.vertex_capacity(); ++v) lh.labels.push_back("p" + std::to_string(v));
    std::ostringstream out;
    write_hypergraph(out, lh);
    const LabeledHypergraph back = parse_hypergraph_text(out.str());
    ASSERT_EQ(back.hypergraph.num_edges(), h.num_edges());
    for (hedge_id e : h.edges()) {
      std::vector<std::string> a, b;
      for (auto v : h.edge(e)) a.push_back(lh.labels[v]);
      for (auto v : back.hypergraph.edge(e)) b.push_back(back.labels[v]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
    std::ostringstream again;
    write_hypergraph(again, back);
    EXPECT_EQ(parse_hypergraph_text(again.str()).hypergraph, back.hypergraph);
  }
}

TEST(Serialize, CertificateFields) {
  const LabeledGraph lg = parse_graph_text("a b\na c\na d\nb c\nb d\nc d\n");
  const json j = certificate_json(lg, best_cover(lg.graph), false);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["kind"], "triangle-cover");
  EXPECT_EQ(j["cover_size"], 2);
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["cover"].size(), 2u);
  EXPECT_TRUE(j["cover"][0][0].is_string());
  EXPECT_FALSE(j.contains("explain"));
  const json ex = certificate_json(lg, cover_via_fvs(lg.graph), true);
  ASSERT_TRUE(ex.contains("explain"));
  EXPECT_TRUE(ex["explain"].contains("fvs_trace"));
  EXPECT_TRUE(ex["explain"].contains("residual"));
}

TEST(Serialize, CertificatesReverify) {
  std::mt19937_64 rng(73);
  for (int round = 0; round < 60; ++round) {
    const LabeledGraph lg = with_default_labels(random_graph(3 + rng() % 12, uniform01(rng), rng));
    for (std::optional<Strategy> s : {std::optional<Strategy>{}, std::optional{Strategy::fvs},
                                      std::optional{Strategy::fes}, std::optional{Strategy::bipartite}}) {
      const json j = certificate_json(lg, cover_with(lg.graph, s), round % 2 == 0);
      EXPECT_TRUE(verify_certificate_json(lg, json::parse(j.dump())).empty());
    }
  }
}

TEST(Serialize, VerifyCatchesTampering) {
  const LabeledGraph lg = with_default_labels(complete_graph(5));
  json j = certificate_json(lg, best_cover(lg.graph), false);
  j["cover"].erase(j["cover"].begin());
  EXPECT_FALSE(verify_certificate_json(lg, j).empty());
  json bogus = certificate_json(lg, best_cover(lg.graph), false);
  bogus["cover"].push_back(json::array({"0", "nope"}));
  EXPECT_FALSE(verify_certificate_json(lg, bogus).empty());
  json overlap = certificate_json(lg, best_cover(lg.graph), false);
  overlap["packing"] = json::array({json::array({"0", "1", "2"}), json::array({"0", "1", "3"})});
  EXPECT_FALSE(verify_certificate_json(lg, overlap).empty());
}

TEST(Serialize, ConditionReportRatios) {
  const json j = condition_report_json(condition_report(complete_graph(4), false));
  EXPECT_EQ(j["kind"], "condition-report");
  EXPECT_DOUBLE_EQ(j["conditions"]["iii"]["ratio"]["value"].get<double>(), 1.5);
  EXPECT_EQ(j["conditions"]["iii"]["status"], "proven-false");
}

TEST(Experiment, CompleteGraphOnSevenVertices) {
  ExperimentSpec spec;
  spec.n = 7;
  spec.p = 1.0;
  spec.trials = 3;
  spec.seed = 9;
  const ExperimentResult r = run_experiment(spec);
  for (const TrialRecord& t : r.records) {
    EXPECT_EQ(t.edges, 21u);
    EXPECT_EQ(t.steiner_survivors, 7u);
    EXPECT_EQ(t.packing_lower_bound, 7u);
    EXPECT_TRUE(t.packing_at_least_quarter_edges());
  }
}

TEST(Experiment, EmptyGraphsAtZeroProbability) {
  ExperimentSpec spec;
  spec.n = 9;
  spec.p = 0.0;
  spec.trials = 4;
  const ExperimentResult r = run_experiment(spec);
  for (const TrialRecord& t : r.records) EXPECT_EQ(t.edges, 0u);
  const json j = experiment_json(r);
  for (const auto& t : j["trials"]) {
    EXPECT_EQ(t["packing_per_edge"], "not-applicable");
    EXPECT_EQ(t["cover_per_packing"], "not-applicable");
  }
}

TEST(Experiment, Validation) {
  ExperimentSpec spec;
  spec.n = 8;
  spec.p = 0.5;
  EXPECT_THROW(run_experiment(spec), precondition_error);
  spec.estimator = PackingEstimator::greedy;
  EXPECT_NO_THROW(run_experiment(spec));
  spec.p = 1.5;
  EXPECT_THROW(run_experiment(spec), precondition_error);
  spec.p = 0.5;
  spec.trials = 0;
  EXPECT_THROW(run_experiment(spec), precondition_error);
}

TEST(Experiment, AggregatesRecomputeAndSeedsAreDerived) {
  ExperimentSpec spec;
  spec.n = 13;
  spec.p = 0.7;
  spec.trials = 10;
  spec.seed = 100;
  const ExperimentResult r = run_experiment(spec);
  EXPECT_EQ(aggregate_records(r.records), r.aggregate);
  auto shuffled = r.records;
  std::reverse(shuffled.begin(), shuffled.end());
  EXPECT_EQ(aggregate_records(shuffled), r.aggregate);
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    EXPECT_EQ(r.records[i].seed, 100 + i);
    const Graph g = random_gnp(13, 0.7, 100 + i);
    EXPECT_EQ(r.records[i].edges, g.num_edges());
    // a single trial run on its own reproduces the same record
    const TrialRecord alone = run_trial(spec, i, steiner_triple_system(13));
    EXPECT_EQ(alone.packing_lower_bound, r.records[i].packing_lower_bound);
  }
  std::ostringstream csv;
  write_csv(csv, r);
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
}
