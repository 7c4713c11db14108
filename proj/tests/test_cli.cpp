#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "run_cli.hpp"
#include "support.hpp"

using namespace testing_support;
using tuza::json;

namespace {

json run_json(const std::string& args, int expected_exit = 0) {
  const CliRun r = run_cli(args);
  EXPECT_EQ(r.exit_code, expected_exit) << args;
  return r.out.empty() ? json() : json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tuza_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, CoverK4Best) {
  const json j = run_json("cover " + data_path("k4.txt") + " --strategy best");
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["cover_size"], 2);
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["cover"][0].size(), 2u);
  EXPECT_TRUE(j["cover"][0][0].is_string());
}

TEST(Cli, CoverTriangleFree) {
  const json j = run_json("cover " + data_path("hexagon.txt"));
  EXPECT_TRUE(j["cover"].empty());
  EXPECT_EQ(j["valid"], true);
}

TEST(Cli, CoverStrategiesAndExplain) {
  for (const char* s : {"fvs", "fes", "bipartite", "best"}) {
    const json j = run_json("cover " + data_path("k5.txt") + " --strategy " + s + " --explain");
    EXPECT_EQ(j["valid"], true) << s;
    if (std::string(s) == "fvs") {
      EXPECT_TRUE(j["explain"].contains("fvs_trace"));
    }
    if (std::string(s) == "fes") {
      EXPECT_TRUE(j["explain"].contains("fes"));
    }
  }
  EXPECT_EQ(run_cli("cover " + data_path("k5.txt") + " --strategy nope").exit_code, 2);
}

TEST(Cli, MalformedInputIsParseError) {
  const CliRun r = run_cli("cover " + data_path("malformed.txt"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run_cli("cover /nonexistent/file.txt").exit_code, 2);
  EXPECT_EQ(run_cli("cover " + temp_file("loop.txt", "1 1\n")).exit_code, 2);
}

TEST(Cli, AnalyzeExamples) {
  const json k4 = run_json("analyze " + data_path("k4.txt"));
  EXPECT_DOUBLE_EQ(k4["conditions"]["iii"]["ratio"]["value"].get<double>(), 1.5);
  EXPECT_EQ(k4["conditions"]["iii"]["status"], "proven-false");
  const json book = run_json("analyze " + data_path("book3.txt"));
  EXPECT_EQ(book["conditions"]["iii"]["ratio"]["num"], 7);
  EXPECT_EQ(book["conditions"]["iii"]["ratio"]["den"], 3);
  EXPECT_EQ(book["conditions"]["iii"]["status"], "proven-true");
  const json k5 = run_json("analyze " + data_path("k5.txt") + " --oracle");
  EXPECT_EQ(k5["nu_t"]["exact"], 2);
  EXPECT_DOUBLE_EQ(k5["conditions"]["ii"]["ratio"]["value"].get<double>(), 0.2);
}

TEST(Cli, AnalyzeOracleBudget) {
  std::string big;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) big += std::to_string(a) + " " + std::to_string(b) + "\n";
  const std::string path = temp_file("k10.txt", big);
  EXPECT_EQ(run_cli("analyze " + path + " --oracle").exit_code, 4);
  EXPECT_EQ(run_cli("analyze " + path).exit_code, 0);
}

TEST(Cli, HypergraphCommands) {
  const json fvs = run_json("fvs " + data_path("fano.txt"));
  EXPECT_LE(fvs["size"].get<int>(), 2);
  EXPECT_EQ(fvs["acyclic_after_removal"], true);
  const json fes = run_json("fes " + data_path("acyclic.txt"));
  EXPECT_TRUE(fes["fes"].empty());
  const json fano_fes = run_json("fes " + data_path("fano.txt"));
  EXPECT_EQ(fano_fes["minimal"], true);
  EXPECT_EQ(fano_fes["bound"], 8);
  const json dual = run_json("solve-acyclic " + data_path("acyclic.txt"));
  EXPECT_EQ(dual["tau"], dual["nu"]);
  EXPECT_EQ(dual["optimal"], true);
}

TEST(Cli, HypergraphPreconditions) {
  EXPECT_EQ(run_cli("fvs " + data_path("non_uniform.txt")).exit_code, 3);
  EXPECT_EQ(run_cli("solve-acyclic " + data_path("fano.txt")).exit_code, 3);
  EXPECT_EQ(run_cli("fvs " + temp_file("nonlinear.txt", "a b c\na b d\nc d e\n")).exit_code, 3);
  EXPECT_EQ(run_cli("fes " + data_path("non_uniform.txt")).exit_code, 0);
}

TEST(Cli, RandomExperiment) {
  const json j = run_json("random-experiment --n 7 --p 1 --trials 2 --seed 3");
  for (const auto& t : j["trials"]) {
    EXPECT_EQ(t["edges"], 21);
    EXPECT_EQ(t["steiner_survivors"], 7);
  }
  EXPECT_EQ(run_cli("random-experiment --n 8 --p 0.5 --trials 2 --seed 3").exit_code, 3);
  EXPECT_EQ(run_cli("random-experiment --n 8 --p 0.5 --trials 2 --seed 3 --estimator greedy").exit_code, 0);
  EXPECT_EQ(run_cli("random-experiment --n 7 --p 2 --trials 2 --seed 3").exit_code, 3);
  const std::string csv = (std::filesystem::temp_directory_path() / "tuza_cli_exp.csv").string();
  EXPECT_EQ(run_cli("random-experiment --n 9 --p 0.5 --trials 5 --seed 3 --csv " + csv).exit_code, 0);
  std::ifstream in(csv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 6);
}

TEST(Cli, VerifyRoundTrip) {
  const CliRun cover = run_cli("cover " + data_path("k7.txt"));
  ASSERT_EQ(cover.exit_code, 0);
  const std::string cert = temp_file("k7_cert.json", cover.out);
  const json ok = run_json("verify " + data_path("k7.txt") + " " + cert);
  EXPECT_EQ(ok["valid"], true);
  json tampered = json::parse(cover.out);
  tampered["cover"].erase(tampered["cover"].begin());
  const std::string bad = temp_file("k7_bad.json", tampered.dump());
  const json rejected = run_json("verify " + data_path("k7.txt") + " " + bad, 3);
  EXPECT_EQ(rejected["valid"], false);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> commands = {
      "cover " + data_path("k7.txt") + " --explain", "analyze " + data_path("k5.txt") + " --oracle",
        "fvs " + data_path("fano.txt"), "random-experiment --n 13 --p 0.6 --trials 4 --seed 11"};
  for (const std::string& args : commands) {
    const CliRun a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
