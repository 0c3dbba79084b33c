#include "cli.hpp"

#include "steiner/extremal.hpp"
#include "steiner/graph_io.hpp"
#include "steiner/serialization.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace steiner {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("steinerw_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  std::filesystem::path dir_;
};

TEST(CliCompute, Examples) {
  EXPECT_EQ(run({"compute", "--family", "path", "--size", "4", "--k", "3", "--metric", "sw"}).out, "10\n");
  EXPECT_EQ(run({"compute", "--family", "cycle", "--size", "5", "--k", "2", "--metric", "sw"}).out, "15\n");
  EXPECT_EQ(run({"compute", "--family", "path", "--size", "4", "--k", "2", "--metric", "mu"}).out, "5/3\n");
  EXPECT_EQ(run({"compute", "--family", "petersen", "--k", "3"}).out, "350\n");
  EXPECT_EQ(run({"compute", "--family", "path", "--size", "4"}).out, "10\n");
  EXPECT_EQ(run({"compute", "--family", "complete_bipartite", "--size", "2", "3", "--k", "4"}).out, "15\n");
  EXPECT_EQ(run({"compute", "--family", "G", "--d", "2", "--delta", "2", "--k", "3"}).out, "24\n");
}

TEST(CliCompute, Weights) {
  EXPECT_EQ(run({"compute", "--family", "path", "--size", "2", "--uniform-weight", "3", "--k", "2"}).out, "9\n");
  EXPECT_EQ(run({"compute", "--family", "cycle", "--size", "4", "--uniform-weight", "1", "--k", "3"}).out, "8\n");
}

TEST_F(CliFiles, ComputeFromFiles) {
  const std::string g = write("p3.txt", "3 2\n0 1\n1 2\n");
  const std::string w = write("w.txt", "0 2\n1 1\n2 1\n");
  EXPECT_EQ(run({"compute", "--graph", g, "--weights", w}).out, "7\n");
  const Result bad = run({"compute", "--graph", write("bad.txt", "3 2\n0 1\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"compute", "--graph", write("split.txt", "3 1\n0 1\n")}).code, 3);
  EXPECT_EQ(run({"compute", "--graph", path("missing.txt")}).code, 2);
}

TEST(CliCompute, Errors) {
  EXPECT_EQ(run({"compute", "--family", "path", "--size", "3", "--k", "4"}).code, 3);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "wheel", "--size", "5"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "path"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "path", "--size", "4", "--metric", "avg"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliBound, Examples) {
  EXPECT_EQ(run({"bound", "--which", "theorem4", "--n", "16", "--delta", "5", "--k", "2"}).out, "1120\n");
  EXPECT_EQ(run({"bound", "--which", "theorem1", "--n", "4", "--k", "3"}).out, "10\n");
  EXPECT_EQ(run({"bound", "--which", "lemma2", "--N", "3", "--C", "1", "--k", "2"}).out, "4\n");
  EXPECT_EQ(run({"bound", "--which", "theorem3", "--n", "7", "--delta", "1"}).out, "231/2\n");
  EXPECT_EQ(run({"bound", "--which", "eq2", "--n", "5"}).out, "15\n");
}

TEST(CliBound, Errors) {
  EXPECT_EQ(run({"bound", "--which", "theorem4", "--n", "16"}).code, 2);
  EXPECT_EQ(run({"bound", "--which", "nope", "--n", "16"}).code, 2);
  EXPECT_EQ(run({"bound", "--which", "theorem1", "--n", "3", "--k", "5"}).code, 3);
}

TEST_F(CliFiles, ConstructPacking) {
  const std::string g = write("p7.txt", format_edge_list(path_graph(7)));
  const std::string cert = path("cert.json");
  const Result r = run({"construct", "--graph", g, "--method", "packing", "--start", "0", "--out", cert});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("anchors 0 3 6\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS theorem4 n=7 delta=1 k=2 measured=56 rhs=399/2"), std::string::npos);
  EXPECT_EQ(certificate_to_json(certificate_from_json(slurp(cert))), slurp(cert));

  const Result again = run({"verify", "--graph", g, "--cert", cert, "--k", "3"});
  EXPECT_EQ(again.code, 0) << again.out;
}

TEST_F(CliFiles, ConstructMatching) {
  const std::string c6 = write("c6.txt", format_edge_list(cycle_graph(6)));
  const Result r = run({"construct", "--graph", c6, "--method", "matching", "--start", "0", "1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("matching 0-1\n"), std::string::npos);

  const std::string k4 = write("k4.txt", format_edge_list(complete_graph(4)));
  const Result tri = run({"construct", "--graph", k4, "--method", "matching"});
  EXPECT_EQ(tri.code, 3);
  EXPECT_NE(tri.err.find("graph contains a triangle"), std::string::npos);
}

TEST_F(CliFiles, VerifyTamperedCertificate) {
  const std::string g = write("p7.txt", format_edge_list(path_graph(7)));
  const std::string cert = path("cert.json");
  ASSERT_EQ(run({"construct", "--graph", g, "--out", cert}).code, 0);
  std::string text = slurp(cert);
  // Drop the last anchor: "6\n  ]" closes the anchor list.
  const auto pos = text.find(",\n    6\n  ],\n  \"connectors\"");
  ASSERT_NE(pos, std::string::npos);
  text.erase(pos, std::string(",\n    6").size());
  const Result r = run({"verify", "--graph", g, "--cert", write("tampered.json", text)});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("FAIL coverage_within_2"), std::string::npos);
}

TEST(CliGenerate, Families) {
  EXPECT_EQ(run({"generate", "--family", "path", "--size", "3"}).out, "3 2\n0 1\n1 2\n");
  EXPECT_EQ(run({"generate", "--family", "G", "--d", "1", "--delta", "2"}).out, format_edge_list(complete_graph(4)));
  EXPECT_EQ(run({"generate", "--family", "H", "--d", "4", "--delta", "2"}).out, format_edge_list(gen_H(4, 2)));
  EXPECT_EQ(run({"generate", "--family", "G", "--d", "2", "--delta", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "--family", "cycle", "--size", "2"}).code, 2);
}

TEST_F(CliFiles, VerifyBounds) {
  const std::string p4 = write("p4.txt", format_edge_list(path_graph(4)));
  const Result r = run({"verify", "--graph", p4, "--k", "2", "--all"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS theorem1 n=4 k=2 measured=10 rhs=10 slack=0\n"), std::string::npos);
  EXPECT_NE(r.err.find("skip eq2"), std::string::npos);

  const std::string c5 = write("c5.txt", format_edge_list(cycle_graph(5)));
  const Result cyc = run({"verify", "--graph", c5, "--which", "eq2"});
  EXPECT_EQ(cyc.code, 0);
  EXPECT_EQ(cyc.out, "PASS eq2 n=5 k=2 measured=15 rhs=15 slack=0\n");

  EXPECT_EQ(run({"verify", "--graph", p4, "--which", "eq2"}).code, 3);
  EXPECT_EQ(run({"verify", "--family", "complete", "--size", "4", "--which", "theorem5"}).code, 3);
}

TEST(CliSweep, Examples) {
  const Result g = run({"sweep", "--family", "G", "--delta", "2", "--k", "2", "--d-min", "2", "--d-max", "8"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(std::count(g.out.begin(), g.out.end(), '\n'), 8);
  EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "d,n,sw_k,bound_term,ratio");
  EXPECT_NE(g.out.find("\n2,5,14,50/3,0.840000\n"), std::string::npos);

  const Result h = run({"sweep", "--family", "H", "--delta", "2", "--k", "2", "--d-min", "3", "--d-max", "8"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(std::count(h.out.begin(), h.out.end(), '\n'), 7);
  EXPECT_TRUE(h.err.empty());

  EXPECT_EQ(run({"sweep", "--family", "H", "--delta", "3", "--d-min", "3", "--d-max", "5"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "G", "--delta", "2", "--d-min", "5", "--d-max", "3"}).code, 2);
}

TEST(CliDeterminism, IdenticalInvocationsGiveIdenticalOutput) {
  const std::vector<std::string> args{"construct", "--family", "cycle", "--size", "9", "--k", "3"};
  const Result first = run(args);
  const Result second = run(args);
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
}

}  // namespace
}  // namespace steiner
