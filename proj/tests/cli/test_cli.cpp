#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "graphonlab/graphonlab.hpp"

namespace {

using namespace graphonlab;

struct Run {
  std::string out;
  int status = -1;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GRAPHONLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(GRAPHONLAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("density") {
  auto r = run("density --builtin C4 " + data("constant-half.graphon"));
  CHECK(r.status == 0);
  CHECK(r.out == "1/16\n");
  r = run("density --builtin C4 " + data("twoblock.graphon"));
  CHECK(r.out == "1/8\n");
  r = run("density " + data("c4.graph") + " " + data("twoblock.graphon"));
  CHECK(r.out == "1/8\n");
  r = run("density --builtin C4 " + data("twoblock.graphon") + " --float");
  CHECK(r.out == "0.125\n");
  r = run("density --builtin C4 " + data("floating-half.graphon"));
  CHECK(r.out == "0.0625\n");
}

TEST_CASE("density --mc") {
  const auto r = run("density --builtin C4 " + data("twoblock.graphon") + " --mc 100000 --seed 7");
  CHECK(r.status == 0);
  double mean = 0;
  double err = 0;
  REQUIRE(std::sscanf(r.out.c_str(), "%lf +/- %lf", &mean, &err) == 2);
  CHECK(err > 0);
  CHECK(std::abs(mean - 0.125) <= 4 * err);
  CHECK(run("density --builtin C4 " + data("twoblock.graphon") + " --mc 100000 --seed 7").out == r.out);
  CHECK(run("density --builtin C4 " + data("twoblock.graphon") + " --mc 100000 --seed 7 --threads 3").out == r.out);
}

TEST_CASE("edgedist") {
  auto r = run("edgedist --builtin K3 " + data("constant-half.graphon"));
  CHECK(r.out == "[1/8, 3/8, 3/8, 1/8]\n");
  r = run("edgedist --builtin C4 " + data("twoblock.graphon"));
  CHECK(r.out == "[1/8, 0, 3/4, 0, 1/8]\n");
  const auto exact = io::parse_pmf(r.out);

  r = run("edgedist --builtin C4 " + data("twoblock.graphon") + " --empirical 100000 --seed 1");
  CHECK(r.status == 0);
  const auto empirical = io::parse_pmf(r.out);
  CHECK_FALSE(empirical.is_exact());
  CHECK(total_variation(empirical, exact).to_double() <= 0.02);
  CHECK(run("edgedist --builtin C4 " + data("twoblock.graphon") + " --empirical 100000 --seed 1").out == r.out);
}

TEST_CASE("verify") {
  auto r = run("verify --builtin C4 " + data("constant-half.graphon") + " --p 1/2");
  CHECK(r.status == 0);
  auto report = io::parse_report(r.out);
  CHECK(report.verdict == Verdict::ConstantGraphon);
  CHECK_FALSE(report.contradiction);
  for (const auto& c : report.checks) CHECK(c.pass);

  r = run("verify --builtin C4 " + data("twoblock.graphon") + " --p 1/2");
  CHECK(r.status == 4);
  report = io::parse_report(r.out);
  CHECK(report.verdict == Verdict::NonbinomialEdgeCounts);
  REQUIRE(report.checks.size() >= 2);
  CHECK(report.checks[1].name == "edge_count_tv");
  CHECK(report.checks[1].lhs.str() == "1/2");

  r = run("verify --builtin S3 " + data("twoblock.graphon") + " --p 1/2");
  CHECK(r.status == 5);
  CHECK(io::parse_report(r.out).verdict == Verdict::NoC4Precondition);

  r = run("verify --builtin K4 " + data("floating-half.graphon") + " --p 0.5 --tol 1e-12");
  CHECK(r.status == 0);
}

TEST_CASE("sample") {
  auto r = run("sample 5 " + data("constant-one.graphon") + " --seed 0");
  CHECK(r.status == 0);
  CHECK(io::parse_graph(r.out) == complete(5));
  r = run("sample 5 " + data("constant-zero.graphon") + " --seed 0");
  CHECK(r.out == "5 0\n");
  r = run("sample 6 " + data("twoblock.graphon") + " --seed 3");
  const auto g = io::parse_graph(r.out);
  CHECK(g.vertex_count() == 6);
  // Disjoint union of two cliques: adjacency is an equivalence relation.
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b)
      for (Vertex c = 0; c < 6; ++c) {
        if (a != b && b != c && a != c && g.has_edge(a, b) && g.has_edge(b, c)) CHECK(g.has_edge(a, c));
      }
  CHECK(run("sample 6 " + data("twoblock.graphon") + " --seed 3").out == r.out);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("density --builtin C4 /nonexistent.graphon").status == 1);
  CHECK(run("density --builtin Q7 " + data("twoblock.graphon")).status == 1);
  CHECK(run("density --builtin C4 " + data("asymmetric.graphon")).status == 3);
  CHECK(run("density --builtin K12 " + data("twoblock.graphon") + " --limit 100").status == 2);
  CHECK(run("density --builtin K12 " + data("twoblock.graphon") + " --limit 100 --force").out == "1/2048\n");
  CHECK(run("frobnicate").status == 1);
}

TEST_CASE("threads from the environment") {
  const std::string cmd = "env GRAPHONLAB_THREADS=2 " + std::string(GRAPHONLAB_CLI_PATH) + " density --builtin K4 " +
                          data("twoblock.graphon");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 256> buf{};
  std::string out;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  CHECK(pclose(pipe) == 0);
  CHECK(out == "1/8\n");  // 2 * (1/2)^4: only constant assignments survive
}
