// End-to-end checks of the pellgraph binary: output bytes, exit codes and
// environment overrides. The binary path comes from the build system.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef PELLGRAPH_BIN
#error "PELLGRAPH_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + PELLGRAPH_BIN + " " + args +
                          " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

TEST(Cli, GraphEdgesWithLabels) {
  const auto r = run_cli("graph --n 1 --emit edges --labels");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0 1\n");
}

TEST(Cli, GraphEdgeCount) {
  const auto r = run_cli("graph --n 2 --emit edges");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.out), 5);
  EXPECT_EQ(r.out.substr(0, 6), "00 01\n");
}

TEST(Cli, GraphIndices) {
  const auto r = run_cli("graph --n 1 --emit edges --indices");
  EXPECT_EQ(r.out, "0 1\n");
  const auto adj = run_cli("graph --n 2 --emit adjacency");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(adj.out.find("11: 01 10 22\n"), std::string::npos);
}

TEST(Cli, ClassifyStream) {
  const auto r = run_cli("classify --n 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("11 22 swap 2 2\n"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 5);
}

TEST(Cli, VerifySelectedCheckPasses) {
  const auto r = run_cli("verify --max-n 3 --checks irr");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("{\"check\":\"irr\",\"n\":2,\"expected\":4,\"actual\":4,"
                       "\"pass\":true"),
            std::string::npos);
}

TEST(Cli, VerifyExpansionCheckReportsViolations) {
  const auto r = run_cli("verify --max-n 2 --checks expansion");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("\"pass\":false"), std::string::npos);
}

TEST(Cli, TableEdges) {
  const auto r = run_cli("table --stat edges --max-n 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "n,value\n1,1\n2,5\n3,18\n4,58\n");
}

TEST(Cli, TableIrrAndE) {
  const auto irr = run_cli("table --stat irr --max-n 4");
  EXPECT_EQ(irr.out, "n,value\n1,0\n2,4\n3,18\n4,64\n");
  const auto e = run_cli("table --stat e --max-n 4");
  EXPECT_NE(e.out.find("4,2,11\n"), std::string::npos);
  EXPECT_EQ(e.out.substr(0, 10), "n,i,value\n");
}

TEST(Cli, TableJsonAndLargeOrders) {
  const auto r = run_cli("table --stat e --max-n 60 --format json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.out), 60 * 5);
  EXPECT_NE(r.out.find("{\"n\":4,\"i\":2,\"value\":11}\n"), std::string::npos);
}

TEST(Cli, ByteIdenticalReruns) {
  const auto a = run_cli("verify --max-n 4 --checks initial,closed,convolution");
  const auto b = run_cli("verify --max-n 4 --checks initial,closed,convolution");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit_code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("table --stat bogus").exit_code, 2);
  EXPECT_EQ(run_cli("table").exit_code, 2);
  EXPECT_EQ(run_cli("verify --max-n 0").exit_code, 2);
  EXPECT_EQ(run_cli("verify --checks no-such-check").exit_code, 2);
  EXPECT_EQ(run_cli("graph --n 20").exit_code, 2);  // above the default ceiling
  EXPECT_EQ(run_cli("graph --n 3 --labels --indices").exit_code, 2);
  EXPECT_EQ(run_cli("table --stat e --max-n 61").exit_code, 2);
}

TEST(Cli, EnvironmentOverridesBuildLimit) {
  EXPECT_EQ(run_cli("graph --n 6 --emit edges", "PELLGRAPH_BUILD_LIMIT=5").exit_code, 2);
  EXPECT_EQ(run_cli("graph --n 6 --emit edges", "PELLGRAPH_BUILD_LIMIT=6").exit_code, 0);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("verify --help").exit_code, 0);
}

}  // namespace
