#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "pell/expansion.hpp"

namespace {

using pell::build_fibonacci_cube;
using pell::build_hypercube;
using pell::build_pell_graph;
using pell::certificate_replays;
using pell::contract;
using pell::ContractStatus;
using pell::expand;
using pell::ExpansionSpec;
using pell::Graph;
using pell::irr_doubled;
using pell::irr_expansion_rhs;
using pell::irr_peripheral_rhs;
using pell::irregularity;
using pell::is_partial_cube;
using pell::recognize_partial_cube;
using pell::theta_sets;
using pell::validate_spec;

ExpansionSpec whole(const Graph& g, std::vector<int> v2 = {}) {
  ExpansionSpec spec;
  spec.v1.resize(static_cast<std::size_t>(g.vertex_count()));
  std::iota(spec.v1.begin(), spec.v1.end(), 0);
  spec.v2 = v2.empty() ? spec.v1 : std::move(v2);
  return spec;
}

// The 7-vertex fixture: two 4-cycles sharing the edge u-v, a pendant path
// off v, expanded across the shared part {u, v}.
Graph fixture_host() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {2, 6}, {6, 5}, {5, 1}});
}
ExpansionSpec fixture_spec() { return {{0, 1, 2, 3, 4}, {1, 2, 5, 6}}; }

TEST(ValidateSpec, AcceptsSingleVertexDoubling) {
  const Graph k1(1, {});
  EXPECT_TRUE(validate_spec(k1, whole(k1)).empty());
}

TEST(ValidateSpec, ReportsEmptyIntersectionAndCrossEdge) {
  const Graph k2(2, {{0, 1}});
  const auto violations = validate_spec(k2, ExpansionSpec{{0}, {1}});
  EXPECT_EQ(violations.size(), 2u);
}

TEST(ValidateSpec, AcceptsFixtureInstance) {
  EXPECT_TRUE(validate_spec(fixture_host(), fixture_spec()).empty());
}

TEST(ValidateSpec, FlagsNonIsometricAndDisconnectedSides) {
  const Graph c6 = pell::cycle_graph(6);
  ExpansionSpec stretched = whole(c6, {0, 1, 2, 3, 4});
  const auto v1 = validate_spec(c6, stretched);
  ASSERT_EQ(v1.size(), 1u);
  EXPECT_NE(v1[0].find("not isometric"), std::string::npos);
  ExpansionSpec split = whole(c6, {0, 3});
  const auto v2 = validate_spec(c6, split);
  ASSERT_EQ(v2.size(), 1u);
  EXPECT_NE(v2[0].find("disconnected"), std::string::npos);
}

TEST(Expand, DoublingSingleVertexGivesAnEdge) {
  const Graph k1(1, {});
  const auto h = expand(k1, whole(k1));
  EXPECT_EQ(h.graph.vertex_count(), 2);
  EXPECT_EQ(h.graph.edge_count(), 1);
}

TEST(Expand, PeripheralOnEdgeGivesPath) {
  const Graph k2(2, {{0, 1}});
  const auto h = expand(k2, whole(k2, {1}));
  EXPECT_EQ(h.graph.vertex_count(), 3);
  EXPECT_EQ(h.graph.edge_count(), 2);
  // the copy of vertex 1 on side 1 is the middle vertex
  const int middle = h.side1_index[1];
  EXPECT_EQ(h.graph.degree(middle), 2);
}

TEST(Expand, RepeatedDoublingBuildsHypercubes) {
  Graph g(1, {});
  for (int n = 1; n <= 5; ++n) g = expand(g, whole(g)).graph;
  EXPECT_EQ(g.vertex_count(), 32);
  EXPECT_EQ(g.edge_count(), 80);
  for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 5);
  EXPECT_TRUE(is_partial_cube(g));
}

TEST(Expand, RejectsInvalidSpec) {
  const Graph k2(2, {{0, 1}});
  EXPECT_THROW(expand(k2, ExpansionSpec{{0}, {1}}), std::invalid_argument);
}

TEST(Expand, TracksProvenance) {
  const auto h = expand(fixture_host(), fixture_spec());
  EXPECT_EQ(h.graph.vertex_count(), 9);
  EXPECT_EQ(h.graph.edge_count(), 11);
  for (int x = 0; x < h.graph.vertex_count(); ++x) {
    const int host = h.origin_vertex[static_cast<std::size_t>(x)];
    const int side = h.origin_side[static_cast<std::size_t>(x)];
    EXPECT_EQ(side == 1 ? h.side1_index[static_cast<std::size_t>(host)]
                        : h.side2_index[static_cast<std::size_t>(host)],
              x);
  }
}

TEST(ThetaSets, FourCycle) {
  const Graph q2 = build_hypercube(2);
  int u = 0, v = 1;
  const auto ts = theta_sets(q2, u, v);
  EXPECT_EQ(ts.w_uv.size(), 2u);
  EXPECT_EQ(ts.w_vu.size(), 2u);
  EXPECT_EQ(ts.f_uv.size(), 2u);
}

TEST(ThetaSets, SingleEdge) {
  const Graph k2(2, {{0, 1}});
  const auto ts = theta_sets(k2, 0, 1);
  EXPECT_EQ(ts.w_uv, std::vector<int>{0});
  EXPECT_EQ(ts.u_uv, std::vector<int>{0});
  EXPECT_EQ(ts.f_uv, (std::vector<pell::Edge>{{0, 1}}));
}

TEST(ThetaSets, OddCycleLeavesEquidistantVertex) {
  const Graph c5 = pell::cycle_graph(5);
  const auto ts = theta_sets(c5, 0, 1);
  EXPECT_EQ(ts.w_uv.size() + ts.w_vu.size(), 4u);
}

TEST(ThetaSets, Errors) {
  const Graph c5 = pell::cycle_graph(5);
  EXPECT_THROW(theta_sets(c5, 0, 2), std::invalid_argument);
  EXPECT_THROW(theta_sets(Graph(3, {{0, 1}}), 0, 1), std::invalid_argument);
}

TEST(Contract, FourCycleToEdge) {
  const auto c = contract(build_hypercube(2), 0, 1);
  ASSERT_EQ(c.status, ContractStatus::ok);
  EXPECT_EQ(c.quotient.vertex_count(), 2);
  EXPECT_EQ(c.quotient.edge_count(), 1);
  EXPECT_EQ(c.spec.v1, c.spec.v2);
  EXPECT_TRUE(replays_to(build_hypercube(2), c));
}

TEST(Contract, PathMergesOneEdge) {
  const Graph p3 = pell::path_graph(3);
  const auto c = contract(p3, 0, 1);
  ASSERT_EQ(c.status, ContractStatus::ok);
  EXPECT_EQ(c.quotient.vertex_count(), 2);
  EXPECT_EQ(c.spec.v1, std::vector<int>{0});
  EXPECT_EQ(c.spec.v2, (std::vector<int>{0, 1}));
  EXPECT_TRUE(replays_to(p3, c));
}

TEST(Contract, OddCycleIsNotContractible) {
  const auto c = contract(pell::cycle_graph(5), 0, 1);
  EXPECT_EQ(c.status, ContractStatus::not_partition);
}

TEST(Contract, BipartiteCompleteFailsTheMatching) {
  const auto c = contract(pell::complete_bipartite_graph(2, 3));
  EXPECT_EQ(c.status, ContractStatus::not_matching);
}

TEST(Contract, RoundTripAcrossEveryEdge) {
  const Graph graphs[] = {build_hypercube(4), build_fibonacci_cube(6),
                          build_pell_graph(5), pell::cycle_graph(8)};
  for (const auto& g : graphs) {
    g.for_each_edge([&](int u, int v) {
      const auto c = contract(g, u, v);
      ASSERT_EQ(c.status, ContractStatus::ok);
      std::string why;
      EXPECT_TRUE(replays_to(g, c, &why)) << why;
    });
  }
}

TEST(Recognition, AcceptsKnownPartialCubes) {
  EXPECT_TRUE(is_partial_cube(Graph(1, {})));
  EXPECT_TRUE(is_partial_cube(build_hypercube(4)));
  EXPECT_TRUE(is_partial_cube(build_fibonacci_cube(6)));
  EXPECT_TRUE(is_partial_cube(build_pell_graph(6)));
  EXPECT_TRUE(is_partial_cube(pell::cycle_graph(6)));
  EXPECT_TRUE(is_partial_cube(pell::path_graph(9)));
  EXPECT_TRUE(is_partial_cube(pell::complete_bipartite_graph(1, 6)));  // a star
}

TEST(Recognition, RejectsKnownNonPartialCubes) {
  EXPECT_FALSE(is_partial_cube(pell::cycle_graph(5)));
  EXPECT_FALSE(is_partial_cube(pell::cycle_graph(7)));
  EXPECT_FALSE(is_partial_cube(pell::complete_graph(4)));
  EXPECT_FALSE(is_partial_cube(pell::complete_bipartite_graph(2, 3)));
  EXPECT_FALSE(is_partial_cube(Graph(2, {})));  // disconnected
}

TEST(Recognition, CertificateReplaysToTheOriginal) {
  for (const Graph& g : {build_pell_graph(4), build_fibonacci_cube(5),
                         build_hypercube(3), pell::cycle_graph(10)}) {
    const auto rec = recognize_partial_cube(g);
    ASSERT_TRUE(rec.ok) << rec.failure;
    std::string why;
    EXPECT_TRUE(certificate_replays(g, rec, &why)) << why;
  }
}

TEST(Recognition, CertificateSerializesAsOrderedSpecList) {
  const auto rec = recognize_partial_cube(build_hypercube(2));
  ASSERT_TRUE(rec.ok);
  EXPECT_EQ(pell::certificate_to_json(rec),
            "[{\"v1\":[0,1],\"v2\":[0,1]},{\"v1\":[0],\"v2\":[0]}]");
}

TEST(IrrExpansionRhs, SpecExamples) {
  const Graph k1(1, {});
  EXPECT_EQ(irr_expansion_rhs(k1, whole(k1)), 0);
  const Graph k2(2, {{0, 1}});
  const auto spec = whole(k2, {1});
  EXPECT_EQ(irr_expansion_rhs(k2, spec), 2);
  EXPECT_EQ(irregularity(expand(k2, spec).graph), 2);
}

TEST(IrrExpansionRhs, FixtureInstanceAgreesBothWays) {
  const Graph g = fixture_host();
  const auto spec = fixture_spec();
  EXPECT_EQ(irr_expansion_rhs(g, spec), 10);
  EXPECT_EQ(irregularity(expand(g, spec).graph), 10);
}

// A split vertex with a strictly higher-degree neighbor on its own side
// breaks the +1 bookkeeping the right-hand side is built on: the formula
// and the expanded graph disagree. Pinned so the divergence stays visible.
TEST(IrrExpansionRhs, DivergesWhenSplitVertexHasHigherDegreeNeighbor) {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});  // center 0
  const auto spec = whole(star, {1});
  EXPECT_TRUE(validate_spec(star, spec).empty());
  EXPECT_EQ(irregularity(expand(star, spec).graph), 6);
  EXPECT_EQ(irr_expansion_rhs(star, spec), 8);
  EXPECT_EQ(irr_peripheral_rhs(star, spec), 8);
}

TEST(IrrPeripheralRhs, MatchesGeneralFormOnPeripheralSpecs) {
  const Graph g = build_pell_graph(3);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto spec = whole(g, {v});
    EXPECT_EQ(irr_peripheral_rhs(g, spec), irr_expansion_rhs(g, spec));
  }
  EXPECT_THROW(irr_peripheral_rhs(fixture_host(), fixture_spec()),
               std::invalid_argument);
}

TEST(IrrDoubled, AlwaysTwiceTheIrregularity) {
  const Graph hosts[] = {build_pell_graph(2), build_hypercube(3),
                         build_fibonacci_cube(5), pell::complete_bipartite_graph(1, 4)};
  for (const auto& g : hosts) {
    EXPECT_EQ(irr_doubled(g), 2 * irregularity(g));
    EXPECT_EQ(irregularity(expand(g, whole(g)).graph), 2 * irregularity(g));
  }
  EXPECT_EQ(irr_doubled(build_pell_graph(2)), 8);
  EXPECT_EQ(irr_doubled(build_hypercube(4)), 0);
}

TEST(Sampler, ZeroStepsIsSingleVertex) {
  const Graph g = pell::random_expansion_sequence(0, 123);
  EXPECT_EQ(g.vertex_count(), 1);
}

TEST(Sampler, DeterministicForFixedSeed) {
  const Graph a = pell::random_expansion_sequence(6, 42);
  const Graph b = pell::random_expansion_sequence(6, 42);
  ASSERT_EQ(a.vertex_count(), b.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    EXPECT_EQ(a.neighbors(v), b.neighbors(v));
}

TEST(Sampler, EveryStepIsValidAndOutputsArePartialCubes) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto trace = pell::random_expansion_trace(5, seed);
    for (const auto& step : trace.steps)
      EXPECT_TRUE(validate_spec(step.host, step.spec).empty());
    EXPECT_TRUE(is_partial_cube(trace.result));
  }
}

TEST(SpecJson, Shape) {
  EXPECT_EQ(pell::to_json(ExpansionSpec{{0, 2}, {1}}), "{\"v1\":[0,2],\"v2\":[1]}");
}

}  // namespace
