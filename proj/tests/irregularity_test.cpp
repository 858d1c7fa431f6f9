#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pell/irregularity.hpp"

namespace {

using pell::build_hypercube;
using pell::build_pell_graph;
using pell::Graph;
using pell::imbalance;
using pell::imbalance_histogram;
using pell::irregularity;
using pell::sigma_index;

int rank(const char* w) { return static_cast<int>(pell::pell_word_rank(w)); }

TEST(Imbalance, Examples) {
  const Graph g2 = build_pell_graph(2);
  EXPECT_EQ(imbalance(g2, rank("11"), rank("22")), 2);
  EXPECT_EQ(imbalance(g2, rank("00"), rank("01")), 0);
  const Graph q3 = build_hypercube(3);
  q3.for_each_edge([&](int u, int v) { EXPECT_EQ(imbalance(q3, u, v), 0); });
  EXPECT_THROW(imbalance(g2, rank("00"), rank("11")), std::invalid_argument);
}

TEST(Irregularity, PellValues) {
  EXPECT_EQ(irregularity(build_pell_graph(1)), 0);
  EXPECT_EQ(irregularity(build_pell_graph(2)), 4);
  EXPECT_EQ(irregularity(build_pell_graph(3)), 18);
}

TEST(SubsetIrregularity, Examples) {
  const Graph g2 = build_pell_graph(2);
  EXPECT_EQ(pell::subset_irregularity(g2, {}), 0);
  const auto all = g2.edges();
  EXPECT_EQ(pell::subset_irregularity(g2, all), irregularity(g2));
  const std::vector<pell::Edge> one{pell::make_edge(rank("11"), rank("22"))};
  EXPECT_EQ(pell::subset_irregularity(g2, one), 2);
  const std::vector<pell::Edge> bad{{rank("00"), rank("11")}};
  EXPECT_THROW(pell::subset_irregularity(g2, bad), std::invalid_argument);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_index(build_hypercube(3)), 0);
  EXPECT_EQ(sigma_index(build_pell_graph(2)), 6);
  EXPECT_EQ(sigma_index(build_pell_graph(3)), 36);
}

TEST(Histogram, PellExamples) {
  const auto h3 = imbalance_histogram(build_pell_graph(3));
  EXPECT_EQ(h3.count(0), 7);
  EXPECT_EQ(h3.count(1), 6);
  EXPECT_EQ(h3.count(2), 3);
  EXPECT_EQ(h3.count(3), 2);
  EXPECT_EQ(h3.count(4), 0);
  EXPECT_EQ(h3.total, 18);

  const auto h1 = imbalance_histogram(build_pell_graph(1));
  EXPECT_EQ(h1.count(0), 1);
  EXPECT_EQ(h1.total, 1);

  const auto q3 = imbalance_histogram(build_hypercube(3));
  EXPECT_EQ(q3.count(0), 12);
  EXPECT_EQ(q3.counts.size(), 1u);
}

TEST(Histogram, SupportsArbitraryValues) {
  const auto star = imbalance_histogram(pell::complete_bipartite_graph(1, 5));
  EXPECT_EQ(star.count(4), 5);
  EXPECT_EQ(star.max_imbalance(), 4);
}

TEST(Histogram, MomentsMatchDirectSums) {
  for (int n = 0; n <= 10; ++n) {
    const Graph g = build_pell_graph(n);
    const auto h = imbalance_histogram(g);
    EXPECT_EQ(h.total, g.edge_count());
    EXPECT_EQ(h.weighted_sum(), irregularity(g));
    EXPECT_EQ(h.weighted_square_sum(), sigma_index(g));
  }
  for (int n = 0; n <= 8; ++n) {
    const Graph g = pell::build_fibonacci_cube(n);
    const auto h = imbalance_histogram(g);
    EXPECT_EQ(h.weighted_sum(), irregularity(g));
    EXPECT_EQ(h.weighted_square_sum(), sigma_index(g));
  }
}

TEST(Histogram, Serialization) {
  const auto h = imbalance_histogram(build_pell_graph(2));
  EXPECT_EQ(h.to_json(), "{\"0\":2,\"1\":2,\"2\":1}");
  std::ostringstream csv;
  h.write_csv(csv, 2);
  EXPECT_EQ(csv.str(), "2,0,2\n2,1,2\n2,2,1\n");
}

TEST(Invariance, RelabelingPreservesIrrAndSigma) {
  std::mt19937 rng(7);
  for (const Graph& g : {build_pell_graph(6), pell::build_fibonacci_cube(8),
                         build_hypercube(5)}) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph shuffled = pell::relabeled(g, perm);
    EXPECT_EQ(irregularity(shuffled), irregularity(g));
    EXPECT_EQ(sigma_index(shuffled), sigma_index(g));
    EXPECT_EQ(imbalance_histogram(shuffled).counts, imbalance_histogram(g).counts);
  }
}

TEST(Threads, FoldIsChunkingInsensitive) {
  const Graph g = build_pell_graph(8);
  const auto base = imbalance_histogram(g, 1);
  for (int threads : {2, 3, 8}) {
    EXPECT_EQ(imbalance_histogram(g, threads).counts, base.counts);
    EXPECT_EQ(irregularity(g, threads), irregularity(g, 1));
    EXPECT_EQ(sigma_index(g, threads), sigma_index(g, 1));
  }
}

}  // namespace
