#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pell/graphs.hpp"

namespace pell {

// |deg(u) - deg(v)| for an edge uv.
inline int imbalance(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("imbalance: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") is not an edge");
  return std::abs(g.degree(u) - g.degree(v));
}

// Edge counts keyed by imbalance value. Only observed values carry entries;
// count(k) is 0 for the rest.
struct ImbalanceHistogram {
  std::map<int, std::int64_t> counts;
  std::int64_t total = 0;

  std::int64_t count(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }

  int max_imbalance() const { return counts.empty() ? 0 : counts.rbegin()->first; }

  std::int64_t weighted_sum() const {  // = irregularity
    std::int64_t s = 0;
    for (const auto& [k, c] : counts) s += static_cast<std::int64_t>(k) * c;
    return s;
  }

  std::int64_t weighted_square_sum() const {  // = sigma index
    std::int64_t s = 0;
    for (const auto& [k, c] : counts) s += static_cast<std::int64_t>(k) * k * c;
    return s;
  }

  std::string to_json() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, c] : counts) {
      if (!first) out += ",";
      first = false;
      out += "\"" + std::to_string(k) + "\":" + std::to_string(c);
    }
    return out + "}";
  }

  void write_csv(std::ostream& os, int n) const {
    for (const auto& [k, c] : counts)
      os << n << "," << k << "," << c << "\n";
  }
};

namespace detail {

// Splits the vertex range into chunks and folds the per-edge imbalance of
// each chunk's higher-indexed incidences. Integer sums commute, so the
// result does not depend on the chunking.
template <typename Acc, typename Fold>
Acc edge_parallel_fold(const Graph& g, int threads, Fold fold) {
  const int n = g.vertex_count();
  threads = std::max(1, std::min(threads, n == 0 ? 1 : n));
  auto run = [&](int lo, int hi, Acc& acc) {
    for (int u = lo; u < hi; ++u) {
      const int du = g.degree(u);
      for (int v : g.neighbors(u))
        if (v > u) fold(acc, std::abs(du - g.degree(v)));
    }
  };
  if (threads == 1) {
    Acc acc{};
    run(0, n, acc);
    return acc;
  }
  std::vector<Acc> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const int lo = static_cast<int>(static_cast<std::int64_t>(n) * t / threads);
    const int hi = static_cast<int>(static_cast<std::int64_t>(n) * (t + 1) / threads);
    pool.emplace_back([&, lo, hi, t] { run(lo, hi, partial[static_cast<std::size_t>(t)]); });
  }
  for (auto& th : pool) th.join();
  Acc acc{};
  for (auto& p : partial) fold.merge(acc, p);
  return acc;
}

struct SumFold {
  int power;
  void operator()(std::int64_t& acc, int imb) const {
    std::int64_t term = imb;
    if (power == 2) term *= imb;
    acc += term;
  }
  void merge(std::int64_t& acc, std::int64_t part) const { acc += part; }
};

struct HistFold {
  void operator()(std::map<int, std::int64_t>& acc, int imb) const { ++acc[imb]; }
  void merge(std::map<int, std::int64_t>& acc,
             const std::map<int, std::int64_t>& part) const {
    for (const auto& [k, c] : part) acc[k] += c;
  }
};

}  // namespace detail

// Sum of edge imbalances over all edges (the Albertson index).
inline std::int64_t irregularity(const Graph& g, int threads = 1) {
  return detail::edge_parallel_fold<std::int64_t>(g, threads, detail::SumFold{1});
}

// Sum of squared degree differences over all edges.
inline std::int64_t sigma_index(const Graph& g, int threads = 1) {
  return detail::edge_parallel_fold<std::int64_t>(g, threads, detail::SumFold{2});
}

// Irregularity restricted to an arbitrary edge subset.
inline std::int64_t subset_irregularity(const Graph& g, std::span<const Edge> edges) {
  std::int64_t s = 0;
  for (const auto& [u, v] : edges) s += imbalance(g, u, v);
  return s;
}

inline ImbalanceHistogram imbalance_histogram(const Graph& g, int threads = 1) {
  ImbalanceHistogram h;
  h.counts = detail::edge_parallel_fold<std::map<int, std::int64_t>>(
      g, threads, detail::HistFold{});
  for (const auto& [k, c] : h.counts) h.total += c;
  return h;
}

}  // namespace pell
