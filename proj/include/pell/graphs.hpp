#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pell/words.hpp"

namespace pell {

// Unordered edge, stored as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("make_edge: self-loop");
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Immutable simple undirected graph with contiguous vertex indices,
// per-vertex sorted neighbor lists and optional string labels.
class Graph {
 public:
  Graph() = default;

  Graph(int n_vertices, const std::vector<Edge>& edge_list,
        std::vector<std::string> labels = {}) {
    if (n_vertices < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n_vertices));
    for (const auto& [a, b] : edge_list) {
      check_vertex(a, n_vertices);
      check_vertex(b, n_vertices);
      if (a == b) throw std::invalid_argument("Graph: self-loop");
      adj_[static_cast<std::size_t>(a)].push_back(b);
      adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    finalize(std::move(labels), /*check_symmetry=*/false);
  }

  static Graph from_adjacency(std::vector<std::vector<int>> adj,
                              std::vector<std::string> labels = {}) {
    Graph g;
    g.adj_ = std::move(adj);
    const int n = g.vertex_count();
    for (const auto& row : g.adj_)
      for (int v : row) check_vertex(v, n);
    g.finalize(std::move(labels), /*check_symmetry=*/true);
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v, vertex_count());
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    const auto& nu = neighbors(u);
    check_vertex(v, vertex_count());
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  bool has_labels() const { return !labels_.empty(); }

  const std::string& label(int v) const {
    check_vertex(v, vertex_count());
    if (!has_labels()) throw std::logic_error("Graph: no labels attached");
    return labels_[static_cast<std::size_t>(v)];
  }

  // Each edge exactly once, ordered by (u, v) with u < v.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (v > u) fn(u, v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
    return out;
  }

 private:
  static void check_vertex(int v, int n) {
    if (v < 0 || v >= n) throw std::out_of_range("Graph: vertex index out of range");
  }

  void finalize(std::vector<std::string> labels, bool check_symmetry) {
    std::int64_t half_degrees = 0;
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      if (std::adjacent_find(row.begin(), row.end()) != row.end())
        throw std::invalid_argument("Graph: duplicate edge");
      half_degrees += static_cast<std::int64_t>(row.size());
    }
    for (std::size_t u = 0; check_symmetry && u < adj_.size(); ++u) {
      for (int v : adj_[u]) {
        if (static_cast<std::size_t>(v) == u)
          throw std::invalid_argument("Graph: self-loop");
        const auto& rv = adj_[static_cast<std::size_t>(v)];
        if (!std::binary_search(rv.begin(), rv.end(), static_cast<int>(u)))
          throw std::invalid_argument("Graph: asymmetric adjacency");
      }
    }
    if (half_degrees % 2 != 0) throw std::invalid_argument("Graph: odd degree sum");
    edge_count_ = half_degrees / 2;
    if (!labels.empty() && labels.size() != adj_.size())
      throw std::invalid_argument("Graph: label count mismatch");
    labels_ = std::move(labels);
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::int64_t edge_count_ = 0;
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::out_of_range("bfs_distances: source out of range");
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

inline bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbors(u)) {
        auto& cv = color[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Subgraph induced by a sorted, duplicate-free vertex subset. New vertex i
// corresponds to vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int n = g.vertex_count();
  std::vector<int> to_new(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= n) throw std::out_of_range("induced_subgraph: vertex out of range");
    if (i > 0 && vertices[i - 1] >= v)
      throw std::invalid_argument("induced_subgraph: subset must be sorted and unique");
    to_new[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> adj(vertices.size());
  std::vector<std::string> labels;
  if (g.has_labels()) labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      const int nw = to_new[static_cast<std::size_t>(w)];
      if (nw >= 0) adj[i].push_back(nw);
    }
    if (g.has_labels()) labels.push_back(g.label(vertices[i]));
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

// Copy of g with vertex v renamed to perm[v]; perm must be a permutation.
inline Graph relabeled(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("relabeled: not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::string> labels;
  if (g.has_labels()) labels.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    auto& row = adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])];
    for (int v : g.neighbors(u)) row.push_back(perm[static_cast<std::size_t>(v)]);
    if (g.has_labels())
      labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = g.label(u);
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

enum class SubsetIsometry { isometric, not_isometric, disconnected };

// Whether the subgraph induced by the sorted subset preserves all pairwise
// distances of the host graph. A disconnected induced subgraph is reported
// as its own outcome, distinct from a connected but distance-stretching one.
inline SubsetIsometry subset_isometry(const Graph& g, std::span<const int> subset) {
  if (subset.empty()) return SubsetIsometry::disconnected;
  const Graph sub = induced_subgraph(g, subset);
  const auto first = bfs_distances(sub, 0);
  if (std::find(first.begin(), first.end(), -1) != first.end())
    return SubsetIsometry::disconnected;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const auto d_sub = i == 0 ? first : bfs_distances(sub, static_cast<int>(i));
    const auto d_host = bfs_distances(g, subset[i]);
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (d_sub[j] != d_host[static_cast<std::size_t>(subset[j])])
        return SubsetIsometry::not_isometric;
  }
  return SubsetIsometry::isometric;
}

inline bool is_isometric_subset(const Graph& g, std::span<const int> subset) {
  return subset_isometry(g, subset) == SubsetIsometry::isometric;
}

// Default construction ceilings. These bound memory, not correctness; raise
// them explicitly to build bigger instances.
inline constexpr int kDefaultPellBuildLimit = 16;
inline constexpr int kDefaultFibonacciBuildLimit = 24;
inline constexpr int kDefaultHypercubeBuildLimit = 12;

namespace detail {

inline void check_build(int n, int limit, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative order");
  if (n > limit)
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(n) +
                                " above build limit " + std::to_string(limit));
}

}  // namespace detail

// Pell graph on all Pell words of length n in canonical order; edges are the
// single-position 0<->1 flips and the 11<->22 factor swaps.
inline Graph build_pell_graph(int n, int build_limit = kDefaultPellBuildLimit) {
  detail::check_build(n, build_limit, "build_pell_graph");
  auto words = generate_pell_words(n);
  std::vector<std::vector<int>> adj(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto nbrs = pell_rewrite_neighbors(words[i]);
    adj[i].reserve(nbrs.size());
    for (const auto& w : nbrs) adj[i].push_back(static_cast<int>(pell_word_rank(w)));
    std::sort(adj[i].begin(), adj[i].end());
  }
  return Graph::from_adjacency(std::move(adj), std::move(words));
}

// Fibonacci cube: Fibonacci words of length n, adjacent at Hamming distance 1.
inline Graph build_fibonacci_cube(int n, int build_limit = kDefaultFibonacciBuildLimit) {
  detail::check_build(n, build_limit, "build_fibonacci_cube");
  auto words = generate_fibonacci_words(n);
  std::vector<std::vector<int>> adj(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string t = words[i];
    for (int p = 0; p < n; ++p) {
      if (t[static_cast<std::size_t>(p)] == '1') {
        t[static_cast<std::size_t>(p)] = '0';
        adj[i].push_back(static_cast<int>(fibonacci_word_rank(t)));
        t[static_cast<std::size_t>(p)] = '1';
      } else {
        const bool left_ok = p == 0 || t[static_cast<std::size_t>(p - 1)] != '1';
        const bool right_ok = p + 1 == n || t[static_cast<std::size_t>(p + 1)] != '1';
        if (left_ok && right_ok) {
          t[static_cast<std::size_t>(p)] = '1';
          adj[i].push_back(static_cast<int>(fibonacci_word_rank(t)));
          t[static_cast<std::size_t>(p)] = '0';
        }
      }
    }
    std::sort(adj[i].begin(), adj[i].end());
  }
  return Graph::from_adjacency(std::move(adj), std::move(words));
}

// Hypercube on all binary strings of length n.
inline Graph build_hypercube(int n, int build_limit = kDefaultHypercubeBuildLimit) {
  detail::check_build(n, build_limit, "build_hypercube");
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
  std::vector<std::string> labels(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    std::string w(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b)
      if ((i >> (n - 1 - b)) & 1) w[static_cast<std::size_t>(b)] = '1';
    labels[static_cast<std::size_t>(i)] = std::move(w);
    auto& row = adj[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) row.push_back(static_cast<int>(i ^ (std::int64_t{1} << b)));
    std::sort(row.begin(), row.end());
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

// Degree of a word in the Pell graph of its length, read off the word alone:
// one flip per 0 or 1 symbol, one swap per 11 factor (overlaps counted) and
// per 22 pair.
inline int pell_degree_from_word(std::string_view w) {
  if (!is_pell_word(w))
    throw std::invalid_argument("pell_degree_from_word: not a Pell word: \"" +
                                std::string(w) + "\"");
  const int n = static_cast<int>(w.size());
  int deg = 0;
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(i)] != '2') ++deg;
  for (int i = 0; i + 1 < n; ++i)
    if (w[static_cast<std::size_t>(i)] == '1' && w[static_cast<std::size_t>(i + 1)] == '1')
      ++deg;
  for (int i = 0; i < n;) {
    if (w[static_cast<std::size_t>(i)] == '2') {
      ++deg;
      i += 2;
    } else {
      ++i;
    }
  }
  return deg;
}

inline Graph path_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  return Graph(k, e);
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back(make_edge(i, (i + 1) % k));
  return Graph(k, e);
}

inline Graph complete_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.push_back({i, j});
  return Graph(k, e);
}

inline Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph(a + b, e);
}

}  // namespace pell
