#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pell/irregularity.hpp"

namespace pell {

// An expansion instruction over a host graph: two sorted vertex subsets that
// cover the graph, overlap, induce isometric subgraphs, and admit no edge
// between their exclusive parts.
struct ExpansionSpec {
  std::vector<int> v1, v2;
};

namespace detail {

inline void check_subset(const Graph& g, const std::vector<int>& s, const char* name) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.vertex_count())
      throw std::out_of_range(std::string("ExpansionSpec: ") + name +
                              " vertex out of range");
    if (i > 0 && s[i - 1] >= s[i])
      throw std::invalid_argument(std::string("ExpansionSpec: ") + name +
                                  " must be sorted and unique");
  }
}

inline std::vector<char> subset_mask(const Graph& g, const std::vector<int>& s) {
  std::vector<char> mask(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

}  // namespace detail

// Checks the four expansion-spec invariants; returns one message per
// violation, empty when the spec is valid.
inline std::vector<std::string> validate_spec(const Graph& g, const ExpansionSpec& spec) {
  detail::check_subset(g, spec.v1, "v1");
  detail::check_subset(g, spec.v2, "v2");
  const auto in1 = detail::subset_mask(g, spec.v1);
  const auto in2 = detail::subset_mask(g, spec.v2);

  std::vector<std::string> violations;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!in1[static_cast<std::size_t>(v)] && !in2[static_cast<std::size_t>(v)]) {
      violations.push_back("v1 and v2 do not cover vertex " + std::to_string(v));
      break;
    }
  }
  bool meet = false;
  for (int v : spec.v1) meet = meet || in2[static_cast<std::size_t>(v)];
  if (!meet) violations.push_back("v1 and v2 have empty intersection");

  for (const char* name : {"v1", "v2"}) {
    const auto& side = name[1] == '1' ? spec.v1 : spec.v2;
    switch (subset_isometry(g, side)) {
      case SubsetIsometry::isometric:
        break;
      case SubsetIsometry::disconnected:
        violations.push_back(std::string("subgraph induced by ") + name +
                             " is disconnected");
        break;
      case SubsetIsometry::not_isometric:
        violations.push_back(std::string("subgraph induced by ") + name +
                             " is not isometric");
        break;
    }
  }

  bool cross = false;
  g.for_each_edge([&](int u, int v) {
    const bool u1 = in1[static_cast<std::size_t>(u)], u2 = in2[static_cast<std::size_t>(u)];
    const bool v1 = in1[static_cast<std::size_t>(v)], v2 = in2[static_cast<std::size_t>(v)];
    if (!cross && ((u1 && !u2 && v2 && !v1) || (v1 && !v2 && u2 && !u1))) {
      cross = true;
      violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " joins v1\\v2 to v2\\v1");
    }
  });
  return violations;
}

// Result of expanding: a copy of <v1> and a copy of <v2> joined by a perfect
// matching on the intersection, with every new vertex mapped back to its
// host vertex and side.
struct Expansion {
  Graph graph;
  std::vector<int> origin_vertex;  // new vertex -> host vertex
  std::vector<int> origin_side;    // new vertex -> 1 or 2
  std::vector<int> side1_index;    // host vertex -> its copy in side 1, or -1
  std::vector<int> side2_index;    // host vertex -> its copy in side 2, or -1
};

inline Expansion expand(const Graph& g, const ExpansionSpec& spec) {
  if (auto violations = validate_spec(g, spec); !violations.empty()) {
    std::string msg = "expand: invalid spec:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  const int n = g.vertex_count();
  Expansion out;
  out.side1_index.assign(static_cast<std::size_t>(n), -1);
  out.side2_index.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < spec.v1.size(); ++k)
    out.side1_index[static_cast<std::size_t>(spec.v1[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < spec.v2.size(); ++k)
    out.side2_index[static_cast<std::size_t>(spec.v2[k])] =
        static_cast<int>(spec.v1.size() + k);

  const int order = static_cast<int>(spec.v1.size() + spec.v2.size());
  out.origin_vertex.reserve(static_cast<std::size_t>(order));
  out.origin_side.reserve(static_cast<std::size_t>(order));
  std::vector<std::string> labels;
  if (g.has_labels()) labels.reserve(static_cast<std::size_t>(order));
  for (int v : spec.v1) {
    out.origin_vertex.push_back(v);
    out.origin_side.push_back(1);
    if (g.has_labels()) labels.push_back(g.label(v) + "_1");
  }
  for (int v : spec.v2) {
    out.origin_vertex.push_back(v);
    out.origin_side.push_back(2);
    if (g.has_labels()) labels.push_back(g.label(v) + "_2");
  }

  std::vector<Edge> edges;
  g.for_each_edge([&](int a, int b) {
    const int a1 = out.side1_index[static_cast<std::size_t>(a)];
    const int b1 = out.side1_index[static_cast<std::size_t>(b)];
    if (a1 >= 0 && b1 >= 0) edges.push_back(make_edge(a1, b1));
    const int a2 = out.side2_index[static_cast<std::size_t>(a)];
    const int b2 = out.side2_index[static_cast<std::size_t>(b)];
    if (a2 >= 0 && b2 >= 0) edges.push_back(make_edge(a2, b2));
  });
  for (int v : spec.v1) {
    const int v2 = out.side2_index[static_cast<std::size_t>(v)];
    if (v2 >= 0)
      edges.push_back(make_edge(out.side1_index[static_cast<std::size_t>(v)], v2));
  }
  out.graph = Graph(order, edges, std::move(labels));
  return out;
}

// The distance-split sets of an edge uv: vertices strictly closer to u than
// to v (and vice versa), those among them with a neighbor across the split,
// and the crossing edges.
struct ThetaSets {
  std::vector<int> w_uv, w_vu;
  std::vector<int> u_uv, u_vu;
  std::vector<Edge> f_uv;
};

inline ThetaSets theta_sets(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("theta_sets: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") is not an edge");
  const auto du = bfs_distances(g, u);
  const auto dv = bfs_distances(g, v);
  if (std::find(du.begin(), du.end(), -1) != du.end())
    throw std::invalid_argument("theta_sets: graph is not connected");

  const int n = g.vertex_count();
  ThetaSets ts;
  std::vector<char> side(static_cast<std::size_t>(n), 0);  // 1 closer to u, 2 to v
  for (int x = 0; x < n; ++x) {
    if (du[static_cast<std::size_t>(x)] < dv[static_cast<std::size_t>(x)]) {
      side[static_cast<std::size_t>(x)] = 1;
      ts.w_uv.push_back(x);
    } else if (dv[static_cast<std::size_t>(x)] < du[static_cast<std::size_t>(x)]) {
      side[static_cast<std::size_t>(x)] = 2;
      ts.w_vu.push_back(x);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (side[static_cast<std::size_t>(x)] == 0) continue;
    const char other = side[static_cast<std::size_t>(x)] == 1 ? 2 : 1;
    bool boundary = false;
    for (int w : g.neighbors(x)) {
      if (side[static_cast<std::size_t>(w)] == other) {
        boundary = true;
        if (side[static_cast<std::size_t>(x)] == 1) ts.f_uv.push_back(make_edge(x, w));
      }
    }
    if (boundary)
      (side[static_cast<std::size_t>(x)] == 1 ? ts.u_uv : ts.u_vu).push_back(x);
  }
  std::sort(ts.f_uv.begin(), ts.f_uv.end());
  return ts;
}

enum class ContractStatus { ok, not_partition, not_matching };

// Inverse of an expansion at an edge: merge the matched boundary pairs and
// keep the induced edges. Fails when the distance split is not a partition
// or the crossing edges are not a perfect matching.
struct Contraction {
  ContractStatus status = ContractStatus::ok;
  std::string reason;
  Edge contracted{};
  Graph quotient;
  ExpansionSpec spec;      // over the quotient; expanding it reproduces the host
  std::vector<int> image;  // host vertex -> quotient vertex
  std::vector<int> side;   // host vertex -> 1 or 2
};

inline Contraction contract(const Graph& g, int u, int v) {
  Contraction c;
  c.contracted = make_edge(u, v);
  const ThetaSets ts = theta_sets(g, u, v);
  const int n = g.vertex_count();

  if (static_cast<int>(ts.w_uv.size() + ts.w_vu.size()) != n) {
    c.status = ContractStatus::not_partition;
    c.reason = "distance split leaves " +
               std::to_string(n - ts.w_uv.size() - ts.w_vu.size()) +
               " equidistant vertices";
    return c;
  }
  c.side.assign(static_cast<std::size_t>(n), 2);
  for (int x : ts.w_uv) c.side[static_cast<std::size_t>(x)] = 1;

  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (int x : ts.u_uv) {
    int count = 0;
    for (int w : g.neighbors(x))
      if (c.side[static_cast<std::size_t>(w)] == 2) {
        partner[static_cast<std::size_t>(x)] = w;
        ++count;
      }
    if (count != 1) {
      c.status = ContractStatus::not_matching;
      c.reason = "vertex " + std::to_string(x) + " has " + std::to_string(count) +
                 " crossing edges";
      return c;
    }
  }
  for (int y : ts.u_vu) {
    int count = 0;
    for (int w : g.neighbors(y))
      if (c.side[static_cast<std::size_t>(w)] == 1) {
        partner[static_cast<std::size_t>(y)] = w;
        ++count;
      }
    if (count != 1) {
      c.status = ContractStatus::not_matching;
      c.reason = "vertex " + std::to_string(y) + " has " + std::to_string(count) +
                 " crossing edges";
      return c;
    }
  }

  c.image.assign(static_cast<std::size_t>(n), -1);
  int fresh = 0;
  for (int x = 0; x < n; ++x)
    if (c.side[static_cast<std::size_t>(x)] == 1) c.image[static_cast<std::size_t>(x)] = fresh++;
  for (int x = 0; x < n; ++x) {
    if (c.side[static_cast<std::size_t>(x)] != 2) continue;
    const int p = partner[static_cast<std::size_t>(x)];
    c.image[static_cast<std::size_t>(x)] =
        p >= 0 ? c.image[static_cast<std::size_t>(p)] : fresh++;
  }

  std::vector<Edge> edges;
  g.for_each_edge([&](int a, int b) {
    const int ia = c.image[static_cast<std::size_t>(a)];
    const int ib = c.image[static_cast<std::size_t>(b)];
    if (ia != ib) edges.push_back(make_edge(ia, ib));
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  c.quotient = Graph(fresh, edges);

  for (int x = 0; x < n; ++x)
    (c.side[static_cast<std::size_t>(x)] == 1 ? c.spec.v1 : c.spec.v2)
        .push_back(c.image[static_cast<std::size_t>(x)]);
  std::sort(c.spec.v1.begin(), c.spec.v1.end());
  std::sort(c.spec.v2.begin(), c.spec.v2.end());
  return c;
}

// Contracts at the lexicographically smallest edge.
inline Contraction contract(const Graph& g) {
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int w : g.neighbors(x))
      if (w > x) return contract(g, x, w);
  throw std::invalid_argument("contract: graph has no edges");
}

// Whether re-expanding the contraction's spec reproduces the host graph
// under the tracked vertex correspondence (adjacency-exact; no isomorphism
// search).
inline bool replays_to(const Graph& g, const Contraction& c, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (c.status != ContractStatus::ok) return fail("contraction failed: " + c.reason);
  Expansion h;
  try {
    h = expand(c.quotient, c.spec);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  const int n = g.vertex_count();
  if (h.graph.vertex_count() != n) return fail("vertex count differs");
  if (h.graph.edge_count() != g.edge_count()) return fail("edge count differs");
  std::vector<int> phi(static_cast<std::size_t>(n), -1);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int q = c.image[static_cast<std::size_t>(x)];
    const int y = c.side[static_cast<std::size_t>(x)] == 1
                      ? h.side1_index[static_cast<std::size_t>(q)]
                      : h.side2_index[static_cast<std::size_t>(q)];
    if (y < 0 || hit[static_cast<std::size_t>(y)]) return fail("correspondence is not a bijection");
    hit[static_cast<std::size_t>(y)] = 1;
    phi[static_cast<std::size_t>(x)] = y;
  }
  bool ok = true;
  g.for_each_edge([&](int a, int b) {
    if (ok && !h.graph.has_edge(phi[static_cast<std::size_t>(a)],
                                phi[static_cast<std::size_t>(b)]))
      ok = false;
  });
  return ok ? true : fail("an edge is missing after re-expansion");
}

struct RecognitionStep {
  Edge contracted{};
  ExpansionSpec spec;      // over the quotient graph of this step
  std::vector<int> image;  // host vertex -> quotient vertex
  std::vector<int> side;   // host vertex -> 1 or 2
};

struct Recognition {
  bool ok = false;
  std::vector<RecognitionStep> steps;  // in contraction order, down to K_1
  std::string failure;
};

// Iterated contraction with every step re-verified by expansion. A full
// certificate down to K_1 is itself the proof that the input is a partial
// cube; any failed step rejects.
inline Recognition recognize_partial_cube(const Graph& g) {
  Recognition rec;
  if (g.vertex_count() == 0) {
    rec.failure = "empty graph";
    return rec;
  }
  if (!is_connected(g)) {
    rec.failure = "graph is not connected";
    return rec;
  }
  Graph cur = g;
  while (cur.vertex_count() > 1) {
    Contraction c = contract(cur);
    const auto step_id = std::to_string(rec.steps.size());
    if (c.status != ContractStatus::ok) {
      rec.failure = "step " + step_id + ": " + c.reason;
      return rec;
    }
    std::string why;
    if (!replays_to(cur, c, &why)) {
      rec.failure = "step " + step_id + ": " + why;
      return rec;
    }
    rec.steps.push_back({c.contracted, std::move(c.spec), std::move(c.image),
                         std::move(c.side)});
    cur = std::move(c.quotient);
  }
  rec.ok = true;
  return rec;
}

inline bool is_partial_cube(const Graph& g) { return recognize_partial_cube(g).ok; }

// Replays a certificate from K_1 back up, transporting each spec through the
// accumulated vertex correspondence, and checks the final graph matches the
// original adjacency-exactly.
inline bool certificate_replays(const Graph& original, const Recognition& rec,
                                std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!rec.ok) return fail("no certificate: " + rec.failure);
  Graph cur(1, {});
  std::vector<int> psi{0};  // quotient vertex of the current level -> vertex of cur
  for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it) {
    ExpansionSpec moved;
    moved.v1.reserve(it->spec.v1.size());
    moved.v2.reserve(it->spec.v2.size());
    for (int x : it->spec.v1) moved.v1.push_back(psi[static_cast<std::size_t>(x)]);
    for (int x : it->spec.v2) moved.v2.push_back(psi[static_cast<std::size_t>(x)]);
    std::sort(moved.v1.begin(), moved.v1.end());
    std::sort(moved.v2.begin(), moved.v2.end());
    Expansion h;
    try {
      h = expand(cur, moved);
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
    std::vector<int> next(it->image.size());
    for (std::size_t x = 0; x < it->image.size(); ++x) {
      const int q = psi[static_cast<std::size_t>(it->image[x])];
      next[x] = it->side[x] == 1 ? h.side1_index[static_cast<std::size_t>(q)]
                                 : h.side2_index[static_cast<std::size_t>(q)];
      if (next[x] < 0) return fail("certificate correspondence broke");
    }
    cur = std::move(h.graph);
    psi = std::move(next);
  }
  if (cur.vertex_count() != original.vertex_count() ||
      cur.edge_count() != original.edge_count())
    return fail("replayed graph has different size");
  bool ok = true;
  original.for_each_edge([&](int a, int b) {
    if (ok && !cur.has_edge(psi[static_cast<std::size_t>(a)],
                            psi[static_cast<std::size_t>(b)]))
      ok = false;
  });
  return ok ? true : fail("replayed graph misses an edge");
}

// Irregularity of the expanded graph computed on the host side:
// irr<V1> + irr<V2> + sum over the intersection of (deg - neighbors kept in
// the intersection) + sum of |crossing-neighbor imbalance| on the matching.
inline std::int64_t irr_expansion_rhs(const Graph& g, const ExpansionSpec& spec) {
  if (auto violations = validate_spec(g, spec); !violations.empty()) {
    std::string msg = "irr_expansion_rhs: invalid spec:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  const auto in1 = detail::subset_mask(g, spec.v1);
  const auto in2 = detail::subset_mask(g, spec.v2);
  std::int64_t sum = irregularity(induced_subgraph(g, spec.v1)) +
                     irregularity(induced_subgraph(g, spec.v2));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(in1[static_cast<std::size_t>(v)] && in2[static_cast<std::size_t>(v)])) continue;
    int n_both = 0, n_only1 = 0, n_only2 = 0;
    for (int w : g.neighbors(v)) {
      const bool w1 = in1[static_cast<std::size_t>(w)];
      const bool w2 = in2[static_cast<std::size_t>(w)];
      if (w1 && w2) ++n_both;
      else if (w1) ++n_only1;
      else ++n_only2;
    }
    sum += (g.degree(v) - n_both) + std::abs(n_only1 - n_only2);
  }
  return sum;
}

// Peripheral specialization: one side is the whole vertex set, so the new
// edges contribute twice the boundary degree of the other side.
inline std::int64_t irr_peripheral_rhs(const Graph& g, const ExpansionSpec& spec) {
  if (auto violations = validate_spec(g, spec); !violations.empty()) {
    std::string msg = "irr_peripheral_rhs: invalid spec:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
  const int n = g.vertex_count();
  const bool v1_full = static_cast<int>(spec.v1.size()) == n;
  const bool v2_full = static_cast<int>(spec.v2.size()) == n;
  if (!v1_full && !v2_full)
    throw std::invalid_argument("irr_peripheral_rhs: neither side covers the graph");
  const auto& small = v1_full ? spec.v2 : spec.v1;
  const auto in_small = detail::subset_mask(g, small);
  std::int64_t boundary = 0;
  for (int v : small)
    for (int w : g.neighbors(v))
      if (!in_small[static_cast<std::size_t>(w)]) ++boundary;
  return irregularity(g) + irregularity(induced_subgraph(g, small)) + 2 * boundary;
}

// Doubling (v1 = v2 = V) leaves every imbalance unchanged on both copies.
inline std::int64_t irr_doubled(const Graph& g) {
  ExpansionSpec spec;
  spec.v1.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) spec.v1[static_cast<std::size_t>(v)] = v;
  spec.v2 = spec.v1;
  return irr_peripheral_rhs(g, spec);
}

struct SamplerOptions {
  int max_vertices = 200;
  int retry_budget = 200;
};

struct TraceStep {
  Graph host;
  ExpansionSpec spec;
};

struct ExpansionTrace {
  std::vector<TraceStep> steps;
  Graph result;
};

// Random valid expansion sequence from K_1. Each step grows a random
// connected seed subset, deals the complement's components to the two sides
// (no crossing edge can exist between different components), and rejects
// until the isometry conditions hold. Deterministic for a fixed seed.
inline ExpansionTrace random_expansion_trace(int steps, std::uint64_t seed,
                                             const SamplerOptions& options = {}) {
  if (steps < 0) throw std::invalid_argument("random_expansion_trace: negative steps");
  std::mt19937_64 rng(seed);
  auto draw = [&rng](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };

  ExpansionTrace trace;
  Graph cur(1, {});
  for (int s = 0; s < steps; ++s) {
    const int n = cur.vertex_count();
    bool placed = false;
    for (int attempt = 0; attempt < options.retry_budget && !placed; ++attempt) {
      // Small seeds (a vertex or an edge) are always isometric, so half the
      // draws stay small to keep rejection bounded.
      const int target = (rng() & 1) ? 1 + draw(std::min(2, n)) : 1 + draw(n);
      std::vector<char> in_sub(static_cast<std::size_t>(n), 0);
      std::vector<char> in_cand(static_cast<std::size_t>(n), 0);
      std::vector<int> sub, cand;
      auto grow = [&](int x) {
        in_sub[static_cast<std::size_t>(x)] = 1;
        sub.push_back(x);
        for (int w : cur.neighbors(x))
          if (!in_sub[static_cast<std::size_t>(w)] && !in_cand[static_cast<std::size_t>(w)]) {
            in_cand[static_cast<std::size_t>(w)] = 1;
            cand.push_back(w);
          }
      };
      grow(draw(n));
      while (static_cast<int>(sub.size()) < target && !cand.empty()) {
        const int j = draw(static_cast<int>(cand.size()));
        const int x = cand[static_cast<std::size_t>(j)];
        cand[static_cast<std::size_t>(j)] = cand.back();
        cand.pop_back();
        grow(x);
      }

      ExpansionSpec spec;
      spec.v1 = sub;
      spec.v2 = sub;
      std::vector<char> seen = in_sub;
      for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::vector<int> comp{root};
        seen[static_cast<std::size_t>(root)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
          for (int w : cur.neighbors(comp[head]))
            if (!seen[static_cast<std::size_t>(w)]) {
              seen[static_cast<std::size_t>(w)] = 1;
              comp.push_back(w);
            }
        auto& side = (rng() & 1) ? spec.v2 : spec.v1;
        side.insert(side.end(), comp.begin(), comp.end());
      }
      std::sort(spec.v1.begin(), spec.v1.end());
      std::sort(spec.v2.begin(), spec.v2.end());

      if (static_cast<int>(spec.v1.size() + spec.v2.size()) > options.max_vertices)
        continue;
      if (!validate_spec(cur, spec).empty()) continue;
      Graph next = expand(cur, spec).graph;
      trace.steps.push_back({std::move(cur), std::move(spec)});
      cur = std::move(next);
      placed = true;
    }
    if (!placed)
      throw std::runtime_error("random_expansion_trace: sampling budget exhausted at step " +
                               std::to_string(s));
  }
  trace.result = std::move(cur);
  return trace;
}

inline Graph random_expansion_sequence(int steps, std::uint64_t seed,
                                       const SamplerOptions& options = {}) {
  return random_expansion_trace(steps, seed, options).result;
}

inline std::string to_json(const ExpansionSpec& spec) {
  auto list = [](const std::vector<int>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(s[i]);
    }
    return out + "]";
  };
  return "{\"v1\":" + list(spec.v1) + ",\"v2\":" + list(spec.v2) + "}";
}

// A certificate is the ordered list of specs emitted by recognition.
inline std::string certificate_to_json(const Recognition& rec) {
  std::string out = "[";
  for (std::size_t i = 0; i < rec.steps.size(); ++i) {
    if (i > 0) out += ",";
    out += to_json(rec.steps[i].spec);
  }
  return out + "]";
}

}  // namespace pell
