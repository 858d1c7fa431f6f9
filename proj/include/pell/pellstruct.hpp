#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pell/irregularity.hpp"

namespace pell {

// Canonical decomposition of the Pell graph: the 0-block A, the 1-block B
// split by second symbols into B10 / B11 / B122, and the 22-block C.
enum class Block { A, B10, B11, B122, C };

inline const char* block_name(Block b) {
  switch (b) {
    case Block::A: return "A";
    case Block::B10: return "B10";
    case Block::B11: return "B11";
    case Block::B122: return "B122";
    case Block::C: return "C";
  }
  return "?";
}

inline Block block_of_word(std::string_view w) {
  if (w.size() < 2)
    throw std::invalid_argument("block_of_word: need at least two symbols");
  if (w[0] == '0') return Block::A;
  if (w[0] == '2') return Block::C;
  if (w[1] == '0') return Block::B10;
  if (w[1] == '1') return Block::B11;
  return Block::B122;
}

struct Decomposition {
  int n = 0;
  std::vector<Block> part;  // indexed by canonical vertex order
  std::array<std::int64_t, 5> sizes{};  // A, B10, B11, B122, C

  std::int64_t size(Block b) const { return sizes[static_cast<std::size_t>(b)]; }
  std::int64_t size_b() const {
    return size(Block::B10) + size(Block::B11) + size(Block::B122);
  }
};

// Tags every vertex of the Pell graph of order n by its leading symbols.
// The five-way split needs two leading symbols, hence n >= 2.
inline Decomposition decompose(int n) {
  if (n < 2) throw std::invalid_argument("decompose: defined for n >= 2");
  Decomposition d;
  d.n = n;
  for_each_pell_word(n, [&](std::string_view w) {
    const Block b = block_of_word(w);
    d.part.push_back(b);
    ++d.sizes[static_cast<std::size_t>(b)];
  });
  return d;
}

enum class EdgeKind { flip, swap };

// A Pell-graph edge identified by its rewrite site, with the imbalance the
// site's neighborhood predicts: a flip scores [left==1] + [right==1], a swap
// scores 2 more; coordinates beyond the word boundary count as not-1.
struct EdgeClass {
  EdgeKind kind;
  int position;        // leftmost changed coordinate
  bool left_is_one;    // coordinate position-1, if it exists
  bool right_is_one;   // coordinate position+1 (flip) or position+2 (swap)
  int predicted_imbalance;
};

inline EdgeClass classify_pell_edge(std::string_view u, std::string_view v) {
  if (!is_pell_word(u) || !is_pell_word(v))
    throw std::invalid_argument("classify_pell_edge: inputs must be Pell words");
  if (u.size() != v.size())
    throw std::invalid_argument("classify_pell_edge: length mismatch");
  const int n = static_cast<int>(u.size());
  std::vector<int> diff;
  for (int i = 0; i < n && static_cast<int>(diff.size()) <= 2; ++i)
    if (u[static_cast<std::size_t>(i)] != v[static_cast<std::size_t>(i)]) diff.push_back(i);

  EdgeClass ec{};
  if (diff.size() == 1) {
    const int i = diff[0];
    const char a = u[static_cast<std::size_t>(i)];
    const char b = v[static_cast<std::size_t>(i)];
    if (!((a == '0' && b == '1') || (a == '1' && b == '0')))
      throw std::invalid_argument("classify_pell_edge: words are not adjacent");
    ec.kind = EdgeKind::flip;
    ec.position = i;
    ec.left_is_one = i > 0 && u[static_cast<std::size_t>(i - 1)] == '1';
    ec.right_is_one = i + 1 < n && u[static_cast<std::size_t>(i + 1)] == '1';
  } else if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const int i = diff[0];
    auto pair_at = [i](std::string_view w, char c) {
      return w[static_cast<std::size_t>(i)] == c &&
             w[static_cast<std::size_t>(i + 1)] == c;
    };
    if (!((pair_at(u, '1') && pair_at(v, '2')) || (pair_at(u, '2') && pair_at(v, '1'))))
      throw std::invalid_argument("classify_pell_edge: words are not adjacent");
    ec.kind = EdgeKind::swap;
    ec.position = i;
    ec.left_is_one = i > 0 && u[static_cast<std::size_t>(i - 1)] == '1';
    ec.right_is_one = i + 2 < n && u[static_cast<std::size_t>(i + 2)] == '1';
  } else {
    throw std::invalid_argument("classify_pell_edge: words are not adjacent");
  }
  ec.predicted_imbalance = (ec.kind == EdgeKind::swap ? 2 : 0) +
                           (ec.left_is_one ? 1 : 0) + (ec.right_is_one ? 1 : 0);
  return ec;
}

// Closed form for the number of Pell-graph edges with imbalance i, n >= 4.
// The halved and quartered branches are checked to divide exactly.
inline int128 imbalance_class_closed(int n, int i) {
  if (n < 4) throw std::invalid_argument("imbalance_class_closed: defined for n >= 4");
  if (i < 0 || i > 4)
    throw std::invalid_argument("imbalance_class_closed: imbalance must be in 0..4");
  const int128 nn = n;
  switch (i) {
    case 0:
      return exact_div((nn + 2) * pell_number(n - 2) + (nn + 1) * pell_number(n - 3), 2);
    case 1:
      return nn * pell_number(n - 2);
    case 2:
      return exact_div((5 * nn - 3) * pell_number(n - 3) +
                           (3 * nn - 2) * pell_number(n - 4), 4);
    case 3:
      return (nn - 1) * pell_number(n - 3);
    default:
      return exact_div((nn - 3) * pell_number(n - 3) + (nn - 2) * pell_number(n - 4), 4);
  }
}

namespace detail {

inline constexpr std::array<std::array<std::int64_t, 5>, 3> kImbalanceInitialRows{{
    {1, 0, 0, 0, 0},  // n = 1
    {2, 2, 1, 0, 0},  // n = 2
    {7, 6, 3, 2, 0},  // n = 3
}};

inline int128 imbalance_recurrence_addend(int n, int i) {
  switch (i) {
    case 0: return 2 * pell_number(n - 3);
    case 1: return pell_number(n - 2) + pell_number(n - 4);
    case 2: return pell_number(n - 3) + 2 * pell_number(n - 4);
    case 3: return pell_number(n - 3) + pell_number(n - 5);
    default: return pell_number(n - 4);
  }
}

}  // namespace detail

// Row (e_n^0 .. e_n^4) computed by the recurrence
// e_n^i = 2 e_{n-1}^i + e_{n-2}^i + addend(n, i), seeded with the n <= 3 rows.
inline std::array<int128, 5> imbalance_class_recurrence_row(int n) {
  if (n < 1)
    throw std::invalid_argument("imbalance_class_recurrence_row: defined for n >= 1");
  std::array<int128, 5> prev{}, cur{};
  for (int k = 0; k < 5; ++k) cur[static_cast<std::size_t>(k)] =
      detail::kImbalanceInitialRows[0][static_cast<std::size_t>(k)];
  for (int m = 2; m <= n; ++m) {
    std::array<int128, 5> next{};
    if (m <= 3) {
      for (int k = 0; k < 5; ++k) next[static_cast<std::size_t>(k)] =
          detail::kImbalanceInitialRows[static_cast<std::size_t>(m - 1)]
                                       [static_cast<std::size_t>(k)];
    } else {
      for (int k = 0; k < 5; ++k)
        next[static_cast<std::size_t>(k)] = 2 * cur[static_cast<std::size_t>(k)] +
                                            prev[static_cast<std::size_t>(k)] +
                                            detail::imbalance_recurrence_addend(m, k);
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

inline int128 imbalance_class_recurrence(int n, int i) {
  if (i < 0 || i > 4)
    throw std::invalid_argument("imbalance_class_recurrence: imbalance must be in 0..4");
  return imbalance_class_recurrence_row(n)[static_cast<std::size_t>(i)];
}

// Convolution form of the imbalance-4 count. Two readings exist of the same
// statement: the one whose counting argument places a 1221 factor after a
// k-symbol prefix, sum p_k * p_{n-4-k}, and the literal display sum
// p_k * p_{n-k}. They disagree (already at n = 4: 1 vs 29); callers compare
// both against enumeration rather than trusting either.
inline int128 imbalance4_convolution(int n) {
  if (n < 4) throw std::invalid_argument("imbalance4_convolution: defined for n >= 4");
  int128 s = 0;
  for (int k = 0; k <= n - 4; ++k) s += pell_number(k) * pell_number(n - 4 - k);
  return s;
}

inline int128 imbalance4_convolution_displayed(int n) {
  if (n < 4)
    throw std::invalid_argument("imbalance4_convolution_displayed: defined for n >= 4");
  int128 s = 0;
  for (int k = 0; k <= n - 4; ++k) s += pell_number(k) * pell_number(n - k);
  return s;
}

// Irregularity of the Pell graph, closed form (n * p_n + (n-3) * p_{n-1}) / 2.
// The (n-3) factor goes negative below n = 3; the arithmetic is signed and
// the result is checked nonnegative.
inline int128 pell_irregularity_closed(int n) {
  if (n < 1) throw std::invalid_argument("pell_irregularity_closed: defined for n >= 1");
  const int128 v =
      exact_div(int128{n} * pell_number(n) + int128{n - 3} * pell_number(n - 1), 2);
  if (v < 0) throw std::domain_error("pell_irregularity_closed: negative value");
  return v;
}

// Irregularity by the recurrence irr_n = 2 irr_{n-1} + irr_{n-2} + 2 p_{n-1},
// seeded with irr_1 = 0, irr_2 = 4.
inline int128 pell_irregularity_recurrence(int n) {
  if (n < 1)
    throw std::invalid_argument("pell_irregularity_recurrence: defined for n >= 1");
  if (n == 1) return 0;
  int128 prev = 0, cur = 4;
  for (int m = 3; m <= n; ++m) {
    const int128 next = 2 * cur + prev + 2 * pell_number(m - 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// Sigma index of the Pell graph: (4n - 4) p_{n-1} - 2 p_{n-2}, n > 1.
inline int128 pell_sigma_closed(int n) {
  if (n <= 1) throw std::invalid_argument("pell_sigma_closed: defined for n > 1");
  return (4 * int128{n} - 4) * pell_number(n - 1) - 2 * pell_number(n - 2);
}

// Edge-exact audit of how imbalance changes between a Pell graph and the
// blocks of its canonical decomposition:
//   - edges inside A or C keep the imbalance they have inside the block;
//   - edges inside B gain exactly 1 iff one endpoint lies in B11 and the
//     other in B10 or B122;
//   - A-B edges have imbalance 1 exactly on the 01.../11... pairs, else 0;
//   - B-C edges have imbalance 3 exactly on the 111.../221... pairs, else 2.
// Cross-category counts are also compared against their Pell-number values.
struct StructuralDeltaReport {
  int n = 0;
  std::int64_t a_internal = 0, b_internal = 0, c_internal = 0;
  std::int64_t ab_edges = 0, bc_edges = 0;
  std::int64_t b_bumped = 0;
  std::int64_t ab_imb0 = 0, ab_imb1 = 0, bc_imb2 = 0, bc_imb3 = 0;
  std::int64_t expected_b_bumped = 0;
  std::int64_t expected_ab_imb0 = 0, expected_ab_imb1 = 0;
  std::int64_t expected_bc_imb2 = 0, expected_bc_imb3 = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

inline StructuralDeltaReport structural_imbalance_deltas(
    int n, int build_limit = kDefaultPellBuildLimit) {
  if (n < 3)
    throw std::invalid_argument("structural_imbalance_deltas: defined for n >= 3");
  const Graph g = build_pell_graph(n, build_limit);
  const Decomposition d = decompose(n);
  const int order = g.vertex_count();

  auto coarse = [&](int v) {
    const Block b = d.part[static_cast<std::size_t>(v)];
    if (b == Block::A) return 0;
    if (b == Block::C) return 2;
    return 1;
  };
  std::vector<int> block_degree(static_cast<std::size_t>(order), 0);
  for (int u = 0; u < order; ++u)
    for (int v : g.neighbors(u))
      if (coarse(v) == coarse(u)) ++block_degree[static_cast<std::size_t>(u)];

  StructuralDeltaReport r;
  r.n = n;
  auto violate = [&](int u, int v, const std::string& what) {
    r.violations.push_back(g.label(u) + "-" + g.label(v) + ": " + what);
  };

  g.for_each_edge([&](int u, int v) {
    const int cu = coarse(u), cv = coarse(v);
    const int imb = std::abs(g.degree(u) - g.degree(v));
    if (cu == cv) {
      const int sub_imb = std::abs(block_degree[static_cast<std::size_t>(u)] -
                                   block_degree[static_cast<std::size_t>(v)]);
      if (cu == 0) {
        ++r.a_internal;
        if (imb != sub_imb) violate(u, v, "A-internal imbalance changed");
      } else if (cu == 2) {
        ++r.c_internal;
        if (imb != sub_imb) violate(u, v, "C-internal imbalance changed");
      } else {
        ++r.b_internal;
        const bool u11 = d.part[static_cast<std::size_t>(u)] == Block::B11;
        const bool v11 = d.part[static_cast<std::size_t>(v)] == Block::B11;
        const int bump = (u11 != v11) ? 1 : 0;
        r.b_bumped += bump;
        if (imb != sub_imb + bump)
          violate(u, v, "B-internal imbalance delta is not " + std::to_string(bump));
      }
      return;
    }
    const int lo = std::min(cu, cv), hi = std::max(cu, cv);
    if (lo == 0 && hi == 1) {
      ++r.ab_edges;
      const std::string& bw = g.label(cu == 1 ? u : v);
      const int want = bw[1] == '1' ? 1 : 0;
      (want == 1 ? r.ab_imb1 : r.ab_imb0) += 1;
      if (imb != want)
        violate(u, v, "A-B imbalance " + std::to_string(imb) + ", expected " +
                          std::to_string(want));
    } else if (lo == 1 && hi == 2) {
      ++r.bc_edges;
      const std::string& bw = g.label(cu == 1 ? u : v);
      const int want = bw[2] == '1' ? 3 : 2;
      (want == 3 ? r.bc_imb3 : r.bc_imb2) += 1;
      if (imb != want)
        violate(u, v, "B-C imbalance " + std::to_string(imb) + ", expected " +
                          std::to_string(want));
    } else {
      violate(u, v, "edge between A and C");
    }
  });

  r.expected_ab_imb1 = static_cast<std::int64_t>(pell_number(n - 2));
  r.expected_ab_imb0 =
      static_cast<std::int64_t>(pell_number(n - 2) + pell_number(n - 3));
  r.expected_bc_imb3 = static_cast<std::int64_t>(pell_number(n - 3));
  r.expected_bc_imb2 =
      static_cast<std::int64_t>(pell_number(n - 3) + pell_number(n - 4));
  r.expected_b_bumped =
      static_cast<std::int64_t>(pell_number(n - 2) + pell_number(n - 3));
  auto check_count = [&](const char* what, std::int64_t got, std::int64_t want) {
    if (got != want)
      r.violations.push_back(std::string(what) + " count " + std::to_string(got) +
                             ", expected " + std::to_string(want));
  };
  check_count("A-B imbalance-1", r.ab_imb1, r.expected_ab_imb1);
  check_count("A-B imbalance-0", r.ab_imb0, r.expected_ab_imb0);
  check_count("B-C imbalance-3", r.bc_imb3, r.expected_bc_imb3);
  check_count("B-C imbalance-2", r.bc_imb2, r.expected_bc_imb2);
  check_count("B-internal bumped", r.b_bumped, r.expected_b_bumped);
  return r;
}

}  // namespace pell
