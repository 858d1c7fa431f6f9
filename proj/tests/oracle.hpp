#pragma once

// Brute-force reference constructions for tests. These deliberately avoid
// the library's enumeration and rewrite code paths: words come from
// filtering all strings over the alphabet, adjacency from an all-pairs
// positional comparison.

#include <string>
#include <vector>

#include "pell/graphs.hpp"

namespace oracle {

inline bool pell_ok(const std::string& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != '0' && w[i] != '1' && w[i] != '2') return false;
    if (w[i] != '2') {
      ++i;
      continue;
    }
    std::size_t run = 0;
    while (i < w.size() && w[i] == '2') {
      ++run;
      ++i;
    }
    if (run % 2 != 0) return false;
  }
  return true;
}

inline std::vector<std::string> all_strings(int n, const std::string& alphabet) {
  std::vector<std::string> out{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& s : out)
      for (char c : alphabet) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::string> pell_words(int n) {
  std::vector<std::string> out;
  for (auto& s : all_strings(n, "012"))
    if (pell_ok(s)) out.push_back(std::move(s));
  return out;  // generation order is already lexicographic
}

inline bool pell_adjacent(const std::string& u, const std::string& v) {
  if (u.size() != v.size()) return false;
  std::vector<int> diff;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) diff.push_back(static_cast<int>(i));
  if (diff.size() == 1) {
    const char a = u[static_cast<std::size_t>(diff[0])];
    const char b = v[static_cast<std::size_t>(diff[0])];
    return (a == '0' && b == '1') || (a == '1' && b == '0');
  }
  if (diff.size() == 2 && diff[1] == diff[0] + 1) {
    const std::size_t i = static_cast<std::size_t>(diff[0]);
    auto pair_is = [i](const std::string& w, char c) {
      return w[i] == c && w[i + 1] == c;
    };
    return (pair_is(u, '1') && pair_is(v, '2')) || (pair_is(u, '2') && pair_is(v, '1'));
  }
  return false;
}

inline pell::Graph pell_graph(int n) {
  auto words = pell_words(n);
  const int order = static_cast<int>(words.size());
  std::vector<pell::Edge> edges;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (pell_adjacent(words[i], words[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return pell::Graph(order, edges, std::move(words));
}

inline bool fibonacci_ok(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != '0' && w[i] != '1') return false;
    if (w[i] == '1' && i + 1 < w.size() && w[i + 1] == '1') return false;
  }
  return true;
}

inline std::vector<std::string> fibonacci_words(int n) {
  std::vector<std::string> out;
  for (auto& s : all_strings(n, "01"))
    if (fibonacci_ok(s)) out.push_back(std::move(s));
  return out;
}

inline bool hamming_one(const std::string& u, const std::string& v) {
  int diff = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i] && ++diff > 1) return false;
  return diff == 1;
}

inline pell::Graph fibonacci_cube(int n) {
  auto words = fibonacci_words(n);
  const int order = static_cast<int>(words.size());
  std::vector<pell::Edge> edges;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (hamming_one(words[i], words[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return pell::Graph(order, edges, std::move(words));
}

}  // namespace oracle
