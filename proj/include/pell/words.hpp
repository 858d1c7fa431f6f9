#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pell/seq.hpp"

namespace pell {

// A Pell word is a string over {0,1,2} that parses left to right as a word
// over the alphabet {0, 1, 22}: every 2 must be the first symbol of an
// adjacent 22 pair, consumed atomically. Equivalently, every maximal run of
// 2s has even length.
inline bool is_pell_word(std::string_view w) noexcept {
  std::size_t i = 0;
  while (i < w.size()) {
    const char c = w[i];
    if (c == '0' || c == '1') {
      ++i;
    } else if (c == '2') {
      if (i + 1 >= w.size() || w[i + 1] != '2') return false;
      i += 2;
    } else {
      return false;
    }
  }
  return true;
}

// Binary string with no two adjacent 1s.
inline bool is_fibonacci_word(std::string_view w) noexcept {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != '0' && w[i] != '1') return false;
    if (w[i] == '1' && i + 1 < w.size() && w[i + 1] == '1') return false;
  }
  return true;
}

namespace detail {

template <typename Fn>
void pell_words_rec(std::string& buf, int pos, int n, Fn& fn) {
  if (pos == n) {
    fn(std::string_view(buf));
    return;
  }
  buf[pos] = '0';
  pell_words_rec(buf, pos + 1, n, fn);
  buf[pos] = '1';
  pell_words_rec(buf, pos + 1, n, fn);
  if (pos + 2 <= n) {
    buf[pos] = '2';
    buf[pos + 1] = '2';
    pell_words_rec(buf, pos + 2, n, fn);
  }
}

template <typename Fn>
void fibonacci_words_rec(std::string& buf, int pos, int n, Fn& fn) {
  if (pos == n) {
    fn(std::string_view(buf));
    return;
  }
  buf[pos] = '0';
  fibonacci_words_rec(buf, pos + 1, n, fn);
  buf[pos] = '1';
  if (pos + 1 == n) {
    fn(std::string_view(buf));
  } else {
    buf[pos + 1] = '0';
    fibonacci_words_rec(buf, pos + 2, n, fn);
  }
}

// Ranks use 64-bit indices; p_48 is the last Pell number below 2^62.
inline constexpr int kMaxRankLength = 48;

inline std::int64_t pell64(int n) {
  return static_cast<std::int64_t>(pell_number(n));
}

inline std::int64_t fib64(int n) {
  return static_cast<std::int64_t>(fibonacci_number(n));
}

}  // namespace detail

// Visits all Pell words of length n in canonical order: the 0-block, then
// the 1-block, then the 22-block, each recursively ordered the same way
// (this coincides with lexicographic order on the symbols).
template <typename Fn>
void for_each_pell_word(int n, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("for_each_pell_word: negative length");
  std::string buf(static_cast<std::size_t>(n), '0');
  detail::pell_words_rec(buf, 0, n, fn);
}

inline std::vector<std::string> generate_pell_words(int n) {
  std::vector<std::string> out;
  if (n <= 20) out.reserve(static_cast<std::size_t>(detail::pell64(n)));
  for_each_pell_word(n, [&](std::string_view w) { out.emplace_back(w); });
  return out;
}

// Visits all Fibonacci words of length n, 0-block then 10-block.
template <typename Fn>
void for_each_fibonacci_word(int n, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("for_each_fibonacci_word: negative length");
  std::string buf(static_cast<std::size_t>(n), '0');
  detail::fibonacci_words_rec(buf, 0, n, fn);
}

inline std::vector<std::string> generate_fibonacci_words(int n) {
  std::vector<std::string> out;
  if (n <= 40) out.reserve(static_cast<std::size_t>(detail::fib64(n + 2)));
  for_each_fibonacci_word(n, [&](std::string_view w) { out.emplace_back(w); });
  return out;
}

// Index of w within the canonical order of all Pell words of length |w|.
inline std::int64_t pell_word_rank(std::string_view w) {
  if (!is_pell_word(w))
    throw std::invalid_argument("pell_word_rank: not a Pell word: \"" +
                                std::string(w) + "\"");
  if (static_cast<int>(w.size()) > detail::kMaxRankLength)
    throw std::invalid_argument("pell_word_rank: word too long for 64-bit ranks");
  const int n = static_cast<int>(w.size());
  std::int64_t r = 0;
  int i = 0;
  while (i < n) {
    const int m = n - i;
    if (w[i] == '0') {
      ++i;
    } else if (w[i] == '1') {
      r += detail::pell64(m - 1);
      ++i;
    } else {
      r += 2 * detail::pell64(m - 1);
      i += 2;
    }
  }
  return r;
}

inline std::string pell_word_unrank(int n, std::int64_t r) {
  if (n < 0) throw std::invalid_argument("pell_word_unrank: negative length");
  if (n > detail::kMaxRankLength)
    throw std::invalid_argument("pell_word_unrank: length too large for 64-bit ranks");
  if (r < 0 || static_cast<int128>(r) >= pell_number(n))
    throw std::out_of_range("pell_word_unrank: rank " + std::to_string(r) +
                            " out of range for length " + std::to_string(n));
  std::string w;
  w.reserve(static_cast<std::size_t>(n));
  int m = n;
  while (m > 0) {
    const std::int64_t block = detail::pell64(m - 1);
    if (r < block) {
      w += '0';
      m -= 1;
    } else if (r < 2 * block) {
      w += '1';
      r -= block;
      m -= 1;
    } else {
      w += "22";
      r -= 2 * block;
      m -= 2;
    }
  }
  return w;
}

inline std::int64_t fibonacci_word_rank(std::string_view w) {
  if (!is_fibonacci_word(w))
    throw std::invalid_argument("fibonacci_word_rank: not a Fibonacci word: \"" +
                                std::string(w) + "\"");
  if (static_cast<int>(w.size()) > 80)
    throw std::invalid_argument("fibonacci_word_rank: word too long for 64-bit ranks");
  const int n = static_cast<int>(w.size());
  std::int64_t r = 0;
  int i = 0;
  while (i < n) {
    const int m = n - i;
    if (w[i] == '0') {
      ++i;
    } else {
      r += detail::fib64(m + 1);  // size of the 0-block
      i += (m == 1) ? 1 : 2;      // "1" at the end, "10" otherwise
    }
  }
  return r;
}

// All words adjacent to w in the Pell graph of its length: every 0<->1 flip,
// every 11 factor replaced by 22 (overlapping occurrences each count), and
// every 22 pair replaced by 11. Sorted, no duplicates, w itself excluded.
inline std::vector<std::string> pell_rewrite_neighbors(std::string_view w) {
  if (!is_pell_word(w))
    throw std::invalid_argument("pell_rewrite_neighbors: not a Pell word: \"" +
                                std::string(w) + "\"");
  const int n = static_cast<int>(w.size());
  std::vector<std::string> out;
  std::string t(w);
  for (int i = 0; i < n; ++i) {
    if (t[i] == '0') {
      t[i] = '1';
      out.push_back(t);
      t[i] = '0';
    } else if (t[i] == '1') {
      t[i] = '0';
      out.push_back(t);
      t[i] = '1';
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (t[i] == '1' && t[i + 1] == '1') {
      t[i] = t[i + 1] = '2';
      out.push_back(t);
      t[i] = t[i + 1] = '1';
    }
  }
  for (int i = 0; i < n;) {
    if (t[i] == '2') {  // first symbol of a 22 pair
      t[i] = t[i + 1] = '1';
      out.push_back(t);
      t[i] = t[i + 1] = '2';
      i += 2;
    } else {
      ++i;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pell
