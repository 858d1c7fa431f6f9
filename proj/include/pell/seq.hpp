#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pell {

// All sequence and formula values are exact integers. 128 bits cover the
// largest quantity handled anywhere (n * p_n at n = 60 is below 2^83).
using int128 = __int128;

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 x =
      neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (x > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline bool fits_int64(int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// Pell numbers: p_{-1} = 0, p_0 = 1, p_1 = 2, p_n = 2 p_{n-1} + p_{n-2}.
inline int128 pell_number(int n) {
  if (n < -1) throw std::invalid_argument("pell_number: index must be >= -1");
  if (n == -1) return 0;
  static thread_local std::vector<int128> memo{1, 2};
  while (static_cast<int>(memo.size()) <= n)
    memo.push_back(2 * memo[memo.size() - 1] + memo[memo.size() - 2]);
  return memo[static_cast<std::size_t>(n)];
}

// Fibonacci numbers: F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
inline int128 fibonacci_number(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci_number: index must be >= 0");
  static thread_local std::vector<int128> memo{0, 1};
  while (static_cast<int>(memo.size()) <= n)
    memo.push_back(memo[memo.size() - 1] + memo[memo.size() - 2]);
  return memo[static_cast<std::size_t>(n)];
}

// Division that refuses to round. Closed forms carrying 1/2 or 1/4 factors
// must divide exactly; a remainder is a formula violation, not a rounding
// opportunity.
inline int128 exact_div(int128 value, int128 divisor) {
  if (divisor == 0) throw std::domain_error("exact_div: zero divisor");
  if (value % divisor != 0)
    throw std::domain_error("exact_div: " + to_string(value) +
                            " is not divisible by " + to_string(divisor));
  return value / divisor;
}

}  // namespace pell
