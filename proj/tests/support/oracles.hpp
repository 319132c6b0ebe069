#pragma once

// Test-only reference computations. Each one takes a route independent of
// the library: plain enumeration, Python-style Fractions via GMP, no shared
// helpers beyond the Rat type.

#include "deltarep/rational.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace oracle {

using deltarep::BigInt;
using deltarep::Rat;

inline BigInt pow_int(unsigned b, unsigned n) {
  BigInt r = 1;
  for (unsigned i = 0; i < n; ++i) r *= b;
  return r;
}

/// Integer reading of a digit word in `base` (digits may exceed base - 1).
inline BigInt word_int(const std::vector<int>& w, unsigned base) {
  BigInt n = 0;
  for (int c : w) n = n * base + c;
  return n;
}

inline std::vector<int> digits_of(const std::string& s) {
  std::vector<int> w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

/// Repeating-fraction formula: (int(pre period) - int(pre)) / (b^|pre| (b^L - 1)).
inline Rat periodic_value(const std::string& pre, const std::string& period, unsigned base = 3) {
  std::vector<int> a = digits_of(pre), full = digits_of(pre + period);
  BigInt num = word_int(full, base) - word_int(a, base);
  BigInt den = pow_int(base, static_cast<unsigned>(pre.size())) * (pow_int(base, static_cast<unsigned>(period.size())) - 1);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// All 4^m words (as strings) c with 0 <= x - sum c_k 3^-k <= (3/2) 3^-m.
inline std::vector<std::string> brute_prefixes(const Rat& x, unsigned m) {
  std::vector<std::string> out;
  const BigInt scale = pow_int(3, m);
  const Rat xs = x * Rat(scale);
  const Rat top(3, 2);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::string w(m, '0');
    BigInt s = 0;
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      w[m - 1 - i] = static_cast<char>('0' + c % 4);
      c /= 4;
    }
    for (char ch : w) s = s * 3 + (ch - '0');
    Rat gap = xs - Rat(s);
    if (gap >= 0 && gap <= top) out.push_back(w);
  }
  return out;  // codes enumerate in lexicographic order
}

/// Distinct sum c_k base^(n-k) over all |V|^n words.
inline std::size_t brute_cells(const std::vector<int>& v, unsigned n, unsigned base = 3) {
  std::unordered_set<std::uint64_t> sums;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::uint64_t s = 0;
    for (unsigned i = 0; i < n; ++i) s = s * base + static_cast<std::uint64_t>(v[idx[i]]);
    sums.insert(s);
    unsigned i = n;
    while (i > 0 && ++idx[i - 1] == v.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return sums.size();
}

}  // namespace oracle
