#pragma once

// The series 1/3 + 1/3 + 1/3 + 1/9 + 1/9 + 1/9 + ... = 3/2 (every power of
// 1/3 three times) and its incomplete sums. Grouping the selector bits in
// threes turns a subsum into a Delta-expansion, so the subsums are exactly
// the values of xi.

#include "deltarep/digits.hpp"
#include "deltarep/rational.hpp"

#include <cstdint>
#include <vector>

namespace deltarep {

/// 0/1 choices for the first terms of the series.
struct SubsumSelector {
  std::vector<std::uint8_t> bits;
  friend bool operator==(const SubsumSelector&, const SubsumSelector&) = default;
};

/// u_n = 3^-ceil(n/3). Throws DomainError for n < 1.
Rat series_term(std::size_t n);

/// r_n = sum_{k>n} u_k; r_0 = 3/2.
Rat series_remainder(std::size_t n);

/// u_n <= r_n for every n <= n_max, compared exactly.
bool kakeya_check(std::size_t n_max);

Rat subsum(const SubsumSelector& sel);

/// Takes u_n whenever the running sum stays <= x. The result is within
/// r_{n_max} of x. Throws DomainError for x outside [0, 3/2].
SubsumSelector greedy_approximate(const Rat& x, std::size_t n_max);

/// d_k = e_{3k-2} + e_{3k-1} + e_{3k}. Throws DomainError unless the length
/// is a multiple of 3.
Word eta_subsum_digits(const SubsumSelector& sel);

}  // namespace deltarep
