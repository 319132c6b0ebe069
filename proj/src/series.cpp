#include "deltarep/series.hpp"

namespace deltarep {

namespace {

Rat third_power(std::size_t j) { return make_rat(BigInt(1), ipow(3, static_cast<unsigned>(j))); }

}  // namespace

Rat series_term(std::size_t n) {
  if (n < 1) throw DomainError("series terms start at n = 1");
  return third_power((n + 2) / 3);
}

Rat series_remainder(std::size_t n) {
  // n = 3j + r: (3 - r) more copies of 3^-(j+1) when r > 0, then the full
  // groups from j+1 on, which sum to (3/2) 3^-j'.
  const std::size_t j = n / 3, r = n % 3;
  if (r == 0) return make_rat(3, 2) * third_power(j);
  return Rat((3 - static_cast<long>(r)) * third_power(j + 1) + make_rat(3, 2) * third_power(j + 1));
}

bool kakeya_check(std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n)
    if (series_term(n) > series_remainder(n)) return false;
  return true;
}

Rat subsum(const SubsumSelector& sel) {
  Rat s = 0;
  for (std::size_t i = 0; i < sel.bits.size(); ++i)
    if (sel.bits[i]) s += series_term(i + 1);
  return s;
}

SubsumSelector greedy_approximate(const Rat& x, std::size_t n_max) {
  if (x < 0 || x > make_rat(3, 2)) throw DomainError("x must lie in [0, 3/2]");
  SubsumSelector sel;
  sel.bits.reserve(n_max);
  Rat partial = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rat next = partial + series_term(n);
    bool take = next <= x;
    sel.bits.push_back(take);
    if (take) partial = next;
  }
  return sel;
}

Word eta_subsum_digits(const SubsumSelector& sel) {
  if (sel.bits.size() % 3 != 0) throw DomainError("selector length must be a multiple of 3");
  Word w;
  for (std::size_t k = 0; k < sel.bits.size(); k += 3) {
    for (std::size_t i = k; i < k + 3; ++i)
      if (sel.bits[i] > 1) throw DomainError("selector bits must be 0 or 1");
    w.push_back(static_cast<Digit>(sel.bits[k] + sel.bits[k + 1] + sel.bits[k + 2]));
  }
  return w;
}

}  // namespace deltarep
