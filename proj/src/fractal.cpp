#include "deltarep/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <bit>
#include <numeric>

namespace deltarep {

DigitSet::DigitSet(std::span<const Digit> digits) {
  for (Digit d : digits) {
    if (d > kMaxDigit) throw DomainError("digit out of range: " + std::to_string(int(d)));
    mask_ |= static_cast<std::uint8_t>(1u << d);
  }
  if (mask_ == 0) throw DomainError("digit set must be non-empty");
}

DigitSet DigitSet::parse(std::string_view text) {
  Word w = parse_word(text);
  if (w.empty()) throw ParseError("empty digit set");
  return DigitSet(w);
}

std::vector<Digit> DigitSet::digits() const {
  std::vector<Digit> out;
  for (Digit d = 0; d <= kMaxDigit; ++d)
    if (contains(d)) out.push_back(d);
  return out;
}

std::size_t DigitSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::string DigitSet::render() const { return render_word(digits()); }

// ---------------------------------------------------------------------------

namespace {

void check_enumerable(unsigned base, std::span<const Digit> digits, std::size_t n) {
  if (base < 2) throw DomainError("base must be >= 2");
  if (digits.empty()) throw DomainError("digit set must be non-empty");
  if (n == 0) throw DomainError("level must be >= 1");
  Digit top = 0;
  for (Digit d : digits) top = std::max(top, d);
  long double words = std::pow(static_cast<long double>(digits.size()), static_cast<long double>(n));
  if (words > static_cast<long double>(kEnumerationBudget))
    throw DomainError("level " + std::to_string(n) + " too large for exhaustive enumeration");
  long double largest = top * (std::pow(static_cast<long double>(base), static_cast<long double>(n)) - 1) / (base - 1);
  if (largest >= 0x1.0p63L) throw DomainError("cell index overflows 64 bits");
}

}  // namespace

std::vector<LevelCount> cell_counts_in_base(unsigned base, std::span<const Digit> digits,
                                            std::size_t n_max) {
  check_enumerable(base, digits, n_max);
  std::vector<Digit> ds(digits.begin(), digits.end());
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

  // Distinct left endpoints of level-n cells, in units of base^-n:
  // S_n = base * S_{n-1} + V.
  std::vector<std::uint64_t> cells{0}, next;
  std::vector<LevelCount> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    next.clear();
    next.reserve(cells.size() * ds.size());
    for (std::uint64_t s : cells)
      for (Digit c : ds) next.push_back(s * base + c);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cells.swap(next);
    out.push_back({n, cells.size()});
  }
  return out;
}

std::uint64_t count_cells_in_base(unsigned base, std::span<const Digit> digits, std::size_t n) {
  return cell_counts_in_base(base, digits, n).back().count;
}

std::uint64_t count_cells(const DigitSet& v, std::size_t n) {
  return count_cells_in_base(3, v.digits(), n);
}

DimensionEstimate box_dimension_in_base(unsigned base, std::span<const Digit> digits,
                                        std::size_t n_max) {
  if (n_max < 2) throw DomainError("box counting needs n_max >= 2");
  DimensionEstimate est;
  est.counts = cell_counts_in_base(base, digits, n_max);

  const std::size_t first = n_max / 2;  // index of level n_max/2 + 1
  const double lb = std::log(static_cast<double>(base));
  std::vector<double> xs, ys;
  for (std::size_t i = first; i < est.counts.size(); ++i) {
    xs.push_back(static_cast<double>(est.counts[i].level));
    ys.push_back(std::log(static_cast<double>(est.counts[i].count)) / lb);
  }
  const double k = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  est.slope = sxy / sxx;
  est.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return est;
}

DimensionEstimate box_dimension(const DigitSet& v, std::size_t n_max) {
  return box_dimension_in_base(3, v.digits(), n_max);
}

double golden_cantor_dimension() { return std::log((3.0 + std::sqrt(5.0)) / 2.0) / std::log(3.0); }

double dimension_equation_root(double tol) {
  // With t = 3^-x the series is t^2 / (1 - 2t) for t < 1/2, and x in (0,1)
  // keeps t in (1/3, 1). The left side decreases in x.
  auto lhs = [](double x) {
    double t = std::pow(3.0, -x);
    if (2.0 * t >= 1.0) return HUGE_VAL;
    return t + t * t / (1.0 - 2.0 * t);
  };
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (lhs(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<double> expected_dimension(const DigitSet& v) {
  switch (v.size()) {
    case 1: return 0.0;
    case 2: return std::log(2.0) / std::log(3.0);
    case 4: return 1.0;
    default: break;
  }
  if (!v.contains(0) || !v.contains(3)) return 1.0;  // {0,1,2} or {1,2,3}
  return golden_cantor_dimension();                  // {0,1,3} or {0,2,3}
}

double eggleston_dimension(std::span<const double> freqs) {
  if (freqs.empty()) throw DomainError("no frequencies");
  double sum = 0.0, h = 0.0;
  for (double p : freqs) {
    if (!(p > 0.0)) throw DomainError("frequencies must be positive");
    sum += p;
    h -= p * std::log(p);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("frequencies must sum to 1");
  return h / std::log(3.0);
}

// ---------------------------------------------------------------------------

Rat quaternary_value(const DigitString& x4) { return evaluate(x4, 4); }

DigitString quaternary_digits(const Rat& x) {
  if (x < 0 || x > 1) throw DomainError("quaternary digits need x in [0, 1]");
  if (x == 1) return DigitString::periodic({}, {3});
  std::map<Rat, std::size_t> seen;
  Word digits;
  Rat r = x;
  while (!seen.contains(r)) {
    seen.emplace(r, digits.size());
    Rat s = 4 * r;
    BigInt d = s.get_num() / s.get_den();
    digits.push_back(static_cast<Digit>(d.get_ui()));
    r = s - Rat(d);
  }
  std::size_t start = seen.at(r);
  Word pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
  Word period(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
  return DigitString::periodic(std::move(pre), std::move(period));
}

namespace {

bool outside_f_domain(const DigitString& d) {
  return d.period() == Word{3} && !d.preperiod().empty();
}

// Words of length n over {0..3} whose base-3 integer value equals target.
void equal_value_words(const BigInt& target, std::size_t n, Word& cur, std::vector<Word>& out) {
  if (cur.size() == n) {
    if (target == 0) out.push_back(cur);
    return;
  }
  const std::size_t rem = n - cur.size() - 1;
  const BigInt unit = ipow(3, static_cast<unsigned>(rem));
  const BigInt tail_max = 3 * (unit - 1) / 2;
  for (Digit c = 0; c <= kMaxDigit; ++c) {
    BigInt left = target - c * unit;
    if (left < 0) break;
    if (left > tail_max) continue;
    cur.push_back(c);
    equal_value_words(left, n, cur, out);
    cur.pop_back();
  }
}

BlockConstraint continuum_constraint(const DigitString& y) {
  const Word& period = y.period();
  for (std::size_t reps = 1; reps <= 2; ++reps) {
    for (std::size_t offset = 0; offset < period.size(); ++offset) {
      Word block;
      for (std::size_t i = 0; i < reps * period.size(); ++i)
        block.push_back(period[(offset + i) % period.size()]);
      BigInt value = 0;
      for (Digit c : block) value = value * 3 + c;
      std::vector<Word> words;
      Word cur;
      equal_value_words(value, block.size(), cur, words);
      if (words.size() < 2) continue;
      BlockConstraint c;
      c.prefix = y.preperiod();
      c.prefix.insert(c.prefix.end(), period.begin(), period.begin() + static_cast<std::ptrdiff_t>(offset));
      c.block_length = block.size();
      c.blocks = std::move(words);
      c.dimension = std::log(static_cast<double>(c.blocks.size())) /
                    (static_cast<double>(c.block_length) * std::log(4.0));
      return c;
    }
  }
  throw std::logic_error("no interchangeable block found for " + y.render());
}

}  // namespace

DigitString quaternary_to_delta(const DigitString& x4) {
  if (!x4.has_period()) throw DomainError("quaternary input needs a period");
  if (outside_f_domain(x4))
    throw DomainError(x4.render() + " ends in period (3); use the period-(0) form");
  return x4;
}

LevelSet level_set(const DigitString& y, std::size_t depth) {
  LevelSet ls{classify_cardinality(y), {}, {}, std::nullopt};
  if (std::holds_alternative<Continuum>(ls.cardinality)) {
    ls.constraint = continuum_constraint(y);
    return ls;
  }
  for (DigitString& r : enumerate_representations(y, std::max(depth, y.preperiod().size()))) {
    if (outside_f_domain(r)) continue;
    ls.members.push_back(quaternary_value(r));
    ls.member_digits.push_back(std::move(r));
  }
  return ls;
}

std::vector<Digit> base16_digits(const BlockConstraint& c) {
  if (c.block_length != 2) throw DomainError("base-16 digits need blocks of length 2");
  std::vector<Digit> out;
  for (const Word& b : c.blocks) out.push_back(static_cast<Digit>(4 * b[0] + b[1]));
  std::sort(out.begin(), out.end());
  return out;
}

DimensionEstimate levelset_dimension_10() {
  LevelSet ls = level_set(DigitString::periodic({}, {1, 0}), 0);
  return box_dimension_in_base(16, base16_digits(*ls.constraint), 10);
}

}  // namespace deltarep
