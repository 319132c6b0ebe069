#pragma once

// Box counting for digit-restricted sets and the level sets of the map
// f(Delta^4_{a1 a2 ...}) = Delta_{a1 a2 ...} from [0,1] onto [0, 3/2].

#include "deltarep/digits.hpp"
#include "deltarep/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deltarep {

/// Non-empty subset of {0,1,2,3}.
class DigitSet {
 public:
  explicit DigitSet(std::span<const Digit> digits);
  /// Text like "013". Throws ParseError on anything else.
  static DigitSet parse(std::string_view text);

  std::vector<Digit> digits() const;
  std::size_t size() const;
  bool contains(Digit d) const { return (mask_ >> d) & 1u; }
  bool subset_of(const DigitSet& other) const { return (mask_ & ~other.mask_) == 0; }
  std::string render() const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  std::uint8_t mask_ = 0;
};

struct LevelCount {
  std::size_t level;
  std::uint64_t count;
};

struct DimensionEstimate {
  std::vector<LevelCount> counts;
  double slope = 0.0;  // least squares of log_base N(n) against n, upper half of levels
  double r2 = 0.0;
};

/// Largest |V|^n the exhaustive counter accepts (3^14).
inline constexpr std::uint64_t kEnumerationBudget = 4782969;

/// Number of distinct integers sum c_k base^(n-k) over words c in digits^n.
/// Throws DomainError when |digits|^n exceeds the enumeration budget or the
/// sums would overflow 64 bits.
std::uint64_t count_cells_in_base(unsigned base, std::span<const Digit> digits, std::size_t n);

/// N(1..n_max) in one pass.
std::vector<LevelCount> cell_counts_in_base(unsigned base, std::span<const Digit> digits,
                                            std::size_t n_max);

std::uint64_t count_cells(const DigitSet& v, std::size_t n);

DimensionEstimate box_dimension_in_base(unsigned base, std::span<const Digit> digits,
                                        std::size_t n_max);
DimensionEstimate box_dimension(const DigitSet& v, std::size_t n_max);

/// log_3((3 + sqrt 5) / 2).
double golden_cantor_dimension();

/// Root in (0,1) of 3^-x + sum_{n>=0} 2^n 3^-(n+2)x = 1 by bisection,
/// summing the series in closed form.
double dimension_equation_root(double tol = 1e-15);

/// Dimension of the closed set of Delta-expansions over V, when known in
/// closed form.
std::optional<double> expected_dimension(const DigitSet& v);

/// -sum p_i log_3 p_i. Throws DomainError for non-positive entries or a sum
/// away from 1.
double eggleston_dimension(std::span<const double> freqs);

// ---------------------------------------------------------------------------

/// Value of the digits read in base 4.
Rat quaternary_value(const DigitString& x4);

/// Quaternary digits of x in [0,1], using the period-(0) form for
/// quaternary-rational x < 1 and (3) for x = 1.
DigitString quaternary_digits(const Rat& x);

/// Reinterprets base-4 digits as Delta digits. Period (3) is rejected except
/// for the pure "(3)", the only quaternary form of 1.
DigitString quaternary_to_delta(const DigitString& x4);

/// Every sequence pre · B_1 B_2 ... with each B_j in `blocks` is a
/// representation of y; a continuum sub-level set of f.
struct BlockConstraint {
  Word prefix;
  std::size_t block_length = 0;
  std::vector<Word> blocks;
  /// log |blocks| / (block_length log 4): dimension of the quaternary image.
  double dimension = 0.0;
};

struct LevelSet {
  ReprCardinality cardinality;
  /// Quaternary points of representations with preperiod <= depth (not
  /// Continuum). Representations ending in period (3) other than "(3)" are
  /// excluded: they are not in the domain convention of f.
  std::vector<Rat> members;
  std::vector<DigitString> member_digits;
  std::optional<BlockConstraint> constraint;  // Continuum only
};

LevelSet level_set(const DigitString& y, std::size_t depth);

/// Box counting of f^{-1}(Delta_(10)) in base 16, digits 4a+b from the
/// equal-value blocks {10, 03}; levels 1..10.
DimensionEstimate levelset_dimension_10();

/// Base-16 digits (4a + b) of a length-2 block set.
std::vector<Digit> base16_digits(const BlockConstraint& c);

}  // namespace deltarep
