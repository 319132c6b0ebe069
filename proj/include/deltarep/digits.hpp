#pragma once

// Delta-representations: base 3 with the redundant digit set {0,1,2,3}.
//
//   x = sum_k a_k 3^-k,  a_k in {0,1,2,3},  x in [0, 3/2]
//
// Digit strings are eventually periodic words written `pre(period)`. The
// value space is exact (GMP rationals); nothing in this module touches
// floating point.

#include "deltarep/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace deltarep {

using Digit = std::uint8_t;
using Word = std::vector<Digit>;

inline constexpr Digit kMaxDigit = 3;

/// Raised for grammar violations in digit-string text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's domain precondition is violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite preperiod followed by an optional non-empty period.
///
/// Instances built through `DigitString::periodic` / `finite` / `parse` are
/// canonical: the period is primitive (not a power of a shorter word) and the
/// preperiod does not end with the period's last digit. Two canonical values
/// denote the same digit sequence iff they compare equal.
class DigitString {
 public:
  DigitString() = default;

  static DigitString periodic(Word preperiod, Word period);
  static DigitString finite(Word word);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }
  bool has_period() const { return !period_.empty(); }

  /// Digit at 1-based position k of the expanded sequence. Throws
  /// std::out_of_range past the end of a finite word.
  Digit at(std::size_t k) const;

  /// First n digits of the expansion (fewer for a shorter finite word).
  Word expand(std::size_t n) const;

  /// `pre(period)` form; finite words have no parentheses.
  std::string render() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend auto operator<=>(const DigitString&, const DigitString&) = default;

 private:
  DigitString(Word pre, Word period) : pre_(std::move(pre)), period_(std::move(period)) {}
  void canonicalize();

  Word pre_;
  Word period_;
};

/// Grammar `[0-3]*(\([0-3]+\))?`, at least one digit overall.
DigitString parse(std::string_view text);

/// Word text without parentheses ("0310").
std::string render_word(const Word& w);
Word parse_word(std::string_view text);

/// sum_k w_k s^-k for a finite word.
Rat word_value(const Word& w, unsigned base = 3);

/// Exact value of an eventually periodic digit string in base `base`.
/// Throws DomainError for strings without a period.
Rat evaluate(const DigitString& d, unsigned base = 3);

// ---------------------------------------------------------------------------
// Rewrite rules: adjacent pairs with equal value, 03<->10, 13<->20, 23<->30.

enum class Rule : std::uint8_t { R03to10, R10to03, R13to20, R20to13, R23to30, R30to23 };

struct RulePair {
  Digit from[2];
  Digit to[2];
};

RulePair rule_pair(Rule r);
std::string to_string(Rule r);

/// The oriented rule whose left side is (a, b), if any.
std::optional<Rule> rule_for(Digit a, Digit b);

struct RewriteSite {
  std::size_t position;  // 1-based index of the first digit of the pair
  Rule rule;
  friend bool operator==(const RewriteSite&, const RewriteSite&) = default;
};

/// Sites among the first `horizon` digits, i.e. pairs (a_k, a_{k+1}) with
/// k + 1 <= horizon.
std::vector<RewriteSite> rewrite_sites(const DigitString& d, std::size_t horizon);

/// Replaces the pair at `position`; the result is re-canonicalized and has
/// the same value. Throws DomainError when the pair does not match the rule.
DigitString apply_rewrite(const DigitString& d, std::size_t position, Rule rule);

// ---------------------------------------------------------------------------
// Cylinders.

struct Cylinder {
  Word base;
  std::size_t rank() const { return base.size(); }
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

struct Interval {
  Rat lo;
  Rat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Segment [a, a + 3^-m] with a = sum c_k 3^-k.
Interval cylinder_interval(const Cylinder& c);

/// Numbers that admit a representation starting with the base:
/// [a, a + (3/2) 3^-m]. Neighboring cylinders overlap in this reading.
Interval cylinder_number_set(const Cylinder& c);

/// Intersection of two closed intervals; nullopt when disjoint.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// The cylinder base*i*3 (== base*(i+1)*0) equal to the overlap of the
/// adjacent cylinders base*i and base*(i+1). Throws DomainError for i = 3.
Cylinder cylinder_overlap(const Word& base, Digit i);

// ---------------------------------------------------------------------------
// Representation census.

/// All words of length m that extend to a representation of x, in
/// lexicographic order: 0 <= x - sum c_k 3^-k <= (3/2) 3^-m.
/// Throws DomainError for x outside [0, 3/2].
std::vector<Word> admissible_prefixes(const Rat& x, std::size_t m);

struct Unique {
  friend bool operator==(const Unique&, const Unique&) = default;
};
struct Finite {
  std::size_t count;  // >= 2
  friend bool operator==(const Finite&, const Finite&) = default;
};
struct Countable {
  friend bool operator==(const Countable&, const Countable&) = default;
};
struct Continuum {
  friend bool operator==(const Continuum&, const Continuum&) = default;
};

using ReprCardinality = std::variant<Unique, Finite, Countable, Continuum>;

std::string to_string(const ReprCardinality& c);

/// Number of distinct Delta-representations of the value of `d`.
///
/// 0 and 3/2 are unique; any other simple period gives a countable set;
/// a period that contains one of the six rewritable pairs in cyclic reading
/// gives a continuum; what remains is a tail over {1,2} using both digits,
/// where only the preperiod can vary, and the count is read off the
/// stabilized number of admissible prefixes.
///
/// The continuum branch uses the rewritable-pair test. A sufficient
/// condition phrased as "infinitely many digits 0 and 3" is read as "digits
/// from {0,3}", which agrees with this test on periodic tails.
ReprCardinality classify_cardinality(const DigitString& d);

/// Every representation of the value of `d` whose canonical preperiod has
/// length <= m, sorted by rendered text. Throws DomainError for Continuum
/// inputs, inputs without a period, or m shorter than d's preperiod.
std::vector<DigitString> enumerate_representations(const DigitString& d, std::size_t m);

}  // namespace deltarep
