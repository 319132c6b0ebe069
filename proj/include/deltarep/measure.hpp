#pragma once

// Distribution of xi = sum_k xi_k 3^-k with i.i.d. digits xi_k in {0,1,2,3}.

#include "deltarep/digits.hpp"
#include "deltarep/rational.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace deltarep {

/// A real number that may also be known exactly.
struct Value {
  double approx = 0.0;
  std::optional<Rat> exact;

  static Value of(const Rat& q) { return {to_double(q), q}; }
  static Value of(double x) { return {x, std::nullopt}; }
};

/// Digit probabilities (p0, p1, p2, p3): p_i >= 0, p_i < 1, sum 1.
///
/// Exact vectors compare exactly in every condition check; approximate ones
/// use a relative tolerance of 1e-9.
class ProbVector {
 public:
  static constexpr double kSumTolerance = 1e-12;
  static constexpr double kConditionTolerance = 1e-9;

  static ProbVector exact(const std::array<Rat, 4>& p);
  static ProbVector approx(const std::array<double, 4>& p);

  /// Four numbers written `a/b` or as decimals. Exact when they sum to 1
  /// exactly; otherwise decimals within 1e-12 of 1 give an approximate vector.
  static ProbVector parse(std::span<const std::string> fields);

  double operator[](std::size_t i) const { return p_[i]; }
  const std::array<double, 4>& values() const { return p_; }
  const std::optional<std::array<Rat, 4>>& exact_values() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }

  bool is_zero(std::size_t i) const;
  /// p_i == target, exactly or within tolerance.
  bool equals(std::size_t i, const Rat& target) const;

  /// p_i as a Value (exact when the vector is).
  Value value(std::size_t i) const;

  std::string render() const;

 private:
  std::array<double, 4> p_{};
  std::optional<std::array<Rat, 4>> exact_;
};

// ---------------------------------------------------------------------------
// Classification.

/// xi = tau + zeta, tau uniform on [0,1] and zeta Cantor-type with digits
/// {0,1} taken with probabilities (x, 1-x). `uniform` marks x in {0,1}.
struct AbsolutelyContinuous {
  Value cantor_weight;
  bool uniform = false;
};

/// Spectrum is a nowhere dense set of the given dimension.
struct SingularCantor {
  double spectrum_dim = 0.0;
};

/// Distribution function strictly increasing on its spectrum interval;
/// `support_dim` is the dimension of the density's essential support.
struct SingularIncreasing {
  double support_dim = 0.0;
};

/// All four digits occur and (p1, p2) != (1/3, 1/3); spectrum [0, 3/2].
struct SingularFullOverlap {};

using DistributionClass =
    std::variant<AbsolutelyContinuous, SingularCantor, SingularIncreasing, SingularFullOverlap>;

/// "absolutely_continuous", "singular_cantor", "singular_increasing",
/// "singular_full_overlap".
std::string class_name(const DistributionClass& c);
bool is_singular(const DistributionClass& c);

DistributionClass classify(const ProbVector& p);

// ---------------------------------------------------------------------------
// Sampling.

/// Discrete law of one digit. Draws use inverse-CDF on u in [0,1), where u
/// is the top 53 bits of one std::mt19937_64 output scaled by 2^-53.
struct DigitLaw {
  std::vector<Digit> values;
  std::vector<double> probs;

  static DigitLaw of(const ProbVector& p);
};

/// Deterministic digit generator.
class DigitSampler {
 public:
  DigitSampler(DigitLaw law, std::uint64_t seed);
  Digit next();

 private:
  DigitLaw law_;
  std::vector<double> cumulative_;
  std::mt19937_64 engine_;
};

/// sum_{k<=depth} d_k 3^-k with d_k drawn from p; reproducible for a seed.
Rat sample(const ProbVector& p, std::size_t depth, std::uint64_t seed);

/// `count` independent truncated draws of sum d_k 3^-k, d_k ~ law.
std::vector<double> sample_many(const DigitLaw& law, std::size_t count, std::size_t depth,
                                std::uint64_t seed);

// ---------------------------------------------------------------------------
// Distribution function.

struct CdfEnclosure {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t depth = 0;
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

/// Enclosure of F(x) = P(xi <= x) from F(x) = sum_i p_i F(3x - i), F = 0 below
/// 0 and 1 from 3/2 on. Deepens until the enclosure is at most `tol` wide or
/// the depth reaches 60; the returned interval is valid either way.
CdfEnclosure cdf(const ProbVector& p, const Rat& x, double tol);

// ---------------------------------------------------------------------------
// Characteristic function f(t) = prod_k phi_k(t),
// phi_k(t) = sum_m p_m exp(i m t 3^-k).

struct CharfnResult {
  std::complex<double> value;
  double tail_bound = 0.0;  // |f(t) - value| <= tail_bound
};

std::complex<double> phi_factor(const ProbVector& p, double t, std::size_t k);

/// Product of the first K factors. The bound combines |phi_k(t) - 1| <=
/// 3|t| 3^-k over k > K with floating-point rounding of the product.
CharfnResult charfn(const ProbVector& p, double t, std::size_t K);

/// Certified lower bound for limsup |f(t)|: |f(2 pi n 3^j)| = |f(2 pi n)|
/// for all j, so max_{n<=N} (|f(2 pi n)| - bound) clamped at 0.
double limsup_lower_bound(const ProbVector& p, std::size_t N, std::size_t K);

// ---------------------------------------------------------------------------
// Convolution decompositions.

/// x = 3 p0 for p1 = p2 = 1/3. Throws DomainError otherwise.
Value decompose_uniform_plus_cantor(const ProbVector& p);

/// theta has digits {0,2} with P(0) = u, epsilon has digits {0,1} with
/// P(0) = v, and xi = theta + epsilon in distribution.
struct CantorPair {
  Value u;
  Value v;
};

/// (u, v) = (p0 + p1, p0 + p2) when p0 = (p0 + p1)(p0 + p2). Throws
/// DomainError otherwise.
CantorPair decompose_cantor_pair(const ProbVector& p);

/// Digit laws of the two summands.
std::array<DigitLaw, 2> summand_laws(const CantorPair& pair);
std::array<DigitLaw, 2> summand_laws_uniform_plus_cantor(double x);

/// Digit probabilities of the Bernoulli convolution over the series with
/// every power of 1/3 repeated three times: a digit is the sum of three
/// Bernoulli bits with P(0) = q0. Throws DomainError unless 0 < q0 < 1.
ProbVector eta_params(const Rat& q0);
ProbVector eta_params(double q0);

}  // namespace deltarep
