#include "deltarep/measure.hpp"

#include "deltarep/fractal.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <numbers>

namespace deltarep {

namespace {

void validate(const std::array<double, 4>& p) {
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("probabilities must be non-negative");
    if (x >= 1.0) throw DomainError("every digit probability must be < 1");
  }
}

bool near(double a, double b) {
  return std::abs(a - b) <= ProbVector::kConditionTolerance * std::max(1.0, std::abs(b));
}

const Rat kThird = make_rat(1, 3);

}  // namespace

ProbVector ProbVector::exact(const std::array<Rat, 4>& p) {
  Rat sum = 0;
  for (const Rat& x : p) {
    if (x < 0) throw DomainError("probabilities must be non-negative");
    if (x >= 1) throw DomainError("every digit probability must be < 1");
    sum += x;
  }
  if (sum != 1) throw DomainError("probabilities must sum to 1, got " + to_string(sum));
  ProbVector v;
  for (std::size_t i = 0; i < 4; ++i) v.p_[i] = to_double(p[i]);
  v.exact_ = p;
  return v;
}

ProbVector ProbVector::approx(const std::array<double, 4>& p) {
  validate(p);
  double sum = p[0] + p[1] + p[2] + p[3];
  if (std::abs(sum - 1.0) > kSumTolerance) throw DomainError("probabilities must sum to 1");
  ProbVector v;
  v.p_ = p;
  return v;
}

ProbVector ProbVector::parse(std::span<const std::string> fields) {
  if (fields.size() != 4) throw std::invalid_argument("expected four probabilities");
  std::array<Rat, 4> q;
  bool decimals = false;
  for (std::size_t i = 0; i < 4; ++i) {
    q[i] = parse_rat(fields[i]);
    decimals = decimals || is_decimal_literal(fields[i]);
  }
  Rat sum = q[0] + q[1] + q[2] + q[3];
  if (sum == 1 || !decimals) return exact(q);
  return approx({to_double(q[0]), to_double(q[1]), to_double(q[2]), to_double(q[3])});
}

bool ProbVector::is_zero(std::size_t i) const {
  return exact_ ? (*exact_)[i] == 0 : p_[i] == 0.0;
}

bool ProbVector::equals(std::size_t i, const Rat& target) const {
  return exact_ ? (*exact_)[i] == target : near(p_[i], to_double(target));
}

Value ProbVector::value(std::size_t i) const {
  return exact_ ? Value::of((*exact_)[i]) : Value::of(p_[i]);
}

std::string ProbVector::render() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += exact_ ? to_string((*exact_)[i]) : std::to_string(p_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

std::string class_name(const DistributionClass& c) {
  struct Visitor {
    std::string operator()(const AbsolutelyContinuous&) const { return "absolutely_continuous"; }
    std::string operator()(const SingularCantor&) const { return "singular_cantor"; }
    std::string operator()(const SingularIncreasing&) const { return "singular_increasing"; }
    std::string operator()(const SingularFullOverlap&) const { return "singular_full_overlap"; }
  };
  return std::visit(Visitor{}, c);
}

bool is_singular(const DistributionClass& c) { return !std::holds_alternative<AbsolutelyContinuous>(c); }

DistributionClass classify(const ProbVector& p) {
  if (p.equals(1, kThird) && p.equals(2, kThird)) {
    Value x = decompose_uniform_plus_cantor(p);
    return AbsolutelyContinuous{x, p.is_zero(0) || p.is_zero(3)};
  }
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < 4; ++i) zeros += p.is_zero(i);
  if (zeros == 0) return SingularFullOverlap{};
  if (zeros == 2) return SingularCantor{std::log(2.0) / std::log(3.0)};
  // Exactly one zero (three or four zeros would force some p_i = 1).
  if (p.is_zero(1) || p.is_zero(2)) return SingularCantor{golden_cantor_dimension()};
  std::array<double, 3> nonzero{};
  std::size_t j = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (!p.is_zero(i)) nonzero[j++] = p[i];
  return SingularIncreasing{eggleston_dimension(nonzero)};
}

// ---------------------------------------------------------------------------

DigitLaw DigitLaw::of(const ProbVector& p) {
  return DigitLaw{{0, 1, 2, 3}, {p[0], p[1], p[2], p[3]}};
}

DigitSampler::DigitSampler(DigitLaw law, std::uint64_t seed) : law_(std::move(law)), engine_(seed) {
  if (law_.values.empty() || law_.values.size() != law_.probs.size())
    throw DomainError("digit law needs matching values and probabilities");
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < law_.probs.size(); ++i) cumulative_.push_back(acc += law_.probs[i]);
}

Digit DigitSampler::next() {
  double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  std::size_t i = 0;
  while (i < cumulative_.size() && u >= cumulative_[i]) ++i;
  return law_.values[i];
}

Rat sample(const ProbVector& p, std::size_t depth, std::uint64_t seed) {
  if (depth == 0) throw DomainError("sample depth must be >= 1");
  DigitSampler draw(DigitLaw::of(p), seed);
  BigInt num = 0;
  for (std::size_t k = 0; k < depth; ++k) num = num * 3 + draw.next();
  return make_rat(num, ipow(3, static_cast<unsigned>(depth)));
}

std::vector<double> sample_many(const DigitLaw& law, std::size_t count, std::size_t depth,
                                std::uint64_t seed) {
  if (depth == 0) throw DomainError("sample depth must be >= 1");
  DigitSampler draw(law, seed);
  std::vector<double> out;
  out.reserve(count);
  // Exact integer numerator while 3 * 3^depth fits in 64 bits.
  const bool integral = depth <= 39;
  const double scale = std::pow(3.0, -static_cast<double>(depth));
  for (std::size_t i = 0; i < count; ++i) {
    if (integral) {
      std::uint64_t num = 0;
      for (std::size_t k = 0; k < depth; ++k) num = num * 3 + draw.next();
      out.push_back(static_cast<double>(num) * scale);
    } else {
      double x = 0.0, w = 1.0;
      for (std::size_t k = 0; k < depth; ++k) x += (w /= 3.0) * draw.next();
      out.push_back(x);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

CdfEnclosure cdf(const ProbVector& p, const Rat& x, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const Rat top = make_rat(3, 2);
  if (x < 0) return {0.0, 0.0, 0};
  if (x >= top) return {1.0, 1.0, 0};

  constexpr std::size_t kDepthCap = 60;
  // Live states: rescaled point y = 3^d x - S in [0, 3/2) with its path mass.
  std::map<Rat, double> live{{x, 1.0}};
  double resolved = 0.0;
  std::size_t depth = 0;
  auto pending = [&] {
    double m = 0.0;
    for (const auto& [y, mass] : live) m += mass;
    return m;
  };
  while (pending() > tol && depth < kDepthCap) {
    std::map<Rat, double> next;
    for (const auto& [y, mass] : live) {
      Rat scaled = 3 * y;
      for (Digit i = 0; i <= kMaxDigit; ++i) {
        if (p.is_zero(i)) continue;
        Rat child = scaled - i;
        if (child < 0) break;
        double m = mass * p[i];
        if (child >= top)
          resolved += m;
        else
          next[child] += m;
      }
    }
    live = std::move(next);
    ++depth;
  }
  double width = pending();
  return {std::min(resolved, 1.0), std::min(resolved + width, 1.0), depth};
}

// ---------------------------------------------------------------------------

std::complex<double> phi_factor(const ProbVector& p, double t, std::size_t k) {
  const double a = t / std::pow(3.0, static_cast<double>(k));
  std::complex<double> s = 0.0;
  for (std::size_t m = 0; m < 4; ++m) s += p[m] * std::polar(1.0, static_cast<double>(m) * a);
  return s;
}

CharfnResult charfn(const ProbVector& p, double t, std::size_t K) {
  if (K == 0) throw DomainError("K must be >= 1");
  if (t == 0.0) return {1.0, 0.0};
  std::complex<double> v = 1.0;
  for (std::size_t k = 1; k <= K; ++k) v *= phi_factor(p, t, k);
  // sum_{k>K} 3|t| 3^-k = (3/2)|t| 3^-K; |prod (1 + a_k) - 1| <= exp(sum |a_k|) - 1.
  const double tail_sum = 1.5 * std::abs(t) * std::pow(3.0, -static_cast<double>(K));
  const double truncation = std::abs(v) * std::expm1(tail_sum);
  const double rounding = 64.0 * static_cast<double>(K) * DBL_EPSILON;
  return {v, truncation + rounding};
}

double limsup_lower_bound(const ProbVector& p, std::size_t N, std::size_t K) {
  if (N == 0) throw DomainError("N must be >= 1");
  double best = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    CharfnResult r = charfn(p, 2.0 * std::numbers::pi * static_cast<double>(n), K);
    best = std::max(best, std::abs(r.value) - r.tail_bound);
  }
  return best;
}

// ---------------------------------------------------------------------------

Value decompose_uniform_plus_cantor(const ProbVector& p) {
  if (!(p.equals(1, kThird) && p.equals(2, kThird)))
    throw DomainError("uniform-plus-Cantor split needs p1 = p2 = 1/3, got " + p.render());
  if (p.is_exact()) return Value::of(Rat(3 * (*p.exact_values())[0]));
  return Value::of(3.0 * p[0]);
}

CantorPair decompose_cantor_pair(const ProbVector& p) {
  if (p.is_exact()) {
    const auto& q = *p.exact_values();
    Rat u = q[0] + q[1], v = q[0] + q[2];
    if (u * v != q[0])
      throw DomainError("p0 = (p0+p1)(p0+p2) fails: " + to_string(Rat(u * v)) + " != " + to_string(q[0]));
    return {Value::of(u), Value::of(v)};
  }
  double u = p[0] + p[1], v = p[0] + p[2];
  if (!near(u * v, p[0])) throw DomainError("p0 = (p0+p1)(p0+p2) fails for " + p.render());
  return {Value::of(u), Value::of(v)};
}

std::array<DigitLaw, 2> summand_laws(const CantorPair& pair) {
  return {DigitLaw{{0, 2}, {pair.u.approx, 1.0 - pair.u.approx}},
          DigitLaw{{0, 1}, {pair.v.approx, 1.0 - pair.v.approx}}};
}

std::array<DigitLaw, 2> summand_laws_uniform_plus_cantor(double x) {
  return {DigitLaw{{0, 1, 2}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}}, DigitLaw{{0, 1}, {x, 1.0 - x}}};
}

ProbVector eta_params(const Rat& q0) {
  if (q0 <= 0 || q0 >= 1) throw DomainError("q0 must lie in (0, 1)");
  Rat q1 = 1 - q0;
  ProbVector p = ProbVector::exact({q0 * q0 * q0, 3 * q0 * q0 * q1, 3 * q0 * q1 * q1, q1 * q1 * q1});
  // 3 q0^2 q1 = 1/3 = 3 q0 q1^2 forces q0 = q1 = 1/2, where both equal 3/8.
  if (!is_singular(classify(p))) throw std::logic_error("Bernoulli convolution classified absolutely continuous");
  return p;
}

ProbVector eta_params(double q0) {
  if (!(q0 > 0.0 && q0 < 1.0)) throw DomainError("q0 must lie in (0, 1)");
  double q1 = 1.0 - q0;
  ProbVector p = ProbVector::approx({q0 * q0 * q0, 3 * q0 * q0 * q1, 3 * q0 * q1 * q1, q1 * q1 * q1});
  if (!is_singular(classify(p))) throw std::logic_error("Bernoulli convolution classified absolutely continuous");
  return p;
}

}  // namespace deltarep
