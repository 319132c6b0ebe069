#include "deltarep/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace deltarep {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  return make_rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

BigInt ipow(unsigned base, unsigned n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, n);
  return r;
}

std::string to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

bool is_decimal_literal(std::string_view text) {
  return text.find('.') != std::string_view::npos;
}

Rat parse_rat(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return make_rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    BigInt digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Rat q = make_rat(digits, ipow(10, static_cast<unsigned>(frac.size())));
    return neg ? Rat(-q) : q;
  }
  return Rat(parse_int(text));
}

double to_double(const Rat& q) { return q.get_d(); }

Rat from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return Rat(x);
}

}  // namespace deltarep
