#include "deltarep/digits.hpp"

#include <algorithm>
#include <set>

namespace deltarep {

namespace {

void check_digits(const Word& w) {
  for (Digit c : w)
    if (c > kMaxDigit) throw DomainError("digit out of range: " + std::to_string(int(c)));
}

// Smallest p dividing |w| with w = (w[0..p))^(|w|/p).
std::size_t primitive_length(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

const Rat kThreeHalves = make_rat(3, 2);

}  // namespace

DigitString DigitString::periodic(Word preperiod, Word period) {
  if (period.empty()) throw DomainError("period must be non-empty");
  check_digits(preperiod);
  check_digits(period);
  DigitString d(std::move(preperiod), std::move(period));
  d.canonicalize();
  return d;
}

DigitString DigitString::finite(Word word) {
  check_digits(word);
  return DigitString(std::move(word), {});
}

void DigitString::canonicalize() {
  period_.resize(primitive_length(period_));
  while (!pre_.empty() && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

Digit DigitString::at(std::size_t k) const {
  if (k == 0) throw std::out_of_range("digit positions are 1-based");
  if (k <= pre_.size()) return pre_[k - 1];
  if (period_.empty()) throw std::out_of_range("past the end of a finite word");
  return period_[(k - 1 - pre_.size()) % period_.size()];
}

Word DigitString::expand(std::size_t n) const {
  if (period_.empty()) n = std::min(n, pre_.size());
  Word out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.push_back(at(k));
  return out;
}

std::string render_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Digit c : w) s.push_back(static_cast<char>('0' + c));
  return s;
}

std::string DigitString::render() const {
  std::string s = render_word(pre_);
  if (!period_.empty()) s += "(" + render_word(period_) + ")";
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '3') throw ParseError(std::string("bad digit '") + c + "'");
    w.push_back(static_cast<Digit>(c - '0'));
  }
  return w;
}

DigitString parse(std::string_view text) {
  auto open = text.find('(');
  if (open == std::string_view::npos) {
    if (text.find(')') != std::string_view::npos) throw ParseError("unbalanced ')'");
    if (text.empty()) throw ParseError("empty digit string");
    return DigitString::finite(parse_word(text));
  }
  if (text.back() != ')') throw ParseError("period must close the string");
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  if (body.empty()) throw ParseError("empty period");
  if (body.find_first_of("()") != std::string_view::npos) throw ParseError("nested parentheses");
  return DigitString::periodic(parse_word(text.substr(0, open)), parse_word(body));
}

Rat word_value(const Word& w, unsigned base) {
  BigInt num = 0;
  for (Digit c : w) num = num * base + c;
  return make_rat(num, ipow(base, static_cast<unsigned>(w.size())));
}

Rat evaluate(const DigitString& d, unsigned base) {
  if (base < 2) throw DomainError("base must be >= 2");
  if (!d.has_period()) throw DomainError("evaluate needs a periodic digit string");
  const Word& per = d.period();
  BigInt p = 0;
  for (Digit c : per) p = p * base + c;
  Rat tail = make_rat(p, ipow(base, static_cast<unsigned>(per.size())) - 1);
  Rat v = word_value(d.preperiod(), base) +
          tail / Rat(ipow(base, static_cast<unsigned>(d.preperiod().size())));
  v.canonicalize();
  return v;
}

// ---------------------------------------------------------------------------

RulePair rule_pair(Rule r) {
  switch (r) {
    case Rule::R03to10: return {{0, 3}, {1, 0}};
    case Rule::R10to03: return {{1, 0}, {0, 3}};
    case Rule::R13to20: return {{1, 3}, {2, 0}};
    case Rule::R20to13: return {{2, 0}, {1, 3}};
    case Rule::R23to30: return {{2, 3}, {3, 0}};
    case Rule::R30to23: return {{3, 0}, {2, 3}};
  }
  throw std::logic_error("unknown rule");
}

std::string to_string(Rule r) {
  RulePair p = rule_pair(r);
  return render_word({p.from[0], p.from[1]}) + "->" + render_word({p.to[0], p.to[1]});
}

std::optional<Rule> rule_for(Digit a, Digit b) {
  for (Rule r : {Rule::R03to10, Rule::R10to03, Rule::R13to20, Rule::R20to13, Rule::R23to30,
                 Rule::R30to23}) {
    RulePair p = rule_pair(r);
    if (p.from[0] == a && p.from[1] == b) return r;
  }
  return std::nullopt;
}

std::vector<RewriteSite> rewrite_sites(const DigitString& d, std::size_t horizon) {
  Word w = d.expand(horizon);
  std::vector<RewriteSite> sites;
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (auto r = rule_for(w[k], w[k + 1])) sites.push_back({k + 1, *r});
  return sites;
}

DigitString apply_rewrite(const DigitString& d, std::size_t position, Rule rule) {
  if (position == 0) throw DomainError("rewrite positions are 1-based");
  Word pre = d.preperiod();
  if (d.has_period()) {
    while (pre.size() < position + 1) pre.insert(pre.end(), d.period().begin(), d.period().end());
  } else if (pre.size() < position + 1) {
    throw DomainError("rewrite site past the end of a finite word");
  }
  RulePair p = rule_pair(rule);
  if (pre[position - 1] != p.from[0] || pre[position] != p.from[1])
    throw DomainError("no " + to_string(rule) + " site at position " + std::to_string(position) +
                      " of " + d.render());
  pre[position - 1] = p.to[0];
  pre[position] = p.to[1];
  return d.has_period() ? DigitString::periodic(std::move(pre), d.period())
                        : DigitString::finite(std::move(pre));
}

// ---------------------------------------------------------------------------

Interval cylinder_interval(const Cylinder& c) {
  Rat a = word_value(c.base);
  Rat w = make_rat(BigInt(1), ipow(3, static_cast<unsigned>(c.rank())));
  return {a, a + w};
}

Interval cylinder_number_set(const Cylinder& c) {
  Rat a = word_value(c.base);
  Rat w = make_rat(BigInt(3), 2 * ipow(3, static_cast<unsigned>(c.rank())));
  return {a, a + w};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rat lo = std::max(a.lo, b.lo);
  Rat hi = std::min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

Cylinder cylinder_overlap(const Word& base, Digit i) {
  if (i >= kMaxDigit) throw DomainError("digit 3 has no right neighbour");
  check_digits(base);
  Cylinder c{base};
  c.base.push_back(i);
  c.base.push_back(3);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

// Depth-first over digits in increasing order; `rest` is 3^j x - S_j, which
// must stay in [0, 3/2] along the whole prefix.
void collect_prefixes(const Rat& rest, std::size_t depth, Word& cur, std::vector<Word>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  Rat scaled = 3 * rest;
  for (Digit c = 0; c <= kMaxDigit; ++c) {
    Rat next = scaled - c;
    if (next < 0) break;
    if (next > kThreeHalves) continue;
    cur.push_back(c);
    collect_prefixes(next, depth, cur, out);
    cur.pop_back();
  }
}

std::size_t count_prefixes(const Rat& x, std::size_t m) { return admissible_prefixes(x, m).size(); }

bool has_cyclic_rewrite_pair(const Word& period) {
  for (std::size_t k = 0; k < period.size(); ++k)
    if (rule_for(period[k], period[(k + 1) % period.size()])) return true;
  return false;
}

}  // namespace

std::vector<Word> admissible_prefixes(const Rat& x, std::size_t m) {
  if (x < 0 || x > kThreeHalves) throw DomainError("x must lie in [0, 3/2]");
  std::vector<Word> out;
  Word cur;
  cur.reserve(m);
  collect_prefixes(x, m, cur, out);
  return out;
}

std::string to_string(const ReprCardinality& c) {
  struct Visitor {
    std::string operator()(const Unique&) const { return "unique"; }
    std::string operator()(const Finite& f) const { return "finite(" + std::to_string(f.count) + ")"; }
    std::string operator()(const Countable&) const { return "countable"; }
    std::string operator()(const Continuum&) const { return "continuum"; }
  };
  return std::visit(Visitor{}, c);
}

ReprCardinality classify_cardinality(const DigitString& d) {
  const Rat x = evaluate(d);
  if (x == 0 || x == kThreeHalves) return Unique{};
  if (d.period().size() == 1) return Countable{};
  if (has_cyclic_rewrite_pair(d.period())) return Continuum{};

  // Tail over {1,2} with both digits present; only the preperiod can vary.
  constexpr std::size_t kDepthCap = 24;
  std::size_t m = std::max<std::size_t>(d.preperiod().size(), 1);
  std::size_t count = count_prefixes(x, m);
  while (m + 2 <= kDepthCap) {
    std::size_t next = count_prefixes(x, m + 2);
    if (next == count) return count == 1 ? ReprCardinality{Unique{}} : ReprCardinality{Finite{count}};
    count = next;
    m += 2;
  }
  throw std::logic_error("representation count of " + d.render() + " did not stabilize");
}

std::vector<DigitString> enumerate_representations(const DigitString& d, std::size_t m) {
  if (!d.has_period()) throw DomainError("enumeration needs a periodic digit string");
  if (m < d.preperiod().size()) throw DomainError("depth shorter than the preperiod");
  if (std::holds_alternative<Continuum>(classify_cardinality(d)))
    throw DomainError(d.render() + " has a continuum of representations");

  // Tails of other representations are either simple periods or a rotation
  // of the {1,2} period.
  std::vector<Word> tails{{0}, {1}, {2}, {3}};
  Word rot = d.period();
  for (std::size_t i = 0; i < rot.size(); ++i) {
    tails.push_back(rot);
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  std::vector<Rat> tail_values;
  for (const Word& t : tails) tail_values.push_back(evaluate(DigitString::periodic({}, t)));

  const Rat x = evaluate(d);
  std::set<std::string> seen;
  std::vector<DigitString> out;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<Word> prefixes = k == 0 ? std::vector<Word>{Word{}} : admissible_prefixes(x, k);
    for (const Word& w : prefixes) {
      Rat rest = (x - word_value(w)) * Rat(ipow(3, static_cast<unsigned>(k)));
      for (std::size_t t = 0; t < tails.size(); ++t) {
        if (tail_values[t] != rest) continue;
        DigitString r = DigitString::periodic(w, tails[t]);
        if (r.preperiod().size() > m) continue;
        if (seen.insert(r.render()).second) out.push_back(std::move(r));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DigitString& a, const DigitString& b) { return a.render() < b.render(); });
  return out;
}

}  // namespace deltarep
