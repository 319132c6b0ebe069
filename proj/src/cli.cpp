#include "deltarep/cli.hpp"

#include "deltarep/digits.hpp"
#include "deltarep/fractal.hpp"
#include "deltarep/measure.hpp"
#include "deltarep/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace deltarep::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCrlf = "\r\n";
constexpr int kSchema = 1;

/// Rounds to 15 significant digits so JSON shows no noise digits.
double dec(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string csv_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void put_value(Json& j, const std::string& key, const Value& v) {
  if (v.exact) j[key] = to_string(*v.exact);
  j[key + (v.exact ? "_decimal" : "")] = dec(v.approx);
}

void put_rat(Json& j, const std::string& key, const Rat& q) { put_value(j, key, Value::of(q)); }

Json cardinality_json(const ReprCardinality& c) {
  Json j;
  if (auto f = std::get_if<Finite>(&c)) {
    j["cardinality"] = "finite";
    j["count"] = f->count;
  } else {
    j["cardinality"] = to_string(c);
  }
  return j;
}

Json header() { return Json{{"schema", kSchema}}; }

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// ---------------------------------------------------------------------------

struct ProbArgs {
  std::vector<std::string> fields;
  ProbVector get() const { return ProbVector::parse(fields); }
};

void add_prob_args(CLI::App* sub, ProbArgs& args) {
  sub->add_option("p", args.fields, "digit probabilities p0 p1 p2 p3 (a/b or decimals)")
      ->expected(4)
      ->required();
}

Json prob_json(const ProbVector& p) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    Value v = p.value(i);
    arr.push_back(v.exact ? Json(to_string(*v.exact)) : Json(dec(v.approx)));
  }
  return arr;
}

void cmd_repr(std::ostream& out, const std::string& text, std::optional<std::size_t> depth) {
  DigitString d = parse(text);
  Json j = header();
  j["input"] = text;
  j["canonical"] = d.render();
  put_rat(j, "value", evaluate(d));
  ReprCardinality c = classify_cardinality(d);
  j.update(cardinality_json(c));
  if (std::holds_alternative<Continuum>(c)) {
    Json sites = Json::array();
    for (const RewriteSite& s : rewrite_sites(d, d.preperiod().size() + 2 * d.period().size()))
      sites.push_back({{"position", s.position}, {"rule", to_string(s.rule)}});
    j["rewrite_sites"] = sites;
  } else {
    std::size_t m = depth.value_or(d.preperiod().size() + 3);
    j["depth"] = m;
    Json reps = Json::array();
    for (const DigitString& r : enumerate_representations(d, m)) reps.push_back(r.render());
    j["representations"] = reps;
  }
  emit(out, j);
}

void cmd_classify(std::ostream& out, const ProbVector& p) {
  Json j = header();
  j["p"] = prob_json(p);
  DistributionClass c = classify(p);
  j["class"] = class_name(c);
  if (auto ac = std::get_if<AbsolutelyContinuous>(&c)) {
    put_value(j, "x", ac->cantor_weight);
    j["uniform"] = ac->uniform;
  } else if (auto sc = std::get_if<SingularCantor>(&c)) {
    j["dimension"] = dec(sc->spectrum_dim);
  } else if (auto si = std::get_if<SingularIncreasing>(&c)) {
    j["dimension"] = dec(si->support_dim);
  } else {
    j["spectrum"] = {0, 1.5};
  }
  emit(out, j);
}

void cmd_cdf(std::ostream& out, const ProbVector& p, std::size_t grid, double tol) {
  if (grid < 2) throw CLI::ValidationError("--grid", "needs at least 2 points");
  std::ostringstream buf;
  buf << "x,lo,hi" << kCrlf;
  for (std::size_t i = 0; i < grid; ++i) {
    Rat x = make_rat(BigInt(3 * static_cast<long>(i)), BigInt(2 * static_cast<long>(grid - 1)));
    CdfEnclosure e = cdf(p, x, tol);
    buf << csv_num(to_double(x)) << ',' << csv_num(e.lo) << ',' << csv_num(e.hi) << kCrlf;
  }
  out << buf.str();
}

void cmd_charfn(std::ostream& out, const ProbVector& p, double tmax, double step, std::size_t K) {
  if (!(step > 0.0)) throw CLI::ValidationError("--step", "must be positive");
  if (tmax < 0.0) throw CLI::ValidationError("--tmax", "must be non-negative");
  const auto n = static_cast<std::size_t>(std::floor(tmax / step + 1e-9));
  std::ostringstream buf;
  buf << "t,re,im,abs,tail_bound" << kCrlf;
  for (std::size_t i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) * step;
    CharfnResult r = charfn(p, t, K);
    buf << csv_num(t) << ',' << csv_num(r.value.real()) << ',' << csv_num(r.value.imag()) << ','
        << csv_num(std::abs(r.value)) << ',' << csv_num(r.tail_bound) << kCrlf;
  }
  out << buf.str();
}

void cmd_lbound(std::ostream& out, const ProbVector& p, std::size_t N, std::size_t K) {
  Json j = header();
  j["p"] = prob_json(p);
  j["N"] = N;
  j["K"] = K;
  j["lower_bound"] = dec(limsup_lower_bound(p, N, K));
  emit(out, j);
}

void cmd_dimension(std::ostream& out, const std::string& digits, std::size_t nmax) {
  DigitSet v = DigitSet::parse(digits);
  DimensionEstimate est = box_dimension(v, nmax);
  out << "n,count,log3_count" << kCrlf;
  for (const LevelCount& lc : est.counts)
    out << lc.level << ',' << lc.count << ','
        << csv_num(std::log(static_cast<double>(lc.count)) / std::log(3.0)) << kCrlf;
  Json j = header();
  j["digit_set"] = v.render();
  j["slope"] = dec(est.slope);
  j["r2"] = dec(est.r2);
  if (auto target = expected_dimension(v)) {
    j["target"] = dec(*target);
    j["abs_error"] = dec(std::abs(est.slope - *target));
  } else {
    j["target"] = nullptr;
    j["abs_error"] = nullptr;
  }
  emit(out, j);
}

void cmd_levelset(std::ostream& out, const std::string& text, std::optional<std::size_t> depth) {
  DigitString y = parse(text);
  LevelSet ls = level_set(y, depth.value_or(y.preperiod().size() + 3));
  Json j = header();
  j["input"] = text;
  put_rat(j, "y", evaluate(y));
  j.update(cardinality_json(ls.cardinality));
  if (ls.constraint) {
    Json c;
    c["prefix"] = render_word(ls.constraint->prefix);
    c["block_length"] = ls.constraint->block_length;
    Json blocks = Json::array();
    for (const Word& b : ls.constraint->blocks) blocks.push_back(render_word(b));
    c["blocks"] = blocks;
    c["dimension"] = dec(ls.constraint->dimension);
    j["constraint"] = c;
  } else {
    Json members = Json::array();
    for (std::size_t i = 0; i < ls.members.size(); ++i) {
      Json m;
      m["digits"] = ls.member_digits[i].render();
      put_rat(m, "x", ls.members[i]);
      members.push_back(m);
    }
    j["members"] = members;
  }
  emit(out, j);
}

void cmd_decompose(std::ostream& out, const ProbVector& p) {
  Json j = header();
  j["p"] = prob_json(p);
  try {
    Json u;
    put_value(u, "x", decompose_uniform_plus_cantor(p));
    j["uniform_plus_cantor"] = u;
  } catch (const DomainError&) {
    j["uniform_plus_cantor"] = nullptr;
  }
  try {
    CantorPair pair = decompose_cantor_pair(p);
    Json c;
    put_value(c, "u", pair.u);
    put_value(c, "v", pair.v);
    j["cantor_pair"] = c;
  } catch (const DomainError&) {
    j["cantor_pair"] = nullptr;
  }
  emit(out, j);
}

std::string bits_text(const SubsumSelector& s) {
  std::string t;
  for (auto b : s.bits) t.push_back(b ? '1' : '0');
  return t;
}

void cmd_series(std::ostream& out, std::optional<std::size_t> check, std::optional<std::string> greedy,
                std::size_t nmax, std::optional<std::size_t> bridge) {
  int modes = check.has_value() + greedy.has_value() + bridge.has_value();
  if (modes != 1) throw CLI::ValidationError("series", "choose exactly one of --check, --greedy, --bridge");
  if (check) {
    Json j = header();
    j["n_max"] = *check;
    j["kakeya"] = kakeya_check(*check);
    emit(out, j);
  } else if (greedy) {
    Rat x = parse_rat(*greedy);
    SubsumSelector sel = greedy_approximate(x, nmax);
    Rat s = subsum(sel);
    Json j = header();
    put_rat(j, "x", x);
    j["n_max"] = nmax;
    j["bits"] = bits_text(sel);
    put_rat(j, "subsum", s);
    put_rat(j, "error", Rat(x - s));
    put_rat(j, "remainder", series_remainder(nmax));
    emit(out, j);
  } else {
    if (*bridge < 1 || *bridge > 4) throw CLI::ValidationError("--bridge", "digit count must be 1..4");
    const std::size_t nbits = 3 * *bridge;
    out << "bits,digits,value" << kCrlf;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
      SubsumSelector sel;
      for (std::size_t i = 0; i < nbits; ++i) sel.bits.push_back((mask >> (nbits - 1 - i)) & 1u);
      out << bits_text(sel) << ',' << render_word(eta_subsum_digits(sel)) << ',' << to_string(subsum(sel))
          << kCrlf;
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-representations (base 3, digits 0..3) and the distribution of xi"};
  app.require_subcommand(1);

  std::string digit_text;
  std::optional<std::size_t> depth;
  ProbArgs prob;
  std::size_t grid = 31, N = 3, K = 40, nmax = 12;
  double tol = 1e-4, tmax = 100.0, step = 1.0;
  std::string digits = "013";
  std::optional<std::size_t> check, bridge;
  std::optional<std::string> greedy;

  auto* repr = app.add_subcommand("repr", "value and representations of a digit string");
  repr->add_option("digitstring", digit_text, "e.g. 1010(12)")->required();
  repr->add_option("--depth", depth, "max preperiod length of listed representations");

  auto* cls = app.add_subcommand("classify", "singular / absolutely continuous classification");
  add_prob_args(cls, prob);

  auto* cdf_cmd = app.add_subcommand("cdf", "distribution function enclosures on a grid over [0, 3/2]");
  add_prob_args(cdf_cmd, prob);
  cdf_cmd->add_option("--grid", grid, "number of grid points")->capture_default_str();
  cdf_cmd->add_option("--tol", tol, "enclosure width")->capture_default_str();

  auto* cf = app.add_subcommand("charfn", "characteristic function on 0, h, 2h, ..., T");
  add_prob_args(cf, prob);
  cf->add_option("--tmax", tmax)->capture_default_str();
  cf->add_option("--step", step)->capture_default_str();
  cf->add_option("--K", K, "number of factors")->capture_default_str();

  auto* lb = app.add_subcommand("lbound", "certified lower bound for limsup |f(t)|");
  add_prob_args(lb, prob);
  lb->add_option("--N", N)->capture_default_str();
  lb->add_option("--K", K)->capture_default_str();

  auto* dim = app.add_subcommand("dimension", "box counting for expansions over a digit subset");
  dim->add_option("--digits", digits, "allowed digits, e.g. 013")->capture_default_str();
  dim->add_option("--nmax", nmax)->capture_default_str();

  auto* lvl = app.add_subcommand("levelset", "level set of the quaternary-to-Delta map");
  lvl->add_option("digitstring", digit_text)->required();
  lvl->add_option("--depth", depth);

  auto* dec_cmd = app.add_subcommand("decompose", "convolution decompositions of xi");
  add_prob_args(dec_cmd, prob);

  auto* ser = app.add_subcommand("series", "the series 1/3+1/3+1/3+1/9+... and its subsums");
  ser->add_option("--check", check, "verify u_n <= r_n up to n");
  ser->add_option("--greedy", greedy, "greedy subsum approximation of x");
  ser->add_option("--nmax", nmax, "terms used by --greedy")->capture_default_str();
  ser->add_option("--bridge", bridge, "list all selectors of 3k bits with their digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*repr) cmd_repr(out, digit_text, depth);
    else if (*cls) cmd_classify(out, prob.get());
    else if (*cdf_cmd) cmd_cdf(out, prob.get(), grid, tol);
    else if (*cf) cmd_charfn(out, prob.get(), tmax, step, K);
    else if (*lb) cmd_lbound(out, prob.get(), N, K);
    else if (*dim) cmd_dimension(out, digits, nmax);
    else if (*lvl) cmd_levelset(out, digit_text, depth);
    else if (*dec_cmd) cmd_decompose(out, prob.get());
    else if (*ser) cmd_series(out, check, greedy, nmax, bridge);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace deltarep::cli
