#include "gammahyper/cli.hpp"

#include "gammahyper/coeff_cache.hpp"
#include "gammahyper/gamma_engine.hpp"
#include "gammahyper/hyperasym.hpp"
#include "gammahyper/late_coeffs.hpp"
#include "gammahyper/report_io.hpp"
#include "gammahyper/series_bounds.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

namespace gammahyper {

namespace {

/// Malformed flag values that only show up after CLI11 is done.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr int kTableBits = 512;

struct Globals {
  Bits bits = 256;
  std::string cache;
  std::string format;  // empty: the subcommand's default
  std::string out;
  long seed = 0;
};

OutputFormat format_or(const Globals& g, OutputFormat fallback) {
  if (g.format.empty()) return fallback;
  if (g.format == "json") return OutputFormat::json;
  if (g.format == "csv") return OutputFormat::csv;
  return OutputFormat::text;
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

SeriesKind kind_arg(const std::string& s) {
  auto k = parse_kind(s);
  if (!k) throw UsageError("unknown kind '" + s + "' (gamma|reciprocal)");
  return *k;
}

Complex complex_arg(const std::string& s, Bits wp) {
  try {
    return Complex::parse(s, wp);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse complex number '" + s + "' (expected a+bi)");
  }
}

/// Decimal, or a multiple of pi: "pi/2", "-3pi/4", "0.5*pi".
Real real_arg(const std::string& s, Bits wp) {
  static const std::regex pi_form(R"(^([+-]?)([0-9.]*(?:[eE][+-]?[0-9]+)?)\*?pi(?:/([0-9.]+))?$)");
  try {
    std::smatch m;
    if (std::regex_match(s, m, pi_form)) {
      Real v = const_pi(wp);
      if (m[2].length()) v *= Real::parse(m[2].str(), wp);
      if (m[3].length()) v /= Real::parse(m[3].str(), wp);
      return m[1] == "-" ? -v : v;
    }
    return Real::parse(s, wp);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse number '" + s + "'");
  }
}

/// Loads the coefficient cache if one exists at the resolved path.
void load_cache(const Globals& g) {
  std::filesystem::path p = g.cache.empty() ? default_cache_path() : std::filesystem::path(g.cache);
  if (p.empty() || !std::filesystem::exists(p)) {
    if (!g.cache.empty()) throw UsageError("cache file not found: " + g.cache);
    return;
  }
  install_stirling_table(cache_load(p));
}

/// uniform in [0, 1) from the top 53 bits, the same on every platform
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// coeffs ---------------------------------------------------------------------

struct CoeffsArgs {
  std::size_t nmax = 30;
  std::string method = "all";
  bool list = false;
};

int cmd_coeffs(const Globals& g, const CoeffsArgs& a, std::ostream& out) {
  std::vector<StirlingMethod> methods;
  if (a.method == "all") {
    methods = {StirlingMethod::brassesco, StirlingMethod::wrench, StirlingMethod::logderiv,
               StirlingMethod::bessel_poly};
  } else {
    auto m = parse_method(a.method);
    if (!m) throw UsageError("unknown method '" + a.method + "'");
    methods = {*m};
  }
  auto tables = sweep_map(methods.size(), [&](std::size_t i) { return stirling(a.nmax, methods[i]); });
  bool agree = true;
  for (const auto& t : tables) agree = agree && t == tables.front();
  const StirlingTable& t = tables.front();
  auto sign = sign_pattern_violation(t);
  std::optional<std::size_t> conv_bad;
  for (std::size_t n = 1; n <= t.nmax() && !conv_bad; ++n)
    if (convolution_residual(t, n) != 0) conv_bad = n;
  std::string sha;
  if (!g.out.empty()) {
    cache_save(t, g.out);
    const std::string text = cache_serialize(t);
    sha = text.substr(text.rfind("sha256 ") + 7, 64);
  }

  const OutputFormat f = format_or(g, OutputFormat::text);
  std::ostringstream os;
  if (f == OutputFormat::json) {
    Json j;
    j["nmax"] = a.nmax;
    Json ms = Json::array();
    for (auto m : methods) ms.push_back(std::string(method_name(m)));
    j["methods"] = ms;
    j["agree"] = agree;
    j["sign_pattern_ok"] = !sign.has_value();
    j["convolution_ok"] = !conv_bad.has_value();
    if (!g.out.empty()) j["cache"] = {{"path", g.out}, {"sha256", sha}};
    if (a.list) {
      Json cs = Json::array();
      for (const auto& q : t.entries) cs.push_back(q.get_str());
      j["coefficients"] = cs;
    }
    os << dump(j);
  } else if (f == OutputFormat::csv) {
    os << "n,gamma_n\n";
    for (std::size_t n = 0; n <= t.nmax(); ++n) os << n << ',' << t[n].get_str() << '\n';
  } else {
    os << "nmax " << a.nmax << "\nmethods";
    for (auto m : methods) os << ' ' << method_name(m);
    os << "\nagreement " << (agree ? "exact" : "MISMATCH") << '\n';
    os << "sign pattern " << (sign ? "broken at " + std::to_string(*sign) : std::string("ok")) << '\n';
    os << "convolution identity "
       << (conv_bad ? "broken at " + std::to_string(*conv_bad) : "ok for 1.." + std::to_string(t.nmax())) << '\n';
    if (!g.out.empty()) os << "cache " << g.out << " sha256 " << sha << '\n';
    if (a.list)
      for (std::size_t n = 0; n <= t.nmax(); ++n) os << "gamma_" << n << " = " << t[n].get_str() << '\n';
  }
  // the cache file took --out; the summary goes to stdout
  out << os.str();
  return agree && !sign && !conv_bad ? 0 : 1;
}

// eval -----------------------------------------------------------------------

struct EvalArgs {
  std::string z;
  std::string func = "gamma_star";
  long N = 5;
  int digits = 40;
};

int cmd_eval(const Globals& g, const EvalArgs& a, std::ostream& out) {
  load_cache(g);
  const Precision prec(g.bits);
  SectorPoint z = SectorPoint::from_z(complex_arg(a.z, prec.working()));
  BigComplex v;
  std::optional<Real> lindelof;
  if (a.func == "gamma_star") v = gamma_star(z, prec);
  else if (a.func == "recip_gamma_star") v = recip_gamma_star(z, prec);
  else if (a.func == "stieltjes") v = gamma_star_stieltjes(z, prec);
  else if (a.func == "log_gamma_tail") {
    LogGammaTail t = log_gamma_tail(z, a.N, prec);
    v = t.partial;
    lindelof = t.lindelof_bound;
  } else {
    throw UsageError("unknown function '" + a.func + "' (gamma_star|recip_gamma_star|stieltjes|log_gamma_tail)");
  }
  std::ostringstream os;
  switch (format_or(g, OutputFormat::text)) {
    case OutputFormat::json: {
      Json j{{"z", point_json(z, a.digits)}, {"function", a.func}, {"value", big_json(v, a.digits)}};
      if (lindelof) {
        j["N"] = a.N;
        j["lindelof_bound"] = lindelof->to_sci(a.digits);
      }
      os << dump(j);
      break;
    }
    case OutputFormat::csv:
      os << "function,z_re,z_im,re,im,error_bound" << (lindelof ? ",N,lindelof_bound" : "") << '\n';
      os << a.func << ',' << z.z.re.to_sci(a.digits) << ',' << z.z.im.to_sci(a.digits) << ','
         << v.value.re.to_sci(a.digits) << ',' << v.value.im.to_sci(a.digits) << ',' << v.error_bound.to_sci(6);
      if (lindelof) os << ',' << a.N << ',' << lindelof->to_sci(a.digits);
      os << '\n';
      break;
    case OutputFormat::text:
      os << a.func << "(" << a.z << ") = " << v.value.to_string(a.digits) << "\nerror bound "
         << v.error_bound.to_sci(6) << '\n';
      if (lindelof) os << "remaining log-gamma tail after N = " << a.N << " is at most " << lindelof->to_sci(6) << '\n';
      break;
  }
  emit(g, os.str(), out);
  return 0;
}

// bounds ---------------------------------------------------------------------

struct BoundsArgs {
  std::vector<std::string> z;
  std::vector<long> N;
  std::string kind = "gamma";
  std::size_t samples = 0;
};

int cmd_bounds(const Globals& g, const BoundsArgs& a, std::ostream& out) {
  load_cache(g);
  const Precision prec(g.bits);
  const Bits wp = prec.working();
  std::vector<SeriesKind> kinds;
  if (a.kind == "both") kinds = {SeriesKind::gamma, SeriesKind::reciprocal};
  else kinds = {kind_arg(a.kind)};

  struct Job {
    SectorPoint z;
    long N;
    SeriesKind kind;
  };
  std::vector<Job> jobs;
  std::vector<long> Ns = a.N.empty() ? std::vector<long>{5} : a.N;
  for (const auto& s : a.z)
    for (long N : Ns)
      for (auto k : kinds) jobs.push_back({SectorPoint::from_z(complex_arg(s, wp)), N, k});
  std::mt19937_64 rng(static_cast<std::uint64_t>(g.seed));
  for (std::size_t i = 0; i < a.samples; ++i) {
    // |z| log-uniform in [2, 100], theta uniform in (-pi/2, pi/2), N in [2, 40]
    double r = 2 * std::pow(50.0, unit(rng));
    double th = (unit(rng) - 0.5) * 0.98 * M_PI;
    long N = 2 + static_cast<long>(unit(rng) * 39);
    for (auto k : kinds) jobs.push_back({SectorPoint::polar(Real(r, wp), Real(th, wp)), N, k});
  }
  if (jobs.empty()) throw UsageError("bounds: give --z and/or --samples");

  auto reports =
      sweep_map(jobs.size(), [&](std::size_t i) { return remainder_report(jobs[i].z, jobs[i].N, jobs[i].kind, prec); });
  bool all_hold = true;
  for (const auto& r : reports) {
    for (const auto& [name, b] : r.bounds) all_hold = all_hold && bound_holds(r, b);
    if (r.enclosure) all_hold = all_hold && r.enclosure->contains(r.true_remainder.value.re);
  }

  std::ostringstream os;
  switch (format_or(g, OutputFormat::text)) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << dump(Json{{"reports", arr}, {"all_bounds_hold", all_hold}});
      break;
    }
    case OutputFormat::csv: os << remainder_csv(reports); break;
    case OutputFormat::text:
      for (const auto& r : reports) {
        os << "z = " << r.z.z.to_string(12) << "  N = " << r.N << "  kind = " << kind_name(r.kind) << '\n';
        os << "  |remainder|  " << abs(r.true_remainder.value).to_sci(10) << "  (+- "
           << r.true_remainder.error_bound.to_sci(3) << ")\n";
        for (const auto& [name, b] : r.bounds)
          os << "  " << std::left << std::setw(11) << name << "  " << b.to_sci(10) << "  "
             << (bound_holds(r, b) ? "holds" : "VIOLATED") << '\n';
        if (r.enclosure)
          os << "  enclosure    (" << r.enclosure->low.to_sci(10) << ", " << r.enclosure->high.to_sci(10) << ")  "
             << (r.enclosure->contains(r.true_remainder.value.re) ? "contains" : "VIOLATED") << '\n';
      }
      os << (all_hold ? "all bounds hold\n" : "some bounds violated\n");
      break;
  }
  emit(g, os.str(), out);
  return all_hold ? 0 : 1;
}

// hyper ----------------------------------------------------------------------

struct HyperArgs {
  std::string z;
  long N = 0;
  long M = 3;
  std::string kind = "gamma";
};

int cmd_hyper(const Globals& g, const HyperArgs& a, std::ostream& out) {
  load_cache(g);
  const Precision prec(g.bits);
  SectorPoint z = SectorPoint::from_z(complex_arg(a.z, prec.working()));
  const long N = a.N > 0 ? a.N : std::lround(2 * M_PI * z.modulus.to_double());
  HyperExpansion h = improved_expansion(z, N, a.M, kind_arg(a.kind), prec);
  std::optional<Real> t5;
  if (a.M >= 2 && abs(z.theta) <= const_pi(z.theta.precision()) / 2) t5 = bound_theorem5(z, N, a.M, prec);
  const Real rnm = abs(h.R_NM.value);
  const bool ok = !t5 || rnm - h.R_NM.error_bound <= *t5;

  std::ostringstream os;
  switch (format_or(g, OutputFormat::text)) {
    case OutputFormat::json: {
      Json j = to_json(h);
      j["theorem5"] = t5 ? Json(t5->to_sci(kReportDigits)) : Json(nullptr);
      j["bound_holds"] = ok;
      os << dump(j);
      break;
    }
    case OutputFormat::csv:
      os << "z_re,z_im,N,M,kind,abs_R_N,abs_R_NM,theorem5\n"
         << z.z.re.to_sci(20) << ',' << z.z.im.to_sci(20) << ',' << N << ',' << a.M << ',' << a.kind << ','
         << abs(h.R_N.value).to_sci(20) << ',' << rnm.to_sci(20) << ',' << (t5 ? t5->to_sci(20) : "") << '\n';
      break;
    case OutputFormat::text:
      os << "z = " << z.z.to_string(12) << "  N = " << N << "  M = " << a.M << "  kind = " << a.kind << '\n'
         << "R_N             " << h.R_N.value.to_string(20) << '\n'
         << "terminant up    " << h.terminant_sum_up.value.to_string(20) << '\n'
         << "terminant down  " << h.terminant_sum_down.value.to_string(20) << '\n'
         << "R_NM            " << h.R_NM.value.to_string(20) << "  (+- " << h.R_NM.error_bound.to_sci(3) << ")\n"
         << "|R_NM|/|R_N|    " << (rnm / abs(h.R_N.value)).to_sci(6) << '\n';
      if (t5) os << "theorem5 bound  " << t5->to_sci(20) << "  " << (ok ? "holds" : "VIOLATED") << '\n';
      break;
  }
  emit(g, os.str(), out);
  return ok ? 0 : 1;
}

// stokes ---------------------------------------------------------------------

struct StokesArgs {
  std::string modulus = "10";
  std::string kind = "gamma";
  std::size_t grid = 81;
  long M = 3;
  std::string side = "upper";
  std::vector<std::string> theta;
  long multipliers = 0;
};

int cmd_stokes(const Globals& g, const StokesArgs& a, std::ostream& out) {
  const Precision prec(g.bits);
  const Bits wp = prec.working();
  std::ostringstream os;
  if (a.multipliers > 0) {
    auto sk = parse_stokes_kind(a.kind);
    if (!sk) throw UsageError("unknown kind '" + a.kind + "' (log|gamma|reciprocal)");
    if (a.theta.size() != 1) throw UsageError("--multipliers needs exactly one --theta");
    Real th = real_arg(a.theta.front(), wp);
    const OutputFormat f = format_or(g, OutputFormat::text);
    Json arr = Json::array();
    if (f == OutputFormat::csv) os << "k,multiplier\n";
    for (long k = 1; k <= a.multipliers; ++k) {
      ExactRational m = stokes_multiplier(*sk, k, th);
      if (f == OutputFormat::json) arr.push_back({{"k", k}, {"multiplier", m.get_str()}});
      else if (f == OutputFormat::csv) os << k << ',' << m.get_str() << '\n';
      else os << "S_" << k << " = " << m.get_str() << '\n';
    }
    if (f == OutputFormat::json) os << dump(Json{{"kind", a.kind}, {"theta", a.theta.front()}, {"multipliers", arr}});
    emit(g, os.str(), out);
    return 0;
  }
  load_cache(g);
  const SeriesKind kind = kind_arg(a.kind);
  if (a.side != "upper" && a.side != "lower") throw UsageError("--side must be upper or lower");
  std::vector<Real> grid;
  if (!a.theta.empty()) {
    for (const auto& t : a.theta) grid.push_back(real_arg(t, wp));
  } else {
    grid = stokes_grid(a.side == "upper" ? 1 : -1, a.grid, wp);
  }
  Real modulus = real_arg(a.modulus, wp);
  auto rows = stokes_profile(kind, modulus, grid, a.M, prec);
  switch (format_or(g, OutputFormat::csv)) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r, kProfileDigits));
      os << dump(Json{{"modulus", a.modulus}, {"kind", a.kind}, {"M", a.M},
                      {"N", std::lround(2 * M_PI * modulus.to_double())}, {"rows", arr}});
      break;
    }
    case OutputFormat::csv: os << profile_csv(rows); break;
    case OutputFormat::text: {
      Real worst(kBoundBits);
      os << std::left << std::setw(12) << "theta" << std::setw(26) << "multiplier" << std::setw(12) << "erf model"
         << "residual\n";
      for (const auto& r : rows) {
        os << std::setw(12) << r.theta.to_sci(6) << std::setw(26) << r.effective_multiplier.to_string(6)
           << std::setw(12) << r.erf_prediction.to_sci(4) << r.residual.to_sci(3) << '\n';
        worst = max(worst, r.residual);
      }
      os << "max residual " << worst.to_sci(4) << '\n';
      break;
    }
  }
  emit(g, os.str(), out);
  return 0;
}

// late -----------------------------------------------------------------------

struct LateArgs {
  long target = 0;
  std::string method = "xi_new";
  long K = 0;
};

int cmd_late(const Globals& g, const LateArgs& a, std::ostream& out) {
  load_cache(g);
  if (a.target < 1) throw UsageError("--target must be >= 1");
  std::vector<LateMethod> methods;
  if (a.method == "all") {
    methods = {LateMethod::dingle, LateMethod::boyd_gamma, LateMethod::boyd_zeta, LateMethod::boyd_improved,
               LateMethod::xi_new};
  } else {
    auto m = parse_late_method(a.method);
    if (!m) throw UsageError("unknown method '" + a.method + "'");
    methods = {*m};
  }
  const long n = (a.target + 1) / 2;
  const long K = a.K > 0 ? a.K : optimal_K(n);
  auto table = stirling_exact(static_cast<std::size_t>(a.target) + 2);
  const Precision prec(g.bits);
  auto rows = sweep_map(methods.size(),
                        [&](std::size_t i) { return late_coeff_approx(a.target, methods[i], K, *table, prec); });
  std::ostringstream os;
  const int digits = std::max(20, static_cast<int>(static_cast<double>(g.bits) * 0.30103) - 5);
  switch (format_or(g, OutputFormat::text)) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r, digits));
      os << dump(Json{{"approximations", arr}});
      break;
    }
    case OutputFormat::csv:
      os << "target_index,n,parity,method,K,value,exact,error\n";
      for (const auto& r : rows)
        os << r.target_index << ',' << r.n << ',' << parity_name(r.parity) << ',' << method_name(r.method) << ','
           << r.K << ',' << r.value.value.to_sci(digits) << ',' << Real(r.exact, g.bits).to_sci(digits) << ','
           << r.error.to_sci(digits) << '\n';
      break;
    case OutputFormat::text:
      os << "gamma_" << a.target << " = " << Real(rows.front().exact, g.bits).to_sci(digits) << "  (n = "
         << rows.front().n << ", K = " << K << ")\n";
      for (const auto& r : rows)
        os << std::left << std::setw(14) << method_name(r.method) << r.value.value.to_sci(digits) << "  error "
           << r.error.to_sci(6) << '\n';
      break;
  }
  emit(g, os.str(), out);
  return 0;
}

// tables ---------------------------------------------------------------------

int cmd_tables(const Globals& g, int which, std::ostream& out) {
  load_cache(g);
  const Precision prec(std::max<Bits>(g.bits, kTableBits));
  TableReproduction t = reproduce_table(which == 1 ? TableId::table1 : TableId::table2, prec);
  std::string s;
  switch (format_or(g, OutputFormat::text)) {
    case OutputFormat::json: s = dump(to_json(t)); break;
    case OutputFormat::csv: s = render_table_csv(t); break;
    case OutputFormat::text: s = render_table_text(t); break;
  }
  emit(g, s, out);
  return 0;
}

}  // namespace

std::filesystem::path default_cache_path() {
  if (const char* e = std::getenv("GAMMA_HYPER_CACHE"); e && *e) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
    return std::filesystem::path(x) / "gamma-hyper" / "coeffs.txt";
  if (const char* h = std::getenv("HOME"); h && *h)
    return std::filesystem::path(h) / ".cache" / "gamma-hyper" / "coeffs.txt";
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stirling coefficients, certified gamma asymptotics, terminants and Stokes smoothing", "gamma-hyper"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--precision", g.bits, "working precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--cache", g.cache, "coefficient cache file");
  app.add_option("--format", g.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", g.out, "write output here instead of stdout");
  app.add_option("--seed", g.seed, "seed for sampled sweeps");

  CoeffsArgs ca;
  auto* coeffs = app.add_subcommand("coeffs", "exact Stirling coefficients, cross-checked across generators")->fallthrough();
  coeffs->add_option("--nmax", ca.nmax, "largest index");
  coeffs->add_option("--method", ca.method, "brassesco|wrench|logderiv|bessel_poly|all");
  coeffs->add_flag("--list", ca.list, "print the coefficients");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Gamma*, 1/Gamma* or the log-gamma tail at z")->fallthrough();
  eval->add_option("--z", ea.z, "point a+bi")->required();
  eval->add_option("--func", ea.func, "gamma_star|recip_gamma_star|stieltjes|log_gamma_tail");
  eval->add_option("--N", ea.N, "terms for log_gamma_tail")->check(CLI::PositiveNumber);
  eval->add_option("--digits", ea.digits, "significant digits")->check(CLI::Range(1, 10000));

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "remainder against every applicable bound")->fallthrough();
  bounds->add_option("--z", ba.z, "points a+bi (repeatable)");
  bounds->add_option("--N", ba.N, "truncation indices (repeatable)")->check(CLI::PositiveNumber);
  bounds->add_option("--kind", ba.kind, "gamma|reciprocal|both");
  bounds->add_option("--samples", ba.samples, "additional pseudo-random points");

  HyperArgs ha;
  auto* hyper = app.add_subcommand("hyper", "exponentially improved remainder and its bound")->fallthrough();
  hyper->add_option("--z", ha.z, "point a+bi")->required();
  hyper->add_option("--N", ha.N, "truncation index (default round(2 pi |z|))");
  hyper->add_option("--M", ha.M, "terminant terms")->check(CLI::NonNegativeNumber);
  hyper->add_option("--kind", ha.kind, "gamma|reciprocal");

  StokesArgs sa;
  auto* stokes = app.add_subcommand("stokes", "Stokes-line transition profile or exact multipliers")->fallthrough();
  stokes->add_option("--modulus", sa.modulus, "|z|");
  stokes->add_option("--kind", sa.kind, "gamma|reciprocal (log also for --multipliers)");
  stokes->add_option("--grid", sa.grid, "points across the strip")->check(CLI::Range(2, 100000));
  stokes->add_option("--M", sa.M, "terms in the normalising sum")->check(CLI::PositiveNumber);
  stokes->add_option("--side", sa.side, "upper|lower");
  stokes->add_option("--theta", sa.theta, "explicit angles (repeatable)");
  stokes->add_option("--multipliers", sa.multipliers, "print S_1..S_k at --theta")->check(CLI::PositiveNumber);

  LateArgs la;
  auto* late = app.add_subcommand("late", "late-coefficient approximation of one gamma_n")->fallthrough();
  late->add_option("--target", la.target, "coefficient index")->required();
  late->add_option("--method", la.method, "dingle|boyd_gamma|boyd_zeta|boyd_improved|xi_new|all");
  late->add_option("--K", la.K, "terms (default ceil(n/2))");

  int which = 1;
  auto* tables = app.add_subcommand("tables", "reproduce the gamma_101 / gamma_100 tables")->fallthrough();
  tables->add_option("--which", which, "1 or 2")->check(CLI::IsMember({1, 2}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coeffs) return cmd_coeffs(g, ca, out);
    if (*eval) return cmd_eval(g, ea, out);
    if (*bounds) return cmd_bounds(g, ba, out);
    if (*hyper) return cmd_hyper(g, ha, out);
    if (*stokes) return cmd_stokes(g, sa, out);
    if (*late) return cmd_late(g, la, out);
    if (*tables) return cmd_tables(g, which, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace gammahyper
