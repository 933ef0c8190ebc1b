// pentarec: command-line front end for the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal error.
#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pentarec/dirichlet.hpp"
#include "pentarec/forms.hpp"
#include "pentarec/hecke.hpp"
#include "pentarec/partitions.hpp"
#include "pentarec/rademacher.hpp"
#include "pentarec/rankincohen.hpp"
#include "pentarec/serialize.hpp"
#include "pentarec/verify.hpp"

using namespace pentarec;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  long prec = 60;
  long big_m = 100;
  std::optional<long> big_n;
  long depth_c = 50;
  std::string format = "json";
  std::string out;
  std::string float_mode = "binary64";
  std::vector<std::string> methods;
  bool cross_check = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  Json params = Json::object();
  Json records = Json::array();
  Json summary = Json::object();
  Json timing = Json::object();
  int status = kOk;
};

long parse_long(const std::string& s, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

// "n" or "a..b"
std::pair<long, long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    long n = parse_long(s, "n");
    return {n, n};
  }
  long a = parse_long(s.substr(0, dots), "range start"), b = parse_long(s.substr(dots + 2), "range end");
  if (a > b) throw UsageError("empty range '" + s + "'");
  return {a, b};
}

FloatConfig float_config(const RunConfig& cfg) {
  FloatConfig f;
  f.mode = cfg.float_mode == "extended" ? FloatMode::Extended : FloatMode::Binary64;
  return f;
}

long effective_big_n(const RunConfig& cfg, int nu) { return cfg.big_n.value_or(nu == 6 ? 2000 : 300); }

Json echo_params(const RunConfig& cfg) {
  Json methods = Json::array();
  for (const auto& m : cfg.methods) methods.push_back(m);
  return Json{{"prec", cfg.prec},          {"bigM", cfg.big_m},
              {"bigN", cfg.big_n ? Json(*cfg.big_n) : Json(nullptr)},
              {"depthC", cfg.depth_c},     {"floatMode", cfg.float_mode},
              {"methods", methods},        {"crossCheck", cfg.cross_check}};
}

// ------------------------------------------------------------------ output

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string text_cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json doc = {{"command", r.command}, {"params", r.params}, {"records", r.records}, {"summary", r.summary},
                {"status", r.status},   {"timing", r.timing}};
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    // parameters are repeated on every row; timing is left out
    std::vector<std::string> cols;
    for (const auto& rec : r.records)
      for (const auto& [k, _] : rec.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    os << "command";
    for (const auto& [k, _] : r.params.items()) os << ",param." << k;
    for (const auto& c : cols) os << ',' << c;
    os << '\n';
    for (const auto& rec : r.records) {
      os << r.command;
      for (const auto& [_, v] : r.params.items()) os << ',' << csv_cell(v);
      for (const auto& c : cols) os << ',' << (rec.contains(c) ? csv_cell(rec.at(c)) : "");
      os << '\n';
    }
  } else {
    os << r.command;
    for (const auto& [k, v] : r.params.items()) os << ' ' << k << '=' << text_cell(v);
    os << '\n';
    for (const auto& rec : r.records) {
      bool first = true;
      for (const auto& [k, v] : rec.items()) {
        os << (first ? "  " : " ") << k << '=' << text_cell(v);
        first = false;
      }
      os << '\n';
    }
    for (const auto& [k, v] : r.summary.items()) os << k << ": " << text_cell(v) << '\n';
    os << "status: " << r.status << '\n';
    for (const auto& [k, v] : r.timing.items()) os << "time " << k << ": " << text_cell(v) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- commands

struct MethodSpec {
  std::string label;
  enum Kind { Euler, Theorem2, Rademacher } kind = Euler;
  long arg = 0;
};

MethodSpec parse_method(const std::string& s, const RunConfig& cfg) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::optional<long> arg;
  if (colon != std::string::npos) arg = parse_long(s.substr(colon + 1), "method argument");
  if (head == "euler" && !arg) return {s, MethodSpec::Euler, 0};
  if (head == "theorem2") {
    if (!arg || *arg < 2) throw UsageError("theorem2 needs a weight index nu >= 2, e.g. theorem2:6");
    return {s, MethodSpec::Theorem2, *arg};
  }
  if (head == "rademacher") {
    long c = arg.value_or(cfg.depth_c);
    if (c < 1) throw UsageError("rademacher depth must be positive");
    return {"rademacher:" + std::to_string(c), MethodSpec::Rademacher, c};
  }
  throw UsageError("unknown method '" + s + "' (expected euler, theorem2:nu or rademacher:C)");
}

// p(lo..hi) through the weighted recurrence, fed only by its own earlier values
std::vector<Json> theorem2_values(int nu, long lo, long hi, long& bad) {
  TraceSeries tr = trace_series(nu, hi);
  std::vector<Int> vals{Int(1)};
  std::vector<Json> out;
  for (long n = 1; n <= hi; ++n) {
    vals.emplace_back(0);
    Rat v = theorem2_rhs(nu, n, tr.values[static_cast<std::size_t>(n)], PartitionTable(vals));
    if (v.get_den() != 1) ++bad;
    vals.back() = v.get_num();
    if (n >= lo) out.push_back(Json{{"value", to_string(v)}, {"integral", v.get_den() == 1}});
  }
  if (lo == 0) out.insert(out.begin(), Json{{"value", "1"}, {"integral", true}});
  return out;
}

void cmd_partition(const std::string& range, const RunConfig& cfg, Report& rep) {
  auto [lo, hi] = parse_range(range);
  if (lo < 0) throw UsageError("n must be nonnegative");
  std::vector<MethodSpec> methods;
  for (const auto& m : cfg.methods) methods.push_back(parse_method(m, cfg));
  if (methods.empty()) methods.push_back(parse_method("euler", cfg));
  if (cfg.cross_check && methods.size() == 1 && methods[0].kind != MethodSpec::Euler)
    methods.insert(methods.begin(), parse_method("euler", cfg));

  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<Json>> cols;
  long non_integral = 0;
  for (const auto& m : methods) {
    std::vector<Json> col;
    switch (m.kind) {
      case MethodSpec::Euler: {
        PartitionTable t = partition_table(hi);
        for (long n = lo; n <= hi; ++n) col.push_back(Json{{"value", to_string(t(n))}});
        break;
      }
      case MethodSpec::Theorem2:
        col = theorem2_values(static_cast<int>(m.arg), lo, hi, non_integral);
        break;
      case MethodSpec::Rademacher:
        for (long n = lo; n <= hi; ++n) {
          if (n == 0) throw UsageError("the Rademacher series needs n >= 1");
          RademacherResult r = rademacher_pn(n, m.arg);
          col.push_back(Json{{"value", to_string(r.nearest)},
                             {"estimate", float_json(r.estimate)},
                             {"gap", float_json(r.gap)},
                             {"depthC", r.depth},
                             {"imagResidual", float_json(r.imag_residual)}});
        }
        break;
    }
    cols.push_back(std::move(col));
  }

  Json disagreements = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    long n = lo + static_cast<long>(i);
    Json by_method = Json::object();
    bool agree = true;
    for (std::size_t j = 0; j < methods.size(); ++j) {
      Json rec = {{"n", n}, {"method", methods[j].label}};
      for (const auto& [k, v] : cols[j][i].items()) rec[k] = v;
      by_method[methods[j].label] = cols[j][i].at("value");
      agree = agree && cols[j][i].at("value") == cols[0][i].at("value");
      rep.records.push_back(std::move(rec));
    }
    if (!agree) disagreements.push_back(Json{{"n", n}, {"values", by_method}});
  }
  if (cfg.cross_check) {
    rep.summary["crossCheck"] = disagreements.empty() ? "agree" : "disagree";
    rep.summary["disagreements"] = disagreements;
    if (!disagreements.empty()) rep.status = kVerifyFailed;
  }
  if (non_integral) {
    rep.summary["nonIntegralRecurrenceValues"] = non_integral;
    rep.status = kVerifyFailed;
  }
}

void cmd_pnu(int nu, const RunConfig& cfg, Report& rep) {
  if (nu < 0) throw UsageError("nu must be nonnegative");
  IntQSeries p = p_nu(nu, cfg.prec);
  for (long n = 0; n < cfg.prec; ++n)
    rep.records.push_back(Json{{"n", n}, {"coeff", to_string(p.coeff(n))}, {"method", "rankin-cohen"}});
  Json dec = {{"weight", 2 * nu}};
  if (nu < 2) {
    dec["isZero"] = p.is_zero();
    dec["isOne"] = equal_through_precision(p, IntQSeries::one(cfg.prec));
    rep.summary["decomposition"] = dec;
    return;
  }
  MFSpace space = space_basis(2 * nu, cfg.prec);
  Rat eis = p.coeff(0);
  dec["eisensteinCoeff"] = to_string(eis);
  dec["eisensteinCoeffExpected"] = to_string(Rat(binomial(2 * nu - 2, nu - 2)));
  dec["dimCusp"] = space.dim_cusp;
  IntQSeries cusp = p - eis * eisenstein(2 * nu, cfg.prec);
  Json coords = Json::array();
  if (space.dim_cusp == 0) {
    if (!cusp.is_zero()) throw NotInSpaceError("P_nu minus its Eisenstein part is not zero");
  } else {
    for (const auto& c : solve_in_span(cusp, space.cusp_basis)) coords.push_back(to_string(c));
  }
  dec["cuspCoords"] = coords;
  if (space.dim_cusp == 1) {
    Rat beta = corollary_beta(nu);
    dec["beta"] = to_string(beta);
    if (cfg.cross_check && coords[0] != Json(to_string(beta))) rep.status = kVerifyFailed;
  }
  if (space.dim_cusp == 1 || space.dim_cusp == 2) {
    Json g = Json::array();
    for (const auto& x : df_over_norm(nu)) g.push_back(Json{{"exact", to_json(x)}, {"value", float_json(x.to_double())}});
    dec["dfOverNorm"] = g;
  }
  if (Json(to_string(eis)) != dec["eisensteinCoeffExpected"]) rep.status = kVerifyFailed;
  rep.summary["decomposition"] = dec;
}

void cmd_gpoly(int nu, long n, std::optional<long> k, Report& rep) {
  if (nu < 0 || n < 0) throw UsageError("nu and n must be nonnegative");
  auto emit = [&](long kk) {
    rep.records.push_back(Json{{"nu", nu}, {"n", n}, {"k", kk}, {"g", to_string(g_poly(nu, n, kk))}});
  };
  if (k) {
    emit(*k);
    return;
  }
  emit(0);
  for_each_pentagonal(n, [&](long kk, long) { emit(kk); });
}

void cmd_trace(int nu, const RunConfig& cfg, Report& rep) {
  if (nu < 2) throw UsageError("traces need nu >= 2");
  long N = cfg.prec - 1;
  TraceSeries t = trace_series(nu, N);
  std::optional<TraceSeries> alt;
  int dim = dim_cusp_forms(2 * nu);
  if (cfg.cross_check && dim >= 1 && dim <= 2) alt = trace_from_eigenforms(nu, N);
  long mismatches = 0;
  for (long n = 1; n <= N; ++n) {
    const Rat& v = t.values[static_cast<std::size_t>(n)];
    rep.records.push_back(Json{{"n", n}, {"trace", to_string(v)}, {"method", "decomposition"}});
    if (alt && alt->values[static_cast<std::size_t>(n)] != v) ++mismatches;
  }
  rep.summary["weight"] = 2 * nu;
  rep.summary["dimCusp"] = dim;
  if (cfg.cross_check) {
    rep.summary["crossCheck"] = alt ? (mismatches ? "disagree" : "agree") : "skipped: no eigenform basis";
    if (mismatches) rep.status = kVerifyFailed;
  }
}

void cmd_eigenforms(int weight, const RunConfig& cfg, Report& rep) {
  if (weight < 0 || weight % 2) throw UsageError("weight must be even and nonnegative");
  auto forms = eigenforms(weight, cfg.prec);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (long n = 1; n < forms[i].prec(); ++n) {
      const QuadNum& a = forms[i].coeffs[static_cast<std::size_t>(n)];
      rep.records.push_back(Json{{"form", i}, {"n", n}, {"a", to_string(a.a())}, {"b", to_string(a.b())},
                                 {"d", to_string(forms[i].field_disc)}});
    }
  rep.summary["weight"] = weight;
  rep.summary["count"] = forms.size();
}

void cmd_dirichlet(int nu, const RunConfig& cfg, Report& rep) {
  if (nu < 2) throw UsageError("nu must be at least 2");
  long N = effective_big_n(cfg, nu);
  if (cfg.big_m < 0 || N < 2) throw UsageError("need M >= 0 and N >= 2");
  NormEstimate est = petersson_norm_estimate(nu, cfg.big_m, N, float_config(cfg));
  for (std::size_t i = 0; i < est.norms.size(); ++i)
    rep.records.push_back(Json{{"form", i},
                               {"method", "truncated double sum"},
                               {"M", est.M},
                               {"N", est.N},
                               {"floatMode", cfg.float_mode},
                               {"dfHat", float_json(est.df_hat[i])},
                               {"dfOverNorm", to_json(est.df_over_norm[i])},
                               {"dfOverNormValue", float_json(est.df_over_norm[i].to_double())},
                               {"normEstimate", float_json(est.norms[i])}});
  rep.summary["weight"] = 2 * nu;
  rep.summary["coefficientsUsed"] = dirichlet_coeffs_needed(N);
  if (cfg.cross_check && !est.norms.empty()) {
    // the other float mode must agree to nine digits
    FloatConfig other = float_config(cfg);
    other.mode = other.mode == FloatMode::Binary64 ? FloatMode::Extended : FloatMode::Binary64;
    NormEstimate b = petersson_norm_estimate(nu, cfg.big_m, N, other);
    bool ok = true;
    for (std::size_t i = 0; i < b.df_hat.size(); ++i)
      ok = ok && std::fabs(b.df_hat[i] - est.df_hat[i]) <= 1e-9 * std::fabs(est.df_hat[i]);
    rep.summary["crossCheck"] = ok ? "agree" : "disagree";
    if (!ok) rep.status = kVerifyFailed;
  }
}

void cmd_rademacher(const std::string& range, bool all_depths, const RunConfig& cfg, Report& rep) {
  auto [lo, hi] = parse_range(range);
  if (lo < 1) throw UsageError("the Rademacher series needs n >= 1");
  if (cfg.depth_c < 1) throw UsageError("depth C must be positive");
  std::optional<PartitionTable> t;
  if (cfg.cross_check) t = partition_table(hi);
  long wrong = 0;
  for (long n = lo; n <= hi; ++n) {
    std::vector<RademacherResult> rows;
    if (all_depths) rows = rademacher_convergence(n, cfg.depth_c);
    else rows.push_back(rademacher_pn(n, cfg.depth_c));
    for (const auto& r : rows) {
      Json rec = to_json(r);
      rec["method"] = "rademacher";
      rep.records.push_back(std::move(rec));
    }
    if (t && rows.back().nearest != (*t)(n)) ++wrong;
  }
  if (cfg.cross_check) {
    rep.summary["crossCheck"] = wrong ? "disagree" : "agree";
    rep.summary["mismatches"] = wrong;
    if (wrong) rep.status = kVerifyFailed;
  }
}

void cmd_verify(const std::string& suite, bool progress, Report& rep) {
  Json checks = Json::array();
  long failed = 0;
  auto results = run_verify(suite, [&](const CheckResult& r) {
    if (progress) std::cerr << (r.passed ? "pass " : "FAIL ") << r.suite << " / " << r.name << '\n';
  });
  for (const auto& r : results) {
    rep.records.push_back(Json{{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    checks.push_back(Json{{"suite", r.suite}, {"check", r.name}, {"seconds", float_json(r.seconds)}});
    if (!r.passed) ++failed;
  }
  rep.summary["checks"] = results.size();
  rep.summary["failed"] = failed;
  rep.timing["checks"] = checks;
  if (failed) rep.status = kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition recurrences, Hecke traces and Rademacher sums"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file with option defaults");

  RunConfig cfg;
  long big_n = 0;
  app.add_option("--prec", cfg.prec, "integer q-coefficients to keep")->envname("PENTAREC_PREC")->check(CLI::Range(2L, 1000000L));
  app.add_option("--big-m", cfg.big_m, "outer truncation M")->envname("PENTAREC_BIG_M")->check(CLI::NonNegativeNumber);
  auto* big_n_opt = app.add_option("--big-n", big_n, "inner truncation N (default 2000 for nu = 6, 300 otherwise)")
                        ->envname("PENTAREC_BIG_N")
                        ->check(CLI::Range(2L, 100000L));
  app.add_option("--depth-c", cfg.depth_c, "Rademacher depth C")->envname("PENTAREC_DEPTH_C")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json, csv or text")
      ->envname("PENTAREC_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "write output here instead of stdout")->envname("PENTAREC_OUT");
  app.add_option("--float-mode", cfg.float_mode, "binary64 or extended")
      ->envname("PENTAREC_FLOAT_MODE")
      ->check(CLI::IsMember({"binary64", "extended"}));
  app.add_option("--method", cfg.methods, "euler, theorem2:nu or rademacher:C (repeatable)")
      ->envname("PENTAREC_METHOD");
  app.add_flag("--cross-check", cfg.cross_check, "compare against an independent path")
      ->envname("PENTAREC_CROSS_CHECK");

  std::string range, suite = "all";
  int nu = 0, weight = 0;
  long n = 0, k = 0;
  bool all_depths = false, progress = false;

  auto* partition = app.add_subcommand("partition", "p(n) for n or a..b")->fallthrough();
  partition->add_option("n", range, "n or a..b")->required();
  auto* pnu = app.add_subcommand("pnu", "P_nu and its decomposition")->fallthrough();
  pnu->add_option("nu", nu)->required();
  auto* gpoly = app.add_subcommand("gpoly", "g_nu(n, k); all pentagonal k when k is omitted")->fallthrough();
  gpoly->add_option("nu", nu)->required();
  gpoly->add_option("n", n)->required();
  auto* k_opt = gpoly->add_option("k", k);
  auto* trace = app.add_subcommand("trace", "Tr_2nu(n) for n < prec")->fallthrough();
  trace->add_option("nu", nu)->required();
  auto* eig = app.add_subcommand("eigenforms", "normalized Hecke eigenforms")->fallthrough();
  eig->add_option("weight", weight)->required();
  auto* dir = app.add_subcommand("dirichlet", "truncated Dirichlet sums and norm estimates")->fallthrough();
  dir->add_option("nu", nu)->required();
  auto* rad = app.add_subcommand("rademacher", "Rademacher partial sums for n or a..b")->fallthrough();
  rad->add_option("n", range, "n or a..b")->required();
  rad->add_flag("--all-depths", all_depths, "one record per depth 1..C");
  auto* ver = app.add_subcommand("verify", "run invariant suites")->fallthrough();
  ver->add_option("suite", suite, "suite name or all");
  ver->add_flag("--progress", progress, "report each check on stderr");
  ver->footer([] {
    std::string s = "Suites: all";
    for (const auto& name : verify_suite_names()) s += ", " + name;
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!big_n_opt->empty()) cfg.big_n = big_n;

  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  try {
    rep.command = app.get_subcommands().front()->get_name();
    rep.params = echo_params(cfg);
    if (*partition) cmd_partition(range, cfg, rep);
    else if (*pnu) cmd_pnu(nu, cfg, rep);
    else if (*gpoly) cmd_gpoly(nu, n, k_opt->count() ? std::optional<long>(k) : std::nullopt, rep);
    else if (*trace) cmd_trace(nu, cfg, rep);
    else if (*eig) cmd_eigenforms(weight, cfg, rep);
    else if (*dir) cmd_dirichlet(nu, cfg, rep);
    else if (*rad) cmd_rademacher(range, all_depths, cfg, rep);
    else if (*ver) cmd_verify(suite, progress, rep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotInSpaceError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    // domain, precision and unsupported-field errors all come from the inputs
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  rep.timing["seconds"] = float_json(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

  std::string text = render(rep, cfg.format);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << '\n';
      return kUsage;
    }
    f << text;
  }
  return rep.status;
}
