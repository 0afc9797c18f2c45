// leroy-kit: evaluate, tabulate and verify from the command line.
//
//   leroy-kit eval leroy --mu 2 --zeta 1
//   leroy-kit tabulate leroy --mu 1 --from 0 --to 1 --steps 4 --format csv
//   leroy-kit verify [identity-id] [--profile strict]
//
// Exit codes: 0 ok, 1 unexpected identity Fail, 2 domain or usage error,
// 3 non-convergence.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leroy_kit/leroy_kit.hpp"
#include "leroy_kit/report_json.hpp"

namespace lk = leroy_kit;

namespace {

enum ExitCode { kOk = 0, kUnexpectedFail = 1, kDomain = 2, kNoConvergence = 3 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Params {
  std::optional<double> zeta, mu, alpha, beta, gamma, delta, s;
  std::optional<int> m, n;
  std::optional<double> tol;
  std::string method = "auto";
  std::string format = "plain";
  int precision = 15;
  std::string out;
};

std::string fmt(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

double need(const std::optional<double>& v, const char* flag, const std::string& fn) {
  if (!v) throw usage_error(fn + ": missing --" + flag);
  return *v;
}

int need(const std::optional<int>& v, const char* flag, const std::string& fn) {
  if (!v) throw usage_error(fn + ": missing --" + flag);
  return *v;
}

lk::EvalMethod parse_method(const std::string& m) {
  if (m == "auto") return lk::EvalMethod::automatic;
  if (m == "series") return lk::EvalMethod::series;
  if (m == "integral") return lk::EvalMethod::integral;
  throw usage_error("unknown --method '" + m + "' (auto, series, integral)");
}

// Series tolerance: --tol, else LEROY_KIT_TOL, else the library default.
double series_tol(const Params& p) {
  if (p.tol) return *p.tol;
  if (const char* env = std::getenv("LEROY_KIT_TOL")) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || errno != 0 || !(v > 0.0) || !std::isfinite(v)) {
      throw usage_error(std::string("LEROY_KIT_TOL is not a positive number: '") + env + "'");
    }
    return v;
  }
  return lk::kDefaultSeriesTol;
}

lk::QuadratureConfig quad_config(const Params& p) {
  lk::QuadratureConfig cfg;
  if (p.tol || std::getenv("LEROY_KIT_TOL")) cfg.rel_tol = std::max(series_tol(p), 1e-14);
  return cfg;
}

using Evaluator = std::function<lk::EvalResult(double zeta)>;

// has_zeta is false for functions of alpha alone.
struct Bound {
  Evaluator eval;
  bool has_zeta = true;
};

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {
      "leroy",  "leroy-gen", "leroy4", "prabhakar", "lerch",        "lerch-gen",
      "polylog", "polylog-half", "ti",  "chi",       "chi-c",        "chi-s",
      "hurwitz-zeta", "polygamma", "polygamma2", "euler-d1", "euler-d2", "euler-d2-gen"};
  return names;
}

Bound bind(const std::string& fn, const Params& p) {
  const double tol = series_tol(p);
  if (!(tol > 0.0) || !std::isfinite(tol)) throw usage_error("--tol must be positive");
  const lk::QuadratureConfig cfg = quad_config(p);
  const std::optional<int> n = p.n;
  if (n && *n < 0) throw usage_error("--n must be nonnegative");

  if (fn == "leroy") {
    const double mu = need(p.mu, "mu", fn);
    if (n) return {[=](double z) { return lk::leroy_deriv(z, mu, *n, tol); }};
    return {[=](double z) { return lk::leroy(z, mu, tol); }};
  }
  if (fn == "leroy-gen") {
    const lk::LeRoyParams lp{need(p.alpha, "alpha", fn), need(p.beta, "beta", fn),
                             need(p.mu, "mu", fn)};
    return {[=](double z) { return lk::leroy_gen(z, lp, tol); }};
  }
  if (fn == "leroy4") {
    const double a = need(p.alpha, "alpha", fn), b = need(p.beta, "beta", fn);
    const double g = need(p.gamma, "gamma", fn), d = need(p.delta, "delta", fn);
    return {[=](double z) { return lk::leroy4(z, a, b, g, d, tol); }};
  }
  if (fn == "prabhakar") {
    const double a = need(p.alpha, "alpha", fn), b = need(p.beta, "beta", fn);
    const double g = need(p.gamma, "gamma", fn);
    if (n) return {[=](double z) { return lk::prabhakar_deriv(z, a, b, g, *n, tol); }};
    return {[=](double z) { return lk::prabhakar(z, a, b, g, tol); }};
  }
  if (fn == "lerch") {
    const double a = need(p.alpha, "alpha", fn), s = need(p.s, "s", fn);
    const lk::EvalMethod m = parse_method(p.method);
    if (n) return {[=](double z) { return lk::lerch_deriv(z, a, s, *n, tol); }};
    return {[=](double z) { return lk::lerch(z, {a, s}, m, tol, cfg); }};
  }
  if (fn == "lerch-gen") {
    const double a = need(p.alpha, "alpha", fn), b = need(p.beta, "beta", fn);
    const double s = need(p.s, "s", fn);
    if (n) return {[=](double z) { return lk::lerch_gen_deriv(z, a, b, s, *n, tol); }};
    return {[=](double z) { return lk::lerch_gen(z, a, b, s, tol); }};
  }
  if (fn == "polylog") {
    const double s = need(p.s, "s", fn);
    return {[=](double z) { return lk::polylog(s, z, tol); }};
  }
  if (fn == "polylog-half") {
    const double s = need(p.s, "s", fn);
    return {[=](double z) { return lk::polylog_half(s, z, tol); }};
  }
  if (fn == "ti") {
    const double s = need(p.s, "s", fn);
    return {[=](double z) { return lk::ti_gen(z, s, tol); }};
  }
  if (fn == "chi") {
    const double s = need(p.s, "s", fn);
    const lk::EvalMethod m = parse_method(p.method);
    return {[=](double z) { return lk::legendre_chi(s, z, m, tol, cfg); }};
  }
  if (fn == "chi-c") {
    const double s = need(p.s, "s", fn);
    return {[=](double z) { return lk::chi_c(s, z, tol); }};
  }
  if (fn == "chi-s") {
    const double s = need(p.s, "s", fn);
    return {[=](double z) { return lk::chi_s_part(s, z, tol); }};
  }
  if (fn == "hurwitz-zeta") {
    const double s = need(p.s, "s", fn), a = need(p.alpha, "alpha", fn);
    return {[=](double) { return lk::hurwitz_zeta(s, a); }, false};
  }
  if (fn == "polygamma") {
    const int m = need(p.m, "m", fn);
    const double a = need(p.alpha, "alpha", fn);
    return {[=](double) { return lk::polygamma(m, a); }, false};
  }
  if (fn == "polygamma2") {
    const int m = need(p.m, "m", fn);
    const double a = need(p.alpha, "alpha", fn);
    return {[=](double z) { return lk::polygamma2(m, a, z, tol); }};
  }
  if (fn == "euler-d1") return {[=](double x) { return lk::euler_d1_bar(x, cfg); }};
  if (fn == "euler-d2") return {[=](double x) { return lk::euler_d2_bar(x, cfg); }};
  if (fn == "euler-d2-gen") {
    const double a = need(p.alpha, "alpha", fn), b = need(p.beta, "beta", fn);
    return {[=](double x) { return lk::euler_d2_bar_gen(x, a, b, cfg); }};
  }
  std::string list;
  for (const auto& nm : function_names()) list += (list.empty() ? "" : ", ") + nm;
  throw usage_error("unknown function '" + fn + "' (one of: " + list + ")");
}

// Writes to --out if given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw usage_error("cannot open --out file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void check_output(const Params& p) {
  if (p.format != "plain" && p.format != "csv" && p.format != "json") {
    throw usage_error("unknown --format '" + p.format + "' (plain, csv, json)");
  }
}

int cmd_eval(const std::string& fn, const Params& p) {
  check_output(p);
  const Bound b = bind(fn, p);
  if (b.has_zeta && !p.zeta) throw usage_error(fn + ": missing --zeta");
  const double z = p.zeta.value_or(0.0);
  const lk::EvalResult r = b.eval(z);
  Sink sink(p.out);
  std::ostream& os = sink.os();
  const int pr = p.precision;
  if (p.format == "json") {
    lk::ordered_json j;
    j["function"] = fn;
    if (b.has_zeta) j["zeta"] = lk::json_number(z);
    j["value"] = lk::json_number(r.value);
    j["abs_err"] = lk::json_number(r.abs_err);
    j["method"] = std::string(lk::to_string(r.method));
    j["terms_or_level"] = r.terms_or_level;
    os << j.dump(2) << "\n";
  } else if (p.format == "csv") {
    os << "value,abs_err,method,terms_or_level\n";
    os << fmt(r.value, pr) << "," << fmt(r.abs_err, pr) << "," << lk::to_string(r.method) << ","
       << r.terms_or_level << "\n";
  } else {
    os << "value    " << fmt(r.value, pr) << "\n";
    os << "abs_err  " << fmt(r.abs_err, pr) << "\n";
    os << "method   " << lk::to_string(r.method) << "\n";
    os << (r.method == lk::Method::series ? "terms    " : "level    ") << r.terms_or_level
       << "\n";
  }
  return kOk;
}

struct Row {
  double zeta;
  std::optional<lk::EvalResult> result;
  std::string error;
};

int cmd_tabulate(const std::string& fn, const Params& p, double from, double to, int steps) {
  check_output(p);
  if (steps < 1) throw usage_error("--steps must be at least 1");
  if (!(from < to) || !std::isfinite(from) || !std::isfinite(to)) {
    throw usage_error("need finite --from < --to");
  }
  const Bound b = bind(fn, p);
  if (!b.has_zeta) throw usage_error(fn + " has no zeta argument to tabulate over");

  std::vector<Row> rows;
  int ok = 0;
  for (int i = 0; i <= steps; ++i) {
    const double z = i == steps ? to : from + (to - from) * i / steps;
    Row row{z, std::nullopt, {}};
    try {
      row.result = b.eval(z);
      ++ok;
    } catch (const lk::error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  Sink sink(p.out);
  std::ostream& os = sink.os();
  const int pr = p.precision;
  if (p.format == "json") {
    lk::ordered_json arr = lk::ordered_json::array();
    for (const Row& r : rows) {
      lk::ordered_json j;
      j["zeta"] = lk::json_number(r.zeta);
      if (r.result) {
        j["value"] = lk::json_number(r.result->value);
        j["abs_err"] = lk::json_number(r.result->abs_err);
      } else {
        j["value"] = nullptr;
        j["abs_err"] = nullptr;
        j["error"] = r.error;
      }
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  } else if (p.format == "csv") {
    os << "zeta,value,abs_err\n";
    for (const Row& r : rows) {
      os << fmt(r.zeta, pr) << ",";
      if (r.result) {
        os << fmt(r.result->value, pr) << "," << fmt(r.result->abs_err, pr) << "\n";
      } else {
        os << "ERROR,ERROR\n";
      }
    }
  } else {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-24s %-24s %s\n", "zeta", "value", "abs_err");
    os << buf;
    for (const Row& r : rows) {
      if (r.result) {
        std::snprintf(buf, sizeof buf, "%-24s %-24s %s\n", fmt(r.zeta, pr).c_str(),
                      fmt(r.result->value, pr).c_str(), fmt(r.result->abs_err, pr).c_str());
        os << buf;
      } else {
        std::snprintf(buf, sizeof buf, "%-24s ", fmt(r.zeta, pr).c_str());
        os << buf << "ERROR: " << r.error << "\n";
      }
    }
  }
  for (const Row& r : rows) {
    if (!r.result) std::cerr << "leroy-kit: zeta = " << fmt(r.zeta, pr) << ": " << r.error << "\n";
  }
  if (ok == 0) return kDomain;
  return kOk;
}

int cmd_verify(const std::optional<std::string>& id, const std::string& profile_name,
               const Params& p) {
  check_output(p);
  lk::TolProfile profile;
  if (profile_name == "default") {
    profile = lk::TolProfile::default_profile;
  } else if (profile_name == "strict") {
    profile = lk::TolProfile::strict;
  } else {
    throw usage_error("unknown --profile '" + profile_name + "' (default, strict)");
  }
  std::vector<lk::IdentityReport> reports;
  if (id) {
    reports.push_back(lk::run_identity(*id, {}, profile));
  } else {
    reports = lk::run_all(profile);
  }

  Sink sink(p.out);
  std::ostream& os = sink.os();
  const int pr = p.precision;
  if (p.format == "json") {
    os << lk::to_json(reports).dump(2) << "\n";
  } else if (p.format == "csv") {
    os << "identity_id,status,max_abs_err,tolerance,printed_form\n";
    for (const auto& r : reports) {
      os << r.identity_id << "," << lk::to_string(r.status) << "," << fmt(r.max_abs_err, pr)
         << "," << fmt(r.tolerance, pr) << "," << (r.printed_form ? "true" : "false") << "\n";
    }
  } else {
    char buf[256];
    for (const auto& r : reports) {
      std::snprintf(buf, sizeof buf, "%-36s %-13s err %-12s tol %-8s%s\n", r.identity_id.c_str(),
                    lk::to_string(r.status).c_str(), fmt(r.max_abs_err, 4).c_str(),
                    fmt(r.tolerance, 2).c_str(), r.printed_form ? "  (printed form)" : "");
      os << buf;
    }
  }
  for (const auto& r : reports) {
    if (lk::unexpected_failure(r)) return kUnexpectedFail;
  }
  return kOk;
}

void add_output_flags(CLI::App* sub, Params& p) {
  sub->add_option("--format", p.format, "plain, csv or json");
  sub->add_option("--precision", p.precision, "significant digits")
      ->check(CLI::Range(6, 17));
  sub->add_option("--out", p.out, "output file (default stdout)");
}

void add_param_flags(CLI::App* sub, Params& p) {
  sub->add_option("--zeta,--x", p.zeta, "argument");
  sub->add_option("--mu", p.mu);
  sub->add_option("--alpha", p.alpha);
  sub->add_option("--beta", p.beta);
  sub->add_option("--gamma", p.gamma);
  sub->add_option("--delta", p.delta);
  sub->add_option("--s", p.s);
  sub->add_option("--m", p.m, "polygamma order");
  sub->add_option("--n", p.n, "derivative order");
  sub->add_option("--tol", p.tol, "series tolerance (env LEROY_KIT_TOL)");
  sub->add_option("--method", p.method, "auto, series or integral");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Le Roy type special functions: evaluate, tabulate, verify"};
  app.require_subcommand(1);
  app.allow_windows_style_options(false);

  Params p;
  std::string fn;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("function", fn, "function name")->required();
  add_param_flags(eval, p);
  add_output_flags(eval, p);

  double from = 0.0, to = 0.0;
  int steps = 0;
  CLI::App* tab = app.add_subcommand("tabulate", "tabulate a function over a zeta range");
  tab->add_option("function", fn, "function name")->required();
  add_param_flags(tab, p);
  tab->add_option("--from", from)->required();
  tab->add_option("--to", to)->required();
  tab->add_option("--steps", steps)->required();
  add_output_flags(tab, p);

  std::optional<std::string> id;
  std::string profile = "default";
  CLI::App* verify = app.add_subcommand("verify", "run the identity harness");
  verify->add_option("identity", id, "identity id (default: all)");
  verify->add_option("--profile", profile, "default or strict");
  p.format = "plain";
  add_output_flags(verify, p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomain;
  }

  // verify prints JSON unless asked otherwise.
  if (verify->parsed() && verify->count("--format") == 0) p.format = "json";

  try {
    if (eval->parsed()) return cmd_eval(fn, p);
    if (tab->parsed()) return cmd_tabulate(fn, p, from, to, steps);
    return cmd_verify(id, profile, p);
  } catch (const usage_error& e) {
    std::cerr << "leroy-kit: " << e.what() << "\n";
    return kDomain;
  } catch (const lk::convergence_error& e) {
    std::cerr << "leroy-kit: no convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const lk::error& e) {
    std::cerr << "leroy-kit: " << e.what() << "\n";
    return kDomain;
  }
}
