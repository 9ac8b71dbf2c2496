#ifndef HYPERBESSEL_TOOLS_CLI_HPP
#define HYPERBESSEL_TOOLS_CLI_HPP

// Command-line front end.  run_cli() is the whole program; main() only
// forwards argv so the tests can drive it in-process.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperbessel/hyperbessel.hpp"

namespace hyperbessel::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string subcommand;
  bool n3 = false, n4 = false, n5 = false, humbert = false;
  std::string a, b, m, nu;
  std::string x, x_range;
  int precision = 0;  // 0: $HYPERBESSEL_DIGITS or automatic
  int target = 20;
  std::string method;
  std::string M = "optimal";
  size_t coeff_count = kDefaultCoeffCount;
  size_t coeff_M = kDefaultCoeffCount;
  std::string scale = "none";
  std::string format = "text";
  std::string output;
  std::string j0 = "auto";
  std::string table = "all";
  std::string fixtures;
};

/// Parameters of the function being evaluated.  In Humbert mode the value
/// is (x/3)^(m+nu) F(x) with a = m+1, b = nu+1.
struct FunctionSpec {
  int n = 3;
  std::vector<Rational> b_list;
  bool humbert = false;
  Rational m, nu;

  ExpansionParams params(int digits) const { return derive_params(n, b_list, digits); }
};

namespace detail {

inline Rational parse_number(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

inline std::vector<Rational> parse_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number(item, what));
  return out;
}

inline FunctionSpec resolve_function(const CliConfig& c, bool allow_humbert = true) {
  const int modes = c.n3 + c.n4 + c.n5 + c.humbert;
  if (modes != 1) throw UsageError("choose exactly one of --n3, --n4, --n5, --humbert");
  FunctionSpec f;
  if (c.humbert) {
    if (!allow_humbert) throw UsageError("--humbert is not available for this command");
    if (!c.a.empty() || !c.b.empty()) throw UsageError("--humbert takes -m and -n, not -a/-b");
    if (c.m.empty() || c.nu.empty()) throw UsageError("--humbert needs -m and -n");
    f.humbert = true;
    f.m = parse_number(c.m, "m");
    f.nu = parse_number(c.nu, "nu");
    f.b_list = {f.m + 1, f.nu + 1};
    return f;
  }
  if (!c.m.empty() || !c.nu.empty()) throw UsageError("-m and -n are only meaningful with --humbert");
  if (c.b.empty()) throw UsageError("missing -b");
  f.n = c.n3 ? 3 : c.n4 ? 4 : 5;
  if (!c.a.empty()) {
    if (f.n != 3) throw UsageError("-a is only used with --n3; pass all parameters to -b");
    f.b_list = {parse_number(c.a, "a")};
    auto rest = parse_list(c.b, "b");
    f.b_list.insert(f.b_list.end(), rest.begin(), rest.end());
  } else {
    f.b_list = parse_list(c.b, "b");
  }
  if (f.b_list.size() != static_cast<size_t>(f.n - 1)) {
    throw UsageError("order " + std::to_string(f.n) + " needs " + std::to_string(f.n - 1) + " parameters, got " +
                     std::to_string(f.b_list.size()));
  }
  return f;
}

/// --x or --x-range start:stop:step (inclusive, exact rational steps).
inline std::vector<Rational> resolve_xs(const CliConfig& c) {
  if (c.x.empty() == c.x_range.empty()) throw UsageError("give exactly one of --x and --x-range");
  std::vector<Rational> xs;
  if (!c.x.empty()) {
    xs.push_back(parse_number(c.x, "x"));
  } else {
    std::vector<std::string> parts;
    std::stringstream in(c.x_range);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--x-range expects start:stop:step");
    Rational start = parse_number(parts[0], "range start");
    Rational stop = parse_number(parts[1], "range stop");
    Rational step = parse_number(parts[2], "range step");
    if (step <= 0) throw UsageError("--x-range step must be positive");
    for (Rational v = start; v <= stop; v += step) xs.push_back(v);
    if (xs.empty()) throw UsageError("--x-range is empty");
  }
  for (const auto& v : xs) {
    if (v < 0) throw UsageError("x must be non-negative, got " + to_string(v));
  }
  return xs;
}

/// Explicit --precision, then $HYPERBESSEL_DIGITS, then 0 (automatic).
inline int resolve_precision(const CliConfig& c) {
  if (c.precision > 0) return c.precision;
  if (const char* env = std::getenv("HYPERBESSEL_DIGITS"); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("HYPERBESSEL_DIGITS is not an integer: ") + env);
    }
  }
  return 0;
}

/// Exact decimal when the denominator is 2^i 5^j, else "p/q".
inline std::string format_rational(const Rational& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_string(q);
  const int places = std::max(twos, fives);
  if (places == 0) return q.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class scaled = q.get_num() * scale / q.get_den();
  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= static_cast<size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (negative ? "-" : "") + digits;
}

struct EvalRow {
  std::string x;
  std::string method;
  std::string value;
  int terms = 0;
  std::string error;
  std::string digits_lost;
};

inline std::string fmt_double(double v, int prec = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

inline std::optional<size_t> parse_fixed_m(const std::string& text) {
  if (text == "optimal") return std::nullopt;
  try {
    size_t pos = 0;
    long v = std::stol(text, &pos);
    if (pos != text.size() || v < 1) throw std::invalid_argument(text);
    return static_cast<size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("--M expects 'optimal' or a positive integer, got '" + text + "'");
  }
}

inline std::string params_label(const FunctionSpec& f) {
  if (f.humbert) return "humbert m=" + to_string(f.m) + " nu=" + to_string(f.nu);
  std::string s = "n=" + std::to_string(f.n) + " b=";
  for (size_t j = 0; j < f.b_list.size(); ++j) s += (j ? "," : "") + to_string(f.b_list[j]);
  return s;
}

inline json params_json(const FunctionSpec& f) {
  json j;
  if (f.humbert) {
    j["mode"] = "humbert";
    j["m"] = to_string(f.m);
    j["nu"] = to_string(f.nu);
  }
  j["n"] = f.n;
  j["b"] = json::array();
  for (const auto& b : f.b_list) j["b"].push_back(to_string(b));
  return j;
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
      target_ = &file_;
    }
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

inline int cmd_eval(const CliConfig& c, std::ostream& out) {
  const FunctionSpec f = resolve_function(c);
  const auto xs = resolve_xs(c);
  const int fixed_digits = resolve_precision(c);
  const auto fixed_m = parse_fixed_m(c.M);
  const std::string method = c.method.empty() ? "series" : c.method;
  const bool want_series = method == "series" || method == "both";
  const bool want_asym = method != "series";
  if (c.target < 1) throw UsageError("--target must be positive");

  std::vector<EvalRow> rows;
  json differences = json::array();
  for (const auto& xq : xs) {
    const double xd = xq.get_d();
    const std::string xs_text = format_rational(xq);
    std::optional<BigReal> series_value, asym_value;

    if (want_series) {
      const int D = fixed_digits > 0 ? fixed_digits : auto_series_digits(xd, c.target);
      const BigReal x(xq, D);
      EvalResult r = f.humbert ? humbert_J(f.m, f.nu, x, c.target, D) : series_eval(f.params(D), x, c.target, D);
      if (c.scale == "exp-half") {
        BigReal s = exp(-x / 2);
        r.value *= s;
        r.error_estimate *= s;
      }
      series_value = r.value;
      rows.push_back({xs_text, "series", r.value.to_string(c.target), r.terms_used, r.error_estimate.to_string(3),
                      fmt_double(r.digits_lost())});
    }
    if (want_asym) {
      const int D = fixed_digits > 0 ? fixed_digits : std::max(50, c.target + 20);
      const BigReal x(xq, D);
      const ExpansionParams p = f.params(D);
      TruncationPolicy policy = OptimalPolicy{c.coeff_count};
      if (fixed_m) policy = FixedPolicy{*fixed_m};
      CompoundResult cr = compound_eval_detailed(p, x, policy);
      EvalResult r = method == "asymptotic" ? cr.dominant : cr.total;
      r.method = method == "asymptotic" ? EvalMethod::Asymptotic : EvalMethod::Compound;
      if (f.humbert) {
        BigReal s = pow(x / 3, BigReal(f.m + f.nu, D));
        r.value *= s;
        r.error_estimate *= s;
      }
      if (c.scale == "exp-half") {
        BigReal s = exp(-x / 2);
        r.value *= s;
        r.error_estimate *= s;
      }
      asym_value = r.value;
      rows.push_back({xs_text, std::string(method_name(r.method)), r.value.to_string(c.target), r.terms_used,
                      r.error_estimate.to_string(3), ""});
    }
    if (series_value && asym_value) {
      BigReal diff = abs(*series_value - *asym_value);
      differences.push_back({{"x", xs_text}, {"abs_diff", diff.to_string(3)}});
    }
  }

  if (c.format == "csv") {
    out << "x,method,value,terms_used,error_estimate,digits_lost\n";
    for (const auto& r : rows) {
      out << r.x << ',' << r.method << ',' << r.value << ',' << r.terms << ',' << r.error << ',' << r.digits_lost
          << '\n';
    }
  } else if (c.format == "json") {
    json j;
    j["command"] = "eval";
    j["function"] = params_json(f);
    j["scale"] = c.scale;
    j["target_digits"] = c.target;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      json row{{"x", r.x}, {"method", r.method}, {"value", r.value}, {"terms_used", r.terms},
               {"error_estimate", r.error}};
      if (!r.digits_lost.empty()) row["digits_lost"] = r.digits_lost;
      j["rows"].push_back(std::move(row));
    }
    if (!differences.empty()) j["differences"] = differences;
    out << j.dump(2) << '\n';
  } else {
    out << params_label(f) << (c.scale == "exp-half" ? "  (scaled by e^(-x/2))" : "") << '\n';
    size_t d = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "x=" << r.x << "  " << r.method << "  " << r.value << "  terms=" << r.terms << "  err~" << r.error;
      if (!r.digits_lost.empty()) out << "  digits_lost=" << r.digits_lost;
      out << '\n';
      const bool last_of_x = i + 1 == rows.size() || rows[i + 1].x != r.x;
      if (last_of_x && want_series && want_asym && d < differences.size()) {
        out << "x=" << r.x << "  |series - " << method_name(EvalMethod::Compound)
            << "| = " << differences[d++]["abs_diff"].get<std::string>() << '\n';
      }
    }
  }
  return kExitOk;
}

inline int cmd_coeffs(const CliConfig& c, std::ostream& out) {
  const FunctionSpec f = resolve_function(c);
  const int D = resolve_precision(c) > 0 ? resolve_precision(c) : 50;
  const std::string method = c.method.empty() ? "stirling" : c.method;
  const ExpansionParams p = f.params(D);
  if (c.coeff_M < 1) throw UsageError("-M must be positive");

  std::optional<CoeffTable> st, ri;
  if (method == "stirling" || method == "both") st = stirling_matching_coeffs(p, c.coeff_M);
  if (method == "riney" || method == "both") ri = riney_coeffs(p, c.coeff_M);
  const CoeffTable& primary = st ? *st : *ri;
  const int sig = primary.est_digits;

  std::optional<BigReal> discrepancy;
  if (st && ri) {
    BigReal worst(D);
    for (size_t j = 0; j < c.coeff_M; ++j) {
      BigReal d = abs((*st)[j] - (*ri)[j]) / max(BigReal(1, D), abs((*st)[j]));
      if (d > worst) worst = d;
    }
    discrepancy = worst;
  }

  if (c.format == "csv") {
    out << "j";
    if (st) out << ",stirling";
    if (ri) out << ",riney";
    out << '\n';
    for (size_t j = 0; j < c.coeff_M; ++j) {
      out << j;
      if (st) out << ',' << (*st)[j].to_string(sig);
      if (ri) out << ',' << (*ri)[j].to_string(sig);
      out << '\n';
    }
  } else if (c.format == "json") {
    json j;
    j["command"] = "coeffs";
    j["function"] = params_json(f);
    j["method"] = method;
    j["digits"] = D;
    j["est_digits"] = sig;
    j["coefficients"] = json::array();
    for (size_t k = 0; k < c.coeff_M; ++k) {
      json row{{"j", k}};
      if (st) row["stirling"] = (*st)[k].to_string(sig);
      if (ri) row["riney"] = (*ri)[k].to_string(sig);
      j["coefficients"].push_back(std::move(row));
    }
    if (discrepancy) j["max_discrepancy"] = discrepancy->to_string(3);
    out << j.dump(2) << '\n';
  } else {
    out << params_label(f) << "  method=" << method << "  digits=" << D << '\n';
    for (size_t j = 0; j < c.coeff_M; ++j) {
      out << "c" << j;
      if (st) out << "  " << (*st)[j].to_string(sig);
      if (ri) out << "  " << (*ri)[j].to_string(sig);
      out << '\n';
    }
    if (discrepancy) out << "max relative discrepancy: " << discrepancy->to_string(3) << '\n';
  }
  return kExitOk;
}

inline int cmd_residual(const CliConfig& c, std::ostream& out) {
  const FunctionSpec f = resolve_function(c, false);
  const auto xs = resolve_xs(c);
  const int D = resolve_precision(c) > 0 ? resolve_precision(c) : 50;
  const ExpansionParams p = f.params(D);
  std::optional<size_t> fixed_j0;
  if (c.j0 != "auto") {
    try {
      size_t pos = 0;
      long v = std::stol(c.j0, &pos);
      if (pos != c.j0.size() || v < 0) throw std::invalid_argument(c.j0);
      fixed_j0 = static_cast<size_t>(v);
    } catch (const std::exception&) {
      throw UsageError("--j0 expects 'auto' or a non-negative integer, got '" + c.j0 + "'");
    }
  }
  const int sig = std::min(c.target, 12);

  json rows = json::array();
  for (const auto& xq : xs) {
    if (xq <= 0) throw UsageError("residual needs x > 0");
    const BigReal x(xq, D);
    CoeffTable coeffs;
    size_t j0 = 0;
    if (fixed_j0) {
      j0 = *fixed_j0;
      coeffs = stirling_matching_coeffs(p, std::max(c.coeff_count, j0 + 2));
    } else {
      OptimalTruncation t = optimal_truncation(p, x, c.coeff_count);
      coeffs = std::move(t.coeffs);
      j0 = t.j0;
    }
    const BigReal F = residual_F(p, x, j0, coeffs);
    const BigReal Es = subdominant_series(p, coeffs, x, j0 + 1).value;
    json row{{"x", format_rational(xq)}, {"j0", j0}, {"F", F.to_string(sig)}, {"Es", Es.to_string(sig)}};
    // For n = 5 the intermediate level sits between the two; it is removed
    // before comparing with E_s.
    BigReal excess = F;
    if (p.n == 5) {
      const BigReal Ei = intermediate_series_n5(p, coeffs, x, j0 + 1).value;
      row["Ei"] = Ei.to_string(sig);
      excess -= Ei;
    }
    row["rel_diff"] = Es.is_zero() ? std::string("inf") : (abs(excess - Es) / abs(Es)).to_string(3);
    rows.push_back(std::move(row));
  }

  if (c.format == "csv") {
    out << "x,j0,F,Es" << (p.n == 5 ? ",Ei" : "") << ",rel_diff\n";
    for (const auto& r : rows) {
      out << r["x"].get<std::string>() << ',' << r["j0"].get<size_t>() << ',' << r["F"].get<std::string>() << ','
          << r["Es"].get<std::string>();
      if (p.n == 5) out << ',' << r["Ei"].get<std::string>();
      out << ',' << r["rel_diff"].get<std::string>() << '\n';
    }
  } else if (c.format == "json") {
    json j{{"command", "residual"}, {"function", params_json(f)}, {"rows", rows}};
    out << j.dump(2) << '\n';
  } else {
    out << params_label(f) << '\n';
    for (const auto& r : rows) {
      out << "x=" << r["x"].get<std::string>() << "  j0=" << r["j0"].get<size_t>()
          << "  F=" << r["F"].get<std::string>() << "  Es=" << r["Es"].get<std::string>();
      if (p.n == 5) out << "  Ei=" << r["Ei"].get<std::string>();
      out << (p.n == 5 ? "  |F-Ei-Es|/|Es|=" : "  |F-Es|/|Es|=") << r["rel_diff"].get<std::string>() << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_tables(const CliConfig& c, std::ostream& out) {
  std::vector<int> ids;
  if (c.table == "all") {
    ids = {1, 2, 3, 4};
  } else {
    ids = {std::stoi(c.table)};
  }
  VerifyOptions opt;
  opt.fixture_path = c.fixtures;
  if (int d = resolve_precision(c); d > 0) opt.digits = d;
  opt.coeff_count = c.coeff_count;

  bool all_pass = true;
  json reports = json::array();
  for (int id : ids) {
    TableReport rep = reproduce_table(id, opt);
    all_pass = all_pass && rep.pass();
    if (c.format == "json") {
      reports.push_back(to_json(rep));
    } else if (c.format == "csv") {
      if (id == ids.front()) out << "table,set,inputs,quantity,quoted_value,computed,computed_alt,rel_diff,pass\n";
      for (const auto& r : rep.rows) {
        out << id << ',' << r.set << ',' << r.inputs << ',' << r.quantity << ',' << r.quoted_value << ','
            << r.computed << ',' << r.computed_alt << ',' << r.rel_diff << ',' << (r.pass ? "PASS" : "FAIL")
            << '\n';
      }
    } else {
      out << to_text(rep);
    }
  }
  if (c.format == "json") {
    json j{{"command", "tables"}, {"pass", all_pass}, {"reports", reports}};
    out << j.dump(2) << '\n';
  }
  return all_pass ? kExitOk : kExitFailure;
}

inline void add_function_options(CLI::App* sub, CliConfig& c, bool humbert) {
  sub->add_flag("--n3", c.n3, "order 3 (parameters a, b)");
  sub->add_flag("--n4", c.n4, "order 4 (three parameters via -b)");
  sub->add_flag("--n5", c.n5, "order 5 (four parameters via -b)");
  if (humbert) {
    sub->add_flag("--humbert", c.humbert, "Humbert J_{m,nu}(x)");
    sub->add_option("-m", c.m, "Humbert index m");
    sub->add_option("-n", c.nu, "Humbert index nu");
  }
  sub->add_option("-a", c.a, "first parameter (n = 3)");
  sub->add_option("-b", c.b, "parameter or comma-separated list; p/q accepted");
  sub->add_option("--precision", c.precision, "working precision in decimal digits (>= 30)");
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Hyper-Bessel function evaluator"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const std::vector<std::string> formats = {"text", "csv", "json"};

  auto* eval = app.add_subcommand("eval", "evaluate F_n(x) or J_{m,nu}(x)");
  detail::add_function_options(eval, c, true);
  eval->add_option("--x", c.x, "evaluation point (x >= 0)");
  eval->add_option("--x-range", c.x_range, "start:stop:step, inclusive");
  eval->add_option("--target", c.target, "target significant digits")->capture_default_str();
  eval->add_option("--method", c.method, "series | asymptotic | compound | both")
      ->check(CLI::IsMember({"series", "asymptotic", "compound", "both"}));
  eval->add_option("--M", c.M, "truncation: optimal or number of terms")->capture_default_str();
  eval->add_option("--coeff-count", c.coeff_count, "initial coefficient table size for optimal truncation")
      ->capture_default_str();
  eval->add_option("--scale", c.scale, "none | exp-half")->check(CLI::IsMember({"none", "exp-half"}));
  eval->add_option("--format", c.format, "text | csv | json")->check(CLI::IsMember(formats));
  eval->add_option("--output", c.output, "write to this file instead of standard output");

  auto* coeffs = app.add_subcommand("coeffs", "inverse factorial coefficients c_j");
  detail::add_function_options(coeffs, c, true);
  coeffs->add_option("-M", c.coeff_M, "number of coefficients c_0..c_{M-1}")->capture_default_str();
  coeffs->add_option("--method", c.method, "riney | stirling | both")
      ->check(CLI::IsMember({"riney", "stirling", "both"}));
  coeffs->add_option("--format", c.format, "text | csv | json")->check(CLI::IsMember(formats));
  coeffs->add_option("--output", c.output, "write to this file instead of standard output");

  auto* residual = app.add_subcommand("residual", "F(x) minus the dominant series, against E_s(x)");
  detail::add_function_options(residual, c, false);
  residual->add_option("--x", c.x, "evaluation point (x > 0)");
  residual->add_option("--x-range", c.x_range, "start:stop:step, inclusive");
  residual->add_option("--j0", c.j0, "auto or the last retained index")->capture_default_str();
  residual->add_option("--coeff-count", c.coeff_count, "initial coefficient table size")->capture_default_str();
  residual->add_option("--target", c.target, "significant digits printed (at most 12)")->capture_default_str();
  residual->add_option("--format", c.format, "text | csv | json")->check(CLI::IsMember(formats));
  residual->add_option("--output", c.output, "write to this file instead of standard output");

  auto* tables = app.add_subcommand("tables", "reproduce the reference tables");
  tables->add_option("--table", c.table, "1 | 2 | 3 | 4 | all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "all"}))
      ->capture_default_str();
  tables->add_option("--fixtures", c.fixtures, "fixture CSV (default: built-in path or $HYPERBESSEL_FIXTURES)");
  tables->add_option("--precision", c.precision, "working precision in decimal digits");
  tables->add_option("--format", c.format, "text | csv | json")->check(CLI::IsMember(formats));
  tables->add_option("--output", c.output, "write to this file instead of standard output");

  std::vector<std::string> argv_storage = {"hyperbessel"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    detail::Sink sink(c.output, out);
    if (eval->parsed()) return detail::cmd_eval(c, sink.stream());
    if (coeffs->parsed()) return detail::cmd_coeffs(c, sink.stream());
    if (residual->parsed()) return detail::cmd_residual(c, sink.stream());
    return detail::cmd_tables(c, sink.stream());
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hyperbessel::cli

#endif  // HYPERBESSEL_TOOLS_CLI_HPP
