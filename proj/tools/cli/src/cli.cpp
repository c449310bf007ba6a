#include "berndt_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <nlohmann/json.hpp>

#include "berndt/berndt_integrals.hpp"
#include "berndt/conjecture.hpp"
#include "berndt/constants.hpp"
#include "berndt/eisenstein.hpp"
#include "berndt/errors.hpp"
#include "berndt/hyperbolic_sums.hpp"
#include "berndt/jacobi_series.hpp"
#include "berndt/serialize.hpp"

namespace berndt::cli {

namespace {

using Json = nlohmann::ordered_json;

int decimal_digits(long prec) { return std::max(10, static_cast<int>(std::floor((prec - 8) * 0.30103))); }

std::string decimal(const HPReal& v, long prec) { return v.is_zero() ? "0" : v.to_decimal(decimal_digits(prec)); }
std::string short_decimal(const HPReal& v) { return v.is_zero() ? "0" : v.to_decimal(6); }

Json header(const char* command, const RunConfig& c) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"prec", c.prec}};
}

Json closed_form_fields(const ClosedFormValue& v, long prec) {
  return Json{{"closed_form", Json(to_json(v))}, {"closed_form_text", v.to_string()},
              {"decimal", decimal(to_real(v, prec), prec)}};
}

// Text rendering of the JSON report: one "key: value" line per scalar,
// nested containers indented below their key.
void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << scalar(value) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object()) {
        out << pad << "-\n";
        render_text(value, out, indent + 2);
      } else if (value.is_array()) {
        out << pad << "- " << value.dump() << '\n';
      } else {
        out << pad << "- " << scalar(value) << '\n';
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

void emit(const Json& report, const RunConfig& c, std::ostream& out) {
  if (c.format == Format::Json) {
    out << report.dump(2) << '\n';
  } else {
    render_text(report, out, 0);
  }
}

Json rational_table(const std::vector<int>& ks, Rational (*coefficient)(int, EvalRoute)) {
  Json rows = Json::array();
  for (int k : ks) rows.push_back({{"k", k}, {"value", to_string(coefficient(k, EvalRoute::Direct))}});
  return rows;
}

Json poly_table(Poly (JacobiTable::*family)(int), int max_m) {
  Json rows = Json::array();
  JacobiTable& table = JacobiTable::shared();
  for (int m = 0; m <= max_m; m += 2) {
    Json coefficients = Json::array();
    const Poly poly = (table.*family)(m);
    for (const Rational& c : poly.coefficients()) coefficients.push_back(to_string(c));
    rows.push_back({{"m", m}, {"coefficients", coefficients}});
  }
  return rows;
}

int run_tables(const RunConfig& c, std::ostream& out) {
  static const std::vector<std::string> kinds = {"alpha", "beta", "gamma", "phi",    "f",
                                                 "p",     "q",    "minus2", "plus2"};
  if (c.what != "all" && std::find(kinds.begin(), kinds.end(), c.what) == kinds.end())
    throw InvalidArgument("unknown table '" + c.what + "'");
  const int mmax = c.mmax.value_or(5);
  const int pmax = c.pmax.value_or(7);
  std::vector<int> even, odd;
  for (int k = 2; k <= 4 * mmax; k += 2) even.push_back(k);
  for (int k = 3; k <= 4 * mmax + 3; k += 2) odd.push_back(k);

  Json report = header("tables", c);
  report["mmax"] = mmax;
  report["pmax"] = pmax;
  auto want = [&](const char* name) { return c.what == "all" || c.what == name; };
  if (want("alpha")) report["alpha"] = rational_table(even, alpha_coefficient);
  if (want("beta")) report["beta"] = rational_table(odd, beta_coefficient);
  if (want("gamma")) report["gamma"] = rational_table(odd, gamma_coefficient);
  if (want("phi")) {
    Json rows = Json::array();
    for (int k : even) {
      Json row{{"k", k}};
      row.update(closed_form_fields((Rational(4) * phi_series(k / 2)).eval_at_half(), c.prec));
      rows.push_back(row);
    }
    report["four_phi_at_half"] = rows;
  }
  if (want("f")) report["f"] = poly_table(&JacobiTable::f, 2 * mmax);
  if (want("p")) report["p"] = poly_table(&JacobiTable::p, 2 * mmax);
  if (want("q")) report["q"] = poly_table(&JacobiTable::q, 2 * mmax);
  for (auto [name, kind, first] : {std::tuple{"minus2", IntegralKind::MINUS2, 1},
                                   std::tuple{"plus2", IntegralKind::PLUS2, 0}}) {
    if (!want(name)) continue;
    Json rows = Json::array();
    for (int p = first; p <= pmax; ++p) {
      Json row{{"p", p}, {"a", 4 * p + 1}};
      row.update(closed_form_fields(integral_closed_form(kind, p), c.prec));
      rows.push_back(row);
    }
    report[name] = rows;
  }
  emit(report, c, out);
  return kExitOk;
}

int run_sum(const RunConfig& c, std::ostream& out) {
  const auto family = parse_family(c.family);
  if (!family) throw InvalidArgument("unknown family '" + c.family + "'");
  const SumFamily sum{*family, c.exponent};
  if (!is_admissible(sum)) throw InvalidArgument("exponent not admissible for " + to_string(sum));

  const ClosedFormValue closed = sum_closed_form(sum);
  Json report = header("sum", c);
  report["family"] = family_name(sum.family);
  report["exponent"] = sum.exponent;
  report.update(closed_form_fields(closed, c.prec));
  int code = kExitOk;
  if (c.numeric) {
    const HPReal value = sum_numeric(sum, c.prec);
    const HPReal delta = abs(value - to_real(closed, c.prec));
    const bool ok = delta < HPReal::pow2(-c.prec + 16, c.prec);
    report["numeric"] = decimal(value, c.prec);
    report["check_delta"] = short_decimal(delta);
    report["pass"] = ok;
    if (!ok) code = kExitFailed;
  } else {
    report["numeric"] = nullptr;
    report["check_delta"] = nullptr;
  }
  emit(report, c, out);
  return code;
}

int run_integral(const RunConfig& c, std::ostream& out) {
  auto kind = parse_kind(c.kind);
  if (!kind) throw InvalidArgument("unknown integral kind '" + c.kind + "'");
  const bool squared = *kind == IntegralKind::PLUS2 || *kind == IntegralKind::MINUS2;
  // Squared kinds take x^(4p+1); first-power kinds take x^p directly.
  const int a = squared ? 4 * c.p + 1 : c.p;

  Json report = header("integral", c);
  report["kind"] = std::string(kind_name(*kind));
  report["p"] = c.p;
  report["a"] = a;
  std::optional<ClosedFormValue> closed;
  if (squared) {
    closed = integral_closed_form(*kind, c.p);
    report.update(closed_form_fields(*closed, c.prec));
  } else {
    report["closed_form"] = nullptr;
    report["closed_form_text"] = nullptr;
    report["decimal"] = nullptr;
  }
  int code = kExitOk;
  if (c.numeric || !squared) {
    const IntegralResult r = integral_numeric({*kind, a}, c.prec);
    report["numeric"] = decimal(r.value, c.prec);
    if (closed) {
      const HPReal delta = abs(r.value - to_real(*closed, c.prec));
      const bool ok = delta < HPReal::pow2(-c.prec + 24, c.prec);
      report["abs_delta"] = short_decimal(delta);
      report["pass"] = ok;
      if (!ok) code = kExitFailed;
    } else {
      report["abs_delta"] = nullptr;
    }
    report["error_estimate"] = short_decimal(r.error_estimate);
    report["tail_bound"] = short_decimal(r.tail_bound);
    report["T"] = r.T;
  } else {
    report["numeric"] = nullptr;
    report["abs_delta"] = nullptr;
    report["tail_bound"] = nullptr;
    report["T"] = nullptr;
  }
  emit(report, c, out);
  return code;
}

int run_relations(const RunConfig& c, std::ostream& out) {
  const auto which = parse_relation(c.which);
  if (!which) throw InvalidArgument("unknown relation '" + c.which + "'");
  const RelationReport r = relation_check(*which, c.a, c.prec);
  const bool ok = r.abs_delta < HPReal::pow2(-c.prec + 24, c.prec);
  Json report = header("relations", c);
  report["which"] = std::string(relation_name(*which));
  report["a"] = c.a;
  report["statement"] = r.statement;
  report["lhs"] = {{"re", decimal(r.lhs.re, c.prec)}, {"im", decimal(r.lhs.im, c.prec)}};
  report["rhs"] = {{"re", decimal(r.rhs.re, c.prec)}, {"im", decimal(r.rhs.im, c.prec)}};
  report["abs_delta"] = short_decimal(r.abs_delta);
  report["pass"] = ok;
  emit(report, c, out);
  return ok ? kExitOk : kExitFailed;
}

int run_conjecture(const RunConfig& c, std::ostream& out) {
  const int pmax = c.pmax.value_or(8);
  Json entries = Json::array();
  int passes = 0, failures = 0;
  for (const ConjectureEntry& e : conjecture_check(pmax)) {
    entries.push_back({{"p", e.values.p},
                       {"i", to_string(e.values.i)},
                       {"j", to_string(e.values.j)},
                       {"g", to_string(e.values.g)},
                       {"h", to_string(e.values.h)},
                       {"g_relation_ok", e.g_relation_ok},
                       {"h_relation_ok", e.h_relation_ok}});
    passes += e.g_relation_ok + e.h_relation_ok;
    failures += !e.g_relation_ok + !e.h_relation_ok;
  }
  Json report = header("conjecture", c);
  report["pmax"] = pmax;
  report["entries"] = entries;
  report["exact_passes"] = passes;
  report["failures"] = failures;
  emit(report, c, out);
  return failures == 0 ? kExitOk : kExitFailed;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SuiteOptions options{c.prec, c.pmax.value_or(8), c.mmax.value_or(6)};
  const auto results = run_suite(verification_suite(), options, &err);
  Json entries = Json::array();
  int failed = 0;
  for (const auto& e : results) {
    Json row{{"identity_id", e.identity_id},
             {"paper_anchor", e.anchor},
             {"status", status_name(e.status)},
             {"delta", e.delta}};
    if (c.timings) row["runtime_ms"] = std::llround(e.runtime_ms);
    entries.push_back(row);
    failed += e.status == Status::Fail;
  }
  Json report = header("verify", c);
  report["pmax"] = options.pmax;
  report["mmax"] = options.mmax;
  report["entries"] = entries;
  report["passed"] = static_cast<int>(results.size()) - failed;
  report["failed"] = failed;
  emit(report, c, out);
  return failed == 0 ? kExitOk : kExitFailed;
}

}  // namespace

ParseOutcome parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact and numeric evaluation of hyperbolic sums and Berndt-type integrals", "berndt"};
  app.require_subcommand(1);
  std::string format = "json";
  int pmax = 0, mmax = 0;
  app.add_option("--prec", c.prec, "working precision in bits (>= 64)")->check(CLI::Range(64L, 1L << 20));
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  auto* pmax_opt = app.add_option("--pmax", pmax, "depth bound for integrals and the conjecture")
                       ->check(CLI::Range(1, 64));
  auto* mmax_opt = app.add_option("--mmax", mmax, "depth bound for tables and gradings")->check(CLI::Range(1, 64));
  app.add_flag("--timings", c.timings, "include per-entry runtimes in verify output");

  auto* tables = app.add_subcommand("tables", "coefficient tables, polynomial families, integral closed forms");
  tables->add_option("--what", c.what, "alpha|beta|gamma|phi|f|p|q|minus2|plus2|all");

  auto* sum = app.add_subcommand("sum", "closed form of one hyperbolic sum");
  sum->add_option("--family", c.family,
                  "series family, u = 2n+1:\n"
                  "  SINH2 n^s/sinh^2(ny), COSH_SINH3 n^s cosh/sinh^3(ny),\n"
                  "  COSH2 u^s/cosh^2(uy/2), SINH_COSH3 u^s sinh/cosh^3(uy/2),\n"
                  "  ALT_EXP_MINUS (-1)^n u^2m/(e^uy - 1), ALT_EXP_PLUS (-1)^n u^2m/(e^uy + 1),\n"
                  "  ALT_SINH2 (-1)^n u^s/sinh^2(uy/2), ALT_COSH2 (-1)^n u^s/cosh^2(uy/2),\n"
                  "  FERMI u^(2m-1)/(e^uy + 1)")
      ->required();
  sum->add_option("--exp", c.exponent, "exponent (s, or m for ALT_EXP_* and FERMI)")->required();
  sum->add_flag("--numeric", c.numeric, "also sum the series directly");

  auto* integral = app.add_subcommand("integral", "closed form and quadrature of one integral");
  integral->add_option("--kind", c.kind, "plus2|minus2|plus1|minus1")->required();
  integral->add_option("--p", c.p, "x^(4p+1) for squared kinds, x^p otherwise")->required();
  integral->add_flag("--numeric", c.numeric, "also run the quadrature");

  auto* relations = app.add_subcommand("relations", "integral against series relation");
  relations->add_option("--which", c.which, "THM42|THM43|EQ_ONE|EQ_MINUS_ONE")->required();
  relations->add_option("--a", c.a, "power of x")->required();

  auto* verify = app.add_subcommand("verify", "run the full identity suite");
  auto* conjecture = app.add_subcommand("conjecture", "check the i/j versus g/h relations");

  for (auto* s : {tables, sum, integral, relations, verify, conjecture}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitInvalid};
  }

  c.format = format == "text" ? Format::Text : Format::Json;
  if (pmax_opt->count() > 0) c.pmax = pmax;
  if (mmax_opt->count() > 0) c.mmax = mmax;
  if (tables->parsed()) c.command = Command::Tables;
  if (sum->parsed()) c.command = Command::Sum;
  if (integral->parsed()) c.command = Command::Integral;
  if (relations->parsed()) c.command = Command::Relations;
  if (verify->parsed()) c.command = Command::Verify;
  if (conjecture->parsed()) c.command = Command::Conjecture;
  return {c, kExitOk};
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.prec < 64 || (c.pmax && *c.pmax < 1) || (c.mmax && *c.mmax < 1)) {
    err << "error: invalid configuration (prec >= 64, depths >= 1)\n";
    return kExitInvalid;
  }
  try {
    switch (c.command) {
      case Command::Tables: return run_tables(c, out);
      case Command::Sum: return run_sum(c, out);
      case Command::Integral: return run_integral(c, out);
      case Command::Relations: return run_relations(c, out);
      case Command::Verify: return run_verify(c, out, err);
      case Command::Conjecture: return run_conjecture(c, out);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UnsupportedExponent& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UnsupportedFamilyExponent& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitInvalid;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_command_line(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace berndt::cli
