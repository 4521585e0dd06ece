// Copyright 2026 The merohecke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "merohecke/errors.hpp"
#include "merohecke/expression.hpp"
#include "merohecke/forms.hpp"
#include "merohecke/hecke.hpp"
#include "merohecke/meroforms.hpp"
#include "merohecke/numeval.hpp"
#include "merohecke/poincare.hpp"
#include "merohecke/quotient.hpp"
#include "merohecke/rational_matrix.hpp"
#include "merohecke/series_cache.hpp"
#include "merohecke/series_json.hpp"
#include "merohecke/whbasis.hpp"

namespace merohecke::cli {

namespace {

using nlohmann::json;

constexpr unsigned kDefaultBits = 200;
constexpr double kDefaultTol = 1e-10;
constexpr std::int64_t kDefaultBound = 40;
constexpr std::int64_t kDefaultPrecision = 60;
constexpr int kPrintDigits = 40;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named form, a series JSON file, or a formula in E<k>, Delta, j and named forms.
struct Target {
  std::string label;
  std::optional<int> weight;
  std::int64_t valuation = 0;
  double validity_height = 0.0;
  bool meromorphic = false;
  std::optional<std::string> construction;  // cache key material; unset for files
  std::function<LaurentSeries(std::int64_t)> compute;
  std::optional<LaurentSeries> fixed;  // series read from a file
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Target resolve_target(const std::string& text) {
  Target t;
  t.label = text;
  if (is_named_form(text)) {
    const auto probe = build(text, 2);
    t.weight = probe.weight;
    t.valuation = probe.series.valuation();
    t.validity_height = probe.validity_height;
    t.meromorphic = probe.validity_height > 0;
    t.construction = "named:" + text + "=" + probe.construction;
    t.compute = [text](std::int64_t p) { return build(text, p).series; };
    return t;
  }
  if (std::filesystem::is_regular_file(text)) {
    t.fixed = series_from_json(read_file(text));
    t.valuation = t.fixed->valuation();
    return t;
  }
  const auto formula = Formula::parse(text);
  const auto resolver = named_form_resolver();
  const auto probe = formula.evaluate(2, resolver);
  if (probe.weight.is_modular()) t.weight = probe.weight.value();
  t.valuation = probe.series.valuation();
  t.meromorphic = probe.meromorphic;
  t.construction = "formula:" + text;
  t.compute = [formula, resolver](std::int64_t p) { return formula.evaluate(p, resolver).series; };
  return t;
}

LaurentSeries expand(const Target& t, std::int64_t precision) {
  if (t.fixed) return *t.fixed;
  if (auto cache = SeriesCache::from_environment()) {
    return cache->get_or_compute(*t.construction, precision, [&] { return t.compute(precision); });
  }
  return t.compute(precision);
}

int resolve_weight(const Target& t, std::optional<int> flag) {
  if (flag && t.weight && *flag != *t.weight) {
    throw UsageError(t.label + " has weight " + std::to_string(*t.weight) + ", not " +
                     std::to_string(*flag));
  }
  if (flag) return *flag;
  if (t.weight) return *t.weight;
  throw UsageError("--weight is required for " + t.label);
}

std::string format_real(const Real& x) { return to_string(x, kPrintDigits); }

json complex_json(const Complex& z) {
  return {{"re", format_real(real(z))}, {"im", format_real(imag(z))}};
}

std::string format_complex(const Complex& z) {
  const Real im = imag(z);
  std::string s = format_real(real(z));
  s += im < 0 ? " - " : " + ";
  s += format_real(abs(im)) + "*i";
  return s;
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- expand

int cmd_expand(const std::string& target, std::int64_t precision, bool as_json, std::ostream& out) {
  const auto t = resolve_target(target);
  const auto series = expand(t, precision);
  if (as_json) {
    out << series_to_json(series) << '\n';
  } else {
    out << to_string(series) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- hecke

int cmd_hecke(const std::string& target, std::optional<int> weight_flag, std::int64_t m,
              std::int64_t precision, bool as_json, std::ostream& out) {
  if (m < 1) throw UsageError("--m must be positive");
  const auto t = resolve_target(target);
  const int weight = resolve_weight(t, weight_flag);
  const auto image = t_op(expand(t, precision), weight, m);
  if (as_json) {
    out << series_to_json(image) << '\n';
  } else {
    out << "window [" << image.valuation() << ", " << image.precision() << ")\n";
    out << to_string(image) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- solve-pp

int cmd_solve_pp(int weight, const std::string& pp_text, bool sshriek, std::int64_t precision,
                 std::optional<std::int64_t> max_pole, bool as_json, std::ostream& out) {
  const auto pp = PrincipalPart::parse(pp_text);
  const auto result = solve_principal_part(weight, pp, sshriek, precision, max_pole);
  if (const auto* form = std::get_if<ModularFormSeries>(&result)) {
    if (as_json) {
      print_json(out, {{"status", "solved"},
                       {"weight", form->weight},
                       {"series", json::parse(series_to_json(form->series))}});
    } else {
      out << to_string(form->series) << '\n';
    }
    return kOk;
  }
  const auto& witness = std::get<ObstructionWitness>(result);
  if (as_json) {
    print_json(out, {{"status", "obstructed"},
                     {"obstruction", json::parse(rationals_to_json(witness.pairing))}});
  } else {
    out << "obstruction " << rationals_to_string(witness.pairing) << '\n';
  }
  return kMismatch;
}

// ---------------------------------------------------------------- quotient

std::string matrix_text(const RationalMatrix& a) {
  std::ostringstream s;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    s << '[';
    for (std::size_t c = 0; c < a.cols(); ++c) s << (c ? " " : "") << to_string(a(r, c));
    s << "]\n";
  }
  return s.str();
}

int cmd_quotient(int two_k, const std::string& kind_text, std::int64_t m, bool want_charpoly,
                 bool want_check, bool as_json, std::ostream& out) {
  if (two_k < 4 || two_k % 2 != 0) throw UsageError("--weight2k must be even and at least 4");
  if (m < 1) throw UsageError("--m must be positive");
  QuotientKind kind;
  try {
    kind = parse_quotient_kind(kind_text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const auto matrix = quotient_hecke_matrix(two_k, kind, m);
  const Rational scale = rational_pow(Rational(m), two_k - 1);
  json j = {{"weight2k", two_k},
            {"kind", to_string(kind)},
            {"m", m},
            {"matrix", json::parse(to_json(matrix))}};
  std::ostringstream text;
  text << "T_" << m << " on " << to_string(kind) << " classes of weight " << 2 - two_k << ":\n"
       << matrix_text(matrix);
  int code = kOk;
  if (want_check) {
    const auto check = theorem_check(two_k, kind, m);
    j["charpoly"] = to_string(check.quotient_charpoly);
    j["space_charpoly"] = to_string(check.space_charpoly);
    j["pass"] = check.pass;
    text << "charpoly of m^(2k-1) * matrix: " << to_string(check.quotient_charpoly) << '\n'
         << "charpoly of T_" << m << " on " << (kind == QuotientKind::ModM ? "S_" : "M_") << two_k
         << ": " << to_string(check.space_charpoly) << '\n'
         << (check.pass ? "check: pass" : "check: FAIL") << '\n';
    if (!check.pass) code = kMismatch;
  } else if (want_charpoly) {
    const auto p = charpoly(scale * matrix);
    j["charpoly"] = to_string(p);
    text << "charpoly of m^(2k-1) * matrix: " << to_string(p) << '\n';
  }
  if (as_json) {
    print_json(out, j);
  } else {
    out << text.str();
  }
  return code;
}

// ---------------------------------------------------------------- verify

struct GridCase {
  int two_k;
  QuotientKind kind;
  std::int64_t m;
  bool pass = false;
};

std::vector<GridCase> theorem_grid() {
  std::vector<GridCase> cases;
  for (int two_k = 4; two_k <= 28; two_k += 2) {
    for (const auto kind : {QuotientKind::ModM, QuotientKind::ModS}) {
      for (const std::int64_t m : {2, 3, 5}) cases.push_back({two_k, kind, m});
    }
  }
  return cases;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

int cmd_verify(const std::string& which, std::optional<std::int64_t> precision,
               std::optional<std::int64_t> perturb, unsigned jobs, bool as_json,
               std::ostream& out) {
  static const std::string kGrid = "theorem-grid";
  std::vector<std::string> ids;
  bool grid = false;
  if (which == "all") {
    ids = identity_ids();
    grid = true;
  } else if (which == kGrid) {
    grid = true;
  } else if (std::find(identity_ids().begin(), identity_ids().end(), which) != identity_ids().end()) {
    ids.push_back(which);
  } else {
    throw UsageError("unknown identity '" + which + "'");
  }
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());

  IdentityOptions options;
  options.precision = precision;
  options.perturb_index = perturb;
  std::vector<IdentityReport> reports(ids.size());
  parallel_for(ids.size(), jobs, [&](std::size_t i) {
    try {
      reports[i] = verify_identity(ids[i], options);
    } catch (const Error& e) {
      reports[i].id = ids[i];
      reports[i].pass = false;
      reports[i].detail = std::string("error: ") + e.what();
    }
  });
  auto cases = grid ? theorem_grid() : std::vector<GridCase>{};
  parallel_for(cases.size(), jobs,
               [&](std::size_t i) { cases[i].pass = theorem_check(cases[i].two_k, cases[i].kind, cases[i].m).pass; });

  bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }) &&
              std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.pass; });
  if (as_json) {
    json j = {{"pass", pass}, {"identities", json::array()}};
    for (const auto& r : reports) j["identities"].push_back(json::parse(to_json(r)));
    if (grid) {
      json g = json::array();
      for (const auto& c : cases) {
        g.push_back({{"weight2k", c.two_k}, {"kind", to_string(c.kind)}, {"m", c.m}, {"pass", c.pass}});
      }
      j[kGrid] = g;
    }
    print_json(out, j);
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id << "  window [" << r.window_begin << ", "
          << r.window_end << ")";
      if (r.mismatch) out << "  first mismatch at q^" << *r.mismatch;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << '\n';
    }
    if (grid) {
      const auto failed = std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; });
      out << (failed == 0 ? "PASS " : "FAIL ") << kGrid << "  " << cases.size() - failed << "/"
          << cases.size() << " cases\n";
      for (const auto& c : cases) {
        if (!c.pass) out << "  failed: 2k=" << c.two_k << " " << to_string(c.kind) << " m=" << c.m << '\n';
      }
    }
  }
  return pass ? kOk : kMismatch;
}

// ---------------------------------------------------------------- numerics

int cmd_eval(const std::string& target, const std::string& at, unsigned bits,
             std::optional<std::int64_t> precision, std::optional<double> valid_above, bool as_json,
             std::ostream& out) {
  PrecisionScope scope(bits);
  const auto t = resolve_target(target);
  const HPoint z = HPoint::parse(at, bits);
  double validity = t.validity_height;
  if (valid_above) {
    validity = std::max(validity, *valid_above);
  } else if (t.meromorphic && t.validity_height == 0.0) {
    throw RegionGuard(t.label + " has poles in the upper half-plane; give --valid-above Y");
  }
  const std::int64_t pole = std::max<std::int64_t>(0, -t.valuation);
  EvalResult result;
  if (t.weight && !t.meromorphic && !t.fixed) {
    const double height = std::min(z.y.convert_to<double>(), 0.8660254037844386);
    const auto p = precision.value_or(terms_for_height(bits, height, pole));
    result = eval_modular(ModularFormSeries{*t.weight, expand(t, p)}, z, bits, validity);
  } else {
    const auto p = precision.value_or(terms_for_height(bits, z.y.convert_to<double>(), pole));
    result = eval_series(expand(t, p), z, bits, validity);
  }
  if (as_json) {
    print_json(out, {{"name", t.label},
                     {"at", at},
                     {"bits", bits},
                     {"value", complex_json(result.value)},
                     {"err_bound", result.err_bound},
                     {"terms", result.terms},
                     {"tail_note", result.tail_note}});
  } else {
    out << t.label << "(" << at << ") = " << format_complex(result.value) << '\n'
        << "error bound " << format_double(result.err_bound) << " (" << result.terms << " terms; "
        << result.tail_note << ")\n";
  }
  return kOk;
}

int cmd_cm_check(unsigned bits, double tol, bool as_json, std::ostream& out) {
  const auto report = cm_checks(bits, tol);
  PrecisionScope scope(bits);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"value", format_real(c.value)},
                        {"expected", format_real(c.expected)},
                        {"relative_error", c.relative_error},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    }
    print_json(out, {{"pass", report.pass},
                     {"omega", format_real(report.omega)},
                     {"delta_imag_relative", report.delta_imag_relative},
                     {"checks", checks}});
  } else {
    out << "Omega = " << format_real(report.omega) << '\n';
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << " = " << format_real(c.value) << "  rel err "
          << format_double(c.relative_error) << " (tol " << format_double(c.tolerance) << ")\n";
    }
  }
  return report.pass ? kOk : kMismatch;
}

int cmd_eigen_num(std::int64_t m, std::int64_t n_max, unsigned bits, const std::string& constant_text,
                  double tol, std::int64_t sigma_offset, bool as_json, std::ostream& out) {
  if (m != 5 && m != 7) throw UsageError("--m must be 5 or 7");
  const Rational constant = parse_rational(constant_text);
  const auto report = verify_f6i_eigen(m, n_max, bits, constant, tol, sigma_offset);
  PrecisionScope scope(bits);
  if (as_json) {
    json entries = json::array();
    for (const auto& e : report.entries) {
      entries.push_back({{"n", e.n},
                         {"exact", to_string(e.exact)},
                         {"predicted", complex_json(e.predicted)},
                         {"relative_error", e.relative_error},
                         {"fitted_constant", format_real(e.fitted_constant)}});
    }
    print_json(out, {{"m", m},
                     {"constant", to_string(constant)},
                     {"pass", report.pass},
                     {"max_relative_error", report.max_relative_error},
                     {"fitted_constant", format_real(report.fitted_constant)},
                     {"fitted_spread", report.fitted_spread},
                     {"entries", entries}});
  } else {
    for (const auto& e : report.entries) {
      out << "n=" << e.n << "  exact " << to_string(e.exact) << "  rel err "
          << format_double(e.relative_error) << "  fitted " << to_string(e.fitted_constant, 20) << '\n';
    }
    out << (report.pass ? "PASS" : "FAIL") << " constant " << to_string(constant)
        << ": max rel err " << format_double(report.max_relative_error) << " (tol "
        << format_double(tol) << ")\n"
        << "fitted constant " << format_real(report.fitted_constant) << " (spread "
        << format_double(report.fitted_spread) << ")\n";
  }
  return report.pass ? kOk : kMismatch;
}

int cmd_psi_sum(int k, int ell, const std::string& zz_text, const std::string& at, std::int64_t bound,
                unsigned bits, unsigned threads, bool as_json, std::ostream& out) {
  if (k < 2) throw UsageError("--k must be at least 2");
  PrecisionScope scope(bits);
  const PoincareSeed seed{k, ell, HPoint::parse(zz_text, bits)};
  const auto result = psi_truncated(seed, HPoint::parse(at, bits), bound, bits, threads);
  if (as_json) {
    print_json(out, {{"k", k},
                     {"ell", ell},
                     {"zz", zz_text},
                     {"at", at},
                     {"bound", bound},
                     {"value", complex_json(result.value)},
                     {"half_bound_value", complex_json(result.half_bound_value)},
                     {"tail_estimate", result.tail_estimate},
                     {"vanishing", result.vanishing},
                     {"terms", result.terms},
                     {"note", result.note}});
  } else {
    out << "Psi = " << format_complex(result.value) << '\n'
        << "tail estimate " << format_double(result.tail_estimate) << " (" << result.terms
        << " terms)\n"
        << result.note << '\n';
  }
  return kOk;
}

int cmd_psi_prop_check(int k, int ell, const std::string& zz_text, const std::string& at,
                       std::int64_t n, std::int64_t bound, unsigned bits, double tol, unsigned threads,
                       bool as_json, std::ostream& out) {
  if (k < 2) throw UsageError("--k must be at least 2");
  if (n < 1) throw UsageError("--n must be positive");
  PrecisionScope scope(bits);
  const auto report = psi_two_variable_check(k, ell, HPoint::parse(zz_text, bits),
                                             HPoint::parse(at, bits), n, bound, bits, threads);
  const bool pass = report.relative_difference <= tol;
  if (as_json) {
    print_json(out, {{"n", n},
                     {"lhs", complex_json(report.lhs)},
                     {"rhs", complex_json(report.rhs)},
                     {"relative_difference", report.relative_difference},
                     {"tail", report.tail},
                     {"tolerance", tol},
                     {"pass", pass}});
  } else {
    out << "lhs " << format_complex(report.lhs) << '\n'
        << "rhs " << format_complex(report.rhs) << '\n'
        << (pass ? "PASS" : "FAIL") << " relative difference " << format_double(report.relative_difference)
        << " (tol " << format_double(tol) << ", tail " << format_double(report.tail) << ")\n";
  }
  return pass ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric experiments with Hecke operators on meromorphic modular forms",
               "merohecke"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string target;
  std::int64_t precision = kDefaultPrecision;
  std::optional<std::int64_t> precision_opt;
  bool as_json = false;
  unsigned bits = kDefaultBits;
  double tol = kDefaultTol;
  std::int64_t bound = kDefaultBound;
  unsigned threads = 0;

  auto* expand_cmd = app.add_subcommand("expand", "Print the q-expansion of a named form or formula");
  expand_cmd->add_option("target", target, "Named form or formula in E<k>, Delta, j, q")->required();
  expand_cmd->add_option("--prec", precision, "Expansion precision (exclusive exponent)")
      ->capture_default_str();
  expand_cmd->add_flag("--json", as_json, "Series JSON output");

  std::optional<int> weight_opt;
  std::int64_t m = 2;
  auto* hecke_cmd = app.add_subcommand("hecke", "Apply T_m to a series file, named form or formula");
  hecke_cmd->add_option("target", target, "Series JSON file, named form or formula")->required();
  hecke_cmd->add_option("--weight", weight_opt, "Weight (required for series files)");
  hecke_cmd->add_option("--m", m, "Hecke index")->required();
  hecke_cmd->add_option("--prec", precision, "Input precision for named forms and formulas")
      ->capture_default_str();
  hecke_cmd->add_flag("--json", as_json, "Series JSON output");

  int weight = 0;
  std::string pp_text;
  bool sshriek = false;
  std::int64_t solve_prec = 20;
  std::optional<std::int64_t> max_pole;
  auto* solve_cmd = app.add_subcommand("solve-pp", "Find the form with a given principal part");
  solve_cmd->add_option("--weight", weight, "Weight")->required();
  solve_cmd->add_option("--pp", pp_text, "Principal part \"r:coeff,...\" (r = 0 is the constant)")
      ->required();
  solve_cmd->add_flag("--sshriek", sshriek, "Require vanishing constant term");
  solve_cmd->add_option("--prec", solve_prec, "Output precision")->capture_default_str();
  solve_cmd->add_option("--max-pole", max_pole, "Largest pole order of the search space");
  solve_cmd->add_flag("--json", as_json, "JSON output");

  int two_k = 12;
  std::string kind_text = "modM!";
  bool want_charpoly = false;
  bool want_check = false;
  auto* quotient_cmd = app.add_subcommand("quotient", "Hecke matrix on a principal-part quotient");
  quotient_cmd->add_option("--weight2k", two_k, "Cusp-form weight 2k")->required();
  quotient_cmd->add_option("--kind", kind_text, "modM! or modS!")->capture_default_str();
  quotient_cmd->add_option("--m", m, "Hecke index")->required();
  quotient_cmd->add_flag("--charpoly", want_charpoly, "Print the characteristic polynomial");
  quotient_cmd->add_flag("--check", want_check, "Compare against T_m on the holomorphic space");
  quotient_cmd->add_flag("--json", as_json, "JSON output");

  std::string which = "all";
  std::optional<std::int64_t> perturb;
  unsigned jobs = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check the catalogued exact identities");
  verify_cmd->add_option("id", which, "Identity id, theorem-grid, or all")->capture_default_str();
  verify_cmd->add_option("--prec", precision_opt, "Input precision override");
  verify_cmd->add_option("--perturb", perturb, "Perturb one coefficient (negative control)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads (0 = hardware)");
  verify_cmd->add_flag("--json", as_json, "JSON report");

  std::string at;
  std::optional<double> valid_above;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a form at a point of the upper half-plane");
  eval_cmd->add_option("target", target, "Named form, series file or formula")->required();
  eval_cmd->add_option("--at", at, "Point \"x,y\" (sqrt(...) and pi allowed)")->required();
  eval_cmd->add_option("--bits", bits, "Working precision in bits")->capture_default_str();
  eval_cmd->add_option("--prec", precision_opt, "Number of series terms");
  eval_cmd->add_option("--valid-above", valid_above, "Height above which the expansion converges");
  eval_cmd->add_flag("--json", as_json, "JSON output");

  double cm_tol = 1e-20;
  auto* cm_cmd = app.add_subcommand("cm-check", "CM values at (1+sqrt(-7))/2");
  cm_cmd->add_option("--bits", bits, "Working precision in bits")->capture_default_str();
  cm_cmd->add_option("--tol", cm_tol, "Relative tolerance for E4 and E6")->capture_default_str();
  cm_cmd->add_flag("--json", as_json, "JSON output");

  std::int64_t n_max = 10;
  std::string constant_text = "-1/1024";
  std::int64_t sigma_offset = 0;
  auto* eigen_cmd = app.add_subcommand("eigen-num", "Numeric check of the f6i eigen-relation");
  eigen_cmd->add_option("--m", m, "5 or 7")->required();
  eigen_cmd->add_option("--N", n_max, "Number of coefficients")->capture_default_str();
  eigen_cmd->add_option("--bits", bits, "Working precision in bits")->capture_default_str();
  eigen_cmd->add_option("--constant", constant_text, "Predicted constant")->capture_default_str();
  eigen_cmd->add_option("--sigma-offset", sigma_offset, "Shift of the eigenvalue (negative control)");
  eigen_cmd->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  eigen_cmd->add_flag("--json", as_json, "JSON output");

  int k = 3;
  int ell = -1;
  std::string zz_text = "0,1";
  auto* psi_cmd = app.add_subcommand("psi-sum", "Truncated elliptic Poincare series");
  psi_cmd->add_option("--k", k, "Half weight")->capture_default_str();
  psi_cmd->add_option("--ell", ell, "Seed exponent")->capture_default_str();
  psi_cmd->add_option("--zz", zz_text, "Pole \"x,y\"")->capture_default_str();
  psi_cmd->add_option("--at", at, "Point \"x,y\"")->required();
  psi_cmd->add_option("--bound", bound, "Truncation bound B")->capture_default_str();
  psi_cmd->add_option("--bits", bits, "Working precision in bits")->capture_default_str();
  psi_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  psi_cmd->add_flag("--json", as_json, "JSON output");

  std::int64_t n = 2;
  double psi_tol = 1e-2;
  auto* prop_cmd = app.add_subcommand("psi-prop-check", "Hecke relation of the Poincare series in both variables");
  prop_cmd->add_option("--k", k, "Half weight")->capture_default_str();
  prop_cmd->add_option("--ell", ell, "Seed exponent")->capture_default_str();
  prop_cmd->add_option("--zz", zz_text, "Pole \"x,y\"")->capture_default_str();
  prop_cmd->add_option("--at", at, "Point \"x,y\"")->default_val("0.25,1.6");
  prop_cmd->add_option("--n", n, "Hecke index")->capture_default_str();
  prop_cmd->add_option("--bound", bound, "Truncation bound B")->capture_default_str();
  prop_cmd->add_option("--bits", bits, "Working precision in bits")->capture_default_str();
  prop_cmd->add_option("--tol", psi_tol, "Relative tolerance")->capture_default_str();
  prop_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  prop_cmd->add_flag("--json", as_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*expand_cmd) return cmd_expand(target, precision, as_json, out);
    if (*hecke_cmd) return cmd_hecke(target, weight_opt, m, precision, as_json, out);
    if (*solve_cmd) return cmd_solve_pp(weight, pp_text, sshriek, solve_prec, max_pole, as_json, out);
    if (*quotient_cmd)
      return cmd_quotient(two_k, kind_text, m, want_charpoly, want_check, as_json, out);
    if (*verify_cmd) return cmd_verify(which, precision_opt, perturb, jobs, as_json, out);
    if (*eval_cmd) return cmd_eval(target, at, bits, precision_opt, valid_above, as_json, out);
    if (*cm_cmd) return cmd_cm_check(bits, cm_tol, as_json, out);
    if (*eigen_cmd)
      return cmd_eigen_num(m, n_max, bits, constant_text, tol, sigma_offset, as_json, out);
    if (*psi_cmd) return cmd_psi_sum(k, ell, zz_text, at, bound, bits, threads, as_json, out);
    if (*prop_cmd)
      return cmd_psi_prop_check(k, ell, zz_text, at, n, bound, bits, psi_tol, threads, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RegionGuard& e) {
    err << "numeric guard: " << e.what() << '\n';
    return kNumericGuard;
  } catch (const DivergentTail& e) {
    err << "numeric guard: " << e.what() << '\n';
    return kNumericGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace merohecke::cli
