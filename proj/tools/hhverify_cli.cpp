// Command-line front end for libhhverify.
//
// Exit codes: 0 all checks hold, 1 a check failed or a violation was found,
// 2 usage or configuration error.

#include <hhverify/hhverify.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionDeleter {
  void operator()(hhv_function* f) const { hhv_function_destroy(f); }
};
using FunctionPtr = std::unique_ptr<hhv_function, FunctionDeleter>;

struct SweepDeleter {
  void operator()(hhv_sweep* s) const { hhv_sweep_destroy(s); }
};
using SweepPtr = std::unique_ptr<hhv_sweep, SweepDeleter>;

void check(hhv_status status) {
  if (status == HHV_OK) return;
  const std::string what = hhv_last_error();
  if (status == HHV_ERR_CONFIG || status == HHV_ERR_PARAM || status == HHV_ERR_NULL_ARGUMENT) {
    throw UsageError(what);
  }
  throw std::runtime_error(what);
}

double number(const std::string& text, const char* flag) {
  double v = 0.0;
  if (hhv_parse_number(text.c_str(), &v) != HHV_OK) {
    throw UsageError(std::string("--") + flag + ": " + hhv_last_error());
  }
  return v;
}

std::optional<double> env_tol() {
  const char* raw = std::getenv("HHVERIFY_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  return number(raw, "HHVERIFY_TOL");
}

double resolve_tol(const std::string& flag, double fallback) {
  if (!flag.empty()) return number(flag, "tol");
  return env_tol().value_or(fallback);
}

FunctionPtr parse_function(const std::string& spec) {
  hhv_function* raw = nullptr;
  check(hhv_function_parse(spec.c_str(), &raw));
  return FunctionPtr(raw);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// nlohmann prints shortest round-trip floats; reports use %.17g everywhere.
void emit(std::ostream& os, const ordered_json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << json(key).dump() << ": ";
      emit(os, value, depth + 1);
    }
    os << '\n' << close << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      emit(os, j[i], depth + 1);
    }
    os << '\n' << close << ']';
  } else if (j.is_number_float()) {
    os << fmt(j.get<double>());
  } else {
    os << j.dump();
  }
}

void emit(std::ostream& os, const ordered_json& j) {
  emit(os, j, 0);
  os << '\n';
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

const char* status_name(hhv_row_status s) {
  switch (s) {
    case HHV_HOLDS:
      return "HOLDS";
    case HHV_VIOLATED:
      return "VIOLATED";
    case HHV_HYP_FAIL:
      return "HYP_FAIL";
    case HHV_ERROR:
      return "ERROR";
  }
  return "ERROR";
}

// ---------------------------------------------------------------------------
// Report rows

struct ReportRow {
  std::optional<int64_t> index;
  std::string theorem_id;
  std::string fn;
  hhv_outcome outcome{};
  hhv_row_status status = HHV_ERROR;
  std::string error;
};

const char* kCsvHeader =
    "theorem_id,fn,a,b,m,alpha,p,n,lambda,r,lhs,rhs,margin,hypothesis_ok,status";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const ReportRow& row) {
  const hhv_params& p = row.outcome.params;
  const bool ok = row.status != HHV_ERROR;
  std::ostringstream out;
  out << csv_field(row.theorem_id) << ',' << csv_field(row.fn) << ',' << fmt(p.a) << ','
      << fmt(p.b) << ',' << fmt(p.m) << ',' << fmt(p.alpha) << ',' << fmt(p.p) << ',' << p.n
      << ',' << (p.has_lambda ? fmt(p.lambda) : "") << ',' << (p.has_r ? fmt(p.r) : "") << ','
      << (ok ? fmt(row.outcome.lhs) : "") << ',' << (ok ? fmt(row.outcome.rhs) : "") << ','
      << (ok ? fmt(row.outcome.margin) : "") << ','
      << (ok ? (row.outcome.hypothesis_ok ? "true" : "false") : "") << ','
      << status_name(row.status);
  return out.str();
}

ordered_json json_row(const ReportRow& row) {
  const hhv_params& p = row.outcome.params;
  const bool ok = row.status != HHV_ERROR;
  ordered_json j;
  if (row.index) j["index"] = *row.index;
  j["theorem_id"] = row.theorem_id;
  j["fn"] = row.fn;
  j["a"] = num(p.a);
  j["b"] = num(p.b);
  j["m"] = num(p.m);
  j["alpha"] = num(p.alpha);
  j["p"] = num(p.p);
  j["n"] = p.n;
  j["lambda"] = p.has_lambda ? num(p.lambda) : json(nullptr);
  j["r"] = p.has_r ? num(p.r) : json(nullptr);
  j["lhs"] = ok ? num(row.outcome.lhs) : json(nullptr);
  j["rhs"] = ok ? num(row.outcome.rhs) : json(nullptr);
  j["margin"] = ok ? num(row.outcome.margin) : json(nullptr);
  j["hypothesis_ok"] = ok ? json(row.outcome.hypothesis_ok != 0) : json(nullptr);
  j["status"] = status_name(row.status);
  if (!ok) j["error"] = row.error;
  if (ok && row.outcome.has_branches) {
    j["rhs_lower_branch"] = num(row.outcome.rhs_lower_branch);
    j["rhs_upper_branch"] = num(row.outcome.rhs_upper_branch);
  }
  if (ok && row.outcome.has_check && !row.outcome.check.passed && row.outcome.check.has_witness) {
    const hhv_check_result& c = row.outcome.check;
    j["hypothesis_witness"] = {{"x", num(c.witness_x)},
                               {"y", num(c.witness_y)},
                               {"lambda", num(c.witness_lambda)},
                               {"max_violation", num(c.max_violation)}};
  }
  return j;
}

struct Summary {
  int64_t checked = 0;
  int64_t violations = 0;
  std::optional<double> min_margin;
};

void write_report(std::ostream& os, const std::string& format, const ordered_json& meta,
                  const std::vector<ReportRow>& rows, const Summary& summary) {
  if (format == "csv") {
    os << kCsvHeader << '\n';
    for (const auto& row : rows) os << csv_row(row) << '\n';
    return;
  }
  ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = ordered_json::array();
  for (const auto& row : rows) doc["rows"].push_back(json_row(row));
  doc["summary"] = {{"checked", summary.checked},
                    {"violations", summary.violations},
                    {"min_margin", summary.min_margin ? num(*summary.min_margin) : json(nullptr)}};
  emit(os, doc);
}

// Flat key/value documents (identity, convexity, consistency, mean).
void write_record(std::ostream& os, const std::string& format, const ordered_json& record) {
  if (format == "csv") {
    std::string header;
    std::string values;
    for (const auto& [key, value] : record.items()) {
      if (!header.empty()) {
        header += ',';
        values += ',';
      }
      header += key;
      if (value.is_number_float()) values += fmt(value.get<double>());
      else if (value.is_string()) values += csv_field(value.get<std::string>());
      else if (value.is_null()) values += "";
      else values += value.dump();
    }
    os << header << '\n' << values << '\n';
    return;
  }
  emit(os, record);
}

ordered_json make_meta(std::optional<uint64_t> seed, double tol) {
  ordered_json meta;
  meta["seed"] = seed ? json(*seed) : json(nullptr);
  meta["tol"] = tol;
  meta["version"] = hhv_version();
  return meta;
}

// ---------------------------------------------------------------------------
// Output routing

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open --out file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct Common {
  std::string format = "json";
  std::string out;
  std::string tol;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "Write the report to a file instead of stdout");
  cmd->add_option("--tol", c.tol, "Tolerance (default from HHVERIFY_TOL)");
}

// ---------------------------------------------------------------------------
// Subcommands

struct ParamFlags {
  std::string a = "1", b = "2", m = "1", alpha = "1", p, q, lambda, r, quad_tol, hyp_tol;
  std::string check_lo, check_hi;
  int n = 2;
  int grid = 64;
  std::string variant = "literal";
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--a", f.a, "Left endpoint a");
  cmd->add_option("--b", f.b, "Right endpoint b");
  cmd->add_option("--m", f.m, "m in (0, 1]");
  cmd->add_option("--alpha", f.alpha, "alpha in [0, 1]");
  cmd->add_option("--p", f.p, "Hypothesis exponent p (decimal or rational)");
  cmd->add_option("--q", f.q, "Exponent named q by thm1.1/thm1.3 (same field as --p)");
  cmd->add_option("--n", f.n, "Derivative order n");
  cmd->add_option("--lambda", f.lambda, "lambda in [0, 1] (thm1.2)");
  cmd->add_option("--r", f.r, "Exponent r (prop1..prop3, prop5)");
  cmd->add_option("--variant", f.variant, "Proposition variant")
      ->check(CLI::IsMember({"literal", "derived_from_corollary"}));
  cmd->add_option("--grid", f.grid, "Hypothesis grid per axis");
  cmd->add_option("--hyp-tol", f.hyp_tol, "Hypothesis check tolerance");
  cmd->add_option("--check-lo", f.check_lo, "Hypothesis check domain lower end");
  cmd->add_option("--check-hi", f.check_hi, "Hypothesis check domain upper end");
  cmd->add_option("--quad-tol", f.quad_tol, "Quadrature tolerance");
}

hhv_params to_params(const ParamFlags& f) {
  hhv_params p;
  hhv_params_init(&p);
  p.a = number(f.a, "a");
  p.b = number(f.b, "b");
  p.m = number(f.m, "m");
  p.alpha = number(f.alpha, "alpha");
  if (!f.p.empty() && !f.q.empty()) throw UsageError("pass either --p or --q, not both");
  if (!f.p.empty()) p.p = number(f.p, "p");
  if (!f.q.empty()) p.p = number(f.q, "q");
  p.n = f.n;
  if (!f.lambda.empty()) {
    p.has_lambda = 1;
    p.lambda = number(f.lambda, "lambda");
  }
  if (!f.r.empty()) {
    p.has_r = 1;
    p.r = number(f.r, "r");
  }
  p.variant = f.variant == "literal" ? HHV_VARIANT_LITERAL : HHV_VARIANT_DERIVED;
  if (!f.check_lo.empty() || !f.check_hi.empty()) {
    if (f.check_lo.empty() || f.check_hi.empty()) {
      throw UsageError("--check-lo and --check-hi go together");
    }
    p.has_check_domain = 1;
    p.check_lo = number(f.check_lo, "check-lo");
    p.check_hi = number(f.check_hi, "check-hi");
  }
  if (!f.quad_tol.empty()) p.quad_tol = number(f.quad_tol, "quad-tol");
  p.hyp_grid = f.grid;
  if (!f.hyp_tol.empty()) p.hyp_tol = number(f.hyp_tol, "hyp-tol");
  return p;
}

int run_bound_like(const std::string& theorem, const std::string& fn_spec, const ParamFlags& flags,
                   bool check_hyp, const Common& common) {
  const double tol = resolve_tol(common.tol, 1e-8);
  const bool is_prop = theorem.rfind("prop", 0) == 0;
  FunctionPtr fn;
  if (!is_prop) {
    if (fn_spec.empty()) throw UsageError("--fn is required for " + theorem);
    fn = parse_function(fn_spec);
  }
  const hhv_params params = to_params(flags);

  ReportRow row;
  row.theorem_id = theorem;
  hhv_status st = hhv_evaluate_bound(theorem.c_str(), fn.get(), &params, check_hyp ? 1 : 0, &row.outcome);
  if (st == HHV_ERR_PARAM || st == HHV_ERR_CONFIG) throw UsageError(hhv_last_error());
  if (st != HHV_OK) {
    row.status = HHV_ERROR;
    row.error = hhv_last_error();
    row.outcome.params = params;
  } else {
    row.status = hhv_classify(&row.outcome, tol);
  }
  if (is_prop) {
    // The proposition fixes f; report it in catalog form.
    const int id = theorem.back() - '0';
    if (id <= 3) {
      row.fn = "power:" + fmt(params.r);
    } else {
      row.fn = id <= 5 ? "reciprocal" : "neglog";
    }
  } else {
    row.fn = hhv_function_name(fn.get());
  }

  Summary summary;
  summary.checked = row.status == HHV_ERROR ? 0 : 1;
  summary.violations = row.status == HHV_VIOLATED ? 1 : 0;
  if (row.status != HHV_ERROR && row.outcome.hypothesis_ok) summary.min_margin = row.outcome.margin;

  Output out(common.out);
  write_report(out.stream(), common.format, make_meta(std::nullopt, tol), {row}, summary);
  if (row.status == HHV_ERROR) return kExitUsage;
  return row.status == HHV_VIOLATED ? kExitFail : kExitOk;
}

int run_sweep(const std::string& config_path, int jobs, const Common& common) {
  std::ifstream in(config_path);
  if (!in) throw UsageError("cannot read --config '" + config_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string config = buf.str();

  // HHVERIFY_TOL (or --tol) supplies tol when the config does not.
  std::optional<double> tol_override;
  if (!common.tol.empty()) tol_override = number(common.tol, "tol");
  else tol_override = env_tol();
  if (tol_override) {
    json doc;
    try {
      doc = json::parse(config);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("sweep config is not valid JSON: ") + e.what());
    }
    if (doc.is_object() && !doc.contains("tol")) {
      doc["tol"] = *tol_override;
      config = doc.dump();
    }
  }

  hhv_sweep* raw = nullptr;
  check(hhv_sweep_run(config.c_str(), jobs, &raw));
  SweepPtr sweep(raw);

  hhv_sweep_summary s;
  check(hhv_sweep_summary_get(sweep.get(), &s));

  std::vector<ReportRow> rows;
  const int64_t count = hhv_sweep_row_count(sweep.get());
  rows.reserve(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) {
    hhv_row r;
    check(hhv_sweep_row(sweep.get(), i, &r));
    ReportRow row;
    row.index = r.index;
    row.theorem_id = r.theorem_id;
    row.fn = r.fn;
    row.outcome = r.outcome;
    row.status = r.status;
    row.error = r.error;
    rows.push_back(std::move(row));
  }

  Summary summary;
  summary.checked = s.checked;
  summary.violations = s.violations;
  if (s.has_min_margin) summary.min_margin = s.min_margin;

  ordered_json meta = make_meta(s.seed, s.tol);
  meta["errors"] = s.errors;
  Output out(common.out);
  write_report(out.stream(), common.format, meta, rows, summary);
  return s.violations > 0 ? kExitFail : kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Numerical verification of Hermite-Hadamard type inequalities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hhv_version()));

  // identity
  Common id_common;
  std::string id_fn, id_a = "1", id_b = "2", id_m = "1", id_quad_tol;
  int id_n = 2;
  bool id_recurrence = false;
  auto* identity = app.add_subcommand("identity", "Check the trapezoid identity of order n");
  add_common(identity, id_common);
  identity->add_option("--fn", id_fn, "Function spec")->required();
  identity->add_option("--a", id_a, "a > 0");
  identity->add_option("--b", id_b, "b");
  identity->add_option("--m", id_m, "m in (0, 1]");
  identity->add_option("--n", id_n, "Order n >= 1");
  identity->add_option("--quad-tol", id_quad_tol, "Quadrature tolerance (default tol/10)");
  identity->add_flag("--recurrence", id_recurrence, "Also check the order recurrence (n >= 4)");

  // bound
  Common b_common;
  ParamFlags b_flags;
  std::string b_theorem, b_fn;
  bool b_check = true;
  auto* bound = app.add_subcommand("bound", "Evaluate one inequality instance");
  add_common(bound, b_common);
  add_param_flags(bound, b_flags);
  bound->add_option("--theorem", b_theorem, "Theorem id")->required();
  bound->add_option("--fn", b_fn, "Function spec");
  bound->add_flag("--check-hypothesis,!--no-check-hypothesis", b_check,
                  "Run the convexity hypothesis check (default on)");

  // convexity
  Common c_common;
  std::string c_fn, c_p = "1", c_alpha = "1", c_m = "1", c_lo, c_hi;
  int c_n = 0;
  int c_grid = 64;
  auto* convexity = app.add_subcommand("convexity", "Grid check that |f^(n)|^p is (alpha,m)-convex");
  add_common(convexity, c_common);
  convexity->add_option("--fn", c_fn, "Function spec")->required();
  convexity->add_option("--n", c_n, "Derivative order");
  convexity->add_option("--p", c_p, "Exponent p");
  convexity->add_option("--alpha", c_alpha, "alpha in [0, 1]");
  convexity->add_option("--m", c_m, "m in [0, 1]");
  convexity->add_option("--lo", c_lo, "Domain lower end")->required();
  convexity->add_option("--hi", c_hi, "Domain upper end")->required();
  convexity->add_option("--grid", c_grid, "Grid points per axis");

  // means
  Common m_common;
  ParamFlags m_flags;
  std::string m_prop, m_kind, m_x, m_y;
  auto* means = app.add_subcommand("means", "Special means and the mean inequalities prop1..prop6");
  add_common(means, m_common);
  add_param_flags(means, m_flags);
  means->add_option("--prop", m_prop, "Proposition id prop1..prop6");
  means->add_option("--kind", m_kind, "Mean kind A, G, H, I, L or Lr");
  means->add_option("--x", m_x, "First argument of --kind");
  means->add_option("--y", m_y, "Second argument of --kind");

  // consistency
  Common k_common;
  ParamFlags k_flags;
  std::string k_pair, k_fn;
  auto* consistency = app.add_subcommand("consistency", "Compare a corollary with its parent theorem");
  add_common(consistency, k_common);
  add_param_flags(consistency, k_flags);
  consistency->add_option("--pair", k_pair, "Pair id")->required();
  consistency->add_option("--fn", k_fn, "Function spec")->required();

  // sweep
  Common s_common;
  std::string s_config;
  int s_jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "Seeded parameter sweep for violations");
  add_common(sweep, s_common);
  sweep->add_option("--config", s_config, "Sweep config (JSON)")->required();
  sweep->add_option("--jobs", s_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (identity->parsed()) {
    const double tol = resolve_tol(id_common.tol, 1e-9);
    const double quad_tol = id_quad_tol.empty() ? tol / 10.0 : number(id_quad_tol, "quad-tol");
    const double a = number(id_a, "a");
    const double b = number(id_b, "b");
    const double m = number(id_m, "m");
    FunctionPtr fn = parse_function(id_fn);
    hhv_identity_result r;
    check(hhv_identity(fn.get(), a, b, m, id_n, quad_tol, &r));
    bool pass = r.residual <= tol;
    ordered_json rec;
    rec["fn"] = hhv_function_name(fn.get());
    rec["a"] = a;
    rec["b"] = b;
    rec["m"] = m;
    rec["n"] = id_n;
    rec["tol"] = tol;
    rec["trapezoid"] = num(r.trapezoid);
    rec["lemma_rhs"] = num(r.lemma_rhs);
    rec["residual"] = num(r.residual);
    if (id_recurrence) {
      double rec_res = 0.0;
      check(hhv_recurrence_residual(fn.get(), a, b, m, id_n, quad_tol, &rec_res));
      rec["recurrence_residual"] = num(rec_res);
      pass = pass && rec_res <= tol;
    }
    rec["pass"] = pass;
    Output out(id_common.out);
    write_record(out.stream(), id_common.format, rec);
    return pass ? kExitOk : kExitFail;
  }

  if (bound->parsed()) return run_bound_like(b_theorem, b_fn, b_flags, b_check, b_common);

  if (convexity->parsed()) {
    const double tol = resolve_tol(c_common.tol, 1e-9);
    FunctionPtr fn = parse_function(c_fn);
    hhv_check_result r;
    check(hhv_check_hypothesis(fn.get(), c_n, number(c_p, "p"), number(c_alpha, "alpha"),
                               number(c_m, "m"), number(c_lo, "lo"), number(c_hi, "hi"), c_grid, tol,
                               &r));
    ordered_json rec;
    rec["fn"] = hhv_function_name(fn.get());
    rec["n"] = c_n;
    rec["p"] = number(c_p, "p");
    rec["alpha"] = number(c_alpha, "alpha");
    rec["m"] = number(c_m, "m");
    rec["lo"] = r.domain_lo;
    rec["hi"] = r.domain_hi;
    rec["grid"] = c_grid;
    rec["tol"] = tol;
    rec["passed"] = r.passed != 0;
    rec["max_violation"] = num(r.max_violation);
    rec["witness_x"] = !r.passed && r.has_witness ? num(r.witness_x) : json(nullptr);
    rec["witness_y"] = !r.passed && r.has_witness ? num(r.witness_y) : json(nullptr);
    rec["witness_lambda"] = !r.passed && r.has_witness ? num(r.witness_lambda) : json(nullptr);
    Output out(c_common.out);
    write_record(out.stream(), c_common.format, rec);
    return r.passed ? kExitOk : kExitFail;
  }

  if (means->parsed()) {
    if (!m_prop.empty() == !m_kind.empty()) throw UsageError("means needs exactly one of --prop or --kind");
    if (!m_prop.empty()) return run_bound_like(m_prop, "", m_flags, false, m_common);
    if (m_x.empty() || m_y.empty()) throw UsageError("--kind needs --x and --y");
    const double r = m_flags.r.empty() ? 1.0 : number(m_flags.r, "r");
    double value = 0.0;
    check(hhv_mean(m_kind.c_str(), r, number(m_x, "x"), number(m_y, "y"), &value));
    ordered_json rec;
    rec["kind"] = m_kind;
    rec["r"] = m_kind == "Lr" ? json(r) : json(nullptr);
    rec["x"] = number(m_x, "x");
    rec["y"] = number(m_y, "y");
    rec["value"] = num(value);
    Output out(m_common.out);
    write_record(out.stream(), m_common.format, rec);
    return kExitOk;
  }

  if (consistency->parsed()) {
    FunctionPtr fn = parse_function(k_fn);
    const hhv_params params = to_params(k_flags);
    hhv_consistency_result r;
    check(hhv_consistency(k_pair.c_str(), fn.get(), &params, &r));
    ordered_json rec;
    rec["pair"] = k_pair;
    rec["fn"] = hhv_function_name(fn.get());
    rec["value_a"] = num(r.value_a);
    rec["value_b"] = num(r.value_b);
    rec["rel_diff"] = num(r.rel_diff);
    rec["matched"] = r.matched != 0;
    Output out(k_common.out);
    write_record(out.stream(), k_common.format, rec);
    return r.matched ? kExitOk : kExitFail;
  }

  if (sweep->parsed()) return run_sweep(s_config, s_jobs, s_common);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "hhverify: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hhverify: " << e.what() << '\n';
    return kExitUsage;
  }
}
