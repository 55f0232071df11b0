#include "bounds.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "means.hpp"
#include "quad.hpp"

namespace hhv {
namespace {

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

double abs_pow(double v, double p) { return std::pow(std::abs(v), p); }

void require(bool ok, const std::string& what) {
  if (!ok) throw ParamError(what);
}

void validate_interval(double a, double b) { require(a < b, "need a < b"); }

Hypothesis to_hypothesis(const TestFunction& fn, const BoundParams& params) {
  Hypothesis hyp{params.a, params.b, params.m, params.alpha, params.p, params.n, {}};
  hyp.check_domain =
      params.check_domain.value_or(default_check_domain(fn, params.a, params.b, params.m));
  return hyp;
}

// Hypothesis actually checked for each theorem: the derivative order, the
// exponent and (α, m) that its statement places on f.
Hypothesis hypothesis_for(std::string_view id, const TestFunction& fn, const BoundParams& params) {
  Hypothesis hyp = to_hypothesis(fn, params);
  const Interval ab{params.a, params.b};
  if (id == "hh") {
    hyp.n = 0;
    hyp.p = 1.0;
    hyp.alpha = 1.0;
    hyp.m = 1.0;
    hyp.check_domain = params.check_domain.value_or(ab);
  } else if (id == "thm1.1") {
    hyp.n = 2;
    hyp.alpha = 1.0;
    hyp.check_domain = params.check_domain.value_or(ab);
  } else if (id == "thm1.2") {
    hyp.n = 2;
    hyp.p = 1.0;
    hyp.alpha = 1.0;
    hyp.m = 1.0;
    hyp.check_domain = params.check_domain.value_or(ab);
  } else if (id == "thm1.3") {
    hyp.n = 2;
    hyp.check_domain = params.check_domain.value_or(ab);
  } else if (id == "cor_e" || id == "cor_k") {
    hyp.n = 2;
    hyp.alpha = 1.0;
    hyp.m = 1.0;
    hyp.check_domain = params.check_domain.value_or(ab);
  }
  return hyp;
}

double trapezoid_abs(const TestFunction& fn, double a, double b, double m, int n, double tol) {
  return std::abs(trapezoid_deviation(DeviationParams{fn, a, b, m, n, tol}));
}

}  // namespace

bool is_theorem_id(std::string_view id) {
  return std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

std::string_view to_string(Variant v) {
  return v == Variant::Literal ? "literal" : "derived_from_corollary";
}

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Checked:
      return "checked";
    case HypothesisStatus::Unchecked:
      return "unchecked";
    case HypothesisStatus::Assumed:
      return "assumed";
  }
  return "";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "HOLDS";
    case Status::Violated:
      return "VIOLATED";
    case Status::HypFail:
      return "HYP_FAIL";
    case Status::Error:
      return "ERROR";
  }
  return "";
}

Variant parse_variant(std::string_view text) {
  if (text == "literal") return Variant::Literal;
  if (text == "derived_from_corollary" || text == "derived") return Variant::DerivedFromCorollary;
  throw ConfigError("unknown variant '" + std::string(text) + "'");
}

Status classify(const BoundOutcome& outcome, double tol) {
  if (!outcome.hypothesis_ok) return Status::HypFail;
  return outcome.margin < -tol ? Status::Violated : Status::Holds;
}

double gamma(double x) {
  require(x > 0.0 && x <= 50.0, "gamma is provided on 0 < x <= 50");
  return std::tgamma(x);
}

void validate_hypothesis(const Hypothesis& hyp) {
  require(hyp.m > 0.0 && hyp.m <= 1.0, "m must lie in (0, 1]");
  require(hyp.alpha >= 0.0 && hyp.alpha <= 1.0, "alpha must lie in [0, 1]");
  require(hyp.a > 0.0, "a must be positive");
  require(hyp.a < hyp.m * hyp.b, "need a < m b");
}

double rhs_thm31(const TestFunction& fn, const Hypothesis& hyp) {
  validate_hypothesis(hyp);
  require(hyp.n >= 2, "thm3.1 needs n >= 2");
  require(hyp.p >= 1.0, "thm3.1 needs p >= 1");
  const int n = hyp.n;
  const double p = hyp.p;
  const double alpha = hyp.alpha;
  const double moment = kernel_moment(n);
  const double c = (n * (n - 1.0) + alpha * (n - 2.0)) / ((n + alpha) * (n + alpha + 1.0));
  const double da = abs_pow(fn.deriv(n, hyp.a), p);
  const double db = abs_pow(fn.deriv(n, hyp.b), p);
  const double h = hyp.m * hyp.b - hyp.a;
  return 0.5 * std::pow(h, n) / factorial(n) * std::pow(moment, 1.0 - 1.0 / p) *
         std::pow(c * da + hyp.m * (moment - c) * db, 1.0 / p);
}

double rhs_thm32(const TestFunction& fn, const Hypothesis& hyp) {
  validate_hypothesis(hyp);
  require(hyp.n >= 2, "thm3.2 needs n >= 2");
  require(hyp.p > 1.0, "thm3.2 needs p > 1");
  const int n = hyp.n;
  const double p = hyp.p;
  const double q = p / (p - 1.0);
  const double alpha = hyp.alpha;
  const double holder =
      std::pow((std::pow(n, q + 1.0) - std::pow(n - 2.0, q + 1.0)) / (2.0 * (q + 1.0)), 1.0 / q);
  const double s = p * (n - 1.0);
  const double da = abs_pow(fn.deriv(n, hyp.a), p);
  const double db = abs_pow(fn.deriv(n, hyp.b), p);
  const double h = hyp.m * hyp.b - hyp.a;
  const double bracket = da / (s + alpha + 1.0) + hyp.m * alpha * db / ((s + 1.0) * (s + alpha + 1.0));
  return 0.5 * std::pow(h, n) / factorial(n) * holder * std::pow(bracket, 1.0 / p);
}

double rhs_thm33(const TestFunction& fn, const Hypothesis& hyp) {
  validate_hypothesis(hyp);
  require(hyp.n >= 2, "thm3.3 needs n >= 2");
  require(hyp.p >= 1.0, "thm3.3 needs p >= 1");
  const double n = hyp.n;
  const double p = hyp.p;
  const double alpha = hyp.alpha;
  const double s = p * n - p;  // pn - p
  const double e_a = ((n - 2.0) * (s + alpha) + 2.0 * (n - 1.0)) / ((s + alpha + 1.0) * (s + alpha + 2.0));
  const double e_t = (n - 1.0) * (p * n - 2.0 * p + 2.0) / ((s + 1.0) * (s + 2.0));
  const double da = abs_pow(fn.deriv(hyp.n, hyp.a), p);
  const double db = abs_pow(fn.deriv(hyp.n, hyp.b), p);
  const double h = hyp.m * hyp.b - hyp.a;
  return std::pow(n - 1.0, 1.0 - 1.0 / p) / 2.0 * std::pow(h, hyp.n) / factorial(hyp.n) *
         std::pow(e_a * da + hyp.m * (e_t - e_a) * db, 1.0 / p);
}

Thm12Branches rhs_thm12_branches(const TestFunction& fn, double a, double b, double lambda) {
  validate_interval(a, b);
  require(lambda >= 0.0 && lambda <= 1.0, "lambda must lie in [0, 1]");
  const double l = lambda;
  const double fa = std::abs(fn.deriv(2, a));
  const double fb = std::abs(fn.deriv(2, b));
  const double w2 = (b - a) * (b - a);
  const double l4 = l * l * l * l;
  const double coef_a = l4 + (1.0 + l) * std::pow(1.0 - l, 3) + (5.0 * l - 3.0) / 4.0;
  const double coef_b = l4 + (2.0 - l) * l * l * l + (1.0 - 3.0 * l) / 4.0;
  return Thm12Branches{w2 / 24.0 * (coef_a * fa + coef_b * fb),
                       w2 / 48.0 * (3.0 * l - 1.0) * (fa + fb)};
}

double rhs_intro(std::string_view theorem_id, const TestFunction& fn, const BoundParams& params) {
  const double a = params.a;
  const double b = params.b;
  const double m = params.m;
  if (theorem_id == "thm1.1") {
    validate_interval(a, b);
    require(m > 0.0 && m <= 1.0, "m must lie in (0, 1]");
    const double q = params.p;
    require(q > 1.0, "thm1.1 needs an exponent q > 1");
    const double p = q / (q - 1.0);
    const double gamma_ratio = std::pow(gamma(1.0 + p) / gamma(1.5 + p), 1.0 / p);
    const double bracket = (abs_pow(fn.deriv(2, a), q) + m * abs_pow(fn.deriv(2, b / m), q)) / 2.0;
    return (b - a) * (b - a) / 8.0 * gamma_ratio * std::pow(bracket, 1.0 / q);
  }
  if (theorem_id == "thm1.2") {
    require(params.lambda.has_value(), "thm1.2 needs lambda");
    const double l = *params.lambda;
    const Thm12Branches br = rhs_thm12_branches(fn, a, b, l);
    if (l < 0.5) return br.lower;
    if (l > 0.5) return br.upper;
    return std::min(br.lower, br.upper);
  }
  if (theorem_id == "thm1.3") {
    require(m > 0.0 && m <= 1.0, "m must lie in (0, 1]");
    require(params.alpha >= 0.0 && params.alpha <= 1.0, "alpha must lie in [0, 1]");
    require(a > 0.0 && a < m * b, "need 0 < a < m b");
    const double q = params.p;
    require(q >= 1.0, "thm1.3 needs an exponent q >= 1");
    const double inv = 1.0 / ((params.alpha + 2.0) * (params.alpha + 3.0));
    const double h = m * b - a;
    const double bracket = abs_pow(fn.deriv(2, a), q) * inv +
                           m * abs_pow(fn.deriv(2, b), q) * (1.0 / 6.0 - inv);
    return h * h / 2.0 * std::pow(1.0 / 6.0, 1.0 - 1.0 / q) * std::pow(bracket, 1.0 / q);
  }
  throw ParamError("rhs_intro does not cover '" + std::string(theorem_id) + "'");
}

double rhs_corollary(Corollary id, const TestFunction& fn, double a, double b, double p) {
  validate_interval(a, b);
  const double fa = std::abs(fn.deriv(2, a));
  const double fb = std::abs(fn.deriv(2, b));
  const double w2 = (b - a) * (b - a);
  if (id == Corollary::E) {
    require(p > 1.0, "cor_e needs p > 1");
    const double q = p / (p - 1.0);
    const double bracket = ((q + 1.0) * std::pow(fa, q) + std::pow(fb, q)) / (q + 1.0);
    return w2 / (2.0 * std::pow(p + 1.0, 1.0 / p) * std::pow(q + 2.0, 1.0 / q)) *
           std::pow(bracket, 1.0 / q);
  }
  require(p >= 1.0, "cor_k needs p >= 1");
  const double bracket =
      ((p + 1.0) * std::pow(fa, p) + 2.0 * std::pow(fb, p)) / ((p + 1.0) * (p + 2.0) * (p + 3.0));
  return w2 / std::pow(2.0, 2.0 - 1.0 / p) * std::pow(bracket, 1.0 / p);
}

ConsistencyResult consistency_check(std::string_view pair_id, const TestFunction& fn,
                                    const BoundParams& params) {
  ConsistencyResult out;
  Hypothesis hyp = to_hypothesis(fn, params);
  hyp.n = 2;
  Hypothesis unit = hyp;
  unit.m = 1.0;
  unit.alpha = 1.0;
  if (pair_id == "thm31_vs_thm13") {
    BoundParams intro = params;
    intro.n = 2;
    out.value_a = rhs_thm31(fn, hyp);
    out.value_b = rhs_intro("thm1.3", fn, intro);
  } else if (pair_id == "cor_e_vs_thm32") {
    out.value_a = rhs_corollary(Corollary::E, fn, params.a, params.b, params.p);
    out.value_b = rhs_thm32(fn, unit);
  } else if (pair_id == "cor_k_vs_thm33") {
    out.value_a = rhs_corollary(Corollary::K, fn, params.a, params.b, params.p);
    out.value_b = rhs_thm33(fn, unit);
  } else if (pair_id == "thm33_vs_cor_k_p1") {
    unit.p = 1.0;
    out.value_a = rhs_thm33(fn, unit);
    out.value_b = rhs_corollary(Corollary::K, fn, params.a, params.b, 1.0);
  } else {
    throw ParamError("unknown consistency pair '" + std::string(pair_id) + "'");
  }
  const double scale = std::max(std::abs(out.value_a), std::abs(out.value_b));
  out.rel_diff = scale == 0.0 ? 0.0 : std::abs(out.value_a - out.value_b) / scale;
  out.matched = out.rel_diff <= 1e-10;
  return out;
}

BoundOutcome evaluate_bound(std::string_view theorem_id, const TestFunction& fn,
                            const BoundParams& params, bool check_hypothesis) {
  if (theorem_id.substr(0, 4) == "prop" && is_theorem_id(theorem_id)) {
    const int prop = theorem_id.back() - '0';
    const bool uses_p = prop == 1 || prop == 2 || prop == 4 || prop == 5;
    return prop_check(prop, params.a, params.b, uses_p ? std::optional<double>(params.p) : std::nullopt,
                      params.r, params.variant);
  }
  if (!is_theorem_id(theorem_id)) {
    throw ParamError("unknown theorem id '" + std::string(theorem_id) + "'");
  }

  BoundOutcome out;
  out.theorem_id = std::string(theorem_id);
  out.fn = fn.name();
  out.params = params;
  const double a = params.a;
  const double b = params.b;
  const double tol = params.quad_tol;

  if (theorem_id == "hh") {
    // f(mid) <= mean <= trapezoid, written as |mean - centre| <= half-width.
    validate_interval(a, b);
    const double mid = fn.eval(0.5 * (a + b));
    const double mean = mean_value(fn, a, b, tol);
    const double trap = 0.5 * (fn.eval(a) + fn.eval(b));
    out.lhs = std::abs(mean - 0.5 * (trap + mid));
    out.rhs = 0.5 * (trap - mid);
    out.extras = {{"midpoint", mid}, {"mean", mean}, {"trapezoid", trap}};
  } else if (theorem_id == "thm1.1") {
    out.rhs = rhs_intro(theorem_id, fn, params);
    out.lhs = midpoint_deviation(fn, a, b, tol);
  } else if (theorem_id == "thm1.2") {
    require(params.lambda.has_value(), "thm1.2 needs lambda");
    const Thm12Branches br = rhs_thm12_branches(fn, a, b, *params.lambda);
    out.rhs = rhs_intro(theorem_id, fn, params);
    out.lhs = lambda_deviation(fn, a, b, *params.lambda, tol);
    out.extras = {{"rhs_lower_branch", br.lower}, {"rhs_upper_branch", br.upper}};
  } else if (theorem_id == "thm1.3") {
    require(params.n == 2, "thm1.3 is stated for n = 2");
    out.rhs = rhs_intro(theorem_id, fn, params);
    out.lhs = trapezoid_abs(fn, a, b, params.m, 2, tol);
  } else if (theorem_id == "cor_e" || theorem_id == "cor_k") {
    require(params.n == 2, "the corollaries are stated for n = 2");
    require(a > 0.0, "a must be positive");
    out.rhs = rhs_corollary(theorem_id == "cor_e" ? Corollary::E : Corollary::K, fn, a, b, params.p);
    out.lhs = trapezoid_abs(fn, a, b, 1.0, 2, tol);
  } else {
    const Hypothesis hyp = to_hypothesis(fn, params);
    if (theorem_id == "thm3.1") out.rhs = rhs_thm31(fn, hyp);
    else if (theorem_id == "thm3.2") out.rhs = rhs_thm32(fn, hyp);
    else out.rhs = rhs_thm33(fn, hyp);
    out.lhs = trapezoid_abs(fn, a, b, params.m, params.n, tol);
  }
  out.margin = out.rhs - out.lhs;

  if (check_hypothesis) {
    const Hypothesis hyp = hypothesis_for(theorem_id, fn, params);
    CheckResult check = hhv::check_hypothesis(fn, hyp, params.hyp_grid, params.hyp_tol);
    out.hypothesis_ok = check.passed;
    out.hypothesis_status = HypothesisStatus::Checked;
    out.hypothesis_witness = std::move(check);
  } else {
    out.hypothesis_ok = true;
    out.hypothesis_status = HypothesisStatus::Unchecked;
  }
  return out;
}

}  // namespace hhv
