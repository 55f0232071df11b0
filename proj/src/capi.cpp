#include <hhverify/hhverify.h>

#include <cmath>
#include <exception>
#include <string>

#include "bounds.hpp"
#include "convexity.hpp"
#include "deviations.hpp"
#include "errors.hpp"
#include "falsify.hpp"
#include "means.hpp"
#include "quad.hpp"

struct hhv_function {
  hhv::TestFunction fn;
  std::string name;
};

struct hhv_sweep {
  hhv::SweepSpec spec;
  hhv::SweepResult result;
};

namespace {

thread_local std::string g_last_error;

hhv_status fail(hhv_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename F>
hhv_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return HHV_OK;
  } catch (const hhv::Error& e) {
    switch (e.code()) {
      case hhv::ErrorCode::Domain:
        return fail(HHV_ERR_DOMAIN, e.what());
      case hhv::ErrorCode::Param:
        return fail(HHV_ERR_PARAM, e.what());
      case hhv::ErrorCode::NoConvergence:
        return fail(HHV_ERR_NO_CONVERGENCE, e.what());
      case hhv::ErrorCode::EmptySweep:
        return fail(HHV_ERR_EMPTY_SWEEP, e.what());
      case hhv::ErrorCode::Config:
        return fail(HHV_ERR_CONFIG, e.what());
    }
    return fail(HHV_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(HHV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HHV_ERR_INTERNAL, "unknown error");
  }
}

#define HHV_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(HHV_ERR_NULL_ARGUMENT, #ptr " is NULL")

hhv::BoundParams from_c(const hhv_params& c) {
  hhv::BoundParams p;
  p.a = c.a;
  p.b = c.b;
  p.m = c.m;
  p.alpha = c.alpha;
  p.p = c.p;
  p.n = c.n;
  if (c.has_lambda) p.lambda = c.lambda;
  if (c.has_r) p.r = c.r;
  p.variant = c.variant == HHV_VARIANT_DERIVED ? hhv::Variant::DerivedFromCorollary
                                               : hhv::Variant::Literal;
  if (c.has_check_domain) p.check_domain = hhv::Interval{c.check_lo, c.check_hi};
  p.quad_tol = c.quad_tol;
  p.hyp_grid = c.hyp_grid;
  p.hyp_tol = c.hyp_tol;
  return p;
}

hhv_params to_c(const hhv::BoundParams& p) {
  hhv_params c;
  hhv_params_init(&c);
  c.a = p.a;
  c.b = p.b;
  c.m = p.m;
  c.alpha = p.alpha;
  c.p = p.p;
  c.n = p.n;
  c.has_lambda = p.lambda.has_value();
  c.lambda = p.lambda.value_or(0.0);
  c.has_r = p.r.has_value();
  c.r = p.r.value_or(0.0);
  c.variant = p.variant == hhv::Variant::DerivedFromCorollary ? HHV_VARIANT_DERIVED
                                                              : HHV_VARIANT_LITERAL;
  c.has_check_domain = p.check_domain.has_value();
  c.check_lo = p.check_domain ? p.check_domain->lo : 0.0;
  c.check_hi = p.check_domain ? p.check_domain->hi : 0.0;
  c.quad_tol = p.quad_tol;
  c.hyp_grid = p.hyp_grid;
  c.hyp_tol = p.hyp_tol;
  return c;
}

hhv_check_result to_c(const hhv::CheckResult& r) {
  hhv_check_result c{};
  c.passed = r.passed;
  c.max_violation = r.max_violation;
  c.domain_lo = r.domain.lo;
  c.domain_hi = r.domain.hi;
  c.has_witness = r.witness.has_value();
  if (r.witness) {
    c.witness_x = r.witness->x;
    c.witness_y = r.witness->y;
    c.witness_lambda = r.witness->lambda;
    c.witness_lhs = r.witness->lhs;
    c.witness_rhs = r.witness->rhs;
  }
  return c;
}

hhv_outcome to_c(const hhv::BoundOutcome& o) {
  hhv_outcome c{};
  c.lhs = o.lhs;
  c.rhs = o.rhs;
  c.margin = o.margin;
  c.hypothesis_ok = o.hypothesis_ok;
  switch (o.hypothesis_status) {
    case hhv::HypothesisStatus::Checked:
      c.hypothesis_status = HHV_HYP_CHECKED;
      break;
    case hhv::HypothesisStatus::Unchecked:
      c.hypothesis_status = HHV_HYP_UNCHECKED;
      break;
    case hhv::HypothesisStatus::Assumed:
      c.hypothesis_status = HHV_HYP_ASSUMED;
      break;
  }
  c.has_check = o.hypothesis_witness.has_value();
  if (o.hypothesis_witness) c.check = to_c(*o.hypothesis_witness);
  for (const auto& [name, value] : o.extras) {
    if (name == "rhs_lower_branch") {
      c.has_branches = 1;
      c.rhs_lower_branch = value;
    } else if (name == "rhs_upper_branch") {
      c.rhs_upper_branch = value;
    }
  }
  c.params = to_c(o.params);
  return c;
}

hhv_row_status to_c(hhv::Status s) {
  switch (s) {
    case hhv::Status::Holds:
      return HHV_HOLDS;
    case hhv::Status::Violated:
      return HHV_VIOLATED;
    case hhv::Status::HypFail:
      return HHV_HYP_FAIL;
    case hhv::Status::Error:
      return HHV_ERROR;
  }
  return HHV_ERROR;
}

}  // namespace

extern "C" {

const char* hhv_version(void) { return "1.0.0"; }

const char* hhv_last_error(void) { return g_last_error.c_str(); }

hhv_status hhv_parse_number(const char* text, double* out) {
  HHV_REQUIRE(text);
  HHV_REQUIRE(out);
  return guarded([&] { *out = hhv::parse_number(text); });
}

void hhv_params_init(hhv_params* params) {
  if (params == nullptr) return;
  *params = hhv_params{};
  params->a = 1.0;
  params->b = 2.0;
  params->m = 1.0;
  params->alpha = 1.0;
  params->p = 1.0;
  params->n = 2;
  params->variant = HHV_VARIANT_LITERAL;
  params->quad_tol = hhv::kDefaultQuadTol;
  params->hyp_grid = hhv::kDefaultGrid;
  params->hyp_tol = hhv::kDefaultConvexTol;
}

hhv_status hhv_function_parse(const char* spec, hhv_function** out) {
  HHV_REQUIRE(spec);
  HHV_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    hhv::TestFunction fn = hhv::TestFunction::parse(spec);
    std::string name = fn.name();
    *out = new hhv_function{std::move(fn), std::move(name)};
  });
}

void hhv_function_destroy(hhv_function* fn) { delete fn; }

const char* hhv_function_name(const hhv_function* fn) { return fn ? fn->name.c_str() : ""; }

hhv_status hhv_function_eval(const hhv_function* fn, double x, double* out) {
  HHV_REQUIRE(fn);
  HHV_REQUIRE(out);
  return guarded([&] { *out = fn->fn.eval(x); });
}

hhv_status hhv_function_deriv(const hhv_function* fn, int k, double x, double* out) {
  HHV_REQUIRE(fn);
  HHV_REQUIRE(out);
  return guarded([&] { *out = fn->fn.deriv(k, x); });
}

hhv_status hhv_kernel_moment(int n, double* out) {
  HHV_REQUIRE(out);
  return guarded([&] { *out = hhv::kernel_moment(n); });
}

hhv_status hhv_gamma(double x, double* out) {
  HHV_REQUIRE(out);
  return guarded([&] { *out = hhv::gamma(x); });
}

hhv_status hhv_identity(const hhv_function* fn, double a, double b, double m, int n,
                        double quad_tol, hhv_identity_result* out) {
  HHV_REQUIRE(fn);
  HHV_REQUIRE(out);
  return guarded([&] {
    const hhv::DeviationParams params{fn->fn, a, b, m, n, quad_tol};
    out->trapezoid = hhv::trapezoid_deviation(params);
    out->lemma_rhs = hhv::lemma_rhs(params);
    out->residual = std::abs(out->trapezoid - out->lemma_rhs);
  });
}

hhv_status hhv_recurrence_residual(const hhv_function* fn, double a, double b, double m, int n,
                                   double quad_tol, double* out) {
  HHV_REQUIRE(fn);
  HHV_REQUIRE(out);
  return guarded([&] {
    *out = hhv::recurrence_residual(hhv::DeviationParams{fn->fn, a, b, m, n, quad_tol});
  });
}

hhv_status hhv_check_hypothesis(const hhv_function* fn, int n, double p, double alpha, double m,
                                double lo, double hi, int grid, double tol,
                                hhv_check_result* out) {
  HHV_REQUIRE(fn);
  HHV_REQUIRE(out);
  return guarded([&] {
    hhv::Hypothesis hyp;
    hyp.n = n;
    hyp.p = p;
    hyp.alpha = alpha;
    hyp.m = m;
    hyp.check_domain = {lo, hi};
    *out = to_c(hhv::check_hypothesis(fn->fn, hyp, grid, tol));
  });
}

hhv_status hhv_evaluate_bound(const char* theorem_id, const hhv_function* fn,
                              const hhv_params* params, int check_hypothesis, hhv_outcome* out) {
  HHV_REQUIRE(theorem_id);
  HHV_REQUIRE(params);
  HHV_REQUIRE(out);
  const std::string id = theorem_id;
  if (fn == nullptr && id.rfind("prop", 0) != 0) {
    return fail(HHV_ERR_NULL_ARGUMENT, "fn is NULL");
  }
  return guarded([&] {
    const hhv::TestFunction placeholder = hhv::TestFunction::exponential();
    const hhv::TestFunction& f = fn ? fn->fn : placeholder;
    *out = to_c(hhv::evaluate_bound(id, f, from_c(*params), check_hypothesis != 0));
  });
}

hhv_row_status hhv_classify(const hhv_outcome* outcome, double tol) {
  if (outcome == nullptr) return HHV_ERROR;
  if (!outcome->hypothesis_ok) return HHV_HYP_FAIL;
  return outcome->margin < -tol ? HHV_VIOLATED : HHV_HOLDS;
}

hhv_status hhv_mean(const char* kind, double r, double x, double y, double* out) {
  HHV_REQUIRE(kind);
  HHV_REQUIRE(out);
  return guarded([&] { *out = hhv::mean(hhv::parse_mean_kind(kind, r), x, y); });
}

hhv_status hhv_consistency(const char* pair_id, const hhv_function* fn, const hhv_params* params,
                           hhv_consistency_result* out) {
  HHV_REQUIRE(pair_id);
  HHV_REQUIRE(fn);
  HHV_REQUIRE(params);
  HHV_REQUIRE(out);
  return guarded([&] {
    const hhv::ConsistencyResult r = hhv::consistency_check(pair_id, fn->fn, from_c(*params));
    *out = hhv_consistency_result{r.value_a, r.value_b, r.rel_diff, r.matched};
  });
}

hhv_status hhv_sweep_run(const char* config_json, int jobs, hhv_sweep** out) {
  HHV_REQUIRE(config_json);
  HHV_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    hhv::SweepSpec spec = hhv::parse_sweep_spec(config_json);
    hhv::SweepResult result = hhv::sweep(spec, jobs);
    *out = new hhv_sweep{std::move(spec), std::move(result)};
  });
}

void hhv_sweep_destroy(hhv_sweep* sweep) { delete sweep; }

int64_t hhv_sweep_row_count(const hhv_sweep* sweep) {
  return sweep ? static_cast<int64_t>(sweep->result.rows.size()) : 0;
}

hhv_status hhv_sweep_row(const hhv_sweep* sweep, int64_t i, hhv_row* out) {
  HHV_REQUIRE(sweep);
  HHV_REQUIRE(out);
  if (i < 0 || i >= hhv_sweep_row_count(sweep)) return fail(HHV_ERR_PARAM, "row index out of range");
  const hhv::SweepRow& row = sweep->result.rows[static_cast<std::size_t>(i)];
  *out = hhv_row{};
  out->index = row.index;
  out->status = to_c(row.status);
  out->theorem_id = sweep->spec.theorem_id.c_str();
  out->fn = row.fn.c_str();
  out->error = row.error.c_str();
  if (row.outcome) {
    out->outcome = to_c(*row.outcome);
  } else {
    out->outcome.params = to_c(row.params);
  }
  return HHV_OK;
}

hhv_status hhv_sweep_summary_get(const hhv_sweep* sweep, hhv_sweep_summary* out) {
  HHV_REQUIRE(sweep);
  HHV_REQUIRE(out);
  const hhv::SweepResult& r = sweep->result;
  *out = hhv_sweep_summary{};
  out->seed = sweep->spec.seed;
  out->tol = sweep->spec.tol;
  out->checked = r.checked;
  out->violations = static_cast<int64_t>(r.violations.size());
  out->errors = r.errors;
  out->has_min_margin = r.min_margin.has_value();
  if (r.min_margin) {
    out->min_margin = r.min_margin->margin;
    out->min_margin_index = r.min_margin->index;
  }
  return HHV_OK;
}

hhv_status hhv_sweep_tightness(const hhv_sweep* sweep, double* margin, int64_t* index) {
  HHV_REQUIRE(sweep);
  HHV_REQUIRE(margin);
  HHV_REQUIRE(index);
  auto best = hhv::tightest(sweep->result, sweep->spec.tol);
  if (!best) return fail(HHV_ERR_EMPTY_SWEEP, "no hypothesis-passing sample in the sweep");
  *margin = best->margin;
  *index = best->index;
  return HHV_OK;
}

}  // extern "C"
