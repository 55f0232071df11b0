#include <cstring>
#include <string>

#include <gtest/gtest.h>

#include <hhverify/hhverify.h>

namespace {

hhv_function* parse(const char* spec) {
  hhv_function* fn = nullptr;
  EXPECT_EQ(hhv_function_parse(spec, &fn), HHV_OK) << hhv_last_error();
  return fn;
}

}  // namespace

TEST(CApi, FunctionHandle) {
  hhv_function* fn = parse("power:4");
  double v = 0;
  EXPECT_EQ(hhv_function_eval(fn, 2.0, &v), HHV_OK);
  EXPECT_EQ(v, 16.0);
  EXPECT_EQ(hhv_function_deriv(fn, 2, 2.0, &v), HHV_OK);
  EXPECT_EQ(v, 48.0);
  EXPECT_STREQ(hhv_function_name(fn), "power:4");
  hhv_function_destroy(fn);
  hhv_function_destroy(nullptr);
}

TEST(CApi, ErrorCodes) {
  hhv_function* fn = nullptr;
  EXPECT_EQ(hhv_function_parse("nope", &fn), HHV_ERR_CONFIG);
  EXPECT_EQ(fn, nullptr);
  EXPECT_GT(std::strlen(hhv_last_error()), 0u);
  EXPECT_EQ(hhv_function_parse(nullptr, &fn), HHV_ERR_NULL_ARGUMENT);

  hhv_function* nl = parse("neglog");
  double v = 0;
  EXPECT_EQ(hhv_function_eval(nl, -1.0, &v), HHV_ERR_DOMAIN);
  hhv_function_destroy(nl);

  EXPECT_EQ(hhv_kernel_moment(1, &v), HHV_ERR_PARAM);
  double x = 0;
  EXPECT_EQ(hhv_parse_number("4/3", &x), HHV_OK);
  EXPECT_EQ(x, 4.0 / 3.0);
  EXPECT_EQ(hhv_parse_number("x", &x), HHV_ERR_CONFIG);
}

TEST(CApi, BoundAndClassify) {
  hhv_function* fn = parse("power:4");
  hhv_params p;
  hhv_params_init(&p);
  hhv_outcome o;
  ASSERT_EQ(hhv_evaluate_bound("thm3.1", fn, &p, 1, &o), HHV_OK) << hhv_last_error();
  EXPECT_NEAR(o.lhs, 2.3, 1e-12);
  EXPECT_DOUBLE_EQ(o.rhs, 2.5);
  EXPECT_TRUE(o.hypothesis_ok);
  EXPECT_TRUE(o.has_check);
  EXPECT_EQ(hhv_classify(&o, 1e-8), HHV_HOLDS);

  p.a = 0;
  p.b = 4;
  p.has_lambda = 1;
  p.lambda = 0.5;
  hhv_function* sq = parse("power:2");
  ASSERT_EQ(hhv_evaluate_bound("thm1.2", sq, &p, 0, &o), HHV_OK);
  EXPECT_TRUE(o.has_branches);
  EXPECT_NEAR(o.rhs_upper_branch / o.rhs_lower_branch, 2.0, 1e-12);
  hhv_function_destroy(sq);
  hhv_function_destroy(fn);
}

TEST(CApi, PropWithoutFunction) {
  hhv_params p;
  hhv_params_init(&p);
  p.has_r = 1;
  p.r = 2;
  hhv_outcome o;
  ASSERT_EQ(hhv_evaluate_bound("prop3", nullptr, &p, 0, &o), HHV_OK) << hhv_last_error();
  EXPECT_EQ(hhv_classify(&o, 1e-8), HHV_VIOLATED);
  EXPECT_EQ(o.hypothesis_status, HHV_HYP_ASSUMED);
  EXPECT_EQ(hhv_evaluate_bound("thm3.1", nullptr, &p, 0, &o), HHV_ERR_NULL_ARGUMENT);
}

TEST(CApi, IdentityMeansConsistency) {
  hhv_function* fn = parse("power:3");
  hhv_identity_result r;
  ASSERT_EQ(hhv_identity(fn, 1, 2, 1, 3, 1e-12, &r), HHV_OK);
  EXPECT_NEAR(r.trapezoid, 0.25, 1e-12);
  EXPECT_LE(r.residual, 1e-10);
  hhv_function_destroy(fn);

  double v = 0;
  ASSERT_EQ(hhv_mean("Lr", 2, 1, 2, &v), HHV_OK);
  EXPECT_NEAR(v, 1.527525231651947, 1e-14);
  EXPECT_EQ(hhv_mean("Z", 1, 1, 2, &v), HHV_ERR_CONFIG);

  hhv_function* q = parse("power:4");
  hhv_params p;
  hhv_params_init(&p);
  p.p = 4;
  hhv_consistency_result c;
  ASSERT_EQ(hhv_consistency("cor_e_vs_thm32", q, &p, &c), HHV_OK);
  EXPECT_FALSE(c.matched);
  hhv_function_destroy(q);
}

TEST(CApi, Sweep) {
  const char* config = R"({"theorem_id": "thm3.1", "fn_set": ["power:4", "exp"],
                           "ranges": {"p": 1}, "samples": 20, "seed": 3})";
  hhv_sweep* s = nullptr;
  ASSERT_EQ(hhv_sweep_run(config, 2, &s), HHV_OK) << hhv_last_error();
  EXPECT_EQ(hhv_sweep_row_count(s), 20);
  hhv_row row;
  ASSERT_EQ(hhv_sweep_row(s, 19, &row), HHV_OK);
  EXPECT_EQ(row.index, 19);
  EXPECT_STREQ(row.theorem_id, "thm3.1");
  EXPECT_EQ(hhv_sweep_row(s, 20, &row), HHV_ERR_PARAM);
  hhv_sweep_summary sum;
  ASSERT_EQ(hhv_sweep_summary_get(s, &sum), HHV_OK);
  EXPECT_EQ(sum.seed, 3u);
  EXPECT_EQ(sum.violations, 0);
  double margin = 0;
  int64_t index = -1;
  EXPECT_EQ(hhv_sweep_tightness(s, &margin, &index), HHV_OK);
  EXPECT_GE(index, 0);
  hhv_sweep_destroy(s);

  EXPECT_EQ(hhv_sweep_run(R"({"theorem_id": "thm3.1", "oops": 1})", 1, &s), HHV_ERR_CONFIG);
}
