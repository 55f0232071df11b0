// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is nonzero only for failures not listed in kKnownFailures.
// Those are analysed in the project notes and reported as FAIL, never masked.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <hhverify/hhverify.h>

namespace {

// Criterion 5 asks cor_e vs thm3.2 at p=4 to differ by 0.031; the closed
// forms differ by 0.2016 (5.4582 vs 4.3578), see README.
const std::set<int> kKnownFailures = {5};

struct Report {
  int id;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Fn {
  hhv_function* h = nullptr;
  explicit Fn(const char* spec) {
    if (hhv_function_parse(spec, &h) != HHV_OK) h = nullptr;
  }
  ~Fn() { hhv_function_destroy(h); }
  Fn(const Fn&) = delete;
  Fn& operator=(const Fn&) = delete;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

hhv_params base_params() {
  hhv_params p;
  hhv_params_init(&p);
  return p;
}

bool outcome(const char* id, const hhv_function* fn, const hhv_params& p, int check,
             hhv_outcome* o, Report& rep) {
  const hhv_status st = hhv_evaluate_bound(id, fn, &p, check, o);
  if (st != HHV_OK) rep.expect(false, std::string(id) + ": " + hhv_last_error());
  return st == HHV_OK;
}

Report criterion1() {
  Report rep{1, "identity residual <= 1e-9 over catalog x n=1..6 x 12 triples, < 10 s"};
  const auto t0 = std::chrono::steady_clock::now();
  const char* fns[] = {"power:2",    "power:3",  "power:3.5", "power:-0.5", "reciprocal",
                       "neglog",     "exp",      "poly:1,-1,2,1", "scaled:2.5:exp",
                       "scaled:-1:power:1.5"};
  const double triples[12][3] = {{1, 1, 2},     {0.5, 1, 1},    {0.5, 0.8, 1},  {1, 0.5, 3},
                                 {0.2, 0.3, 4}, {2, 0.9, 3},    {0.1, 1, 0.2},  {1.5, 0.75, 2.5},
                                 {0.3, 0.6, 1}, {1, 1, 1.01},   {0.25, 1, 3},   {2.5, 1, 4}};
  double worst = 0.0;
  int cases = 0;
  for (const char* spec : fns) {
    Fn fn(spec);
    for (int n = 1; n <= 6; ++n) {
      for (const auto& t : triples) {
        hhv_identity_result r;
        if (hhv_identity(fn.h, t[0], t[2], t[1], n, 1e-10, &r) != HHV_OK) {
          rep.expect(false, std::string(spec) + ": " + hhv_last_error());
          continue;
        }
        worst = std::max(worst, r.residual);
        ++cases;
        rep.expect(r.residual <= 1e-9, std::string(spec) + " n=" + std::to_string(n) +
                                           " residual " + g17(r.residual));
      }
    }
  }
  // Closed-form cases at n = 2 and n = 3.
  hhv_identity_result r2, r3;
  Fn sq("power:2"), cube("power:3");
  hhv_identity(sq.h, 1, 2, 1, 2, 1e-12, &r2);
  hhv_identity(cube.h, 1, 2, 1, 3, 1e-12, &r3);
  rep.expect(std::abs(r2.trapezoid - 1.0 / 6) <= 1e-12 && std::abs(r2.lemma_rhs - 1.0 / 6) <= 1e-12,
             "n=2 closed form");
  rep.expect(std::abs(r3.trapezoid - 0.25) <= 1e-12 && std::abs(r3.lemma_rhs - 0.25) <= 1e-12,
             "n=3 closed form");
  const double secs = seconds_since(t0);
  rep.expect(secs < 10.0, "runtime " + g17(secs) + " s");
  rep.notes.insert(rep.notes.begin(), std::to_string(cases) + " cases, max residual " + g17(worst) +
                                          ", " + g17(secs).substr(0, 5) + " s");
  return rep;
}

Report criterion2() {
  Report rep{2, "recurrence residual <= 1e-9, n=4..6 on power(5), exp, cubic"};
  double worst = 0.0;
  for (const char* spec : {"power:5", "exp", "poly:1,-1,2,1"}) {
    Fn fn(spec);
    for (int n = 4; n <= 6; ++n) {
      double res = 0;
      if (hhv_recurrence_residual(fn.h, 1, 2, 1, n, 1e-11, &res) != HHV_OK) {
        rep.expect(false, hhv_last_error());
        continue;
      }
      worst = std::max(worst, res);
      rep.expect(res <= 1e-9, std::string(spec) + " n=" + std::to_string(n) + " " + g17(res));
    }
  }
  Fn cubic("poly:1,-1,2,1");
  hhv_identity_result s4;
  hhv_identity(cubic.h, 1, 2, 1, 4, 1e-12, &s4);
  rep.expect(s4.lemma_rhs == 0.0, "cubic S(4) = " + g17(s4.lemma_rhs));
  rep.notes.insert(rep.notes.begin(), "max residual " + g17(worst));
  return rep;
}

Report criterion3() {
  Report rep{3, "1000-sample thm3.1/thm3.3 sweeps, zero violations at tol 1e-8, < 60 s"};
  const auto t0 = std::chrono::steady_clock::now();
  const std::string convex =
      R"("fn_set": ["power:2", "power:3", "power:4", "power:5", "exp"],
         "n_set": [2, 3, 4], "ranges": {"a": [0.5, 2], "b": [1, 4], "m": 1, "alpha": 1, "p": [1, 4]})";
  const std::string mixed =
      R"("fn_set": ["power:3", "power:4", "power:5", "power:6"],
         "n_set": [2], "ranges": {"a": [0.2, 1], "b": [1.5, 3], "m": [0.5, 1], "alpha": [0.3, 1], "p": [1, 3]})";
  int64_t checked_total = 0;
  int64_t hyp_ok_total = 0;
  for (const char* id : {"thm3.1", "thm3.3"}) {
    for (const auto* stratum : {&convex, &mixed}) {
      const std::string cfg = std::string(R"({"theorem_id": ")") + id + R"(", )" + *stratum +
                              R"(, "samples": 1000, "seed": 7, "tol": 1e-8, "check_hypothesis": true})";
      hhv_sweep* s = nullptr;
      if (hhv_sweep_run(cfg.c_str(), 1, &s) != HHV_OK) {
        rep.expect(false, hhv_last_error());
        continue;
      }
      hhv_sweep_summary sum;
      hhv_sweep_summary_get(s, &sum);
      const std::string label = std::string(id) + (stratum == &convex ? " m=alpha=1" : " mixed");
      rep.expect(sum.violations == 0, label + ": " + std::to_string(sum.violations) + " violations");
      rep.expect(sum.errors == 0, label + ": " + std::to_string(sum.errors) + " errors");
      for (int64_t i = 0; i < hhv_sweep_row_count(s); ++i) {
        hhv_row row;
        hhv_sweep_row(s, i, &row);
        if (row.status == HHV_HOLDS) ++hyp_ok_total;
      }
      checked_total += sum.checked;
      hhv_sweep_destroy(s);
    }
  }
  const double secs = seconds_since(t0);
  rep.expect(secs < 60.0, "runtime " + g17(secs) + " s");
  rep.notes.insert(rep.notes.begin(), std::to_string(checked_total) + " rows, " +
                                          std::to_string(hyp_ok_total) +
                                          " with verified hypotheses, " + g17(secs).substr(0, 5) +
                                          " s");
  return rep;
}

Report criterion4() {
  Report rep{4, "spot bound values for f = x^4 on [1,2]"};
  Fn q("power:4");
  hhv_params p = base_params();
  hhv_outcome o;
  if (outcome("thm3.1", q.h, p, 1, &o, rep)) {
    rep.expect(std::abs(o.rhs - 2.5) <= 1e-9, "thm3.1 rhs " + g17(o.rhs));
    rep.expect(std::abs(o.lhs - 2.3) <= 1e-9, "thm3.1 lhs " + g17(o.lhs));
    rep.expect(std::abs(o.margin - 0.2) <= 1e-9, "thm3.1 margin " + g17(o.margin));
  }
  p.p = 2;
  if (outcome("thm3.2", q.h, p, 0, &o, rep))
    rep.expect(std::abs(o.rhs - 4.3590) <= 1e-3, "thm3.2 rhs " + g17(o.rhs));
  if (outcome("thm3.3", q.h, p, 0, &o, rep))
    rep.expect(std::abs(o.rhs - 3.2404) <= 1e-3, "thm3.3 rhs " + g17(o.rhs));
  if (outcome("thm1.1", q.h, p, 0, &o, rep)) {
    rep.expect(std::abs(o.rhs - 3.3926) <= 1e-3, "thm1.1 rhs " + g17(o.rhs));
    rep.expect(std::abs(o.lhs - 1.1375) <= 1e-9, "thm1.1 lhs " + g17(o.lhs));
  }
  return rep;
}

Report criterion5() {
  Report rep{5, "corollary/theorem consistency"};
  Fn q("power:4");
  hhv_consistency_result c;
  int grid_matched = 0;
  for (double alpha : {0.25, 0.5, 1.0}) {
    for (double p : {1.0, 2.0, 4.0}) {
      for (double m : {0.6, 0.8, 1.0}) {
        hhv_params prm = base_params();
        prm.alpha = alpha;
        prm.p = p;
        prm.m = m;
        if (hhv_consistency("thm31_vs_thm13", q.h, &prm, &c) != HHV_OK) {
          rep.expect(false, hhv_last_error());
          continue;
        }
        grid_matched += c.matched && c.rel_diff <= 1e-10;
      }
    }
  }
  rep.expect(grid_matched == 27, "thm31_vs_thm13 matched " + std::to_string(grid_matched) + "/27");
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    hhv_params prm = base_params();
    prm.p = p;
    hhv_consistency("cor_k_vs_thm33", q.h, &prm, &c);
    rep.expect(c.matched != 0, "cor_k_vs_thm33 p=" + g17(p) + " rel_diff " + g17(c.rel_diff));
  }
  hhv_params prm = base_params();
  prm.p = 2;
  hhv_consistency("cor_e_vs_thm32", q.h, &prm, &c);
  rep.expect(c.matched != 0, "cor_e_vs_thm32 p=2 rel_diff " + g17(c.rel_diff));
  prm.p = 4;
  hhv_consistency("cor_e_vs_thm32", q.h, &prm, &c);
  rep.expect(c.matched == 0, "cor_e_vs_thm32 p=4 unexpectedly matched");
  rep.expect(std::abs(c.rel_diff - 0.031) <= 0.005,
             "cor_e_vs_thm32 p=4 rel_diff " + g17(c.rel_diff) + " (thm3.2 " + g17(c.value_b) +
                 ", cor_e " + g17(c.value_a) + "), expected 0.031 +- 0.005");
  return rep;
}

Report criterion6() {
  Report rep{6, "discrepancies detected: thm1.2 branches, thm1.2 literal, prop3, prop6"};
  hhv_outcome o;
  {
    Fn half_sq("poly:0,0,0.5");
    hhv_params p = base_params();
    p.a = 0;
    p.b = 1;
    p.has_lambda = 1;
    p.lambda = 0.5;
    if (outcome("thm1.2", half_sq.h, p, 0, &o, rep)) {
      const double ratio = o.rhs_upper_branch / o.rhs_lower_branch;
      rep.expect(o.has_branches && std::abs(ratio - 2.0) <= 1e-9, "a: branch ratio " + g17(ratio));
    }
  }
  {
    Fn sq("power:2");
    hhv_params p = base_params();
    p.a = 0;
    p.b = 4;
    p.has_lambda = 1;
    p.lambda = 1;
    if (outcome("thm1.2", sq.h, p, 1, &o, rep)) {
      rep.expect(std::abs(o.lhs - 40.0 / 3) <= 1e-9 && std::abs(o.rhs - 8.0 / 3) <= 1e-9,
                 "b: lhs " + g17(o.lhs) + " rhs " + g17(o.rhs));
      rep.expect(hhv_classify(&o, 1e-8) == HHV_VIOLATED, "b: not VIOLATED");
    }
  }
  {
    hhv_params p = base_params();
    p.has_r = 1;
    p.r = 2;
    if (outcome("prop3", nullptr, p, 0, &o, rep)) {
      rep.expect(std::abs(o.lhs - 1.0 / 6) <= 1e-9 && std::abs(o.rhs - 1.0 / 12) <= 1e-9,
                 "c: literal lhs " + g17(o.lhs) + " rhs " + g17(o.rhs));
      rep.expect(hhv_classify(&o, 1e-8) == HHV_VIOLATED, "c: literal not VIOLATED");
    }
    p.variant = HHV_VARIANT_DERIVED;
    if (outcome("prop3", nullptr, p, 0, &o, rep)) {
      rep.expect(std::abs(o.margin) <= 1e-10, "c: derived margin " + g17(o.margin));
      rep.expect(hhv_classify(&o, 1e-8) == HHV_HOLDS, "c: derived not HOLDS");
    }
  }
  {
    hhv_params p = base_params();
    p.b = 1.1;
    if (outcome("prop6", nullptr, p, 0, &o, rep)) {
      rep.expect(std::abs(o.lhs - 7.569e-4) <= 1e-7, "d: lhs " + g17(o.lhs));
      rep.expect(std::abs(o.rhs - 3.805e-4) <= 1e-7, "d: rhs " + g17(o.rhs));
      rep.expect(hhv_classify(&o, 1e-8) == HHV_VIOLATED, "d: not VIOLATED");
    }
  }
  return rep;
}

double mean_of(const char* kind, double x, double y) {
  double v = NAN;
  hhv_mean(kind, 1.0, x, y, &v);
  return v;
}

Report criterion7() {
  Report rep{7, "means: symmetry, homogeneity, H < G < L < I < A, I(1,e)"};
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    double y = u(rng);
    if (y == x) y = x + 1;
    const double s = 0.1 + u(rng) / 10;
    double vals[5];
    int k = 0;
    for (const char* kind : {"H", "G", "L", "I", "A"}) {
      const double v = mean_of(kind, x, y);
      vals[k++] = v;
      if (std::abs(v - mean_of(kind, y, x)) > 1e-13 * v) ++bad;
      if (std::abs(mean_of(kind, s * x, s * y) - s * v) > 1e-13 * s * v) ++bad;
    }
    for (int j = 0; j + 1 < 5; ++j)
      if (!(vals[j] < vals[j + 1])) ++bad;
  }
  rep.expect(bad == 0, std::to_string(bad) + " property failures on 100 pairs");
  const double e = std::numbers::e;
  const double ie = mean_of("I", 1, e);
  rep.expect(std::abs(ie - std::exp(1 / (e - 1))) <= 1e-12, "I(1,e) = " + g17(ie));
  return rep;
}

std::string capture(const std::string& cmd, int* code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int st = pclose(pipe);
  *code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Report criterion8() {
  Report rep{8, "sweep CSV byte-identical for --jobs 1 and --jobs 8"};
  const std::string cfg = std::string(HHVERIFY_CONFIGS) + "/thm33_mixed.json";
  int c1 = 0, c8 = 0;
  const std::string bin = HHVERIFY_BIN;
  const std::string a = capture(bin + " sweep --config " + cfg + " --jobs 1 --format csv", &c1);
  const std::string b = capture(bin + " sweep --config " + cfg + " --jobs 8 --format csv", &c8);
  rep.expect(c1 == 0 && c8 == 0, "exit codes " + std::to_string(c1) + "/" + std::to_string(c8));
  rep.expect(!a.empty() && a == b, "outputs differ");
  rep.notes.insert(rep.notes.begin(), std::to_string(a.size()) + " bytes");
  return rep;
}

}  // namespace

int main() {
  std::vector<Report> reports;
  reports.push_back(criterion1());
  reports.push_back(criterion2());
  reports.push_back(criterion3());
  reports.push_back(criterion4());
  reports.push_back(criterion5());
  reports.push_back(criterion6());
  reports.push_back(criterion7());
  reports.push_back(criterion8());

  int unexpected = 0;
  for (const auto& r : reports) {
    std::printf("%s %d %s\n", r.ok ? "PASS" : "FAIL", r.id, r.title.c_str());
    for (const auto& note : r.notes) std::printf("       %s\n", note.c_str());
    if (!r.ok && !kKnownFailures.count(r.id)) ++unexpected;
    if (r.ok && kKnownFailures.count(r.id)) {
      std::printf("       (listed as a known failure but passed)\n");
    }
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
