#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexity.hpp"
#include "deviations.hpp"
#include "funclib.hpp"

namespace hhv {

inline constexpr std::array<std::string_view, 15> kTheoremIds = {
    "hh",     "thm1.1", "thm1.2", "thm1.3", "thm3.1", "thm3.2", "thm3.3", "cor_e",
    "cor_k",  "prop1",  "prop2",  "prop3",  "prop4",  "prop5",  "prop6"};

bool is_theorem_id(std::string_view id);

enum class Variant { Literal, DerivedFromCorollary };
enum class HypothesisStatus { Checked, Unchecked, Assumed };
enum class Status { Holds, Violated, HypFail, Error };

std::string_view to_string(Variant v);
std::string_view to_string(HypothesisStatus s);
std::string_view to_string(Status s);
Variant parse_variant(std::string_view text);

/// Everything needed to evaluate one theorem instance.
///
/// `p` is always the exponent of the |f^(n)|^p convexity hypothesis. For
/// thm1.1 and thm1.3 the original statements call that exponent q; the
/// conjugate exponent is derived, never passed separately.
struct BoundParams {
  double a = 1.0;
  double b = 2.0;
  double m = 1.0;
  double alpha = 1.0;
  double p = 1.0;
  int n = 2;
  std::optional<double> lambda;  // thm1.2
  std::optional<double> r;       // prop1..prop3, prop5 (literal)
  Variant variant = Variant::Literal;
  std::optional<Interval> check_domain;
  double quad_tol = kDefaultQuadTol;
  int hyp_grid = kDefaultGrid;
  double hyp_tol = kDefaultConvexTol;
};

struct BoundOutcome {
  std::string theorem_id;
  std::string fn;  // catalog spec of the function the check was run on
  BoundParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool hypothesis_ok = true;
  HypothesisStatus hypothesis_status = HypothesisStatus::Unchecked;
  std::optional<CheckResult> hypothesis_witness;
  /// Named intermediate values (thm1.2 branch values, hh chain terms).
  std::vector<std::pair<std::string, double>> extras;
};

/// HOLDS / VIOLATED / HYP_FAIL; VIOLATED iff margin < -tol with the
/// hypothesis satisfied.
Status classify(const BoundOutcome& outcome, double tol);

/// Euler gamma function on 0 < x <= 50.
double gamma(double x);

/// Throws ParamError unless 0 < a < m b, m in (0, 1], alpha in [0, 1].
void validate_hypothesis(const Hypothesis& hyp);

double rhs_thm31(const TestFunction& fn, const Hypothesis& hyp);
double rhs_thm32(const TestFunction& fn, const Hypothesis& hyp);
double rhs_thm33(const TestFunction& fn, const Hypothesis& hyp);

struct Thm12Branches {
  double lower;  // 0 <= λ <= 1/2 case
  double upper;  // 1/2 <= λ <= 1 case
};

/// Both cases of the λ-weighted bound, evaluated at the same λ.
Thm12Branches rhs_thm12_branches(const TestFunction& fn, double a, double b, double lambda);

/// Right-hand side of thm1.1, thm1.2 or thm1.3. For thm1.2 the case is
/// chosen by λ; at λ = 1/2 both cases apply and the smaller one is
/// returned (evaluate_bound records both).
double rhs_intro(std::string_view theorem_id, const TestFunction& fn, const BoundParams& params);

enum class Corollary { E, K };

/// Corollary bounds for m = α = 1, n = 2 on [a, b]. cor_e needs p > 1 and uses
/// q = p/(p-1); cor_k needs p >= 1.
double rhs_corollary(Corollary id, const TestFunction& fn, double a, double b, double p);

struct ConsistencyResult {
  double value_a = 0.0;
  double value_b = 0.0;
  double rel_diff = 0.0;
  bool matched = false;
};

inline constexpr std::array<std::string_view, 4> kConsistencyPairs = {
    "thm31_vs_thm13", "cor_e_vs_thm32", "cor_k_vs_thm33", "thm33_vs_cor_k_p1"};

/// Evaluates two formulas that should coincide at a specialization point.
/// matched iff |value_a - value_b| / max(|value_a|, |value_b|) <= 1e-10.
ConsistencyResult consistency_check(std::string_view pair_id, const TestFunction& fn,
                                    const BoundParams& params);

/// Pairs the left-hand functional of a theorem with its right-hand side and,
/// when requested, runs the convexity hypothesis check. Proposition ids are
/// forwarded to prop_check and ignore fn.
BoundOutcome evaluate_bound(std::string_view theorem_id, const TestFunction& fn,
                            const BoundParams& params, bool check_hypothesis);

}  // namespace hhv
