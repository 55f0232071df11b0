#pragma once

#include <functional>
#include <optional>

#include "funclib.hpp"

namespace hhv {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Parameters of one theorem application: a, b, m, alpha, the exponent p
/// of the |f^(n)|^p hypothesis, the derivative order n, and the interval on
/// which the convexity hypothesis is checked.
struct Hypothesis {
  double a = 0.0;
  double b = 0.0;
  double m = 1.0;
  double alpha = 1.0;
  double p = 1.0;
  int n = 2;
  Interval check_domain;
};

struct Witness {
  double x = 0.0;
  double y = 0.0;
  double lambda = 0.0;
  double lhs = 0.0;  // g(lambda x + m (1 - lambda) y)
  double rhs = 0.0;  // lambda^alpha g(x) + m (1 - lambda^alpha) g(y)
};

struct CheckResult {
  bool passed = false;
  std::optional<Witness> witness;  // worst grid point
  double max_violation = 0.0;
  Interval domain;
};

inline constexpr int kDefaultGrid = 64;
inline constexpr double kDefaultConvexTol = 1e-9;

/// Grid check of g(λx + m(1-λ)y) <= λ^α g(x) + m(1-λ^α) g(y).
///
/// x and y range over grid+1 equispaced nodes of the domain (endpoints
/// included), λ over {1/grid, 2/grid, ..., 1}. The first grid point with the
/// largest violation is reported as the witness. Throws DomainError when g
/// throws or returns a non-finite value, ParamError when grid < 8 or the
/// domain is empty.
CheckResult check_alpha_m_convex(const std::function<double(double)>& g, double alpha, double m,
                                 Interval domain, int grid = kDefaultGrid,
                                 double tol = kDefaultConvexTol);

/// Checks that |f^(n)|^p is (α,m)-convex on hyp.check_domain.
CheckResult check_hypothesis(const TestFunction& fn, const Hypothesis& hyp,
                             int grid = kDefaultGrid, double tol = kDefaultConvexTol);

/// [a, b] when m == 1; [min(a, 1e-6), m b] when m < 1 and fn is singular at
/// 0; [0, m b] otherwise.
Interval default_check_domain(const TestFunction& fn, double a, double b, double m);

}  // namespace hhv
