#include "convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace hhv {
namespace {

constexpr double kRoundingSlack = 64.0 * std::numeric_limits<double>::epsilon();

double finite_or_throw(double v, double x) {
  if (!std::isfinite(v)) throw DomainError("g is not finite at x = " + format_number(x));
  return v;
}

}  // namespace

CheckResult check_alpha_m_convex(const std::function<double(double)>& g, double alpha, double m,
                                 Interval domain, int grid, double tol) {
  if (grid < 8) throw ParamError("convexity grid must be at least 8");
  if (!(domain.lo <= domain.hi)) throw ParamError("convexity domain is empty");

  const double step = (domain.hi - domain.lo) / grid;
  std::vector<double> nodes(grid + 1);
  std::vector<double> values(grid + 1);
  for (int i = 0; i <= grid; ++i) {
    nodes[i] = i == grid ? domain.hi : domain.lo + i * step;
    values[i] = finite_or_throw(g(nodes[i]), nodes[i]);
  }

  CheckResult out;
  out.domain = domain;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (int l = 1; l <= grid; ++l) {
    const double lambda = static_cast<double>(l) / grid;
    const double weight = std::pow(lambda, alpha);
    for (int i = 0; i <= grid; ++i) {
      for (int j = 0; j <= grid; ++j) {
        const double z = lambda * nodes[i] + m * (1.0 - lambda) * nodes[j];
        const double lhs = finite_or_throw(g(z), z);
        const double rhs = weight * values[i] + m * (1.0 - weight) * values[j];
        // z is rounded, so g(z) carries error scaled by g's condition number.
        const double slack = kRoundingSlack * (std::abs(lhs) + std::abs(rhs));
        const double violation = lhs - rhs - slack;
        if (violation > out.max_violation) {
          out.max_violation = violation;
          out.witness = Witness{nodes[i], nodes[j], lambda, lhs, rhs};
        }
      }
    }
  }
  out.passed = out.max_violation <= tol;
  return out;
}

CheckResult check_hypothesis(const TestFunction& fn, const Hypothesis& hyp, int grid,
                             double tol) {
  if (hyp.n < 0) throw ParamError("derivative order must be non-negative");
  if (!(hyp.p > 0.0)) throw ParamError("hypothesis exponent p must be positive");
  const int n = hyp.n;
  const double p = hyp.p;
  auto g = [&fn, n, p](double x) { return std::pow(std::abs(fn.deriv(n, x)), p); };
  return check_alpha_m_convex(g, hyp.alpha, hyp.m, hyp.check_domain, grid, tol);
}

Interval default_check_domain(const TestFunction& fn, double a, double b, double m) {
  if (m == 1.0) return {a, b};
  if (fn.singular_at_zero()) return {std::min(a, 1e-6), m * b};
  return {0.0, m * b};
}

}  // namespace hhv
