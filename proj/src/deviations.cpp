#include "deviations.hpp"

#include <cmath>

#include "errors.hpp"
#include "quad.hpp"

namespace hhv {
namespace {

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

// S(n) for an explicit order, sharing a, b, m with params.
double kernel_integral_term(const DeviationParams& params, int n) {
  const TestFunction& fn = params.fn;
  const double a = params.a;
  const double b = params.b;
  const double m = params.m;
  const double prefactor = 0.5 * std::pow(m * b - a, n) / factorial(n);
  if (prefactor == 0.0) return 0.0;
  auto integrand = [&fn, a, b, m, n](double t) {
    return std::pow(t, n - 1) * (n - 2.0 * t) * fn.deriv(n, t * a + m * (1.0 - t) * b);
  };
  return prefactor * integrate(integrand, 0.0, 1.0, params.quad_tol / prefactor).value;
}

}  // namespace

void validate(const DeviationParams& params) {
  if (!(params.m > 0.0 && params.m <= 1.0)) throw ParamError("m must lie in (0, 1]");
  if (!(params.a > 0.0)) throw ParamError("a must be positive");
  if (!(params.a < params.m * params.b)) throw ParamError("need a < m b");
  if (params.n < 1) throw ParamError("n must be at least 1");
  if (!(params.quad_tol > 0.0)) throw ParamError("quad_tol must be positive");
}

double mean_value(const TestFunction& fn, double lo, double hi, double quad_tol) {
  const double width = hi - lo;
  auto g = [&fn, lo, width](double t) { return fn.eval(lo + t * width); };
  return integrate(g, 0.0, 1.0, quad_tol).value;
}

double trapezoid_deviation(const DeviationParams& params) {
  validate(params);
  const TestFunction& fn = params.fn;
  const double a = params.a;
  const double mb = params.m * params.b;
  const double h = mb - a;
  double correction = 0.0;
  for (int k = 2; k <= params.n - 1; ++k) {
    correction += (k - 1) * std::pow(h, k) / factorial(k + 1) * fn.deriv(k, a);
  }
  return 0.5 * (fn.eval(a) + fn.eval(mb)) - mean_value(fn, a, mb, params.quad_tol) -
         0.5 * correction;
}

double lemma_rhs(const DeviationParams& params) {
  validate(params);
  return kernel_integral_term(params, params.n);
}

double identity_residual(const DeviationParams& params) {
  return std::abs(trapezoid_deviation(params) - lemma_rhs(params));
}

double recurrence_term(const DeviationParams& params) {
  const int n = params.n;
  const double h = params.m * params.b - params.a;
  return 0.5 * (n - 2) * std::pow(h, n - 1) / factorial(n) * params.fn.deriv(n - 1, params.a);
}

double recurrence_residual(const DeviationParams& params) {
  validate(params);
  if (params.n < 4) throw ParamError("the recurrence is stated for n >= 4");
  const double s_n = kernel_integral_term(params, params.n);
  const double s_prev = kernel_integral_term(params, params.n - 1);
  return std::abs(s_n + recurrence_term(params) - s_prev);
}

double midpoint_deviation(const TestFunction& fn, double a, double b, double quad_tol) {
  if (!(a < b)) throw ParamError("midpoint_deviation requires a < b");
  return std::abs(fn.eval(0.5 * (a + b)) - mean_value(fn, a, b, quad_tol));
}

double lambda_deviation(const TestFunction& fn, double a, double b, double lambda,
                        double quad_tol) {
  if (!(a < b)) throw ParamError("lambda_deviation requires a < b");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParamError("lambda must lie in [0, 1]");
  const double width = b - a;
  const double integral = width * mean_value(fn, a, b, quad_tol / width);
  return std::abs((lambda - 1.0) * fn.eval(0.5 * (a + b)) -
                  lambda * 0.5 * (fn.eval(a) + fn.eval(b)) + integral);
}

}  // namespace hhv
