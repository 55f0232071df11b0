#pragma once

#include "funclib.hpp"

namespace hhv {

inline constexpr double kDefaultQuadTol = 1e-10;

struct DeviationParams {
  TestFunction fn;
  double a = 0.0;
  double b = 0.0;
  double m = 1.0;
  int n = 2;
  double quad_tol = kDefaultQuadTol;
};

/// Throws ParamError unless 0 < a < m b, 0 < m <= 1 and n >= 1.
void validate(const DeviationParams& params);

/// Signed left side of the trapezoid identity on [a, m b]:
///   [f(a) + f(mb)]/2 - mean of f over [a, mb]
///     - 1/2 sum_{k=2}^{n-1} (k-1)(mb-a)^k/(k+1)! f^(k)(a).
double trapezoid_deviation(const DeviationParams& params);

/// (1/2)(mb-a)^n/n! * ∫_0^1 t^(n-1)(n-2t) f^(n)(ta + m(1-t)b) dt, signed.
double lemma_rhs(const DeviationParams& params);

/// |trapezoid_deviation - lemma_rhs|.
double identity_residual(const DeviationParams& params);

/// One step of the order recurrence S(n) = -T(n-1) + S(n-1), where S(n) is
/// lemma_rhs at order n and T(n-1) = (1/2)(n-2)(mb-a)^(n-1)/n! f^(n-1)(a).
/// Returns |S(n) + T(n-1) - S(n-1)|. Requires n >= 4.
double recurrence_residual(const DeviationParams& params);

/// T(n-1) of the recurrence above.
double recurrence_term(const DeviationParams& params);

/// |f((a+b)/2) - mean of f over [a, b]|.
double midpoint_deviation(const TestFunction& fn, double a, double b,
                          double quad_tol = kDefaultQuadTol);

/// |(λ-1) f((a+b)/2) - λ [f(a)+f(b)]/2 + ∫_a^b f|; the integral is not
/// divided by b - a.
double lambda_deviation(const TestFunction& fn, double a, double b, double lambda,
                        double quad_tol = kDefaultQuadTol);

/// Mean value of f over [lo, hi], integrated on the unit interval so that
/// quad_tol bounds the error of the mean itself.
double mean_value(const TestFunction& fn, double lo, double hi, double quad_tol = kDefaultQuadTol);

}  // namespace hhv
