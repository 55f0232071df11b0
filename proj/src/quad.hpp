#pragma once

#include <cstdint>
#include <functional>

namespace hhv {

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;  // absolute
  std::int64_t evals = 0;
};

struct QuadOptions {
  double tol = 1e-10;
  std::int64_t max_evals = std::int64_t{1} << 20;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of g over [lo, hi].
///
/// The interval with the largest |K15 - G7| is bisected until the summed
/// estimate drops to tol. Subintervals whose estimate is already at the
/// floating-point rounding floor are not refined further; in that case the
/// reported err_estimate may exceed tol. Node order is fixed, so the result
/// is bit-reproducible.
///
/// Throws NoConvergence when max_evals is reached first, ParamError when
/// lo >= hi or tol <= 0, and DomainError when g returns a non-finite value.
QuadResult integrate(const std::function<double(double)>& g, double lo, double hi,
                     const QuadOptions& opts = {});

inline QuadResult integrate(const std::function<double(double)>& g, double lo, double hi,
                            double tol) {
  return integrate(g, lo, hi, QuadOptions{tol});
}

/// Closed-form moment of the kernel t^(n-1) (n - 2t) over [0, 1], i.e. (n-1)/(n+1).
double kernel_moment(int n);

}  // namespace hhv
