#include "quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "errors.hpp"
#include "funclib.hpp"

namespace hhv {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool at_floor;  // estimate cannot shrink below rounding
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const { return x.error < y.error; }
};

double checked(const std::function<double(double)>& g, double x) {
  double v = g(x);
  if (!std::isfinite(v)) throw DomainError("integrand not finite at x = " + format_number(x));
  return v;
}

Segment gk15(const std::function<double(double)>& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = checked(g, center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(g, center - dx);
    const double f2 = checked(g, center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  const double floor = 50.0 * kEps * abs_sum * std::abs(half);
  const double raw = std::abs(kronrod - gauss);
  return Segment{lo, hi, kronrod, std::max(raw, floor), raw <= floor};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& g, double lo, double hi,
                     const QuadOptions& opts) {
  if (!(lo < hi)) throw ParamError("integrate requires lo < hi");
  if (!(opts.tol > 0.0)) throw ParamError("integrate requires tol > 0");

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  heap.push(gk15(g, lo, hi));
  std::int64_t evals = 15;
  double total_error = heap.top().error;

  while (total_error > opts.tol && !heap.top().at_floor) {
    if (evals + 30 > opts.max_evals) {
      throw NoConvergence("quadrature budget of " + std::to_string(opts.max_evals) +
                          " evaluations exhausted (estimate " + format_number(total_error) + ")");
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gk15(g, worst.lo, mid);
    Segment right = gk15(g, mid, worst.hi);
    evals += 30;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Sum in a fixed order (left to right) for reproducibility.
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  QuadResult out;
  for (const auto& s : segments) {
    out.value += s.value;
    out.err_estimate += s.error;
  }
  out.evals = evals;
  return out;
}

double kernel_moment(int n) {
  if (n < 2) throw ParamError("kernel_moment requires n >= 2");
  return static_cast<double>(n - 1) / static_cast<double>(n + 1);
}

}  // namespace hhv
