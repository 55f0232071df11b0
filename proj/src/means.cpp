#include "means.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace hhv {
namespace {

constexpr double kSeriesGap = 1e-6;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParamError(what);
}

// Half-gap relative to the midpoint: ε = (hi - lo) / (hi + lo).
double relative_half_gap(double lo, double hi) { return (hi - lo) / (hi + lo); }

bool use_series(double lo, double hi) { return (hi - lo) < kSeriesGap * lo; }

double log_identric(double lo, double hi) {
  if (lo == hi) return std::log(lo);
  if (use_series(lo, hi)) {
    // mean of ln t over [lo, hi] = ln A - Σ ε^(2k) / (2k (2k+1))
    const double e2 = std::pow(relative_half_gap(lo, hi), 2);
    return std::log(0.5 * (lo + hi)) - e2 / 6.0 - e2 * e2 / 20.0;
  }
  return std::log(hi) + lo / mean(MeanKind{MeanKind::L}, lo, hi) - 1.0;
}

double check_r(double r) {
  require(std::isfinite(r) && r != 0.0 && r != -1.0, "generalized logarithmic mean needs r not in {0, -1}");
  return r;
}

}  // namespace

MeanKind parse_mean_kind(std::string_view name, double r) {
  if (name == "A") return {MeanKind::A, r};
  if (name == "G") return {MeanKind::G, r};
  if (name == "H") return {MeanKind::H, r};
  if (name == "I") return {MeanKind::I, r};
  if (name == "L") return {MeanKind::L, r};
  if (name == "Lr") return {MeanKind::Lr, check_r(r)};
  throw ConfigError("unknown mean '" + std::string(name) + "'");
}

double lr_power_mean(double r, double x, double y) {
  check_r(r);
  require(x > 0.0 && y > 0.0, "means need positive arguments");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo == hi) return std::pow(lo, r);
  if (use_series(lo, hi)) {
    // A^r Σ C(r, 2k) ε^(2k) / (2k+1)
    const double e2 = std::pow(relative_half_gap(lo, hi), 2);
    const double c2 = r * (r - 1.0) / 2.0;
    const double c4 = c2 * (r - 2.0) * (r - 3.0) / 12.0;
    return std::pow(0.5 * (lo + hi), r) * (1.0 + c2 * e2 / 3.0 + c4 * e2 * e2 / 5.0);
  }
  const double gap = hi - lo;
  return std::pow(lo, r + 1.0) * std::expm1((r + 1.0) * std::log1p(gap / lo)) / ((r + 1.0) * gap);
}

double mean(MeanKind kind, double x, double y) {
  require(x > 0.0 && y > 0.0, "means need positive arguments");
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  switch (kind.kind) {
    case MeanKind::A:
      return 0.5 * (lo + hi);
    case MeanKind::G:
      return std::sqrt(lo) * std::sqrt(hi);
    case MeanKind::H:
      return 2.0 * lo * hi / (lo + hi);
    case MeanKind::I:
      return std::exp(log_identric(lo, hi));
    case MeanKind::L: {
      if (lo == hi) return lo;
      if (use_series(lo, hi)) {
        // A / Σ ε^(2k) / (2k+1)
        const double e2 = std::pow(relative_half_gap(lo, hi), 2);
        return 0.5 * (lo + hi) / (1.0 + e2 / 3.0 + e2 * e2 / 5.0);
      }
      const double gap = hi - lo;
      return gap / std::log1p(gap / lo);
    }
    case MeanKind::Lr:
      return std::pow(lr_power_mean(kind.r, lo, hi), 1.0 / check_r(kind.r));
  }
  return 0.0;
}

BoundOutcome prop_check(int prop_id, double a, double b, std::optional<double> p,
                        std::optional<double> r, Variant variant) {
  require(prop_id >= 1 && prop_id <= 6, "proposition id must be 1..6");
  require(a > 0.0 && a < b, "need b > a > 0");

  const bool needs_r = prop_id <= 3 || (prop_id == 5 && variant == Variant::Literal);
  const bool needs_p = prop_id == 1 || prop_id == 2 || prop_id == 4 || prop_id == 5;
  const bool p_strict = prop_id == 1 || prop_id == 4;
  if (needs_r) {
    require(r.has_value(), "prop" + std::to_string(prop_id) + " needs r");
  }
  if (prop_id <= 3) {
    const double rv = *r;
    require(std::isfinite(rv) && (rv < 0.0 || rv >= 1.0) && rv != -1.0,
            "r must lie in (-inf, 0) U [1, inf) without -1");
  }
  if (needs_p) {
    require(p.has_value(), "prop" + std::to_string(prop_id) + " needs p");
    require(p_strict ? *p > 1.0 : *p >= 1.0, p_strict ? "need p > 1" : "need p >= 1");
  }

  const double w2 = (b - a) * (b - a);
  BoundOutcome out;
  out.theorem_id = "prop" + std::to_string(prop_id);
  out.params.a = a;
  out.params.b = b;
  out.params.m = 1.0;
  out.params.alpha = 1.0;
  out.params.n = 2;
  out.params.p = p.value_or(1.0);
  out.params.r = r;
  out.params.variant = variant;
  out.hypothesis_ok = true;
  out.hypothesis_status = HypothesisStatus::Assumed;

  TestFunction fn = prop_id <= 3   ? TestFunction::power(*r)
                    : prop_id <= 5 ? TestFunction::reciprocal()
                                   : TestFunction::neg_log();
  out.fn = fn.name();

  if (prop_id <= 3) {
    const double rv = *r;
    out.lhs = std::abs(mean(MeanKind{MeanKind::A}, std::pow(a, rv), std::pow(b, rv)) -
                       lr_power_mean(rv, a, b));
  } else if (prop_id <= 5) {
    out.lhs = std::abs(1.0 / mean(MeanKind{MeanKind::H}, a, b) - 1.0 / mean(MeanKind{MeanKind::L}, a, b));
  } else {
    out.lhs = log_identric(a, b) - std::log(mean(MeanKind{MeanKind::G}, a, b));
  }

  if (variant == Variant::DerivedFromCorollary) {
    switch (prop_id) {
      case 1:
      case 4:
        out.rhs = rhs_corollary(Corollary::E, fn, a, b, *p);
        break;
      case 2:
      case 5:
        out.rhs = rhs_corollary(Corollary::K, fn, a, b, *p);
        break;
      default:
        out.rhs = rhs_corollary(Corollary::K, fn, a, b, 1.0);
        break;
    }
  } else {
    const double rv = r.value_or(0.0);
    const double rr = rv * (rv - 1.0);
    const double pv = p.value_or(1.0);
    const double qv = pv > 1.0 ? pv / (pv - 1.0) : 0.0;
    switch (prop_id) {
      case 1:
        out.rhs = w2 * rr / (2.0 * std::pow(pv + 1.0, 1.0 / pv) * std::pow(qv + 2.0, 1.0 / qv)) *
                  std::pow(std::pow(a, (rv - 2.0) * qv) + std::pow(b, (rv - 2.0) * qv) / (qv + 1.0),
                           1.0 / qv);
        break;
      case 2:
        out.rhs = w2 * rr / std::pow(2.0, 2.0 - 1.0 / pv) *
                  std::pow(((pv + 1.0) * std::pow(a, (rv - 2.0) * pv) + 2.0 * std::pow(b, (rv - 2.0) * pv)) /
                               ((pv + 1.0) * (pv + 2.0) * (pv + 3.0)),
                           1.0 / pv);
        break;
      case 3:
        out.rhs = w2 * rr / 24.0 * mean(MeanKind{MeanKind::A}, std::pow(a, rv - 2.0), std::pow(b, rv - 2.0));
        break;
      case 4:
        out.rhs = w2 / (std::pow(pv + 1.0, 1.0 / pv) * std::pow(qv + 2.0, 1.0 / qv)) *
                  std::pow(std::pow(a, -3.0 * qv) + 1.0 / ((qv + 1.0) * std::pow(b, 3.0 * qv)), 1.0 / qv);
        break;
      case 5:
        out.rhs = w2 * rr / (std::pow(2.0, 1.0 - 1.0 / pv) * std::pow((pv + 2.0) * (pv + 3.0), 1.0 / pv)) *
                  std::pow(std::pow(a, -3.0 * pv) + 2.0 / ((pv + 1.0) * std::pow(b, 3.0 * pv)), 1.0 / pv);
        break;
      default:
        out.rhs = w2 / 24.0 * mean(MeanKind{MeanKind::A}, 1.0 / (a * a), 1.0 / (b * b));
        break;
    }
  }
  out.margin = out.rhs - out.lhs;
  return out;
}

}  // namespace hhv
