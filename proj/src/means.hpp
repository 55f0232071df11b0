#pragma once

#include <optional>
#include <string_view>

#include "bounds.hpp"

namespace hhv {

struct MeanKind {
  enum Kind { A, G, H, I, L, Lr };
  Kind kind = A;
  double r = 1.0;  // Lr only; r not in {0, -1}
};

/// Parses "A", "G", "H", "I", "L" or "Lr" (r supplied separately).
MeanKind parse_mean_kind(std::string_view name, double r = 1.0);

/// Bivariate mean of two positive numbers. L, I and Lr return the common
/// value when the arguments coincide and switch to a series in the relative
/// gap below 1e-6.
double mean(MeanKind kind, double x, double y);

/// [L_r(x, y)]^r, the mean of t^r over [x, y], without taking the 1/r root.
double lr_power_mean(double r, double x, double y);

/// Checks proposition 1..6 on special means at (a, b).
///
/// The literal variant evaluates the right-hand side as stated. The
/// derived_from_corollary variant substitutes the proposition's function
/// (x^r, 1/x or -ln x) into the cor_e or cor_k bound through the function
/// catalog. Hypotheses are recorded as assumed, not checked.
BoundOutcome prop_check(int prop_id, double a, double b, std::optional<double> p,
                        std::optional<double> r, Variant variant);

}  // namespace hhv
