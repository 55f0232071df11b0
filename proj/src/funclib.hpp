#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hhv {

/// Smooth test function with closed-form derivatives of every order.
///
/// Functions are immutable values. Derivatives are evaluated from exact
/// rules (falling factorials, alternating factorial series), never by
/// numeric differentiation.
class TestFunction {
 public:
  enum class Kind { Power, Reciprocal, NegLog, Exponential, Polynomial, Scaled };

  static TestFunction power(double r);
  static TestFunction reciprocal();
  static TestFunction neg_log();
  static TestFunction exponential();
  /// Coefficients in ascending order: c0 + c1 x + c2 x^2 + ...
  static TestFunction polynomial(std::vector<double> coeffs);
  static TestFunction scaled(TestFunction base, double c);

  /// Parses "power:<r>", "reciprocal", "neglog", "exp", "poly:<c0,c1,...>"
  /// or "scaled:<c>:<spec>". Throws ConfigError on malformed input.
  static TestFunction parse(std::string_view spec);

  Kind kind() const { return kind_; }
  double exponent() const { return r_; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double scale() const { return c_; }

  /// Largest x such that the function (or one of its derivatives) is not
  /// finite at or below it; -inf when defined on the whole line.
  double domain_lo() const;
  bool singular_at_zero() const { return domain_lo() >= 0.0; }

  double eval(double x) const { return deriv(0, x); }
  double deriv(int k, double x) const;

  /// Canonical spec string; parse(name()) reproduces the function exactly.
  std::string name() const;

 private:
  TestFunction() = default;

  Kind kind_ = Kind::Exponential;
  double r_ = 0.0;
  std::vector<double> coeffs_;
  std::shared_ptr<const TestFunction> base_;
  double c_ = 1.0;
};

/// Free-function spellings of the catalog operations.
inline double eval(const TestFunction& fn, double x) { return fn.eval(x); }
inline double deriv(const TestFunction& fn, int k, double x) { return fn.deriv(k, x); }

/// Parses a decimal or a rational "num/den" such as "4/3".
double parse_number(std::string_view text);

/// Renders with 17 significant digits, so parse_number() round-trips exactly.
std::string format_number(double v);

}  // namespace hhv
