#include "funclib.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "errors.hpp"

namespace hhv {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonneg_integer(double r) { return r >= 0.0 && std::floor(r) == r; }

double factorial(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_decimal(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

double parse_number(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  double num = parse_decimal(text.substr(0, slash));
  double den = parse_decimal(text.substr(slash + 1));
  if (den == 0.0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

TestFunction TestFunction::power(double r) {
  if (!std::isfinite(r)) throw ParamError("power exponent must be finite");
  TestFunction fn;
  fn.kind_ = Kind::Power;
  fn.r_ = r;
  return fn;
}

TestFunction TestFunction::reciprocal() {
  TestFunction fn;
  fn.kind_ = Kind::Reciprocal;
  return fn;
}

TestFunction TestFunction::neg_log() {
  TestFunction fn;
  fn.kind_ = Kind::NegLog;
  return fn;
}

TestFunction TestFunction::exponential() {
  TestFunction fn;
  fn.kind_ = Kind::Exponential;
  return fn;
}

TestFunction TestFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw ParamError("polynomial needs at least one coefficient");
  TestFunction fn;
  fn.kind_ = Kind::Polynomial;
  fn.coeffs_ = std::move(coeffs);
  return fn;
}

TestFunction TestFunction::scaled(TestFunction base, double c) {
  TestFunction fn;
  fn.kind_ = Kind::Scaled;
  fn.c_ = c;
  fn.base_ = std::make_shared<const TestFunction>(std::move(base));
  return fn;
}

TestFunction TestFunction::parse(std::string_view spec) {
  spec = trim(spec);
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  bool has_args = colon != std::string_view::npos;

  if (head == "reciprocal" && !has_args) return reciprocal();
  if (head == "neglog" && !has_args) return neg_log();
  if (head == "exp" && !has_args) return exponential();
  if (head == "power" && has_args) return power(parse_number(rest));
  if (head == "poly" && has_args) {
    std::vector<double> coeffs;
    while (true) {
      auto comma = rest.find(',');
      coeffs.push_back(parse_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return polynomial(std::move(coeffs));
  }
  if (head == "scaled" && has_args) {
    auto sep = rest.find(':');
    if (sep == std::string_view::npos) throw ConfigError("scaled spec needs 'scaled:<c>:<base>'");
    return scaled(parse(rest.substr(sep + 1)), parse_number(rest.substr(0, sep)));
  }
  throw ConfigError("unknown function spec '" + std::string(spec) + "'");
}

double TestFunction::domain_lo() const {
  switch (kind_) {
    case Kind::Power:
      return is_nonneg_integer(r_) ? -kInf : 0.0;
    case Kind::Reciprocal:
    case Kind::NegLog:
      return 0.0;
    case Kind::Exponential:
    case Kind::Polynomial:
      return -kInf;
    case Kind::Scaled:
      return base_->domain_lo();
  }
  return 0.0;
}

double TestFunction::deriv(int k, double x) const {
  if (k < 0) throw ParamError("derivative order must be non-negative");
  if (std::isnan(x) || !(x > domain_lo())) {
    throw DomainError(name() + " is not defined at x = " + format_number(x));
  }
  switch (kind_) {
    case Kind::Power: {
      if (is_nonneg_integer(r_) && k > r_) return 0.0;
      double coef = 1.0;
      for (int i = 0; i < k; ++i) coef *= r_ - i;
      return coef * std::pow(x, r_ - k);
    }
    case Kind::Reciprocal: {
      double sign = (k % 2 == 0) ? 1.0 : -1.0;
      return sign * factorial(k) / std::pow(x, k + 1);
    }
    case Kind::NegLog: {
      if (k == 0) return -std::log(x);
      double sign = (k % 2 == 0) ? 1.0 : -1.0;
      return sign * factorial(k - 1) / std::pow(x, k);
    }
    case Kind::Exponential:
      return std::exp(x);
    case Kind::Polynomial: {
      const int degree = static_cast<int>(coeffs_.size()) - 1;
      if (k > degree) return 0.0;
      // Horner on the k-th derivative coefficients c_j * j!/(j-k)!.
      double acc = 0.0;
      for (int j = degree; j >= k; --j) {
        double falling = 1.0;
        for (int i = 0; i < k; ++i) falling *= j - i;
        acc = acc * x + coeffs_[j] * falling;
      }
      return acc;
    }
    case Kind::Scaled:
      return c_ * base_->deriv(k, x);
  }
  return 0.0;
}

std::string TestFunction::name() const {
  switch (kind_) {
    case Kind::Power:
      return "power:" + format_number(r_);
    case Kind::Reciprocal:
      return "reciprocal";
    case Kind::NegLog:
      return "neglog";
    case Kind::Exponential:
      return "exp";
    case Kind::Polynomial: {
      std::string out = "poly:";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += format_number(coeffs_[i]);
      }
      return out;
    }
    case Kind::Scaled:
      return "scaled:" + format_number(c_) + ":" + base_->name();
  }
  return {};
}

}  // namespace hhv
