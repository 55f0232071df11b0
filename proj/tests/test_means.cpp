#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "errors.hpp"
#include "means.hpp"

using hhv::MeanKind;
using hhv::Variant;

namespace {

double m(MeanKind::Kind k, double x, double y, double r = 1.0) {
  return hhv::mean(MeanKind{k, r}, x, y);
}

}  // namespace

TEST(Means, Examples) {
  constexpr double e = std::numbers::e;
  EXPECT_EQ(m(MeanKind::A, 1, 2), 1.5);
  EXPECT_EQ(m(MeanKind::G, 1, 4), 2.0);
  EXPECT_NEAR(m(MeanKind::L, 1, e), e - 1, 1e-15);
  EXPECT_NEAR(m(MeanKind::Lr, 1, 2, 2), std::sqrt(7.0 / 3), 1e-15);
  EXPECT_NEAR(m(MeanKind::I, 1, e), std::exp(1 / (e - 1)), 1e-12);
  EXPECT_NEAR(m(MeanKind::I, 1, e), 1.789572396841833, 1e-14);
  EXPECT_NEAR(m(MeanKind::H, 1, 3), 1.5, 1e-15);
}

TEST(Means, Diagonal) {
  for (auto k : {MeanKind::A, MeanKind::G, MeanKind::H, MeanKind::I, MeanKind::L}) {
    EXPECT_DOUBLE_EQ(m(k, 2.5, 2.5), 2.5);
  }
  EXPECT_DOUBLE_EQ(m(MeanKind::Lr, 2.5, 2.5, 3), 2.5);
  // Near-diagonal goes through the series branch.
  EXPECT_NEAR(m(MeanKind::L, 1, 1 + 1e-9), 1 + 0.5e-9, 1e-15);
  EXPECT_NEAR(m(MeanKind::I, 1, 1 + 1e-9), 1 + 0.5e-9, 1e-15);
}

TEST(Means, RandomPairs) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  const double tol = 1e-13;
  for (int i = 0; i < 100; ++i) {
    double x = u(rng), y = u(rng);
    if (x == y) y += 1;
    const double s = 0.5 + u(rng) / 50;
    for (auto k : {MeanKind::A, MeanKind::G, MeanKind::H, MeanKind::I, MeanKind::L}) {
      const double v = m(k, x, y);
      EXPECT_NEAR(v, m(k, y, x), tol * v);
      EXPECT_NEAR(m(k, s * x, s * y), s * v, tol * s * v * 10);
    }
    const double H = m(MeanKind::H, x, y), G = m(MeanKind::G, x, y), L = m(MeanKind::L, x, y),
                 I = m(MeanKind::I, x, y), A = m(MeanKind::A, x, y);
    EXPECT_LT(H, G);
    EXPECT_LT(G, L);
    EXPECT_LT(L, I);
    EXPECT_LT(I, A);
  }
}

TEST(Means, Errors) {
  EXPECT_THROW(m(MeanKind::G, -1, 2), hhv::ParamError);
  EXPECT_THROW(m(MeanKind::Lr, 1, 2, 0), hhv::ParamError);
  EXPECT_THROW(m(MeanKind::Lr, 1, 2, -1), hhv::ParamError);
  EXPECT_THROW(hhv::parse_mean_kind("Q"), hhv::ConfigError);
  EXPECT_EQ(hhv::parse_mean_kind("Lr", 2).kind, MeanKind::Lr);
}

TEST(Means, Prop1) {
  const auto o = hhv::prop_check(1, 1, 2, 2.0, 2.0, Variant::Literal);
  EXPECT_NEAR(o.lhs, 1.0 / 6, 1e-12);
  EXPECT_NEAR(o.rhs, 1.0 / 3, 1e-14);
  EXPECT_NEAR(o.margin, 1.0 / 6, 1e-12);
  EXPECT_EQ(o.hypothesis_status, hhv::HypothesisStatus::Assumed);
}

TEST(Means, Prop3Literal) {
  const auto o = hhv::prop_check(3, 1, 2, std::nullopt, 2.0, Variant::Literal);
  EXPECT_NEAR(o.lhs, 1.0 / 6, 1e-12);
  EXPECT_NEAR(o.rhs, 1.0 / 12, 1e-14);
  EXPECT_EQ(hhv::classify(o, 1e-8), hhv::Status::Violated);
}

TEST(Means, Prop3Derived) {
  const auto o = hhv::prop_check(3, 1, 2, std::nullopt, 2.0, Variant::DerivedFromCorollary);
  EXPECT_NEAR(o.rhs, 1.0 / 6, 1e-14);
  EXPECT_NEAR(o.margin, 0.0, 1e-10);
  EXPECT_EQ(hhv::classify(o, 1e-8), hhv::Status::Holds);
}

TEST(Means, Prop6Literal) {
  const auto o = hhv::prop_check(6, 1, 1.1, std::nullopt, std::nullopt, Variant::Literal);
  EXPECT_NEAR(o.lhs, 7.568879454110305e-4, 1e-12);
  EXPECT_NEAR(o.rhs, 3.805096418732782e-4, 1e-12);
  EXPECT_EQ(hhv::classify(o, 1e-8), hhv::Status::Violated);
}

TEST(Means, DerivedVariantsHold) {
  for (int id = 1; id <= 6; ++id) {
    for (auto [a, b] : {std::pair{1.0, 2.0}, std::pair{0.5, 3.0}, std::pair{2.0, 2.2}}) {
      const auto o = hhv::prop_check(id, a, b, 2.0, 2.0, Variant::DerivedFromCorollary);
      EXPECT_NE(hhv::classify(o, 1e-8), hhv::Status::Violated) << id << " " << a << " " << b;
    }
  }
}
