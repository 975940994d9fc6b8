#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "textcx/error.hpp"
#include "textcx/models.hpp"

namespace textcx {
namespace {

TEST(Heaps, ExactPowerLaw) {
  std::vector<HeapsPoint> pts;
  for (double L : {10.0, 100.0, 1000.0, 5000.0, 123456.0}) pts.push_back({L, 2.0 * std::pow(L, 0.7)});
  const auto fit = fit_heaps(pts);
  EXPECT_NEAR(fit.k, 2.0, 1e-9);
  EXPECT_NEAR(fit.beta, 0.7, 1e-9);
  EXPECT_LT(fit.rms_log_error, 1e-12);
  EXPECT_EQ(fit.n_points, 5u);
}

TEST(Heaps, Errors) {
  const std::vector<HeapsPoint> one{{10, 5}};
  EXPECT_THROW(fit_heaps(one), FitError);
  const std::vector<HeapsPoint> same_l{{10, 5}, {10, 6}};
  EXPECT_THROW(fit_heaps(same_l), FitError);
  const std::vector<HeapsPoint> zero{{0, 1}, {10, 6}};
  EXPECT_THROW(fit_heaps(zero), DomainError);
}

TEST(Heaps, OrderInvariant) {
  std::mt19937_64 rng(12);
  std::vector<HeapsPoint> pts;
  for (int i = 0; i < 40; ++i) {
    const double L = 50 + rng() % 10000;
    pts.push_back({L, std::floor(3 * std::pow(L, 0.65) * (0.8 + 0.4 * (rng() % 1000) / 1000.0))});
  }
  const auto a = fit_heaps(pts);
  std::shuffle(pts.begin(), pts.end(), rng);
  const auto b = fit_heaps(pts);
  EXPECT_NEAR(a.k, b.k, 1e-9);
  EXPECT_NEAR(a.beta, b.beta, 1e-12);
}

TEST(Heaps, Predict) {
  EXPECT_DOUBLE_EQ(heaps_predict({2, 0.7, 0, 2}, 1), 2.0);
  EXPECT_DOUBLE_EQ(heaps_predict({1, 1, 0, 2}, 50), 50.0);
  EXPECT_NEAR(heaps_predict({3.766, 0.67, 0, 2}, 10000), 3.766 * std::pow(10000.0, 0.67), 1e-9);
}

TEST(AlphaMapping, RoundTrip) {
  for (double q = 0; q < 1; q += 0.01) {
    const double alpha = alpha_from_exponent(q);
    EXPECT_NEAR(exponent_from_alpha(alpha), q, 1e-12);
  }
  EXPECT_NEAR(exponent_from_alpha(2.1), 0.1 / 1.1, 1e-15);
  EXPECT_THROW(exponent_from_alpha(1.0), DomainError);
  EXPECT_THROW(alpha_from_exponent(1.0), DomainError);
}

TEST(ModelEntropy, Examples) {
  EXPECT_DOUBLE_EQ(model_entropy(1.0, 2.7), 1.0);
  EXPECT_DOUBLE_EQ(model_entropy(0.3, 2.0), 1.0);
  EXPECT_NEAR(model_entropy(0.435, 2.1), 0.927, 5e-4);
  EXPECT_THROW(model_entropy(0.5, 1.0), DomainError);
  EXPECT_THROW(model_entropy(0.0, 2.1), DomainError);
  EXPECT_THROW(model_entropy(1.2, 2.1), DomainError);
}

TEST(FitAlpha, ExactCurve) {
  std::vector<EntropyPoint> pts;
  const double q = exponent_from_alpha(2.1);
  for (double d = 0.05; d < 1; d += 0.05) pts.push_back({d, std::pow(d, q)});
  const auto fit = fit_alpha(pts);
  EXPECT_NEAR(fit.alpha, 2.1, 1e-6);
  EXPECT_NEAR(fit.q, (fit.alpha - 2) / (fit.alpha - 1), 1e-12);
  EXPECT_NEAR(alpha_from_exponent(fit.q), fit.alpha, 1e-9);
}

TEST(FitAlpha, FlatEntropy) {
  const std::vector<EntropyPoint> pts{{0.2, 1}, {0.5, 1}, {0.8, 1}};
  const auto fit = fit_alpha(pts);
  EXPECT_NEAR(fit.q, 0.0, 1e-9);
  EXPECT_NEAR(fit.alpha, 2.0, 1e-8);
}

TEST(FitAlpha, Errors) {
  const std::vector<EntropyPoint> ones{{1, 1}, {1, 0.9}};
  EXPECT_THROW(fit_alpha(ones), FitError);
  EXPECT_THROW(fit_alpha(std::vector<EntropyPoint>{}), FitError);
}

TEST(FitAlpha, NoisyPointsMatchGridOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ud(0.05, 0.95);
  std::normal_distribution<double> noise(0, 0.02);
  std::vector<EntropyPoint> pts;
  std::vector<std::pair<double, double>> raw;
  for (int i = 0; i < 100; ++i) {
    const double d = ud(rng);
    const double h = std::clamp(std::pow(d, 0.15) + noise(rng), 0.0, 1.0);
    pts.push_back({d, h});
    raw.emplace_back(d, h);
  }
  const auto fit = fit_alpha(pts);
  EXPECT_NEAR(fit.q, oracle::grid_q(raw, 1e-6), 1e-5);
  // Local-minimum certificate in alpha.
  EXPECT_LE(alpha_objective(pts, fit.q), alpha_objective(pts, exponent_from_alpha(fit.alpha + 1e-3)));
  EXPECT_LE(alpha_objective(pts, fit.q), alpha_objective(pts, exponent_from_alpha(fit.alpha - 1e-3)));
  std::shuffle(pts.begin(), pts.end(), rng);
  EXPECT_NEAR(fit_alpha(pts).q, fit.q, 1e-12);
}

TEST(Classify, NearestCurve) {
  const std::map<std::string, AlphaFit> models{
      {"a", {alpha_from_exponent(0.1), 0.1, 0, 1}}, {"b", {alpha_from_exponent(0.5), 0.5, 0, 1}}};
  const double d = 0.3;
  const auto on_a = classify_language(measures_from(d, std::pow(d, 0.1)), models);
  EXPECT_EQ(on_a.label, "a");
  EXPECT_NEAR(on_a.residuals.at("a"), 0.0, 1e-15);
  EXPECT_GT(on_a.residuals.at("b"), 0.1);
  const double mid = (std::pow(d, 0.1) + std::pow(d, 0.5)) / 2;
  const std::map<std::string, AlphaFit> twins{{"y", models.at("a")}, {"x", models.at("a")}};
  EXPECT_EQ(classify_language(measures_from(d, mid), twins).label, "x");
  EXPECT_THROW(classify_language(measures_from(d, mid), {}), Error);
}

}  // namespace
}  // namespace textcx
