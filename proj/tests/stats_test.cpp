#include <gtest/gtest.h>

#include <boost/math/special_functions/beta.hpp>
#include <random>

#include "oracles.hpp"
#include "textcx/error.hpp"
#include "textcx/stats.hpp"

namespace textcx {
namespace {

TEST(Descriptive, Examples) {
  const std::vector<double> c{1, 1, 1};
  EXPECT_EQ(descriptive_stats(c).stddev, 0.0);
  EXPECT_EQ(descriptive_stats(c).mean, 1.0);
  const std::vector<double> v{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(descriptive_stats(v).mean, 2.5);
  EXPECT_NEAR(descriptive_stats(v).stddev, 1.2910, 5e-5);
  EXPECT_THROW(descriptive_stats(std::vector<double>{1}), InsufficientDataError);
}

TEST(IncompleteBeta, MatchesBoost) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ab(0.1, 200), xx(0, 1);
  for (int i = 0; i < 2000; ++i) {
    const double a = ab(rng), b = ab(rng), x = xx(rng);
    const double want = boost::math::ibeta(a, b, x);
    EXPECT_NEAR(regularized_incomplete_beta(a, b, x), want, 1e-10 * std::max(1.0, want)) << a << " " << b << " " << x;
  }
  EXPECT_EQ(regularized_incomplete_beta(2, 3, 0), 0.0);
  EXPECT_EQ(regularized_incomplete_beta(2, 3, 1), 1.0);
}

TEST(StudentT, TinyTailsKeepRelativeAccuracy) {
  boost::math::students_t dist(240);
  for (double t : {5.0, 7.0, 9.0, 12.0}) {
    const double want = 2 * boost::math::cdf(boost::math::complement(dist, t));
    EXPECT_NEAR(student_t_two_tailed(t, 240) / want, 1.0, 1e-8) << t;
  }
}

TEST(Welch, IdenticalSamples) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const auto r = welch_t_test(x, x);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_DOUBLE_EQ(r.p, 1.0);
}

TEST(Welch, TextbookExample) {
  const std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 6, 8, 10};
  const auto r = welch_t_test(x, y);
  const auto o = oracle::welch(x, y);
  EXPECT_NEAR(r.t, o.t, 1e-9);
  EXPECT_NEAR(r.df, o.df, 1e-9);
  EXPECT_NEAR(r.p, o.p, 1e-6);
  EXPECT_EQ(r.n1, 5u);
  EXPECT_EQ(r.n2, 5u);
}

TEST(Welch, RandomPairsMatchOracle) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    std::normal_distribution<double> a(0, 1 + rng() % 3), b((rng() % 5) / 4.0, 1 + rng() % 4);
    std::vector<double> x(5 + rng() % 60), y(5 + rng() % 60);
    for (auto& v : x) v = a(rng);
    for (auto& v : y) v = b(rng);
    const auto r = welch_t_test(x, y);
    const auto o = oracle::welch(x, y);
    ASSERT_NEAR(r.t, o.t, 1e-9);
    ASSERT_NEAR(r.p, o.p, 1e-6);
    const auto s = welch_t_test(y, x);
    ASSERT_NEAR(s.t, -r.t, 1e-12);
    ASSERT_NEAR(s.p, r.p, 1e-12);
    ASSERT_GT(r.p, 0.0);
    ASSERT_LE(r.p, 1.0);
  }
}

TEST(Welch, Errors) {
  const std::vector<double> c{2, 2, 2}, d{3, 3};
  EXPECT_THROW(welch_t_test(c, d), Error);
  EXPECT_THROW(welch_t_test(std::vector<double>{1}, d), InsufficientDataError);
}

TEST(Welch, PValueFallsWithSeparation) {
  const std::vector<double> base{0.1, -0.3, 0.4, 0.2, -0.1, 0.0, 0.3, -0.2};
  double last = 1.1;
  for (double shift = 0; shift < 1.5; shift += 0.1) {
    std::vector<double> y = base;
    for (auto& v : y) v += shift;
    const double p = welch_t_test(base, y).p;
    EXPECT_LT(p, last);
    last = p;
  }
}

TEST(Pooled, MatchesTextbook) {
  const std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 6, 8, 10};
  const auto r = pooled_t_test(x, y);
  const double sp2 = (4 * 2.5 + 4 * 10.0) / 8;
  const double t = (3.0 - 6.0) / std::sqrt(sp2 * (0.2 + 0.2));
  EXPECT_NEAR(r.t, t, 1e-12);
  EXPECT_EQ(r.df, 8.0);
  boost::math::students_t dist(8);
  EXPECT_NEAR(r.p, 2 * boost::math::cdf(boost::math::complement(dist, std::fabs(t))), 1e-10);
  EXPECT_EQ(t_test(x, y, TTestKind::pooled).t, r.t);
  EXPECT_EQ(t_test(x, y, TTestKind::welch).t, welch_t_test(x, y).t);
}

TEST(Pearson, Examples) {
  const std::vector<double> x{1, 2, 3, 5, 8};
  std::vector<double> y2, yn;
  for (double v : x) {
    y2.push_back(2 * v);
    yn.push_back(-v);
  }
  EXPECT_NEAR(pearson_correlation(x, y2), 1.0, 1e-15);
  EXPECT_NEAR(pearson_correlation(x, yn), -1.0, 1e-15);
  EXPECT_THROW(pearson_correlation(x, std::vector<double>{1, 1, 1, 1, 1}), Error);
  EXPECT_THROW(pearson_correlation(x, std::vector<double>{1, 2}), Error);
}

TEST(Pearson, AffineInvariance) {
  std::mt19937_64 rng(51);
  std::normal_distribution<double> n(0, 1);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> x(30), y(30), xa(30), ya(30);
    const double a = 0.1 + (rng() % 100) / 10.0, b = n(rng) * 10;
    for (int k = 0; k < 30; ++k) {
      x[k] = n(rng);
      y[k] = x[k] * 0.5 + n(rng);
      xa[k] = a * x[k] + b;
      ya[k] = 3 * y[k] - 7;
    }
    const double r = pearson_correlation(x, y);
    ASSERT_NEAR(pearson_correlation(xa, ya), r, 1e-12);
    ASSERT_NEAR(r, oracle::pearson(x, y), 1e-12);
  }
}

}  // namespace
}  // namespace textcx
