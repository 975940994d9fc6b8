#include "textcx/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "textcx/error.hpp"

namespace textcx {

Descriptive descriptive_stats(std::span<const double> xs) {
  if (xs.size() < 2)
    throw InsufficientDataError("descriptive statistics need n >= 2, got " + std::to_string(xs.size()));
  const auto n = static_cast<double>(xs.size());
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= n;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {xs.size(), mean, std::sqrt(ss / (n - 1))};
}

namespace {

double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1, qam = a - 1;
  double c = 1, d = 1 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1) < kEps) return h;
  }
  return h;
}

void require_two(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() < 2 || ys.size() < 2)
    throw InsufficientDataError("t-test needs at least two values per sample");
}

TTestResult finish(double diff, double se, double df, std::size_t n1, std::size_t n2) {
  TTestResult r;
  r.t = diff / se;
  r.df = df;
  r.p = student_t_two_tailed(r.t, df);
  r.n1 = n1;
  r.n2 = n2;
  return r;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0)) throw DomainError("incomplete beta needs a, b > 0");
  if (x < 0 || x > 1) throw DomainError("incomplete beta needs 0 <= x <= 1");
  if (x == 0) return 0;
  if (x == 1) return 1;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1) / (a + b + 2)) return front * beta_continued_fraction(a, b, x) / a;
  return 1 - front * beta_continued_fraction(b, a, 1 - x) / b;
}

double student_t_two_tailed(double t, double df) {
  if (!(df > 0)) throw DomainError("Student t needs df > 0");
  if (t == 0) return 1;
  const double x = df / (df + t * t);
  const double p = regularized_incomplete_beta(df / 2, 0.5, x);
  return std::clamp(p, std::numeric_limits<double>::denorm_min(), 1.0);
}

TTestResult welch_t_test(std::span<const double> xs, std::span<const double> ys) {
  require_two(xs, ys);
  const auto a = descriptive_stats(xs), b = descriptive_stats(ys);
  const double va = a.stddev * a.stddev / static_cast<double>(a.n);
  const double vb = b.stddev * b.stddev / static_cast<double>(b.n);
  if (va == 0 && vb == 0) throw InsufficientDataError("t-test on two zero-variance samples");
  const double df = (va + vb) * (va + vb) /
                    (va * va / static_cast<double>(a.n - 1) + vb * vb / static_cast<double>(b.n - 1));
  return finish(a.mean - b.mean, std::sqrt(va + vb), df, a.n, b.n);
}

TTestResult pooled_t_test(std::span<const double> xs, std::span<const double> ys) {
  require_two(xs, ys);
  const auto a = descriptive_stats(xs), b = descriptive_stats(ys);
  const auto n1 = static_cast<double>(a.n), n2 = static_cast<double>(b.n);
  const double pooled =
      ((n1 - 1) * a.stddev * a.stddev + (n2 - 1) * b.stddev * b.stddev) / (n1 + n2 - 2);
  if (pooled == 0) throw InsufficientDataError("t-test on two zero-variance samples");
  return finish(a.mean - b.mean, std::sqrt(pooled * (1 / n1 + 1 / n2)), n1 + n2 - 2, a.n, b.n);
}

TTestResult t_test(std::span<const double> xs, std::span<const double> ys, TTestKind kind) {
  return kind == TTestKind::welch ? welch_t_test(xs, ys) : pooled_t_test(xs, ys);
}

double pearson_correlation(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InsufficientDataError("correlation needs samples of equal length");
  if (xs.size() < 2) throw InsufficientDataError("correlation needs at least two pairs");
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) throw InsufficientDataError("correlation undefined for a zero-variance sample");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace textcx
