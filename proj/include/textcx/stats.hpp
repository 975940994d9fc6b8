#pragma once

#include <cstddef>
#include <span>

namespace textcx {

struct Descriptive {
  std::size_t n = 0;
  double mean = 0;
  double stddev = 0;  // sample (n - 1) denominator
};

// Throws InsufficientDataError for n < 2.
Descriptive descriptive_stats(std::span<const double> xs);

enum class TTestKind { welch, pooled };

struct TTestResult {
  double t = 0;
  double df = 0;
  double p = 1;  // two-tailed, in (0, 1]
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of freedom.
TTestResult welch_t_test(std::span<const double> xs, std::span<const double> ys);
// Classic Student test with pooled variance, df = n1 + n2 - 2.
TTestResult pooled_t_test(std::span<const double> xs, std::span<const double> ys);
TTestResult t_test(std::span<const double> xs, std::span<const double> ys, TTestKind kind);

// Throws InsufficientDataError on length mismatch, n < 2 or zero variance.
double pearson_correlation(std::span<const double> xs, std::span<const double> ys);

// I_x(a, b) by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);
// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double student_t_two_tailed(double t, double df);

}  // namespace textcx
