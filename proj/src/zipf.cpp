#include "textcx/zipf.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "textcx/error.hpp"

namespace textcx {

ExponentFit fit_zipf_exponent(std::span<const double> frequencies, std::size_t a, std::size_t b) {
  if (a < 1 || b > frequencies.size() || a > b)
    throw BoundsError("rank segment [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] outside [1, " + std::to_string(frequencies.size()) + "]");
  const std::size_t n = b - a + 1;
  if (n < 2) throw FitError("Zipf fit needs at least two ranks, got segment [" + std::to_string(a) + ", " +
                            std::to_string(b) + "]");
  std::vector<double> x(n), y(n);
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = frequencies[a - 1 + i];
    if (!(f > 0)) throw DomainError("Zipf fit needs positive frequencies");
    x[i] = std::log(static_cast<double>(i + 1));
    y[i] = std::log(f);
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double sse = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    sse += r * r;
  }
  return {-slope, std::sqrt(sse / static_cast<double>(n))};
}

double fit_zipf_exponent(const FrequencyProfile& p, std::size_t a, std::size_t b) {
  const auto f = p.frequencies();
  return fit_zipf_exponent(f, a, b).g;
}

double zipf_reference(double f_a, std::size_t a, std::size_t b, double g) {
  if (a < 1 || b < a) throw BoundsError("Zipf reference needs 1 <= a <= b");
  if (!(f_a > 0)) throw DomainError("Zipf reference needs f_a > 0");
  double z = 0;
  // smallest terms first
  for (std::size_t r = b; r >= a; --r) {
    z += f_a / std::pow(static_cast<double>(r - a + 1), g);
    if (r == a) break;
  }
  return z;
}

ZipfFit fit_segment(std::span<const double> frequencies, std::size_t a, std::size_t b) {
  const auto ef = fit_zipf_exponent(frequencies, a, b);
  ZipfFit fit;
  fit.a = a;
  fit.b = b;
  fit.g = ef.g;
  fit.rms_log_error = ef.rms_log_error;
  fit.f_a = frequencies[a - 1];
  for (std::size_t r = a; r <= b; ++r) fit.observed += frequencies[r - 1];
  fit.reference = zipf_reference(fit.f_a, a, b, fit.g);
  fit.deviation = (fit.observed - fit.reference) / fit.reference;
  return fit;
}

ZipfFit fit_segment(const FrequencyProfile& p, std::size_t a, std::size_t b) {
  const auto f = p.frequencies();
  return fit_segment(f, a, b);
}

double zipf_deviation(const FrequencyProfile& p) {
  if (p.diversity() < 2) throw FitError("Zipf deviation needs D >= 2");
  return fit_segment(p, 1, p.diversity()).deviation;
}

double tail_zipf_deviation(const FrequencyProfile& p) {
  if (p.diversity() < 2) throw FitError("tail Zipf deviation needs D >= 2");
  if (p.tail_start() >= p.diversity())
    throw FitError("undefined tail: tail starts at the last rank (theta = D = " +
                   std::to_string(p.diversity()) + ")");
  return fit_segment(p, p.tail_start(), p.diversity()).deviation;
}

}  // namespace textcx
