#pragma once

#include <cstddef>
#include <span>

#include "textcx/profile.hpp"

namespace textcx {

// Zipf model over rank segment [a, b]: f(r) = f_a / (r - a + 1)^g.
struct ZipfFit {
  std::size_t a = 1;
  std::size_t b = 1;
  double g = 0;              // reported positive for decaying profiles
  double f_a = 0;            // observed frequency at rank a (the anchor)
  double observed = 0;       // L_{a,b}
  double reference = 0;      // Z_{a,b}
  double deviation = 0;      // J = (L_{a,b} - Z_{a,b}) / Z_{a,b}
  double rms_log_error = 0;  // of the log-log regression
};

struct ExponentFit {
  double g;
  double rms_log_error;
};

// Ordinary least squares of ln f_r on ln(r - a + 1) over r in [a, b], slope
// negated. `frequencies[0]` is rank 1. Throws FitError if fewer than two ranks,
// BoundsError if the segment leaves the profile, DomainError on f <= 0.
ExponentFit fit_zipf_exponent(std::span<const double> frequencies, std::size_t a, std::size_t b);
double fit_zipf_exponent(const FrequencyProfile& p, std::size_t a, std::size_t b);

// sum_{r=a..b} f_a / (r - a + 1)^g
double zipf_reference(double f_a, std::size_t a, std::size_t b, double g);

// Fit plus reference plus deviation over [a, b].
ZipfFit fit_segment(std::span<const double> frequencies, std::size_t a, std::size_t b);
ZipfFit fit_segment(const FrequencyProfile& p, std::size_t a, std::size_t b);

// J_{1,D}; needs D >= 2.
double zipf_deviation(const FrequencyProfile& p);
// J_{theta,D} over the tail [theta, D]; FitError ("undefined tail") when theta == D.
double tail_zipf_deviation(const FrequencyProfile& p);

}  // namespace textcx
