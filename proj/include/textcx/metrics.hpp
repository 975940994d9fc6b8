#pragma once

#include <span>

#include "textcx/profile.hpp"

namespace textcx {

// (d, h, e, s, c) of one profile. e = h, s = 1 - h, c = 4h(1 - h).
struct ComplexityMeasures {
  double d = 0;  // specific diversity D / L
  double h = 0;  // entropy, log base D
  double e = 0;  // emergence
  double s = 0;  // self-organization
  double c = 0;  // complexity
};

double specific_diversity(const FrequencyProfile& p);

// -sum (f_r / L) log_D (f_r / L); 0 when D == 1.
double entropy(const FrequencyProfile& p);
double entropy(std::span<const double> frequencies);

ComplexityMeasures complexity_measures(const FrequencyProfile& p);
// Derives e, s, c from given d and h.
ComplexityMeasures measures_from(double d, double h);

}  // namespace textcx
