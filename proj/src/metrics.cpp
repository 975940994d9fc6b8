#include "textcx/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "textcx/error.hpp"

namespace textcx {

double specific_diversity(const FrequencyProfile& p) {
  if (p.empty()) throw DomainError("specific diversity of an empty profile");
  return static_cast<double>(p.diversity()) / static_cast<double>(p.length());
}

double entropy(std::span<const double> frequencies) {
  if (frequencies.empty()) throw DomainError("entropy of an empty profile");
  if (frequencies.size() == 1) return 0.0;
  const double L = std::accumulate(frequencies.begin(), frequencies.end(), 0.0);
  if (!(L > 0)) throw DomainError("entropy of a profile with no tokens");
  double sum = 0;
  for (double f : frequencies) {
    if (f <= 0) continue;
    const double p = f / L;
    sum -= p * std::log(p);
  }
  const double h = sum / std::log(static_cast<double>(frequencies.size()));
  return std::clamp(h, 0.0, 1.0);
}

double entropy(const FrequencyProfile& p) {
  const auto f = p.frequencies();
  return entropy(f);
}

ComplexityMeasures measures_from(double d, double h) {
  return {d, h, h, 1.0 - h, 4.0 * h * (1.0 - h)};
}

ComplexityMeasures complexity_measures(const FrequencyProfile& p) {
  return measures_from(specific_diversity(p), entropy(p));
}

}  // namespace textcx
