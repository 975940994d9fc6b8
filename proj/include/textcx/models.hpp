#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "textcx/metrics.hpp"

namespace textcx {

// Heaps' law D = k * L^beta.
struct HeapsFit {
  double k = 0;
  double beta = 0;
  double rms_log_error = 0;
  std::size_t n_points = 0;
};

struct HeapsPoint {
  double length;     // L
  double diversity;  // D
};

// OLS of ln D on ln L. Throws FitError with fewer than two distinct lengths,
// DomainError for L or D < 1.
HeapsFit fit_heaps(std::span<const HeapsPoint> points);
double heaps_predict(const HeapsFit& fit, double length);

// Lorenz-curve entropy model h = d^q with q = (alpha - 2) / (alpha - 1).
struct AlphaFit {
  double alpha = 2;
  double q = 0;
  double sse = 0;  // sum of squared h residuals
  std::size_t n_points = 0;
};

struct EntropyPoint {
  double d;
  double h;
};

double exponent_from_alpha(double alpha);  // throws DomainError at alpha == 1
double alpha_from_exponent(double q);      // throws DomainError at q == 1

double model_entropy(double d, double alpha);
double model_entropy_exponent(double d, double q);

// Least squares in h over q in [0, 1): coarse grid to locate the basin, then
// bisection on the derivative. Throws FitError when no point has 0 < d < 1.
AlphaFit fit_alpha(std::span<const EntropyPoint> points);
double alpha_objective(std::span<const EntropyPoint> points, double q);

struct Classification {
  std::string label;
  std::map<std::string, double> residuals;  // |h - d^q| per model
};

// Nearest model curve by absolute entropy residual; ties go to the
// lexicographically first label.
Classification classify_language(const ComplexityMeasures& m, const std::map<std::string, AlphaFit>& models);

}  // namespace textcx
