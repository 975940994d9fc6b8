#include "textcx/models.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "textcx/error.hpp"

namespace textcx {

HeapsFit fit_heaps(std::span<const HeapsPoint> points) {
  std::set<double> lengths;
  for (const auto& p : points) {
    if (!(p.length >= 1) || !(p.diversity >= 1)) throw DomainError("Heaps fit needs L >= 1 and D >= 1");
    lengths.insert(p.length);
  }
  if (lengths.size() < 2) throw FitError("Heaps fit needs at least two points with distinct L");

  const auto n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (const auto& p : points) {
    mx += std::log(p.length);
    my += std::log(p.diversity);
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double dx = std::log(p.length) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(p.diversity) - my);
  }
  HeapsFit fit;
  fit.beta = sxy / sxx;
  const double log_k = my - fit.beta * mx;
  fit.k = std::exp(log_k);
  double sse = 0;
  for (const auto& p : points) {
    const double r = std::log(p.diversity) - (log_k + fit.beta * std::log(p.length));
    sse += r * r;
  }
  fit.rms_log_error = std::sqrt(sse / n);
  fit.n_points = points.size();
  return fit;
}

double heaps_predict(const HeapsFit& fit, double length) {
  if (!(length >= 1)) throw DomainError("Heaps prediction needs L >= 1");
  return fit.k * std::pow(length, fit.beta);
}

double exponent_from_alpha(double alpha) {
  if (alpha == 1.0) throw DomainError("entropy model is singular at alpha = 1");
  return (alpha - 2.0) / (alpha - 1.0);
}

double alpha_from_exponent(double q) {
  if (q == 1.0) throw DomainError("exponent q = 1 has no finite alpha");
  return (2.0 - q) / (1.0 - q);
}

double model_entropy_exponent(double d, double q) {
  if (!(d > 0) || d > 1) throw DomainError("specific diversity must lie in (0, 1]");
  return std::pow(d, q);
}

double model_entropy(double d, double alpha) { return model_entropy_exponent(d, exponent_from_alpha(alpha)); }

double alpha_objective(std::span<const EntropyPoint> points, double q) {
  double s = 0;
  for (const auto& p : points) {
    const double r = p.h - std::pow(p.d, q);
    s += r * r;
  }
  return s;
}

namespace {

// d/dq of alpha_objective, up to the factor 2.
double objective_slope(std::span<const EntropyPoint> points, double q) {
  double s = 0;
  for (const auto& p : points) {
    const double m = std::pow(p.d, q);
    s -= (p.h - m) * m * std::log(p.d);
  }
  return s;
}

}  // namespace

AlphaFit fit_alpha(std::span<const EntropyPoint> points) {
  bool identifiable = false;
  for (const auto& p : points) {
    if (!(p.d > 0) || p.d > 1) throw DomainError("specific diversity must lie in (0, 1]");
    if (p.d < 1) identifiable = true;
  }
  if (!identifiable) throw FitError("alpha fit needs at least one point with 0 < d < 1");

  constexpr int kGrid = 4096;
  constexpr double kMaxQ = 1.0 - 1e-9;
  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kGrid; ++k) {
    const double v = alpha_objective(points, kMaxQ * k / kGrid);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }

  double lo = kMaxQ * std::max(best - 1, 0) / kGrid;
  double hi = kMaxQ * std::min(best + 1, kGrid) / kGrid;
  double q;
  // the grid minimum brackets a sign change of the slope
  const double slope_lo = objective_slope(points, lo);
  const double slope_hi = objective_slope(points, hi);
  if (slope_lo >= 0 && best == 0) {
    q = 0;  // minimum on the lower boundary
  } else if (slope_hi <= 0 && best == kGrid) {
    q = kMaxQ;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (objective_slope(points, mid) > 0)
        hi = mid;
      else
        lo = mid;
    }
    q = 0.5 * (lo + hi);
  }

  AlphaFit fit;
  fit.q = q;
  fit.alpha = alpha_from_exponent(q);
  fit.sse = alpha_objective(points, q);
  fit.n_points = points.size();
  return fit;
}

Classification classify_language(const ComplexityMeasures& m, const std::map<std::string, AlphaFit>& models) {
  if (models.empty()) throw Error("classification needs at least one fitted model");
  if (!(m.d > 0) || m.d > 1) throw DomainError("specific diversity must lie in (0, 1]");
  Classification out;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [label, fit] : models) {
    const double r = std::abs(m.h - std::pow(m.d, fit.q));
    out.residuals[label] = r;
    if (r < best) {  // strict: first label in map order wins ties
      best = r;
      out.label = label;
    }
  }
  return out;
}

}  // namespace textcx
