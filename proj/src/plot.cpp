#include "textcx/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "textcx/csv.hpp"
#include "textcx/error.hpp"

namespace textcx {

namespace {

constexpr int kCurvePoints = 200;

class Series {
 public:
  Series() { out_ << "x\ty\tseries\n"; }
  void add(double x, double y, const std::string& series) {
    out_ << csv::format_double(x) << '\t' << csv::format_double(y) << '\t' << series << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

const std::vector<std::string> kClasses = {"artificial", "english", "other", "spanish"};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return g;
}

void scatter(Series& s, const Library& lib, const char* x, const char* y) {
  for (const auto& label : kClasses) {
    for (const auto* r : select(lib, label)) {
      auto xv = record_column(*r, x);
      if (std::string_view(x) == "L_tail" && !xv) xv = static_cast<double>(r->L);
      const auto yv = record_column(*r, y);
      if (xv && yv) s.add(*xv, *yv, label);
    }
  }
}

void model_curves(Series& s, const Library& lib) {
  for (const auto& [label, f] : lib.fits) {
    if (!f.alpha) continue;
    for (int i = 1; i <= kCurvePoints; ++i) {
      const double d = static_cast<double>(i) / kCurvePoints;
      s.add(d, std::pow(d, f.alpha->q), label + ".model");
    }
  }
}

void require_profiles(const Library& lib) {
  if (lib.profiles.empty()) throw Error("this figure needs stored profiles (ingest with --keep-profiles)");
}

}  // namespace

const std::vector<std::string>& plot_figures() {
  static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig5",  "fig6",
                                               "fig7", "fig8", "fig9", "fig10", "fig11"};
  return ids;
}

std::string plot_data(const Library& lib, std::string_view figure) {
  Series s;
  if (figure == "fig2") {
    scatter(s, lib, "L", "D");
    for (const auto& [label, f] : lib.fits) {
      if (!f.heaps) continue;
      double lo = 1e300, hi = 0;
      for (const auto* r : select(lib, label)) {
        lo = std::min(lo, static_cast<double>(r->L));
        hi = std::max(hi, static_cast<double>(r->L));
      }
      if (hi <= lo) continue;
      for (double L : log_grid(lo, hi, kCurvePoints)) s.add(L, heaps_predict(*f.heaps, L), label + ".heaps");
    }
  } else if (figure == "fig3") {
    scatter(s, lib, "d", "h");
  } else if (figure == "fig4") {
    scatter(s, lib, "d", "h");
    model_curves(s, lib);
  } else if (figure == "fig5") {
    for (const auto& [label, f] : lib.fits) {
      if (!f.alpha) continue;
      for (int i = 1; i <= kCurvePoints; ++i) {
        const double d = static_cast<double>(i) / kCurvePoints;
        const double h = std::pow(d, f.alpha->q);
        s.add(d, h, label + ".e");
        s.add(d, 1 - h, label + ".s");
        s.add(d, 4 * h * (1 - h), label + ".c");
      }
    }
  } else if (figure == "fig6") {
    for (const auto& [label, f] : lib.fits) {
      if (!f.alpha || !f.heaps) continue;
      for (double L : log_grid(10, 2e5, kCurvePoints)) {
        const double d = std::min(1.0, heaps_predict(*f.heaps, L) / L);
        const double h = std::pow(d, f.alpha->q);
        s.add(L, h, label + ".e");
        s.add(L, 1 - h, label + ".s");
        s.add(L, 4 * h * (1 - h), label + ".c");
      }
    }
  } else if (figure == "fig7") {
    require_profiles(lib);
    for (const auto& [name, p] : lib.profiles)
      for (std::size_t r = 1; r <= p.diversity(); ++r)
        s.add(static_cast<double>(r), static_cast<double>(p.frequency(r)), name);
  } else if (figure == "fig8" || figure == "fig9") {
    require_profiles(lib);
    for (const auto& label : kClasses) {
      MergedTable t;
      try {
        t = merged_language_profile(lib, label);
      } catch (const Error&) {
        continue;
      }
      if (figure == "fig8") {
        for (std::size_t r = 1; r <= t.profile.diversity(); ++r)
          s.add(static_cast<double>(r), static_cast<double>(t.profile.frequency(r)), label);
      } else {
        for (const auto& pt : cdf(t.profile).points) s.add(static_cast<double>(pt.rank), pt.fraction, label);
      }
    }
  } else if (figure == "fig10") {
    scatter(s, lib, "L", "J_1D");
  } else if (figure == "fig11") {
    scatter(s, lib, "L_tail", "J_thetaD");
  } else {
    throw Error("unknown figure '" + std::string(figure) + "'");
  }
  return s.str();
}

}  // namespace textcx
