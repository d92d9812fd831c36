#include "surfchem/quantiles.hpp"

#include <algorithm>
#include <cmath>

#include "surfchem/errors.hpp"

namespace surfchem {

double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) {
    throw DomainError("quantile of an empty sample");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("quantile probability outside [0, 1]");
  }
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = static_cast<std::size_t>(std::ceil(h));
  if (lo == hi) return sorted[lo];
  const double w = h - static_cast<double>(lo);
  return sorted[lo] + w * (sorted[hi] - sorted[lo]);
}

SampleSummary summarize(std::vector<double> samples) {
  if (samples.size() < 2) {
    throw DomainError("summary needs at least 2 samples");
  }
  std::sort(samples.begin(), samples.end());
  SampleSummary s;
  s.q1 = quantile_sorted(samples, 0.25);
  s.median = quantile_sorted(samples, 0.5);
  s.q3 = quantile_sorted(samples, 0.75);
  const double iqr = s.q3 - s.q1;
  const double lo_fence = s.q1 - 1.5 * iqr;
  const double hi_fence = s.q3 + 1.5 * iqr;
  s.whisker_lo = samples.back();
  s.whisker_hi = samples.front();
  for (double v : samples) {
    if (v >= lo_fence) {
      s.whisker_lo = v;
      break;
    }
  }
  for (auto it = samples.rbegin(); it != samples.rend(); ++it) {
    if (*it <= hi_fence) {
      s.whisker_hi = *it;
      break;
    }
  }
  return s;
}

}  // namespace surfchem
