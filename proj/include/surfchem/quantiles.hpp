#pragma once

#include <vector>

namespace surfchem {

/// Quantile of an ascending-sorted sample by linear interpolation between
/// order statistics at rank h = (n-1)p. Throws DomainError for an empty
/// sample or p outside [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double p);

/// Box-plot statistics of a sample.
struct SampleSummary {
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double whisker_lo = 0.0;  // smallest sample >= q1 - 1.5 IQR
  double whisker_hi = 0.0;  // largest sample <= q3 + 1.5 IQR
};

/// Median, quartiles and whiskers at the most extreme sample values
/// within 1.5 interquartile ranges of the quartiles. Needs >= 2 samples.
SampleSummary summarize(std::vector<double> samples);

}  // namespace surfchem
