#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tsc {

struct IntervalFeatures {
  double mean = 0.0;
  double std = 0.0;  // population (divide by n)
  double slope = 0.0;
};

/// Mean, population standard deviation and least-squares slope against the
/// positions 0..n-1. Throws IntervalTooShort when x has fewer than 2 values.
IntervalFeatures interval_summary(std::span<const double> x);

// Individual pieces of interval_summary, used by the composed pipelines. They
// produce bit-identical results to the corresponding interval_summary fields.
double mean(std::span<const double> x);
double population_std(std::span<const double> x);
double ols_slope(std::span<const double> x);

/// Autocorrelation at lags 1..min(n-1, maxlag). All zeros for a constant series.
std::vector<double> acf_coefs(std::span<const double> x, std::size_t maxlag);

/// |DFT(x)[k]|^2 for k = 0..floor(n/2)-1.
std::vector<double> power_spectrum(std::span<const double> x);

/// Full-length |DFT(x)[k]|^2, k = 0..n-1. Exposed for Parseval checks.
std::vector<double> full_power_spectrum(std::span<const double> x);

/// (x - mean) / std with population std; the zero vector when std < 1e-8.
std::vector<double> znormalize(std::span<const double> x);

/// Population standard deviation of every value of every series.
double pooled_std(std::span<const std::vector<double>> series);

}  // namespace tsc
