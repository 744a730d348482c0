#include "tsc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tsc/error.hpp"

namespace tsc {

namespace {

bool is_constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
}

void require_min_length(std::span<const double> x, std::size_t n) {
  if (x.size() < n) {
    throw Error(ErrorCode::IntervalTooShort, "need at least " + std::to_string(n) + " values, got " +
                                                 std::to_string(x.size()));
  }
}

// DFT with twiddles indexed by (k*t) mod n so large k*t products keep full
// precision.
void dft_power(std::span<const double> x, std::size_t n_out, std::vector<double>& out) {
  const std::size_t n = x.size();
  out.assign(n_out, 0.0);
  std::vector<double> cos_table(n);
  std::vector<double> sin_table(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    cos_table[t] = std::cos(angle);
    sin_table[t] = std::sin(angle);
  }
  for (std::size_t k = 0; k < n_out; ++k) {
    double re = 0.0;
    double im = 0.0;
    std::size_t idx = 0;
    for (std::size_t t = 0; t < n; ++t) {
      re += x[t] * cos_table[idx];
      im -= x[t] * sin_table[idx];
      idx += k;
      if (idx >= n) idx %= n;
    }
    out[k] = re * re + im * im;
  }
}

}  // namespace

double mean(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / static_cast<double>(x.size());
}

double population_std(std::span<const double> x) {
  if (x.size() < 2 || is_constant(x)) return 0.0;
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size()));
}

double ols_slope(std::span<const double> x) {
  if (x.size() < 2 || is_constant(x)) return 0.0;
  const double n = static_cast<double>(x.size());
  const double m = mean(x);
  const double centre = (n - 1.0) / 2.0;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double di = static_cast<double>(i) - centre;
    num += di * (x[i] - m);
    den += di * di;
  }
  return num / den;
}

IntervalFeatures interval_summary(std::span<const double> x) {
  require_min_length(x, 2);
  return {mean(x), population_std(x), ols_slope(x)};
}

std::vector<double> acf_coefs(std::span<const double> x, std::size_t maxlag) {
  require_min_length(x, 2);
  const std::size_t nlags = std::min(x.size() - 1, maxlag);
  std::vector<double> out(nlags, 0.0);
  if (is_constant(x)) return out;

  const double m = mean(x);
  std::vector<double> centred(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) centred[i] = x[i] - m;
  double denom = 0.0;
  for (double v : centred) denom += v * v;
  if (denom <= 0.0) return out;
  for (std::size_t lag = 1; lag <= nlags; ++lag) {
    double num = 0.0;
    for (std::size_t t = 0; t + lag < centred.size(); ++t) num += centred[t] * centred[t + lag];
    out[lag - 1] = num / denom;
  }
  return out;
}

std::vector<double> power_spectrum(std::span<const double> x) {
  require_min_length(x, 2);
  std::vector<double> out;
  dft_power(x, x.size() / 2, out);
  return out;
}

std::vector<double> full_power_spectrum(std::span<const double> x) {
  std::vector<double> out;
  dft_power(x, x.size(), out);
  return out;
}

std::vector<double> znormalize(std::span<const double> x) {
  std::vector<double> out(x.size(), 0.0);
  if (x.empty()) return out;
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  const double sd = std::sqrt(ss / static_cast<double>(x.size()));
  if (sd < 1e-8) return out;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - m) / sd;
  return out;
}

double pooled_std(std::span<const std::vector<double>> series) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& s : series) {
    for (double v : s) sum += v;
    count += s.size();
  }
  if (count == 0) return 0.0;
  const double m = sum / static_cast<double>(count);
  double ss = 0.0;
  for (const auto& s : series) {
    for (double v : s) ss += (v - m) * (v - m);
  }
  return std::sqrt(ss / static_cast<double>(count));
}

}  // namespace tsc
