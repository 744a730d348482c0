#include <cmath>

#include "tsc/distances.hpp"
#include "tsc/error.hpp"

namespace tsc {

namespace {

constexpr std::size_t kGridSize = 100;

// k-th of `count` evenly spaced points over [lo, hi], endpoints included.
double linspace(double lo, double hi, std::size_t k, std::size_t count) {
  if (count == 1) return lo;
  if (k + 1 == count) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
}

}  // namespace

ParameterGrid ee_parameter_grid(Measure measure, const GridContext& context) {
  // A constant training set has zero spread; fall back to unit scale so the
  // epsilon/g ranges stay valid.
  const double sigma = context.pooled_std > 0.0 ? context.pooled_std : 1.0;
  const double length = static_cast<double>(context.series_length);

  ParameterGrid grid{measure, {}};
  grid.options.reserve(kGridSize);
  switch (measure) {
    case Measure::Euclidean: throw Error(ErrorCode::NotTunable, "euclidean distance has no parameters");
    case Measure::Dtw:
    case Measure::Ddtw:
      for (std::size_t x = 0; x < kGridSize; ++x) grid.options.push_back({.w = static_cast<double>(x) / 100.0});
      break;
    case Measure::Wdtw:
    case Measure::Wddtw:
      for (std::size_t x = 0; x < kGridSize; ++x) grid.options.push_back({.g = static_cast<double>(x) / 100.0});
      break;
    case Measure::Lcss:
      for (std::size_t e = 0; e < 10; ++e) {
        for (std::size_t d = 0; d < 10; ++d) {
          grid.options.push_back({.epsilon = linspace(sigma / 4.0, sigma, e, 10),
                                  .delta = static_cast<std::size_t>(std::lround(linspace(0.0, length / 4.0, d, 10)))});
        }
      }
      break;
    case Measure::Erp:
      for (std::size_t gi = 0; gi < 10; ++gi) {
        for (std::size_t wi = 0; wi < 10; ++wi) {
          grid.options.push_back({.w = linspace(0.0, 0.25, wi, 10), .g = linspace(sigma / 5.0, sigma, gi, 10)});
        }
      }
      break;
    case Measure::Msm:
      for (std::size_t k = 0; k < kGridSize; ++k) {
        grid.options.push_back({.c = std::pow(10.0, linspace(-2.0, 2.0, k, kGridSize))});
      }
      break;
    case Measure::Twed: {
      constexpr double kNu[] = {0.00001, 0.0001, 0.001, 0.01, 0.1, 1.0};
      std::vector<DistanceParams> product;
      for (double nu : kNu) {
        for (std::size_t l = 0; l < 10; ++l) product.push_back({.nu = nu, .lambda = linspace(0.0, 0.1, l, 10)});
      }
      // 60 combinations, cycled to fill 100 slots. Repeats never win a tuning
      // tie because ties go to the lower grid index.
      for (std::size_t k = 0; k < kGridSize; ++k) grid.options.push_back(product[k % product.size()]);
      break;
    }
  }
  return grid;
}

const std::vector<Constituent>& ee_constituents() {
  static const std::vector<Constituent> constituents = {
      {"euclidean", Measure::Euclidean, false, {}},
      {"dtw_full", Measure::Dtw, false, {.w = 1.0}},
      {"ddtw_full", Measure::Ddtw, false, {.w = 1.0}},
      {"dtw_cv", Measure::Dtw, true, {}},
      {"ddtw_cv", Measure::Ddtw, true, {}},
      {"wdtw", Measure::Wdtw, true, {}},
      {"wddtw", Measure::Wddtw, true, {}},
      {"lcss", Measure::Lcss, true, {}},
      {"erp", Measure::Erp, true, {}},
      {"msm", Measure::Msm, true, {}},
      {"twed", Measure::Twed, true, {}},
  };
  return constituents;
}

}  // namespace tsc
