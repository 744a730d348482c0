#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsc {

enum class Measure { Euclidean, Dtw, Ddtw, Wdtw, Wddtw, Lcss, Erp, Msm, Twed };

std::string_view to_string(Measure m) noexcept;
/// Parses a measure name ("dtw", "msm", ...); throws InvalidConfig.
Measure parse_measure(std::string_view name);

/// Parameter record. Only the fields relevant to a measure are set:
///   dtw/ddtw: w          wdtw/wddtw: g       lcss: epsilon, delta
///   erp: g, w            msm: c              twed: nu, lambda
struct DistanceParams {
  std::optional<double> w;
  std::optional<double> g;
  std::optional<double> epsilon;
  std::optional<std::size_t> delta;
  std::optional<double> c;
  std::optional<double> nu;
  std::optional<double> lambda;

  friend bool operator==(const DistanceParams&, const DistanceParams&) = default;
};

struct DistanceSpec {
  Measure measure = Measure::Euclidean;
  DistanceParams params;

  /// Throws InvalidConfig unless exactly the measure's fields are present and
  /// in range.
  void validate() const;
  /// `key=value` pairs joined by commas, e.g. "w=0.1" or "nu=0.001,lambda=1".
  [[nodiscard]] std::string params_text() const;

  friend bool operator==(const DistanceSpec&, const DistanceSpec&) = default;
};

/// Builds a validated spec from `key=value[,key=value]` text.
DistanceSpec parse_distance_spec(Measure measure, std::string_view params_text);

inline constexpr double kNoCutoff = std::numeric_limits<double>::infinity();

// Every function below throws LengthMismatch for unequal lengths. Functions
// taking `cutoff` may return +inf as soon as the result provably exceeds it;
// any value <= cutoff is returned exactly.

/// Keogh first-order derivative, length n-2. Throws SeriesTooShort for n < 3.
std::vector<double> derivative_transform(std::span<const double> x);

/// Sakoe-Chiba band half-width ceil(w*n) used by dtw and erp.
std::size_t window_cells(double w, std::size_t n);

double squared_euclidean_distance(std::span<const double> a, std::span<const double> b, double cutoff = kNoCutoff);
double dtw_distance(std::span<const double> a, std::span<const double> b, double w, double cutoff = kNoCutoff);
double wdtw_distance(std::span<const double> a, std::span<const double> b, double g, double cutoff = kNoCutoff);
double lcss_distance(std::span<const double> a, std::span<const double> b, double epsilon, std::size_t delta);
double erp_distance(std::span<const double> a, std::span<const double> b, double g, double w,
                    double cutoff = kNoCutoff);
double msm_distance(std::span<const double> a, std::span<const double> b, double c, double cutoff = kNoCutoff);
double twed_distance(std::span<const double> a, std::span<const double> b, double nu, double lambda,
                     double cutoff = kNoCutoff);

/// Dispatch on spec.measure. Derivative measures transform both inputs first.
double distance(const DistanceSpec& spec, std::span<const double> a, std::span<const double> b,
                double cutoff = kNoCutoff);

/// True when the measure works on derivative-transformed series.
bool uses_derivative(Measure m) noexcept;

/// Distance on inputs that were already derivative-transformed when
/// uses_derivative(spec.measure); avoids re-transforming inside 1NN loops.
double distance_prepared(const DistanceSpec& spec, std::span<const double> a, std::span<const double> b,
                         double cutoff = kNoCutoff);

/// Applies the derivative transform when the measure needs it, else copies.
std::vector<double> prepare_series(Measure m, std::span<const double> x);

// ---------------------------------------------------------------------------
// Elastic Ensemble parameter grids

struct ParameterGrid {
  Measure measure = Measure::Euclidean;
  std::vector<DistanceParams> options;
};

/// Train-set statistics the data-dependent grids are built from.
struct GridContext {
  double pooled_std = 1.0;
  std::size_t series_length = 1;
};

/// The 100-option tuning grid for a measure. Throws NotTunable for euclidean.
ParameterGrid ee_parameter_grid(Measure measure, const GridContext& context);

/// One of the eleven Elastic Ensemble constituents.
struct Constituent {
  std::string name;
  Measure measure;
  bool tuned;              // true: cross-validated over ee_parameter_grid
  DistanceParams fixed;    // used when !tuned
};

/// euclidean, dtw_full, ddtw_full, dtw_cv, ddtw_cv, wdtw, wddtw, lcss, erp,
/// msm, twed, in that order.
const std::vector<Constituent>& ee_constituents();

}  // namespace tsc
