#include "tsc/distances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "tsc/error.hpp"

namespace tsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_equal_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "series lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

double sq(double x) { return x * x; }

// MSM split/merge cost for inserting `value` next to neighbours x and y.
double msm_cost(double value, double x, double y, double c) {
  if ((x <= value && value <= y) || (x >= value && value >= y)) return c;
  return c + std::min(std::abs(value - x), std::abs(value - y));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::Euclidean: return "euclidean";
    case Measure::Dtw: return "dtw";
    case Measure::Ddtw: return "ddtw";
    case Measure::Wdtw: return "wdtw";
    case Measure::Wddtw: return "wddtw";
    case Measure::Lcss: return "lcss";
    case Measure::Erp: return "erp";
    case Measure::Msm: return "msm";
    case Measure::Twed: return "twed";
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (auto m : {Measure::Euclidean, Measure::Dtw, Measure::Ddtw, Measure::Wdtw, Measure::Wddtw, Measure::Lcss,
                 Measure::Erp, Measure::Msm, Measure::Twed}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown distance measure '" + std::string(name) + "'");
}

void DistanceSpec::validate() const {
  const auto& p = params;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidConfig, std::string(to_string(measure)) + ": " + why);
  };
  auto expect = [&](bool w, bool g, bool eps, bool delta, bool c, bool nu, bool lambda) {
    if (p.w.has_value() != w || p.g.has_value() != g || p.epsilon.has_value() != eps ||
        p.delta.has_value() != delta || p.c.has_value() != c || p.nu.has_value() != nu ||
        p.lambda.has_value() != lambda) {
      fail("parameters '" + params_text() + "' do not match the measure");
    }
  };
  switch (measure) {
    case Measure::Euclidean: expect(false, false, false, false, false, false, false); break;
    case Measure::Dtw:
    case Measure::Ddtw:
      expect(true, false, false, false, false, false, false);
      if (!(*p.w >= 0.0 && *p.w <= 1.0)) fail("w must lie in [0, 1]");
      break;
    case Measure::Wdtw:
    case Measure::Wddtw:
      expect(false, true, false, false, false, false, false);
      if (!(*p.g >= 0.0) || !std::isfinite(*p.g)) fail("g must be >= 0");
      break;
    case Measure::Lcss:
      expect(false, false, true, true, false, false, false);
      if (!(*p.epsilon > 0.0) || !std::isfinite(*p.epsilon)) fail("epsilon must be > 0");
      break;
    case Measure::Erp:
      expect(true, true, false, false, false, false, false);
      if (!(*p.w >= 0.0 && *p.w <= 1.0)) fail("w must lie in [0, 1]");
      if (!std::isfinite(*p.g)) fail("g must be finite");
      break;
    case Measure::Msm:
      expect(false, false, false, false, true, false, false);
      if (!(*p.c > 0.0) || !std::isfinite(*p.c)) fail("c must be > 0");
      break;
    case Measure::Twed:
      expect(false, false, false, false, false, true, true);
      if (!(*p.nu > 0.0) || !std::isfinite(*p.nu)) fail("nu must be > 0");
      if (!(*p.lambda >= 0.0) || !std::isfinite(*p.lambda)) fail("lambda must be >= 0");
      break;
  }
}

std::string DistanceSpec::params_text() const {
  std::string out;
  auto add = [&](std::string_view key, const std::string& value) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += value;
  };
  if (params.w) add("w", format_double(*params.w));
  if (params.g) add("g", format_double(*params.g));
  if (params.epsilon) add("epsilon", format_double(*params.epsilon));
  if (params.delta) add("delta", std::to_string(*params.delta));
  if (params.c) add("c", format_double(*params.c));
  if (params.nu) add("nu", format_double(*params.nu));
  if (params.lambda) add("lambda", format_double(*params.lambda));
  return out;
}

DistanceSpec parse_distance_spec(Measure measure, std::string_view text) {
  DistanceSpec spec{measure, {}};
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto pair = text.substr(start, end - start);
    start = end + 1;
    if (pair.empty()) continue;
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::InvalidConfig, "expected key=value, got '" + std::string(pair) + "'");
    const auto key = pair.substr(0, eq);
    const auto value = pair.substr(eq + 1);
    auto parse_real = [&] {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::InvalidConfig, "bad number '" + std::string(value) + "' for " + std::string(key));
      }
      return v;
    };
    if (key == "w") spec.params.w = parse_real();
    else if (key == "g") spec.params.g = parse_real();
    else if (key == "epsilon") spec.params.epsilon = parse_real();
    else if (key == "delta") {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorCode::InvalidConfig, "delta must be a non-negative integer");
      }
      spec.params.delta = v;
    } else if (key == "c") spec.params.c = parse_real();
    else if (key == "nu") spec.params.nu = parse_real();
    else if (key == "lambda") spec.params.lambda = parse_real();
    else throw Error(ErrorCode::InvalidConfig, "unknown parameter '" + std::string(key) + "'");
  }
  spec.validate();
  return spec;
}

std::vector<double> derivative_transform(std::span<const double> x) {
  if (x.size() < 3) throw Error(ErrorCode::SeriesTooShort, "derivative needs at least 3 values");
  std::vector<double> out(x.size() - 2);
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    out[i - 1] = ((x[i] - x[i - 1]) + (x[i + 1] - x[i - 1]) / 2.0) / 2.0;
  }
  return out;
}

std::size_t window_cells(double w, std::size_t n) {
  // The 1e-9 guard keeps w*n products such as 0.17*100 = 17.000000000000004
  // from rounding up a whole cell.
  const double cells = std::ceil(w * static_cast<double>(n) - 1e-9);
  if (cells <= 0.0) return 0;
  return std::min(n, static_cast<std::size_t>(cells));
}

double squared_euclidean_distance(std::span<const double> a, std::span<const double> b, double cutoff) {
  require_equal_lengths(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += sq(a[i] - b[i]);
    if (acc > cutoff) return kInf;
  }
  return acc;
}

namespace {

// Banded DTW over squared costs scaled by weight(|i-j|).
template <typename Weight>
double banded_dtw(std::span<const double> a, std::span<const double> b, std::size_t window, Weight weight,
                  double cutoff) {
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> prev(n + 1, kInf);
  std::vector<double> cur(n + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    std::fill(cur.begin(), cur.end(), kInf);
    const std::size_t lo = i > window ? i - window : 1;
    const std::size_t hi = std::min(n, i + window);
    double row_min = kInf;
    for (std::size_t j = lo; j <= hi; ++j) {
      const double best = std::min({prev[j], cur[j - 1], prev[j - 1]});
      const std::size_t offset = i > j ? i - j : j - i;
      cur[j] = best + weight(offset) * sq(a[i - 1] - b[j - 1]);
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > cutoff) return kInf;
    std::swap(prev, cur);
  }
  return prev[n];
}

}  // namespace

double dtw_distance(std::span<const double> a, std::span<const double> b, double w, double cutoff) {
  require_equal_lengths(a, b);
  return banded_dtw(a, b, window_cells(w, a.size()), [](std::size_t) { return 1.0; }, cutoff);
}

double wdtw_distance(std::span<const double> a, std::span<const double> b, double g, double cutoff) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  std::vector<double> weights(n + 1);
  const double half = static_cast<double>(n) / 2.0;
  for (std::size_t d = 0; d <= n; ++d) weights[d] = 1.0 / (1.0 + std::exp(-g * (static_cast<double>(d) - half)));
  return banded_dtw(a, b, n, [&](std::size_t d) { return weights[d]; }, cutoff);
}

double lcss_distance(std::span<const double> a, std::span<const double> b, double epsilon, std::size_t delta) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<std::size_t> prev(n + 1, 0);
  std::vector<std::size_t> cur(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t offset = i > j ? i - j : j - i;
      if (offset <= delta && std::abs(a[i - 1] - b[j - 1]) <= epsilon) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return 1.0 - static_cast<double>(prev[n]) / static_cast<double>(n);
}

double erp_distance(std::span<const double> a, std::span<const double> b, double g, double w, double cutoff) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  const std::size_t window = window_cells(w, n);
  std::vector<double> prev(n + 1, kInf);
  std::vector<double> cur(n + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t j = 1; j <= std::min(n, window); ++j) prev[j] = prev[j - 1] + sq(b[j - 1] - g);
  for (std::size_t i = 1; i <= n; ++i) {
    std::fill(cur.begin(), cur.end(), kInf);
    const double gap_a = sq(a[i - 1] - g);
    if (i <= window) cur[0] = prev[0] + gap_a;
    double row_min = cur[0];
    const std::size_t lo = i > window ? i - window : 1;
    const std::size_t hi = std::min(n, i + window);
    for (std::size_t j = lo; j <= hi; ++j) {
      cur[j] = std::min({prev[j - 1] + sq(a[i - 1] - b[j - 1]), prev[j] + gap_a, cur[j - 1] + sq(b[j - 1] - g)});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > cutoff) return kInf;
    std::swap(prev, cur);
  }
  return prev[n];
}

double msm_distance(std::span<const double> a, std::span<const double> b, double c, double cutoff) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> prev(n);
  std::vector<double> cur(n);
  prev[0] = std::abs(a[0] - b[0]);
  for (std::size_t j = 1; j < n; ++j) prev[j] = prev[j - 1] + msm_cost(b[j], a[0], b[j - 1], c);
  if (*std::min_element(prev.begin(), prev.end()) > cutoff) return kInf;
  for (std::size_t i = 1; i < n; ++i) {
    cur[0] = prev[0] + msm_cost(a[i], a[i - 1], b[0], c);
    double row_min = cur[0];
    for (std::size_t j = 1; j < n; ++j) {
      const double match = prev[j - 1] + std::abs(a[i] - b[j]);
      const double split_a = prev[j] + msm_cost(a[i], a[i - 1], b[j], c);
      const double split_b = cur[j - 1] + msm_cost(b[j], a[i], b[j - 1], c);
      cur[j] = std::min({match, split_a, split_b});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > cutoff) return kInf;
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

double twed_distance(std::span<const double> a, std::span<const double> b, double nu, double lambda, double cutoff) {
  require_equal_lengths(a, b);
  const std::size_t n = a.size();
  // Index 0 is the implicit (t=0, value 0) origin point.
  auto value_a = [&](std::size_t i) { return i == 0 ? 0.0 : a[i - 1]; };
  auto value_b = [&](std::size_t j) { return j == 0 ? 0.0 : b[j - 1]; };
  std::vector<double> prev(n + 1, kInf);
  std::vector<double> cur(n + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = kInf;
    double row_min = kInf;
    const double delete_a = sq(value_a(i) - value_a(i - 1)) + nu + lambda;
    for (std::size_t j = 1; j <= n; ++j) {
      const double offset = static_cast<double>(i > j ? i - j : j - i);
      const double match = prev[j - 1] + sq(value_a(i) - value_b(j)) + sq(value_a(i - 1) - value_b(j - 1)) +
                           2.0 * nu * offset;
      const double del_a = prev[j] + delete_a;
      const double del_b = cur[j - 1] + sq(value_b(j) - value_b(j - 1)) + nu + lambda;
      cur[j] = std::min({match, del_a, del_b});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > cutoff) return kInf;
    std::swap(prev, cur);
  }
  return prev[n];
}

bool uses_derivative(Measure m) noexcept { return m == Measure::Ddtw || m == Measure::Wddtw; }

std::vector<double> prepare_series(Measure m, std::span<const double> x) {
  if (uses_derivative(m)) return derivative_transform(x);
  return {x.begin(), x.end()};
}

double distance_prepared(const DistanceSpec& spec, std::span<const double> a, std::span<const double> b,
                         double cutoff) {
  const auto& p = spec.params;
  switch (spec.measure) {
    case Measure::Euclidean: return squared_euclidean_distance(a, b, cutoff);
    case Measure::Dtw:
    case Measure::Ddtw: return dtw_distance(a, b, *p.w, cutoff);
    case Measure::Wdtw:
    case Measure::Wddtw: return wdtw_distance(a, b, *p.g, cutoff);
    case Measure::Lcss: return lcss_distance(a, b, *p.epsilon, *p.delta);
    case Measure::Erp: return erp_distance(a, b, *p.g, *p.w, cutoff);
    case Measure::Msm: return msm_distance(a, b, *p.c, cutoff);
    case Measure::Twed: return twed_distance(a, b, *p.nu, *p.lambda, cutoff);
  }
  return kInf;
}

double distance(const DistanceSpec& spec, std::span<const double> a, std::span<const double> b, double cutoff) {
  spec.validate();
  require_equal_lengths(a, b);
  if (uses_derivative(spec.measure)) {
    const auto da = derivative_transform(a);
    const auto db = derivative_transform(b);
    return distance_prepared(spec, da, db, cutoff);
  }
  return distance_prepared(spec, a, b, cutoff);
}

}  // namespace tsc
