#include "tsc/synthetic.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "tsc/random.hpp"

namespace tsc {

namespace {

using Generator = std::function<std::vector<double>(std::size_t class_index, Rng& rng)>;

std::vector<std::string> labels_for(std::size_t n_classes) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < n_classes; ++c) labels.push_back(std::string(1, static_cast<char>('a' + c)));
  return labels;
}

SyntheticProblem build(const std::string& name, std::size_t n_train, std::size_t n_test, std::size_t length,
                       std::size_t n_classes, std::uint64_t seed, const Generator& make) {
  const auto labels = labels_for(n_classes);
  Rng rng{derive_seed(seed, 0x5e7)};
  std::vector<Case> train;
  std::vector<Case> test;
  for (std::size_t i = 0; i < n_train + n_test; ++i) {
    const std::size_t c = i % n_classes;
    Case item{make(c, rng), labels[c]};
    (i < n_train ? train : test).push_back(std::move(item));
  }
  return {Dataset(name, labels, length, std::move(train)), Dataset(name, labels, length, std::move(test))};
}

std::vector<double> noise(std::size_t length, double sd, Rng& rng) {
  std::normal_distribution<double> dist(0.0, sd);
  std::vector<double> x(length);
  for (auto& v : x) v = dist(rng);
  return x;
}

}  // namespace

SyntheticProblem constant_level_problem(std::uint64_t seed) {
  constexpr std::size_t kLength = 64;
  return build("ConstantLevel", 40, 40, kLength, 2, seed, [](std::size_t c, Rng& rng) {
    auto x = noise(kLength, 0.3, rng);
    if (c == 1) {
      for (std::size_t t = 0; t < kLength / 2; ++t) x[t] += 2.0;
    }
    return x;
  });
}

SyntheticProblem spectral_problem(std::uint64_t seed) {
  constexpr std::size_t kLength = 128;
  return build("Spectral", 40, 40, kLength, 2, seed, [](std::size_t c, Rng& rng) {
    const double period = c == 0 ? 8.0 : 32.0;
    const double phase = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
    auto x = noise(kLength, 0.3, rng);
    for (std::size_t t = 0; t < kLength; ++t) {
      x[t] += std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / period + phase);
    }
    return x;
  });
}

SyntheticProblem planted_spike_problem(std::uint64_t seed) {
  constexpr std::size_t kLength = 64;
  return build("PlantedSpike", 40, 40, kLength, 2, seed, [](std::size_t c, Rng& rng) {
    auto x = noise(kLength, 0.3, rng);
    if (c == 1) x[uniform_index(rng, 8, kLength - 9)] += 10.0;
    return x;
  });
}

SyntheticProblem planted_burst_problem(std::uint64_t seed) {
  constexpr std::size_t kLength = 64;
  constexpr std::size_t kWidth = 32;
  return build("PlantedBurst", 40, 40, kLength, 2, seed, [](std::size_t c, Rng& rng) {
    auto x = noise(kLength, 0.3, rng);
    if (c == 1) {
      const std::size_t start = uniform_index(rng, 0, kLength - kWidth);
      for (std::size_t t = 0; t < kWidth; ++t) {
        x[start + t] += 2.0 * std::sin(2.0 * std::numbers::pi * static_cast<double>(t) / 6.0);
      }
    }
    return x;
  });
}

SyntheticProblem all_constant_problem(std::size_t n_cases, std::size_t length) {
  return build("AllConstant", n_cases, n_cases, length, 2, 0,
               [length](std::size_t, Rng&) { return std::vector<double>(length, 3.0); });
}

SyntheticProblem random_problem(std::uint64_t seed, std::size_t n_train, std::size_t n_test, std::size_t length,
                                std::size_t n_classes) {
  return build("Random", n_train, n_test, length, n_classes, seed, [length](std::size_t c, Rng& rng) {
    auto x = noise(length, 1.0, rng);
    const double slope = 0.02 * static_cast<double>(c);
    for (std::size_t t = 0; t < length; ++t) x[t] += 0.5 * static_cast<double>(c) + slope * static_cast<double>(t);
    return x;
  });
}

}  // namespace tsc
