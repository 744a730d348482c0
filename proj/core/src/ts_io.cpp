#include "tsc/ts_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "tsc/error.hpp"
#include "tsc/random.hpp"

namespace tsc {

// ---------------------------------------------------------------------------
// Dataset

Dataset::Dataset(std::string problem_name, std::vector<std::string> class_labels, std::size_t series_length,
                 std::vector<Case> cases)
    : problem_name_(std::move(problem_name)),
      class_labels_(std::move(class_labels)),
      series_length_(series_length),
      cases_(std::move(cases)) {
  if (class_labels_.empty()) throw Error(ErrorCode::InvalidDataset, "no class labels declared");
  if (series_length_ == 0) throw Error(ErrorCode::InvalidDataset, "series length must be positive");
  std::set<std::string> seen;
  for (const auto& label : class_labels_) {
    if (!seen.insert(label).second) throw Error(ErrorCode::InvalidDataset, "duplicate class label '" + label + "'");
  }
  class_indices_.reserve(cases_.size());
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    const auto& c = cases_[i];
    if (c.values.size() != series_length_) {
      throw Error(ErrorCode::LengthMismatch, "case " + std::to_string(i) + " has length " +
                                                 std::to_string(c.values.size()) + ", expected " +
                                                 std::to_string(series_length_));
    }
    for (double v : c.values) {
      if (!std::isfinite(v)) throw Error(ErrorCode::NonNumericValue, "case " + std::to_string(i) + " is not finite");
    }
    class_indices_.push_back(index_of_label(c.label));
  }
}

std::size_t Dataset::index_of_label(const std::string& label) const {
  auto it = std::find(class_labels_.begin(), class_labels_.end(), label);
  if (it == class_labels_.end()) throw Error(ErrorCode::UnknownLabel, "label '" + label + "' is not declared");
  return static_cast<std::size_t>(it - class_labels_.begin());
}

std::vector<std::size_t> Dataset::class_counts() const {
  std::vector<std::size_t> counts(n_classes(), 0);
  for (auto c : class_indices_) ++counts[c];
  return counts;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<Case> picked;
  picked.reserve(indices.size());
  for (auto i : indices) picked.push_back(cases_.at(i));
  return Dataset{problem_name_, class_labels_, series_length_, std::move(picked)};
}

void require_compatible(const Dataset& train, const Dataset& test) {
  if (train.series_length() != test.series_length()) {
    throw Error(ErrorCode::LengthMismatch, "test series length " + std::to_string(test.series_length()) +
                                               " differs from train length " + std::to_string(train.series_length()));
  }
  if (train.class_labels() != test.class_labels()) {
    throw Error(ErrorCode::IncompatibleDatasets, "train and test declare different class labels");
  }
}

// ---------------------------------------------------------------------------
// .ts parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_bool(std::string_view token, std::size_t line_no) {
  const auto t = lower(token);
  if (t == "true") return true;
  if (t == "false") return false;
  throw Error(ErrorCode::MalformedHeader, "line " + std::to_string(line_no) + ": expected true/false");
}

double parse_value(std::string_view token, std::size_t line_no) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw Error(ErrorCode::NonNumericValue,
                "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a finite number");
  }
  return v;
}

}  // namespace

Dataset parse_ts_file(std::string_view text) {
  std::string problem_name;
  std::optional<std::size_t> series_length;
  std::optional<std::vector<std::string>> labels;
  bool in_data = false;
  std::vector<Case> cases;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (!in_data) {
      if (line.front() != '@') {
        throw Error(ErrorCode::MalformedHeader, "line " + std::to_string(line_no) + ": data before @data");
      }
      auto tokens = split_ws(line.substr(1));
      if (tokens.empty()) throw Error(ErrorCode::MalformedHeader, "line " + std::to_string(line_no) + ": empty directive");
      const auto directive = lower(tokens[0]);
      if (directive == "problemname") {
        if (tokens.size() >= 2) problem_name = std::string(tokens[1]);
      } else if (directive == "univariate") {
        if (tokens.size() < 2) throw Error(ErrorCode::MalformedHeader, "@univariate needs a value");
        if (!parse_bool(tokens[1], line_no)) {
          throw Error(ErrorCode::MultivariateUnsupported, "only univariate problems are supported");
        }
      } else if (directive == "equallength") {
        if (tokens.size() < 2) throw Error(ErrorCode::MalformedHeader, "@equalLength needs a value");
        if (!parse_bool(tokens[1], line_no)) {
          throw Error(ErrorCode::UnequalLengthUnsupported, "only equal-length problems are supported");
        }
      } else if (directive == "serieslength") {
        std::size_t n = 0;
        if (tokens.size() < 2) throw Error(ErrorCode::MalformedHeader, "@seriesLength needs a value");
        auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
        if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() || n == 0) {
          throw Error(ErrorCode::MalformedHeader, "line " + std::to_string(line_no) + ": bad @seriesLength");
        }
        series_length = n;
      } else if (directive == "classlabel") {
        if (tokens.size() < 2 || !parse_bool(tokens[1], line_no)) {
          throw Error(ErrorCode::MalformedHeader, "@classLabel must be true and list the labels");
        }
        std::vector<std::string> declared;
        for (std::size_t i = 2; i < tokens.size(); ++i) declared.emplace_back(tokens[i]);
        if (declared.empty()) throw Error(ErrorCode::MalformedHeader, "@classLabel lists no labels");
        labels = std::move(declared);
      } else if (directive == "data") {
        if (!labels) throw Error(ErrorCode::MalformedHeader, "@data reached without @classLabel");
        in_data = true;
      }
      continue;
    }

    const auto colon = line.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::MalformedHeader, "line " + std::to_string(line_no) + ": case has no ':' label separator");
    }
    auto values_part = line.substr(0, colon);
    if (values_part.find(':') != std::string_view::npos) {
      throw Error(ErrorCode::MultivariateUnsupported, "line " + std::to_string(line_no) + ": multiple channels");
    }
    Case c;
    c.label = std::string(trim(line.substr(colon + 1)));
    std::size_t start = 0;
    while (start <= values_part.size()) {
      auto comma = values_part.find(',', start);
      if (comma == std::string_view::npos) comma = values_part.size();
      c.values.push_back(parse_value(values_part.substr(start, comma - start), line_no));
      start = comma + 1;
    }
    if (!series_length) series_length = c.values.size();
    if (c.values.size() != *series_length) {
      throw Error(ErrorCode::LengthMismatch, "line " + std::to_string(line_no) + ": case has " +
                                                 std::to_string(c.values.size()) + " values, expected " +
                                                 std::to_string(*series_length));
    }
    if (std::find(labels->begin(), labels->end(), c.label) == labels->end()) {
      throw Error(ErrorCode::UnknownLabel, "line " + std::to_string(line_no) + ": label '" + c.label + "'");
    }
    cases.push_back(std::move(c));
  }

  if (!in_data) throw Error(ErrorCode::MalformedHeader, "missing @data section");
  if (!series_length) throw Error(ErrorCode::MalformedHeader, "no @seriesLength and no cases to infer it from");
  return Dataset{std::move(problem_name), std::move(*labels), *series_length, std::move(cases)};
}

Dataset load_ts_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::DatasetNotFound, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ts_file(buffer.str());
}

std::string write_ts_file(const Dataset& dataset) {
  std::string out;
  out += "@problemName " + dataset.problem_name() + "\n";
  out += "@timeStamps false\n@missing false\n@univariate true\n@equalLength true\n";
  out += "@seriesLength " + std::to_string(dataset.series_length()) + "\n";
  out += "@classLabel true";
  for (const auto& label : dataset.class_labels()) out += " " + label;
  out += "\n@data\n";
  char buf[32];
  for (const auto& c : dataset.cases()) {
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", c.values[i]);
      if (i) out += ',';
      out += buf;
    }
    out += ':';
    out += c.label;
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resampling

ResamplePair stratified_resample(const Dataset& original_train, const Dataset& original_test,
                                 std::size_t resample_id, std::uint64_t seed) {
  if (original_train.class_labels() != original_test.class_labels() ||
      original_train.series_length() != original_test.series_length()) {
    throw Error(ErrorCode::IncompatibleDatasets, "train and test differ in labels or series length");
  }
  if (resample_id == 0) return {original_train, original_test, 0, seed};

  const std::size_t n_classes = original_train.n_classes();
  std::vector<std::vector<const Case*>> pools(n_classes);
  for (std::size_t i = 0; i < original_train.size(); ++i) pools[original_train.class_index(i)].push_back(&original_train[i]);
  for (std::size_t i = 0; i < original_test.size(); ++i) pools[original_test.class_index(i)].push_back(&original_test[i]);

  Rng rng{splitmix64(seed ^ static_cast<std::uint64_t>(resample_id))};
  const auto train_counts = original_train.class_counts();
  std::vector<Case> train_cases;
  std::vector<Case> test_cases;
  for (std::size_t c = 0; c < n_classes; ++c) {
    auto& pool = pools[c];
    // Fisher-Yates with uniform_index keeps the permutation independent of std::shuffle's implementation.
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[uniform_index(rng, 0, i - 1)]);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      (i < train_counts[c] ? train_cases : test_cases).push_back(*pool[i]);
    }
  }
  return {Dataset{original_train.problem_name(), original_train.class_labels(), original_train.series_length(),
                  std::move(train_cases)},
          Dataset{original_test.problem_name(), original_test.class_labels(), original_test.series_length(),
                  std::move(test_cases)},
          resample_id, seed};
}

}  // namespace tsc
