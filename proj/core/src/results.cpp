#include "tsc/results.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsc/error.hpp"

namespace tsc {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t from = 0;
  while (true) {
    const auto at = line.find(sep, from);
    out.push_back(line.substr(from, at == std::string_view::npos ? std::string_view::npos : at - from));
    if (at == std::string_view::npos) return out;
    from = at + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::MalformedResults,
                "line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double ClassifierResults::accuracy() const {
  if (true_class.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < true_class.size(); ++i) correct += true_class[i] == predicted_class[i];
  return static_cast<double>(correct) / static_cast<double>(true_class.size());
}

std::string format_results(const ClassifierResults& r) {
  std::ostringstream os;
  os << r.problem_name << ',' << r.classifier_name << ",test," << r.resample_id << '\n';
  os << r.parameter_text << '\n';
  os << fixed6(r.accuracy()) << ',' << r.build_time_ns << ',' << r.test_time_ns << '\n';
  for (std::size_t i = 0; i < r.size(); ++i) {
    os << r.true_class[i] << ',' << r.predicted_class[i] << ',';
    for (double p : r.probabilities[i]) os << ',' << fixed6(p);
    os << '\n';
  }
  return os.str();
}

ClassifierResults parse_results(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3) throw Error(ErrorCode::MalformedResults, "fewer than three header lines");

  ClassifierResults r;
  const auto head = split(lines[0], ',');
  if (head.size() != 4) throw Error(ErrorCode::MalformedResults, "line 1: expected four fields");
  r.problem_name = head[0];
  r.classifier_name = head[1];
  r.resample_id = parse_number<std::size_t>(head[3], 1);
  r.parameter_text = lines[1];
  const auto timing = split(lines[2], ',');
  if (timing.size() != 3) throw Error(ErrorCode::MalformedResults, "line 3: expected three fields");
  r.build_time_ns = parse_number<std::int64_t>(timing[1], 3);
  r.test_time_ns = parse_number<std::int64_t>(timing[2], 3);

  for (std::size_t k = 3; k < lines.size(); ++k) {
    const auto fields = split(lines[k], ',');
    if (fields.size() < 4 || !fields[2].empty()) {
      throw Error(ErrorCode::MalformedResults, "line " + std::to_string(k + 1) + ": bad prediction row");
    }
    r.true_class.push_back(parse_number<std::size_t>(fields[0], k + 1));
    r.predicted_class.push_back(parse_number<std::size_t>(fields[1], k + 1));
    std::vector<double> p;
    for (std::size_t f = 3; f < fields.size(); ++f) p.push_back(parse_number<double>(fields[f], k + 1));
    if (!r.probabilities.empty() && p.size() != r.probabilities.front().size()) {
      throw Error(ErrorCode::MalformedResults, "line " + std::to_string(k + 1) + ": class count changes");
    }
    r.probabilities.push_back(std::move(p));
  }
  return r;
}

std::filesystem::path results_path(const std::filesystem::path& out_dir, std::string_view classifier,
                                   std::string_view problem, std::size_t resample_id) {
  return out_dir / classifier / "Predictions" / problem / ("testFold" + std::to_string(resample_id) + ".csv");
}

std::filesystem::path write_results(const std::filesystem::path& out_dir, const ClassifierResults& results) {
  const auto path = results_path(out_dir, results.classifier_name, results.problem_name, results.resample_id);
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << format_results(results);
  if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
  return path;
}

ClassifierResults load_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::DatasetNotFound, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_results(buf.str());
}

}  // namespace tsc
