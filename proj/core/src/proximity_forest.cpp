#include "tsc/proximity_forest.hpp"

#include <algorithm>
#include <cmath>

#include "tsc/error.hpp"
#include "tsc/nearest_neighbour.hpp"
#include "tsc/parallel.hpp"
#include "tsc/tree.hpp"

namespace tsc {

namespace {

// Nearest exemplar, ties to the earliest (lowest class).
std::size_t nearest(const DistanceSpec& spec, std::span<const double> x,
                    const std::vector<std::vector<double>>& exemplars) {
  double best = kNoCutoff;
  std::size_t best_index = 0;
  for (std::size_t e = 0; e < exemplars.size(); ++e) {
    const double d = distance(spec, x, exemplars[e], best);
    if (d < best) {
      best = d;
      best_index = e;
    }
  }
  return best_index;
}

std::vector<std::size_t> counts_of(const Dataset& train, std::span<const std::size_t> rows) {
  std::vector<std::size_t> counts(train.n_classes(), 0);
  for (auto r : rows) ++counts[train.class_index(r)];
  return counts;
}

}  // namespace

const std::vector<double>& PfTree::route(std::span<const double> series) const {
  std::size_t at = 0;
  while (const auto* node = std::get_if<PfNode::Internal>(&nodes[at].content)) {
    at = node->children[nearest(node->spec, series, node->exemplars)];
  }
  return std::get<PfNode::Leaf>(nodes[at].content).class_distribution;
}

DistanceParams pf_sample_params(Measure measure, const GridContext& context, Rng& rng) {
  const double sigma = context.pooled_std > 0.0 ? context.pooled_std : 1.0;
  const double length = static_cast<double>(context.series_length);
  switch (measure) {
    case Measure::Euclidean: return {};
    case Measure::Dtw:
    case Measure::Ddtw: return {.w = uniform_real(rng, 0.0, 1.0)};
    case Measure::Wdtw:
    case Measure::Wddtw: return {.g = uniform_real(rng, 0.0, 1.0)};
    case Measure::Lcss: {
      const double epsilon = uniform_real(rng, sigma / 4.0, sigma);
      const auto max_delta = static_cast<std::size_t>(std::lround(length / 4.0));
      return {.epsilon = epsilon, .delta = uniform_index(rng, 0, max_delta)};
    }
    case Measure::Erp: {
      const double g = uniform_real(rng, sigma / 5.0, sigma);
      return {.w = uniform_real(rng, 0.0, 0.25), .g = g};
    }
    case Measure::Msm: return {.c = std::pow(10.0, uniform_real(rng, -2.0, 2.0))};
    case Measure::Twed: {
      constexpr double kNu[] = {0.00001, 0.0001, 0.001, 0.01, 0.1, 1.0};
      const double nu = kNu[uniform_index(rng, 0, 5)];
      return {.nu = nu, .lambda = uniform_real(rng, 0.0, 0.1)};
    }
  }
  return {};
}

PfSplit pf_generate_candidate_split(const Dataset& train, std::span<const std::size_t> rows,
                                    const GridContext& context, Rng& rng) {
  std::vector<std::vector<std::size_t>> by_class(train.n_classes());
  for (auto r : rows) by_class[train.class_index(r)].push_back(r);

  PfSplit split;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (by_class[c].empty()) continue;
    split.exemplar_rows.push_back(by_class[c][uniform_index(rng, 0, by_class[c].size() - 1)]);
    split.exemplar_classes.push_back(c);
  }
  if (split.exemplar_rows.size() < 2) throw Error(ErrorCode::SingleClassNode, "node holds a single class");

  const auto& constituents = ee_constituents();
  const auto& chosen = constituents[uniform_index(rng, 0, constituents.size() - 1)];
  split.spec = {chosen.measure, chosen.tuned ? pf_sample_params(chosen.measure, context, rng) : chosen.fixed};

  std::vector<std::vector<double>> exemplars;
  for (auto r : split.exemplar_rows) exemplars.emplace_back(train.series(r).begin(), train.series(r).end());
  split.branches.resize(exemplars.size());
  for (auto r : rows) {
    const auto own = std::find(split.exemplar_rows.begin(), split.exemplar_rows.end(), r);
    const std::size_t branch = own != split.exemplar_rows.end()
                                   ? static_cast<std::size_t>(own - split.exemplar_rows.begin())
                                   : nearest(split.spec, train.series(r), exemplars);
    split.branches[branch].push_back(r);
  }
  return split;
}

double pf_gini_score(std::span<const std::vector<std::size_t>> child_class_counts) {
  double n = 0.0;
  for (const auto& child : child_class_counts) {
    for (auto c : child) n += static_cast<double>(c);
  }
  if (n == 0.0) return 0.0;
  double score = 0.0;
  for (const auto& child : child_class_counts) {
    double size = 0.0;
    for (auto c : child) size += static_cast<double>(c);
    if (size == 0.0) continue;
    double sum_sq = 0.0;
    for (auto c : child) sum_sq += (static_cast<double>(c) / size) * (static_cast<double>(c) / size);
    score += (size / n) * (1.0 - sum_sq);
  }
  return score;
}

PfTree pf_fit_tree(const Dataset& train, std::size_t n_stump_evaluations, Rng& rng) {
  if (train.empty()) throw Error(ErrorCode::EmptyTrainingSet, "training set is empty");
  if (n_stump_evaluations == 0) throw Error(ErrorCode::InvalidConfig, "n_stump_evaluations must be positive");
  const GridContext context = grid_context(train);

  PfTree tree;
  struct Pending {
    std::size_t node;
    std::vector<std::size_t> rows;
  };
  std::vector<std::size_t> all(train.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  tree.nodes.emplace_back();
  std::vector<Pending> stack{{0, std::move(all)}};

  auto leaf_from = [&](const std::vector<std::size_t>& rows) {
    const auto counts = counts_of(train, rows);
    std::vector<double> dist(counts.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
      dist[c] = static_cast<double>(counts[c]) / static_cast<double>(rows.size());
    }
    return PfNode{PfNode::Leaf{std::move(dist)}};
  };

  while (!stack.empty()) {
    Pending job = std::move(stack.back());
    stack.pop_back();
    const auto counts = counts_of(train, job.rows);
    if (std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }) < 2) {
      tree.nodes[job.node] = leaf_from(job.rows);
      continue;
    }

    PfSplit best;
    double best_score = kNoCutoff;
    for (std::size_t r = 0; r < n_stump_evaluations; ++r) {
      auto candidate = pf_generate_candidate_split(train, job.rows, context, rng);
      std::vector<std::vector<std::size_t>> child_counts;
      for (const auto& b : candidate.branches) child_counts.push_back(counts_of(train, b));
      const double score = pf_gini_score(child_counts);
      if (score < best_score) {
        best_score = score;
        best = std::move(candidate);
      }
    }
    const auto non_empty = std::count_if(best.branches.begin(), best.branches.end(),
                                         [](const auto& b) { return !b.empty(); });
    if (non_empty < 2) {
      tree.nodes[job.node] = leaf_from(job.rows);
      continue;
    }

    PfNode::Internal internal;
    internal.spec = best.spec;
    internal.exemplar_classes = best.exemplar_classes;
    for (auto r : best.exemplar_rows) internal.exemplars.emplace_back(train.series(r).begin(), train.series(r).end());
    for (auto& branch : best.branches) {
      internal.children.push_back(tree.nodes.size());
      stack.push_back({tree.nodes.size(), std::move(branch)});
      tree.nodes.emplace_back();
    }
    tree.nodes[job.node] = PfNode{std::move(internal)};
  }
  return tree;
}

PfModel pf_fit(const Dataset& train, const PfConfig& config) {
  if (config.n_trees == 0) throw Error(ErrorCode::InvalidConfig, "n_trees must be positive");
  PfModel model;
  model.class_labels = train.class_labels();
  model.series_length = train.series_length();
  model.trees.resize(config.n_trees);
  parallel_for(config.n_trees, [&](std::size_t t) {
    Rng rng = make_rng(config.seed, t);
    model.trees[t] = pf_fit_tree(train, config.n_stump_evaluations, rng);
  });
  return model;
}

std::vector<std::vector<double>> pf_predict_proba(const PfModel& model, const Dataset& test) {
  if (test.series_length() != model.series_length) {
    throw Error(ErrorCode::LengthMismatch, "test length differs from training length");
  }
  std::vector<std::vector<double>> out(test.size());
  std::vector<std::vector<double>> votes(model.trees.size());
  for (std::size_t i = 0; i < test.size(); ++i) {
    for (std::size_t t = 0; t < model.trees.size(); ++t) votes[t] = model.trees[t].route(test.series(i));
    out[i] = ensemble_predict_proba(votes, VoteMode::Majority);
  }
  return out;
}

}  // namespace tsc
