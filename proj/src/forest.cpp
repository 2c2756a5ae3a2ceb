#include "bidscreen/forest.hpp"

#include <algorithm>
#include <cmath>

#include "bidscreen/error.hpp"
#include "bidscreen/parallel.hpp"

namespace bidscreen {

int default_mtry(int n_predictors) {
  return std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_predictors)))));
}

Forest fit_forest(const std::vector<FeatureRow>& rows, const ForestParams& params,
                  std::uint64_t seed) {
  if (rows.size() < 2) throw Error(ErrorCode::EmptyTrainingSet, "fit_forest: need at least 2 rows");
  Forest f;
  f.n_predictors = static_cast<int>(rows.front().x.size());
  f.mtry = params.mtry > 0 ? params.mtry : default_mtry(f.n_predictors);
  f.seed = seed;
  f.trees.resize(static_cast<std::size_t>(params.n_trees));

  TreeParams tp;
  tp.min_leaf = params.min_leaf;
  tp.max_depth = params.max_depth;
  tp.mtry = f.mtry;

  const std::size_t n = rows.size();
  parallel_for(f.trees.size(), params.threads, [&](std::size_t i) {
    RandomStream rng(seed, i);
    std::vector<int> bootstrap(n);
    for (std::size_t k = 0; k < n; ++k)
      bootstrap[k] = static_cast<int>(rng.uniform_index(n));
    f.trees[i] = fit_tree_on(rows, bootstrap, tp, &rng);
  });
  return f;
}

Prediction predict_forest(const Forest& f, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != f.n_predictors)
    throw Error(ErrorCode::DimensionMismatch, "predict_forest: feature length mismatch");
  std::size_t votes = 0;
  for (const auto& t : f.trees)
    if (predict_tree(*t, x) == 1) ++votes;
  Prediction p;
  p.vote_share = static_cast<double>(votes) / static_cast<double>(f.trees.size());
  p.label = 2 * votes > f.trees.size() ? 1 : 0;  // exact tie -> Competitive
  return p;
}

namespace {

void accumulate_mdg(const TreeNode& node, std::vector<double>& acc) {
  if (node.is_leaf()) return;
  acc[static_cast<std::size_t>(node.predictor_index)] += node.sample_fraction * node.gini_decrease;
  accumulate_mdg(*node.left, acc);
  accumulate_mdg(*node.right, acc);
}

}  // namespace

std::vector<std::pair<int, double>> importance_mdg(const Forest& f) {
  std::vector<double> acc(static_cast<std::size_t>(f.n_predictors), 0.0);
  for (const auto& t : f.trees) accumulate_mdg(*t, acc);
  std::vector<std::pair<int, double>> out;
  out.reserve(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j)
    out.emplace_back(static_cast<int>(j), acc[j] / static_cast<double>(f.trees.size()));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

std::vector<std::pair<std::string, double>> importance_mdg(const Forest& f,
                                                           const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [j, v] : importance_mdg(f))
    out.emplace_back(names.at(static_cast<std::size_t>(j)), v);
  return out;
}

}  // namespace bidscreen
