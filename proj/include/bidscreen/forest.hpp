#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bidscreen/tree.hpp"

namespace bidscreen {

struct ForestParams {
  int n_trees = 1000;
  int mtry = 0;      // 0 = floor(sqrt(p))
  int min_leaf = 1;
  int max_depth = 0;
  int threads = 0;   // 0 = hardware concurrency
};

struct Forest {
  std::vector<std::unique_ptr<TreeNode>> trees;
  int n_predictors = 0;
  int mtry = 0;
  std::uint64_t seed = 0;
};

struct Prediction {
  int label = 0;          // 1 = collusive
  double vote_share = 0;  // fraction of trees voting collusive
};

/// Bagged CART ensemble: every tree sees a bootstrap resample of the
/// training rows (same size, with replacement) and samples mtry candidate
/// predictors per split. Tree i draws from stream (seed, i), so serial and
/// parallel training produce identical forests.
Forest fit_forest(const std::vector<FeatureRow>& rows, const ForestParams& params,
                  std::uint64_t seed);

/// Majority vote; an exact tie resolves to Competitive.
Prediction predict_forest(const Forest& f, const std::vector<double>& x);

/// Mean decrease in Gini per predictor: the sample-fraction-weighted Gini
/// decreases of all splits on the predictor, summed per tree and averaged
/// over trees. Sorted descending (ties by predictor order).
std::vector<std::pair<int, double>> importance_mdg(const Forest& f);
std::vector<std::pair<std::string, double>> importance_mdg(const Forest& f,
                                                           const std::vector<std::string>& names);

int default_mtry(int n_predictors);

}  // namespace bidscreen
