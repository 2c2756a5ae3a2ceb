#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bidscreen/features.hpp"
#include "bidscreen/rng.hpp"

namespace bidscreen {

/// Binary CART node. Split nodes send x[j] <= threshold left, > right.
struct TreeNode {
  // split fields
  int predictor_index = -1;  // -1 marks a leaf
  double threshold = 0.0;
  double gini_decrease = 0.0;   // impurity decrease of this split
  double sample_fraction = 0.0; // node size / training size, weights the MDG
  std::unique_ptr<TreeNode> left, right;
  // leaf fields (kept on split nodes too; used when pruning collapses them)
  int predicted_class = 0;
  std::int64_t class_counts[2] = {0, 0};

  bool is_leaf() const { return predictor_index < 0; }
};

struct TreeParams {
  int min_leaf = 5;    // smallest admissible child
  int max_depth = 0;   // 0 = unlimited
  int mtry = 0;        // 0 = consider all predictors
};

/// Greedy Gini-impurity CART on the given rows (optionally a bootstrap index
/// list). Candidate thresholds are midpoints between consecutive distinct
/// values; equal-gain ties resolve to the lower predictor index, then to the
/// smaller threshold. Leaf class ties resolve to Competitive.
std::unique_ptr<TreeNode> fit_tree(const std::vector<FeatureRow>& rows, const TreeParams& params);
std::unique_ptr<TreeNode> fit_tree_on(const std::vector<FeatureRow>& rows,
                                      const std::vector<int>& sample, const TreeParams& params,
                                      RandomStream* rng);

int predict_tree(const TreeNode& node, const std::vector<double>& x);

/// Minimal cost-complexity pruning: builds the alpha sequence of weakest
/// links, picks the alpha with the smallest k-fold cross-validated
/// misclassification error (ties prefer the larger alpha, i.e. the smaller
/// tree), and returns the full-data tree pruned at that alpha.
std::unique_ptr<TreeNode> prune_tree(const TreeNode& root, const std::vector<FeatureRow>& rows,
                                     int folds, const TreeParams& params, std::uint64_t seed);

/// Tree pruned so that every subtree with link strength <= alpha collapses.
std::unique_ptr<TreeNode> prune_at_alpha(const TreeNode& root, double alpha);

/// Increasing sequence of critical alphas (0 first) for the tree.
std::vector<double> pruning_alphas(const TreeNode& root);

std::unique_ptr<TreeNode> clone_tree(const TreeNode& node);
int count_leaves(const TreeNode& node);
int tree_depth(const TreeNode& node);

}  // namespace bidscreen
