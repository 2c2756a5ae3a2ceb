#include "bidscreen/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bidscreen/error.hpp"

namespace bidscreen {

namespace {

double gini(std::int64_t c0, std::int64_t c1) {
  const double n = static_cast<double>(c0 + c1);
  if (n <= 0.0) return 0.0;
  const double p0 = static_cast<double>(c0) / n;
  const double p1 = static_cast<double>(c1) / n;
  return 1.0 - p0 * p0 - p1 * p1;
}

struct SplitChoice {
  int predictor = -1;
  double threshold = 0.0;
  double decrease = 0.0;
};

struct Builder {
  const std::vector<FeatureRow>& rows;
  TreeParams params;
  RandomStream* rng = nullptr;
  std::int64_t total = 0;
  int n_predictors = 0;
  std::vector<int> scratch;

  std::unique_ptr<TreeNode> build(std::vector<int>& sample, int depth) {
    auto node = std::make_unique<TreeNode>();
    std::int64_t c0 = 0, c1 = 0;
    for (int i : sample) (rows[static_cast<std::size_t>(i)].label == Label::Collusive ? c1 : c0)++;
    node->class_counts[0] = c0;
    node->class_counts[1] = c1;
    node->predicted_class = c1 > c0 ? 1 : 0;  // tie -> Competitive
    node->sample_fraction = static_cast<double>(sample.size()) / static_cast<double>(total);

    const bool pure = c0 == 0 || c1 == 0;
    const bool depth_stop = params.max_depth > 0 && depth >= params.max_depth;
    if (pure || depth_stop || static_cast<int>(sample.size()) < 2 * params.min_leaf)
      return node;

    const SplitChoice best = find_split(sample, gini(c0, c1));
    if (best.predictor < 0) return node;

    node->predictor_index = best.predictor;
    node->threshold = best.threshold;
    node->gini_decrease = best.decrease;

    std::vector<int> left, right;
    left.reserve(sample.size());
    right.reserve(sample.size());
    for (int i : sample) {
      const double v = rows[static_cast<std::size_t>(i)].x[static_cast<std::size_t>(best.predictor)];
      (v <= best.threshold ? left : right).push_back(i);
    }
    sample.clear();
    sample.shrink_to_fit();
    node->left = build(left, depth + 1);
    node->right = build(right, depth + 1);
    return node;
  }

  SplitChoice find_split(const std::vector<int>& sample, double parent_gini) {
    std::vector<int> candidates;
    if (params.mtry > 0 && params.mtry < n_predictors && rng != nullptr) {
      candidates = rng->sample_without_replacement(n_predictors, params.mtry, scratch);
      std::sort(candidates.begin(), candidates.end());  // tie-break wants ascending order
    } else {
      candidates.resize(static_cast<std::size_t>(n_predictors));
      for (int j = 0; j < n_predictors; ++j) candidates[static_cast<std::size_t>(j)] = j;
    }

    SplitChoice best;
    const double n = static_cast<double>(sample.size());
    std::vector<std::pair<double, int>> values(sample.size());
    for (int j : candidates) {
      for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto& row = rows[static_cast<std::size_t>(sample[i])];
        values[i] = {row.x[static_cast<std::size_t>(j)], row.label == Label::Collusive ? 1 : 0};
      }
      std::sort(values.begin(), values.end());

      std::int64_t l0 = 0, l1 = 0, r0 = 0, r1 = 0;
      for (const auto& [v, y] : values) (y ? r1 : r0)++;

      for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        (values[i].second ? l1 : l0)++;
        (values[i].second ? r1 : r0)--;
        if (values[i].first == values[i + 1].first) continue;
        const std::int64_t nl = l0 + l1, nr = r0 + r1;
        if (nl < params.min_leaf || nr < params.min_leaf) continue;
        const double decrease = parent_gini - (static_cast<double>(nl) / n) * gini(l0, l1) -
                                (static_cast<double>(nr) / n) * gini(r0, r1);
        if (decrease > best.decrease) {
          best.predictor = j;
          best.threshold = 0.5 * (values[i].first + values[i + 1].first);
          best.decrease = decrease;
        }
      }
    }
    if (best.decrease <= 0.0) best.predictor = -1;
    return best;
  }
};

}  // namespace

std::unique_ptr<TreeNode> fit_tree_on(const std::vector<FeatureRow>& rows,
                                      const std::vector<int>& sample, const TreeParams& params,
                                      RandomStream* rng) {
  if (rows.empty() || sample.empty())
    throw Error(ErrorCode::EmptyTrainingSet, "fit_tree: no training rows");
  Builder b{rows, params, rng, static_cast<std::int64_t>(sample.size()),
            static_cast<int>(rows.front().x.size()), {}};
  std::vector<int> root_sample = sample;
  return b.build(root_sample, 0);
}

std::unique_ptr<TreeNode> fit_tree(const std::vector<FeatureRow>& rows, const TreeParams& params) {
  if (rows.size() < 2) throw Error(ErrorCode::EmptyTrainingSet, "fit_tree: need at least 2 rows");
  std::vector<int> all(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) all[i] = static_cast<int>(i);
  return fit_tree_on(rows, all, params, nullptr);
}

int predict_tree(const TreeNode& node, const std::vector<double>& x) {
  const TreeNode* cur = &node;
  while (!cur->is_leaf()) {
    if (static_cast<std::size_t>(cur->predictor_index) >= x.size())
      throw Error(ErrorCode::DimensionMismatch, "predict_tree: feature vector too short");
    cur = x[static_cast<std::size_t>(cur->predictor_index)] <= cur->threshold ? cur->left.get()
                                                                              : cur->right.get();
  }
  return cur->predicted_class;
}

std::unique_ptr<TreeNode> clone_tree(const TreeNode& node) {
  auto out = std::make_unique<TreeNode>();
  out->predictor_index = node.predictor_index;
  out->threshold = node.threshold;
  out->gini_decrease = node.gini_decrease;
  out->sample_fraction = node.sample_fraction;
  out->predicted_class = node.predicted_class;
  out->class_counts[0] = node.class_counts[0];
  out->class_counts[1] = node.class_counts[1];
  if (node.left) out->left = clone_tree(*node.left);
  if (node.right) out->right = clone_tree(*node.right);
  return out;
}

int count_leaves(const TreeNode& node) {
  if (node.is_leaf()) return 1;
  return count_leaves(*node.left) + count_leaves(*node.right);
}

int tree_depth(const TreeNode& node) {
  if (node.is_leaf()) return 0;
  return 1 + std::max(tree_depth(*node.left), tree_depth(*node.right));
}

namespace {

std::int64_t node_errors(const TreeNode& n) {
  return n.class_counts[0] + n.class_counts[1] - std::max(n.class_counts[0], n.class_counts[1]);
}

/// Training misclassifications of the subtree's leaves and its leaf count.
std::pair<std::int64_t, int> subtree_risk(const TreeNode& n) {
  if (n.is_leaf()) return {node_errors(n), 1};
  const auto l = subtree_risk(*n.left);
  const auto r = subtree_risk(*n.right);
  return {l.first + r.first, l.second + r.second};
}

/// Weakest-link strength of an internal node.
double link_strength(const TreeNode& n) {
  const auto [risk, leaves] = subtree_risk(n);
  return (static_cast<double>(node_errors(n)) - static_cast<double>(risk)) /
         static_cast<double>(leaves - 1);
}

double min_link(const TreeNode& n) {
  if (n.is_leaf()) return std::numeric_limits<double>::infinity();
  return std::min({link_strength(n), min_link(*n.left), min_link(*n.right)});
}

void collapse_links(TreeNode& n, double alpha) {
  if (n.is_leaf()) return;
  if (link_strength(n) <= alpha) {
    n.predictor_index = -1;
    n.left.reset();
    n.right.reset();
    return;
  }
  collapse_links(*n.left, alpha);
  collapse_links(*n.right, alpha);
}

}  // namespace

std::unique_ptr<TreeNode> prune_at_alpha(const TreeNode& root, double alpha) {
  auto tree = clone_tree(root);
  // collapsing can expose new weakest links at or below alpha
  while (!tree->is_leaf()) {
    const double g = min_link(*tree);
    if (g > alpha) break;
    collapse_links(*tree, g * (1.0 + 1e-12) + 1e-300);
  }
  return tree;
}

std::vector<double> pruning_alphas(const TreeNode& root) {
  std::vector<double> alphas = {0.0};
  auto tree = clone_tree(root);
  while (!tree->is_leaf()) {
    const double g = min_link(*tree);
    if (alphas.empty() || g > alphas.back()) alphas.push_back(g);
    collapse_links(*tree, g * (1.0 + 1e-12) + 1e-300);
  }
  return alphas;
}

std::unique_ptr<TreeNode> prune_tree(const TreeNode& root, const std::vector<FeatureRow>& rows,
                                     int folds, const TreeParams& params, std::uint64_t seed) {
  if (folds < 2) throw Error(ErrorCode::DegenerateSpec, "prune_tree: folds must be >= 2");
  if (rows.size() < static_cast<std::size_t>(folds))
    throw Error(ErrorCode::EmptyTrainingSet, "prune_tree: fewer rows than folds");

  const std::vector<double> alphas = pruning_alphas(root);
  // evaluation points: geometric means between consecutive alphas; the last
  // alpha itself collapses the full tree to its root
  std::vector<double> candidates;
  for (std::size_t k = 0; k + 1 < alphas.size(); ++k)
    candidates.push_back(std::sqrt(std::max(alphas[k], 0.0) * alphas[k + 1]));
  candidates.push_back(alphas.back());

  // fold assignment by shuffled position
  RandomStream rng(seed, 0x70727565);
  std::vector<int> order(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) order[i] = static_cast<int>(i);
  rng.shuffle(order);
  std::vector<int> fold_of(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    fold_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i % static_cast<std::size_t>(folds));

  std::vector<std::int64_t> cv_errors(candidates.size(), 0);
  for (int f = 0; f < folds; ++f) {
    std::vector<int> train;
    std::vector<int> test;
    for (std::size_t i = 0; i < rows.size(); ++i)
      (fold_of[i] == f ? test : train).push_back(static_cast<int>(i));
    if (train.empty() || test.empty()) continue;
    const auto fold_tree = fit_tree_on(rows, train, params, nullptr);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto pruned = prune_at_alpha(*fold_tree, candidates[c]);
      for (int i : test) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        const int want = row.label == Label::Collusive ? 1 : 0;
        if (predict_tree(*pruned, row.x) != want) ++cv_errors[c];
      }
    }
  }

  // smallest CV error; ties pick the larger alpha (smaller tree)
  std::size_t best = 0;
  for (std::size_t c = 1; c < candidates.size(); ++c)
    if (cv_errors[c] <= cv_errors[best]) best = c;
  return prune_at_alpha(root, candidates[best]);
}

}  // namespace bidscreen
