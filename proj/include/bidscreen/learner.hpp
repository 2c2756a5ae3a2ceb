#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bidscreen/benchmark.hpp"
#include "bidscreen/features.hpp"
#include "bidscreen/forest.hpp"
#include "bidscreen/lasso.hpp"
#include "bidscreen/tree.hpp"

namespace bidscreen {

enum class LearnerKind { Forest, Tree, Lasso, Benchmark };

LearnerKind learner_from_string(const std::string& s);
std::string learner_to_string(LearnerKind k);

struct LearnerConfig {
  LearnerKind kind = LearnerKind::Forest;
  ForestParams forest;
  TreeParams tree;           // standalone tree (pruned by cross-validation)
  int tree_prune_folds = 10;
  LassoParams lasso;
  BenchmarkThresholds benchmark;
};

/// A fitted classifier over feature rows of one model spec. The benchmark
/// rule reads the CV and RD columns and needs no training.
class TrainedModel {
 public:
  static TrainedModel fit(const std::vector<FeatureRow>& train, const ModelSpec& spec,
                          const LearnerConfig& config, std::uint64_t seed);

  int predict(const std::vector<double>& x) const;
  /// Collusive vote share / probability; the benchmark rule returns 0 or 1.
  double score(const std::vector<double>& x) const;

  LearnerKind kind() const { return kind_; }
  const ModelSpec& spec() const { return spec_; }
  const Forest* forest() const { return forest_.get(); }
  const TreeNode* tree() const { return tree_.get(); }
  const LassoModel* lasso() const { return lasso_.get(); }

  /// Predictor importances where the learner defines them (forest and tree
  /// use the mean decrease in Gini; others return an empty list).
  std::vector<std::pair<std::string, double>> importance() const;

  static TrainedModel from_parts(ModelSpec spec, LearnerKind kind, Forest forest);

  friend class ModelIo;

 private:
  TrainedModel() = default;
  LearnerKind kind_ = LearnerKind::Forest;
  ModelSpec spec_;
  std::shared_ptr<Forest> forest_;
  std::shared_ptr<TreeNode> tree_;
  std::shared_ptr<LassoModel> lasso_;
  BenchmarkThresholds benchmark_;
  int cv_index_ = -1;  // benchmark column positions in the spec
  int rd_index_ = -1;
};

}  // namespace bidscreen
