#include "bidscreen/learner.hpp"

#include <algorithm>

#include "bidscreen/error.hpp"

namespace bidscreen {

LearnerKind learner_from_string(const std::string& s) {
  if (s == "forest") return LearnerKind::Forest;
  if (s == "tree") return LearnerKind::Tree;
  if (s == "lasso") return LearnerKind::Lasso;
  if (s == "benchmark") return LearnerKind::Benchmark;
  throw Error(ErrorCode::DegenerateSpec, "unknown learner: " + s);
}

std::string learner_to_string(LearnerKind k) {
  switch (k) {
    case LearnerKind::Forest: return "forest";
    case LearnerKind::Tree: return "tree";
    case LearnerKind::Lasso: return "lasso";
    case LearnerKind::Benchmark: return "benchmark";
  }
  return "forest";
}

namespace {

int find_predictor(const ModelSpec& spec, const std::string& name) {
  const auto it = std::find(spec.predictor_names.begin(), spec.predictor_names.end(), name);
  return it == spec.predictor_names.end()
             ? -1
             : static_cast<int>(it - spec.predictor_names.begin());
}

}  // namespace

TrainedModel TrainedModel::fit(const std::vector<FeatureRow>& train, const ModelSpec& spec,
                               const LearnerConfig& config, std::uint64_t seed) {
  TrainedModel m;
  m.kind_ = config.kind;
  m.spec_ = spec;
  switch (config.kind) {
    case LearnerKind::Forest:
      m.forest_ = std::make_shared<Forest>(fit_forest(train, config.forest, seed));
      break;
    case LearnerKind::Tree: {
      auto grown = fit_tree(train, config.tree);
      m.tree_ = std::shared_ptr<TreeNode>(
          prune_tree(*grown, train, config.tree_prune_folds, config.tree, seed).release());
      break;
    }
    case LearnerKind::Lasso:
      m.lasso_ = std::make_shared<LassoModel>(fit_lasso(train, config.lasso, seed).model);
      break;
    case LearnerKind::Benchmark: {
      m.benchmark_ = config.benchmark;
      m.cv_index_ = find_predictor(spec, "CV");
      m.rd_index_ = find_predictor(spec, "RD");
      if (m.cv_index_ < 0 || m.rd_index_ < 0)
        throw Error(ErrorCode::UndefinedScreen,
                    "benchmark learner needs CV and RD in the model spec");
      break;
    }
  }
  return m;
}

TrainedModel TrainedModel::from_parts(ModelSpec spec, LearnerKind kind, Forest forest) {
  TrainedModel m;
  m.kind_ = kind;
  m.spec_ = std::move(spec);
  m.forest_ = std::make_shared<Forest>(std::move(forest));
  return m;
}

int TrainedModel::predict(const std::vector<double>& x) const {
  switch (kind_) {
    case LearnerKind::Forest: return predict_forest(*forest_, x).label;
    case LearnerKind::Tree: return predict_tree(*tree_, x);
    case LearnerKind::Lasso: return lasso_->predict(x);
    case LearnerKind::Benchmark:
      return benchmark_rule(x[static_cast<std::size_t>(cv_index_)],
                            x[static_cast<std::size_t>(rd_index_)], benchmark_) ==
                     Label::Collusive
                 ? 1
                 : 0;
  }
  return 0;
}

double TrainedModel::score(const std::vector<double>& x) const {
  switch (kind_) {
    case LearnerKind::Forest: return predict_forest(*forest_, x).vote_share;
    case LearnerKind::Tree: {
      const TreeNode* cur = tree_.get();
      while (!cur->is_leaf())
        cur = x[static_cast<std::size_t>(cur->predictor_index)] <= cur->threshold
                  ? cur->left.get()
                  : cur->right.get();
      const double total = static_cast<double>(cur->class_counts[0] + cur->class_counts[1]);
      return total > 0.0 ? static_cast<double>(cur->class_counts[1]) / total : 0.0;
    }
    case LearnerKind::Lasso: return lasso_->probability(x);
    case LearnerKind::Benchmark: return static_cast<double>(predict(x));
  }
  return 0.0;
}

std::vector<std::pair<std::string, double>> TrainedModel::importance() const {
  if (kind_ == LearnerKind::Forest) return importance_mdg(*forest_, spec_.predictor_names);
  if (kind_ == LearnerKind::Tree) {
    Forest wrap;
    wrap.n_predictors = spec_.predictor_count();
    wrap.trees.push_back(clone_tree(*tree_));
    return importance_mdg(wrap, spec_.predictor_names);
  }
  return {};
}

}  // namespace bidscreen
