#include "bidscreen/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <json.hpp>

#include "bidscreen/error.hpp"
#include "bidscreen/parallel.hpp"
#include "bidscreen/rng.hpp"

namespace bidscreen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string echo_config(const ModelSpec& spec, const LearnerConfig& learner,
                        const EvalOptions& opts) {
  nlohmann::json j;
  j["model"] = model_name(spec.id);
  j["predictors"] = spec.predictor_count();
  j["learner"] = learner_to_string(learner.kind);
  if (learner.kind == LearnerKind::Forest) {
    j["n_trees"] = learner.forest.n_trees;
    j["mtry"] = learner.forest.mtry == 0 ? default_mtry(spec.predictor_count())
                                         : learner.forest.mtry;
    j["min_leaf"] = learner.forest.min_leaf;
  } else if (learner.kind == LearnerKind::Benchmark) {
    j["cv_threshold_percent"] = learner.benchmark.cv_percent;
    j["rd_threshold"] = learner.benchmark.rd;
  } else if (learner.kind == LearnerKind::Lasso) {
    j["cv_folds"] = learner.lasso.cv_folds;
    j["grid_size"] = learner.lasso.grid_size;
  } else if (learner.kind == LearnerKind::Tree) {
    j["min_leaf"] = learner.tree.min_leaf;
    j["prune_folds"] = learner.tree_prune_folds;
  }
  j["repetitions"] = opts.repetitions;
  j["train_frac"] = opts.train_frac;
  j["stratified"] = opts.stratified;
  j["seed"] = opts.seed;
  j["kurtosis"] = opts.kurtosis == KurtosisMode::Standard ? "standard" : "paper";
  return j.dump();
}

std::vector<int> train_indices(const std::vector<Label>& labels, double frac, bool stratified,
                               RandomStream& rng, std::vector<char>& is_train) {
  const std::size_t n = labels.size();
  is_train.assign(n, 0);
  auto take = [&](std::vector<int>& pool, std::size_t count) {
    rng.shuffle(pool);
    for (std::size_t i = 0; i < count && i < pool.size(); ++i)
      is_train[static_cast<std::size_t>(pool[i])] = 1;
  };
  if (stratified) {
    std::vector<int> comp, coll;
    for (std::size_t i = 0; i < n; ++i)
      (labels[i] == Label::Collusive ? coll : comp).push_back(static_cast<int>(i));
    auto count_of = [&](std::size_t sz) {
      return std::clamp<std::size_t>(
          static_cast<std::size_t>(std::llround(frac * static_cast<double>(sz))),
          sz > 1 ? 1 : 0, sz > 1 ? sz - 1 : sz);
    };
    take(comp, count_of(comp.size()));
    take(coll, count_of(coll.size()));
  } else {
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    const std::size_t count = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::llround(frac * static_cast<double>(n))), 1, n - 1);
    take(all, count);
  }
  std::vector<int> train;
  for (std::size_t i = 0; i < n; ++i)
    if (is_train[i]) train.push_back(static_cast<int>(i));
  return train;
}

}  // namespace

EvalReport evaluate(const Dataset& ds, const ModelSpec& spec, const LearnerConfig& learner,
                    const EvalOptions& opts) {
  if (opts.repetitions < 1)
    throw Error(ErrorCode::DegenerateSpec, "evaluate: repetitions must be >= 1");

  Dataset labeled;
  labeled.provenance = ds.provenance;
  int unlabeled = 0;
  for (const auto& t : ds.tenders) {
    if (t.label == Label::Unlabeled) ++unlabeled;
    else labeled.tenders.push_back(t);
  }

  EvalReport report;
  if (unlabeled > 0)
    report.warnings.push_back("dropped " + std::to_string(unlabeled) + " unlabeled tenders");

  report.n_tenders = static_cast<int>(labeled.tenders.size());
  std::int64_t cartel_bids = 0, collusive_bids = 0;
  bool any_flag = false;
  for (const auto& t : labeled.tenders) {
    if (t.label == Label::Collusive) {
      ++report.n_collusive;
      for (const auto& b : t.bids) {
        ++collusive_bids;
        if (b.cartel_member) {
          any_flag = true;
          if (*b.cartel_member) ++cartel_bids;
        }
      }
    } else {
      ++report.n_competitive;
    }
  }
  if (report.n_collusive == 0 || report.n_competitive == 0)
    throw Error(ErrorCode::SingleClassDataset, "evaluate: both classes are required");
  report.collusive_share =
      static_cast<double>(report.n_collusive) / static_cast<double>(report.n_tenders);
  report.cartel_bid_share = any_flag && collusive_bids > 0
                                ? static_cast<double>(cartel_bids) /
                                      static_cast<double>(collusive_bids)
                                : kNaN;

  // screens and subgroup summaries do not depend on the split
  const auto raw = build_raw_features(labeled, spec, opts.kurtosis);
  std::vector<Label> labels(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) labels[i] = raw[i].label;

  report.n_repetitions = opts.repetitions;
  report.per_repetition.resize(static_cast<std::size_t>(opts.repetitions));
  std::vector<std::vector<std::pair<std::string, double>>> importances(
      static_cast<std::size_t>(opts.repetitions));

  auto run_repetition = [&](std::size_t r) {
    RandomStream rng(opts.seed, r);
    std::vector<char> is_train;
    const std::vector<int> train_idx =
        train_indices(labels, opts.train_frac, opts.stratified, rng, is_train);

    std::vector<RawFeatureRow> train_raw;
    train_raw.reserve(train_idx.size());
    for (int i : train_idx) train_raw.push_back(raw[static_cast<std::size_t>(i)]);
    const Imputer imputer = Imputer::fit(train_raw, spec.predictor_count());
    const std::vector<FeatureRow> train = imputer.apply(train_raw);

    std::vector<RawFeatureRow> test_raw;
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (!is_train[i]) test_raw.push_back(raw[i]);
    const std::vector<FeatureRow> test = imputer.apply(test_raw);

    const std::uint64_t learner_seed = splitmix64(splitmix64(opts.seed) + 0x7265706574ULL + r);
    const TrainedModel model = TrainedModel::fit(train, spec, learner, learner_seed);

    RepetitionResult res;
    for (const auto& row : test) {
      const int want = row.label == Label::Collusive ? 1 : 0;
      const int got = model.predict(row.x);
      if (want == 1) {
        ++res.n_coll;
        if (got == want) ++res.correct_coll;
      } else {
        ++res.n_comp;
        if (got == want) ++res.correct_comp;
      }
    }
    res.ccr_all = static_cast<double>(res.correct_comp + res.correct_coll) /
                  static_cast<double>(res.n_comp + res.n_coll);
    res.ccr_comp = res.n_comp > 0
                       ? static_cast<double>(res.correct_comp) / static_cast<double>(res.n_comp)
                       : kNaN;
    res.ccr_coll = res.n_coll > 0
                       ? static_cast<double>(res.correct_coll) / static_cast<double>(res.n_coll)
                       : kNaN;
    report.per_repetition[r] = res;
    importances[r] = model.importance();
  };

  // the forest parallelizes across trees; other learners across repetitions
  if (learner.kind == LearnerKind::Forest) {
    for (std::size_t r = 0; r < report.per_repetition.size(); ++r) run_repetition(r);
  } else {
    parallel_for(report.per_repetition.size(), opts.threads, run_repetition);
  }

  double sum_all = 0.0, sum_comp = 0.0, sum_coll = 0.0;
  int n_comp_defined = 0, n_coll_defined = 0, missing_class = 0;
  for (const auto& res : report.per_repetition) {
    sum_all += res.ccr_all;
    if (!std::isnan(res.ccr_comp)) {
      sum_comp += res.ccr_comp;
      ++n_comp_defined;
    }
    if (!std::isnan(res.ccr_coll)) {
      sum_coll += res.ccr_coll;
      ++n_coll_defined;
    }
    if (std::isnan(res.ccr_comp) || std::isnan(res.ccr_coll)) ++missing_class;
  }
  report.ccr_all = sum_all / static_cast<double>(opts.repetitions);
  report.ccr_comp = n_comp_defined > 0 ? sum_comp / n_comp_defined : kNaN;
  report.ccr_coll = n_coll_defined > 0 ? sum_coll / n_coll_defined : kNaN;
  if (missing_class * 10 > opts.repetitions)
    report.warnings.push_back("test split lacked one class in " + std::to_string(missing_class) +
                              " of " + std::to_string(opts.repetitions) + " repetitions");

  // average importance across repetitions (predictors absent in a fit count 0)
  if (!importances.empty() && !importances.front().empty()) {
    std::map<std::string, double> acc;
    for (const auto& imp : importances)
      for (const auto& [name, v] : imp) acc[name] += v;
    std::vector<std::pair<std::string, double>> avg;
    for (const auto& name : spec.predictor_names)
      avg.emplace_back(name, acc[name] / static_cast<double>(opts.repetitions));
    std::stable_sort(avg.begin(), avg.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    report.importance = std::move(avg);
  }

  report.config_echo = echo_config(spec, learner, opts);
  return report;
}

std::array<EvalReport, 6> ladder_report(const std::array<Dataset, 6>& ladder,
                                        const ModelSpec& spec, const LearnerConfig& learner,
                                        const EvalOptions& opts) {
  std::array<EvalReport, 6> out;
  for (std::size_t m = 0; m < ladder.size(); ++m)
    out[m] = evaluate(ladder[m], spec, learner, opts);
  return out;
}

std::pair<EvalReport, EvalReport> robustness_drop_top(const Dataset& ds, const ModelSpec& spec,
                                                      const LearnerConfig& learner, int k,
                                                      const EvalOptions& opts) {
  if (k >= spec.predictor_count())
    throw Error(ErrorCode::DegenerateSpec, "robustness_drop_top: would drop every predictor");
  EvalReport baseline = evaluate(ds, spec, learner, opts);
  if (k <= 0) return {baseline, baseline};
  if (baseline.importance.empty())
    throw Error(ErrorCode::DegenerateSpec,
                "robustness_drop_top: learner provides no importance ranking");

  std::vector<std::string> dropped;
  for (int i = 0; i < k; ++i) dropped.push_back(baseline.importance[static_cast<std::size_t>(i)].first);
  ModelSpec reduced;
  reduced.id = ModelId::Custom;
  for (const auto& name : spec.predictor_names)
    if (std::find(dropped.begin(), dropped.end(), name) == dropped.end())
      reduced.predictor_names.push_back(name);

  EvalReport after = evaluate(ds, reduced, learner, opts);
  return {std::move(baseline), std::move(after)};
}

EvalReport robustness_contract_filter(const Dataset& ds, const ModelSpec& spec,
                                      const LearnerConfig& learner, ContractType type,
                                      const EvalOptions& opts) {
  return evaluate(filter_contract_type(ds, type), spec, learner, opts);
}

}  // namespace bidscreen
