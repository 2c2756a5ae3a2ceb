#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bidscreen/learner.hpp"
#include "bidscreen/simulate.hpp"

namespace bidscreen {

struct EvalOptions {
  int repetitions = 100;
  double train_frac = 0.75;
  bool stratified = false;  // plain uniform splits by default
  std::uint64_t seed = 0;
  int threads = 0;
  KurtosisMode kurtosis = KurtosisMode::Standard;
};

struct RepetitionResult {
  std::int64_t n_comp = 0, n_coll = 0;          // test-split class sizes
  std::int64_t correct_comp = 0, correct_coll = 0;
  double ccr_all = 0.0;
  double ccr_comp = 0.0;  // NaN when the test split lacks the class
  double ccr_coll = 0.0;
};

struct EvalReport {
  double ccr_all = 0.0;
  double ccr_comp = 0.0;
  double ccr_coll = 0.0;
  std::vector<RepetitionResult> per_repetition;
  int n_repetitions = 0;
  std::vector<std::pair<std::string, double>> importance;  // averaged over repetitions
  std::string config_echo;                                 // resolved run configuration, JSON
  std::vector<std::string> warnings;
  // sample composition echo
  int n_tenders = 0, n_collusive = 0, n_competitive = 0;
  double collusive_share = 0.0;
  double cartel_bid_share = 0.0;  // NaN without cartel flags
};

/// Repeated random 75/25 splitting: per repetition the imputer and the
/// learner are fitted on the training split only and scored on the test
/// split; reported rates average the repetitions. Unlabeled tenders are
/// dropped with a warning.
EvalReport evaluate(const Dataset& ds, const ModelSpec& spec, const LearnerConfig& learner,
                    const EvalOptions& opts);

/// One report per contamination rung m = 0..5.
std::array<EvalReport, 6> ladder_report(const std::array<Dataset, 6>& ladder,
                                        const ModelSpec& spec, const LearnerConfig& learner,
                                        const EvalOptions& opts);

/// Baseline and reduced reports after dropping the k most important
/// predictors of the baseline fit (k = 0 returns the baseline twice).
std::pair<EvalReport, EvalReport> robustness_drop_top(const Dataset& ds, const ModelSpec& spec,
                                                      const LearnerConfig& learner, int k,
                                                      const EvalOptions& opts);

/// Evaluation restricted to tenders of one contract type.
EvalReport robustness_contract_filter(const Dataset& ds, const ModelSpec& spec,
                                      const LearnerConfig& learner, ContractType type,
                                      const EvalOptions& opts);

}  // namespace bidscreen
