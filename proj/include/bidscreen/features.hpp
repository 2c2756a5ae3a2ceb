#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidscreen/screens.hpp"
#include "bidscreen/subgroups.hpp"
#include "bidscreen/types.hpp"

namespace bidscreen {

enum class ModelId { M1, M2, M3, M4, M5, Custom };

/// Ordered predictor list for one model specification.
///   M1: the 9 tender-level ratio screens
///   M2: min/max/mean/median of 8 screens over 3-bid subgroups (32)
///   M3: same with 9 screens over 4-bid subgroups (36)
///   M4: M1 + M2 + M3 (77)
///   M5: M4 + MEANBIDS, STDBIDS, D, NBRBIDS (81)
struct ModelSpec {
  ModelId id = ModelId::Custom;
  std::vector<std::string> predictor_names;

  int predictor_count() const { return static_cast<int>(predictor_names.size()); }
};

ModelSpec model_spec(ModelId id);
ModelSpec model_spec(const std::string& name);  // "M1".."M5"
std::string model_name(ModelId id);

struct FeatureRow {
  std::string tender_id;
  Label label = Label::Unlabeled;
  std::vector<double> x;
};

/// Feature values before imputation; entries without a defined screen are
/// unset.
struct RawFeatureRow {
  std::string tender_id;
  Label label = Label::Unlabeled;
  std::vector<std::optional<double>> x;
};

/// One predictor value for a tender whose screens/summaries are already
/// computed. Name grammar: tender screens by screen name, subgroup summaries
/// as MIN3CV, MEDIAN4SPD, ...
std::optional<double> predictor_value(const std::string& name, const ScreenVector& sv,
                                      const SubgroupSummary& sub);

/// Every tender needs n >= 4 (both subgroup sizes must exist).
std::vector<RawFeatureRow> build_raw_features(const Dataset& ds, const ModelSpec& spec,
                                              KurtosisMode mode = KurtosisMode::Standard);

/// Median imputation fitted on a training split and reused on test data, so
/// nothing leaks from test labels or values into the features.
class Imputer {
 public:
  static Imputer fit(const std::vector<RawFeatureRow>& train, int n_predictors);

  std::vector<FeatureRow> apply(const std::vector<RawFeatureRow>& rows) const;

  const std::vector<double>& medians() const { return medians_; }
  static Imputer from_medians(std::vector<double> medians);

 private:
  std::vector<double> medians_;
};

/// Convenience for whole-dataset feature tables (imputer fitted on the same
/// data). Evaluation fits the imputer on the training split instead.
std::vector<FeatureRow> build_features(const Dataset& ds, const ModelSpec& spec,
                                       KurtosisMode mode = KurtosisMode::Standard);

}  // namespace bidscreen
