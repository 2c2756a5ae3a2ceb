#include "bidscreen/features.hpp"

#include <algorithm>

#include "bidscreen/error.hpp"
#include "bidscreen/moments.hpp"

namespace bidscreen {

namespace {

const std::vector<std::string>& summary_stat_names() {
  static const std::vector<std::string> stats = {"MIN", "MAX", "MEAN", "MEDIAN"};
  return stats;
}

std::vector<std::string> subgroup_predictor_names(int k) {
  // model predictors exclude the value-based D
  std::vector<std::string> screens;
  for (const auto& s : ratio_screen_names())
    if (k >= 4 || s != "KURTO") screens.push_back(s);
  std::vector<std::string> out;
  for (const auto& s : screens)
    for (const auto& stat : summary_stat_names()) out.push_back(stat + std::to_string(k) + s);
  return out;
}

}  // namespace

ModelSpec model_spec(ModelId id) {
  ModelSpec spec;
  spec.id = id;
  switch (id) {
    case ModelId::M1:
      spec.predictor_names = ratio_screen_names();
      break;
    case ModelId::M2:
      spec.predictor_names = subgroup_predictor_names(3);
      break;
    case ModelId::M3:
      spec.predictor_names = subgroup_predictor_names(4);
      break;
    case ModelId::M4: {
      spec.predictor_names = ratio_screen_names();
      for (const auto& n : subgroup_predictor_names(3)) spec.predictor_names.push_back(n);
      for (const auto& n : subgroup_predictor_names(4)) spec.predictor_names.push_back(n);
      break;
    }
    case ModelId::M5: {
      spec = model_spec(ModelId::M4);
      spec.id = ModelId::M5;
      spec.predictor_names.push_back("MEANBIDS");
      spec.predictor_names.push_back("STDBIDS");
      spec.predictor_names.push_back("D");
      spec.predictor_names.push_back("NBRBIDS");
      break;
    }
    case ModelId::Custom:
      break;
  }
  return spec;
}

ModelSpec model_spec(const std::string& name) {
  if (name == "M1") return model_spec(ModelId::M1);
  if (name == "M2") return model_spec(ModelId::M2);
  if (name == "M3") return model_spec(ModelId::M3);
  if (name == "M4") return model_spec(ModelId::M4);
  if (name == "M5") return model_spec(ModelId::M5);
  throw Error(ErrorCode::DegenerateSpec, "unknown model spec: " + name);
}

std::string model_name(ModelId id) {
  switch (id) {
    case ModelId::M1: return "M1";
    case ModelId::M2: return "M2";
    case ModelId::M3: return "M3";
    case ModelId::M4: return "M4";
    case ModelId::M5: return "M5";
    case ModelId::Custom: return "custom";
  }
  return "custom";
}

std::optional<double> predictor_value(const std::string& name, const ScreenVector& sv,
                                      const SubgroupSummary& sub) {
  for (const auto& stat : summary_stat_names()) {
    if (name.size() > stat.size() + 1 && name.compare(0, stat.size(), stat) == 0 &&
        (name[stat.size()] == '3' || name[stat.size()] == '4')) {
      const int k = name[stat.size()] - '0';
      const std::string screen = name.substr(stat.size() + 1);
      const auto& table = k == 3 ? sub.k3 : sub.k4;
      const auto it = table.find(screen);
      if (it == table.end())
        throw Error(ErrorCode::UndefinedScreen, "unknown subgroup screen: " + name);
      const SummaryStats& st = it->second;
      if (stat == "MIN") return st.min;
      if (stat == "MAX") return st.max;
      if (stat == "MEAN") return st.mean;
      return st.median;
    }
  }
  return screen_by_name(sv, name);
}

std::vector<RawFeatureRow> build_raw_features(const Dataset& ds, const ModelSpec& spec,
                                              KurtosisMode mode) {
  std::vector<RawFeatureRow> rows;
  rows.reserve(ds.tenders.size());
  const bool needs_subgroups = [&] {
    for (const auto& n : spec.predictor_names)
      if (n.find('3') != std::string::npos || n.find('4') != std::string::npos) return true;
    return false;
  }();
  for (const auto& t : ds.tenders) {
    if (t.n_bids() < 4)
      throw Error(ErrorCode::TooFewBids,
                  "build_features: tender " + t.tender_id + " has fewer than 4 bids");
    const ScreenVector sv = screen_vector(t, mode);
    SubgroupSummary sub;
    if (needs_subgroups) sub = subgroup_summary(t, mode);
    RawFeatureRow row;
    row.tender_id = t.tender_id;
    row.label = t.label;
    row.x.reserve(spec.predictor_names.size());
    for (const auto& name : spec.predictor_names) row.x.push_back(predictor_value(name, sv, sub));
    rows.push_back(std::move(row));
  }
  return rows;
}

Imputer Imputer::fit(const std::vector<RawFeatureRow>& train, int n_predictors) {
  Imputer imp;
  imp.medians_.assign(static_cast<std::size_t>(n_predictors), 0.0);
  for (int j = 0; j < n_predictors; ++j) {
    std::vector<double> defined;
    for (const auto& row : train) {
      const auto& v = row.x[static_cast<std::size_t>(j)];
      if (v) defined.push_back(*v);
    }
    // a predictor undefined across the whole training split imputes to 0
    imp.medians_[static_cast<std::size_t>(j)] = defined.empty() ? 0.0 : median_of(defined);
  }
  return imp;
}

Imputer Imputer::from_medians(std::vector<double> medians) {
  Imputer imp;
  imp.medians_ = std::move(medians);
  return imp;
}

std::vector<FeatureRow> Imputer::apply(const std::vector<RawFeatureRow>& rows) const {
  std::vector<FeatureRow> out;
  out.reserve(rows.size());
  for (const auto& raw : rows) {
    if (raw.x.size() != medians_.size())
      throw Error(ErrorCode::DimensionMismatch, "imputer: predictor count mismatch");
    FeatureRow row;
    row.tender_id = raw.tender_id;
    row.label = raw.label;
    row.x.reserve(raw.x.size());
    for (std::size_t j = 0; j < raw.x.size(); ++j)
      row.x.push_back(raw.x[j] ? *raw.x[j] : medians_[j]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<FeatureRow> build_features(const Dataset& ds, const ModelSpec& spec,
                                       KurtosisMode mode) {
  const auto raw = build_raw_features(ds, spec, mode);
  const Imputer imp = Imputer::fit(raw, spec.predictor_count());
  return imp.apply(raw);
}

}  // namespace bidscreen
