#pragma once

#include <optional>

#include "bidscreen/error.hpp"
#include "bidscreen/screens.hpp"

namespace bidscreen {

/// Fixed-screen decision rule: a tender is conspicuous when its coefficient
/// of variation is below cv_percent (CV in percent) and its relative
/// distance exceeds rd. Defaults carry the published calibration.
struct BenchmarkThresholds {
  double cv_percent = 6.0;
  double rd = 1.0;
};

/// cv is the raw ratio here; the threshold comparison scales it by 100.
inline Label benchmark_rule(double cv, double rd, const BenchmarkThresholds& th = {}) {
  return (cv * 100.0 < th.cv_percent && rd > th.rd) ? Label::Collusive : Label::Competitive;
}

inline Label benchmark_rule(const ScreenVector& sv, const BenchmarkThresholds& th = {}) {
  if (!sv.cv || !sv.rd)
    throw Error(ErrorCode::UndefinedScreen, "benchmark_rule: cv or rd undefined");
  return benchmark_rule(*sv.cv, *sv.rd, th);
}

}  // namespace bidscreen
