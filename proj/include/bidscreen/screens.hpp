#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidscreen/moments.hpp"
#include "bidscreen/types.hpp"

namespace bidscreen {

/// The standard small-sample excess kurtosis subtracts 3(n-1)^2/((n-2)(n-3));
/// Paper mode uses (n-1)^3 in that term instead.
enum class KurtosisMode { Standard, Paper };

// Tender-level screens. Each throws on violated preconditions; callers that
// want optional semantics go through screen_vector().

/// Coefficient of variation s/mean. Raw ratio; reports scale by 100.
double cv(const TenderMoments& m);

/// Small-sample excess kurtosis of the standardized bids. Needs n >= 4 and
/// positive dispersion.
double kurto(const TenderMoments& m, KurtosisMode mode = KurtosisMode::Standard);

/// Small-sample skewness. Needs n >= 3 and positive dispersion.
double skew(const TenderMoments& m);

/// Spread (max - min) / min.
double spd(const TenderMoments& m);

/// Percentage difference between the two lowest bids, (b2 - b1) / b1.
double diffp(const TenderMoments& m);

/// Absolute difference between the two lowest bids, b2 - b1.
double d_abs(const TenderMoments& m);

/// Relative distance (b2 - b1) / std(losing bids). Needs n >= 3; throws
/// ZeroDenominator on tied losing bids.
double rd(const TenderMoments& m);

/// Normalized distance: (b2 - b1) divided by the mean adjacent gap of all
/// ascending-sorted bids. Equals 1 exactly for equally spaced bids.
double rdnor(const TenderMoments& m);

/// Like rdnor but the mean gap is taken over losing bids only. Needs n >= 3.
double rdalt(const TenderMoments& m);

/// Uniformity statistic: bids standardized by the tender std are compared
/// against ranks i/(n+1); returns max(D+, D-). Needs positive dispersion.
double ks_stat(const TenderMoments& m);

/// Named screen values for one tender (or one bid subgroup). Screens whose
/// preconditions fail are left unset.
struct ScreenVector {
  std::optional<double> cv, kurto, skew, spd, diffp, rd, rdnor, rdalt, ks;
  std::optional<double> d;  // money units
  int nbrbids = 0;
  double meanbids = 0.0;
  double stdbids = 0.0;
};

ScreenVector screen_vector(const TenderMoments& m, KurtosisMode mode = KurtosisMode::Standard);
ScreenVector screen_vector(const Tender& t, KurtosisMode mode = KurtosisMode::Standard);

/// The nine scale-invariant screens, in model-1 predictor order.
const std::vector<std::string>& ratio_screen_names();

/// Field access by screen name ("CV", "KURTO", ..., "KS", "D").
std::optional<double> screen_by_name(const ScreenVector& sv, const std::string& name);

}  // namespace bidscreen
