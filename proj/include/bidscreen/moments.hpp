#pragma once

#include <vector>

#include "bidscreen/types.hpp"

namespace bidscreen {

/// Cached order statistics and moments of one tender's bids. Every screen is
/// computed from this; std uses the sample (n-1) divisor throughout.
struct TenderMoments {
  int n = 0;
  double mean = 0.0;
  double std = 0.0;
  std::vector<double> sorted_bids;  // ascending
  /// Sample std of the losing bids (sorted_bids[1..n-1]); valid only when
  /// n >= 3, otherwise left at 0 with losing_std_defined = false.
  double losing_std = 0.0;
  bool losing_std_defined = false;
  double min = 0.0;
  double max = 0.0;
};

/// Throws TooFewBids when fewer than two values are given.
TenderMoments moments(const std::vector<double>& bids);
TenderMoments moments(const Tender& t);

double sample_mean(const std::vector<double>& v);
double sample_std(const std::vector<double>& v);  // n-1 divisor, 0 for n < 2

}  // namespace bidscreen
