#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bidscreen/screens.hpp"
#include "bidscreen/types.hpp"

namespace bidscreen {

std::uint64_t binomial(int n, int k);

/// Calls fn once per k-subset of {0..n-1}, in lexicographic index order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

/// Materialized subsets, lexicographic. Throws TooFewBids when n < k.
std::vector<std::vector<int>> enumerate_subgroups(int n, int k);

/// Four summary statistics of one screen across all subgroups of one size.
struct SummaryStats {
  std::optional<double> min, max, mean, median;
  int defined_count = 0;  // subgroups where the screen existed
};

/// min/max/mean/median of every screen across all bid subgroups of size 3
/// and 4. Subgroups with degenerate denominators are skipped; if no subgroup
/// defines a screen, its summary stays unset.
struct SubgroupSummary {
  // keyed by screen name; k=3 omits KURTO (needs four bids)
  std::map<std::string, SummaryStats> k3;
  std::map<std::string, SummaryStats> k4;
  std::uint64_t subgroup_count_3 = 0;
  std::uint64_t subgroup_count_4 = 0;
};

/// Screen names summarized per subgroup size: the ratio screens plus the
/// absolute difference D (D feeds descriptive reports, not models M2/M3).
const std::vector<std::string>& subgroup_screen_names(int k);

/// Needs n >= 4 so that both subgroup sizes exist.
SubgroupSummary subgroup_summary(const Tender& t, KurtosisMode mode = KurtosisMode::Standard);
SubgroupSummary subgroup_summary(const std::vector<double>& bids,
                                 KurtosisMode mode = KurtosisMode::Standard);

/// Median with the mid-point average for an even count. Input is copied.
double median_of(std::vector<double> values);

}  // namespace bidscreen
