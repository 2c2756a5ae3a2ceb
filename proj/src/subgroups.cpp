#include "bidscreen/subgroups.hpp"

#include <algorithm>

#include "bidscreen/error.hpp"
#include "bidscreen/moments.hpp"

namespace bidscreen {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k > n) throw Error(ErrorCode::TooFewBids, "for_each_combination: k > n");
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    // advance to the next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<std::vector<int>> enumerate_subgroups(int n, int k) {
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, k));
  for_each_combination(n, k, [&](const std::vector<int>& idx) { out.push_back(idx); });
  return out;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t s = values.size();
  if (s % 2 == 1) return values[s / 2];
  return 0.5 * (values[s / 2 - 1] + values[s / 2]);
}

const std::vector<std::string>& subgroup_screen_names(int k) {
  static const std::vector<std::string> k3 = {"CV", "SKEW", "SPD", "DIFFP", "RD",
                                              "RDNOR", "RDALT", "KS", "D"};
  static const std::vector<std::string> k4 = {"CV", "KURTO", "SKEW", "SPD", "DIFFP",
                                              "RD", "RDNOR", "RDALT", "KS", "D"};
  return k == 3 ? k3 : k4;
}

namespace {

std::map<std::string, SummaryStats> summarize_k(const std::vector<double>& bids, int k,
                                                KurtosisMode mode) {
  const auto& names = subgroup_screen_names(k);
  std::map<std::string, std::vector<double>> values;
  for (const auto& name : names) values[name];

  std::vector<double> sub(static_cast<std::size_t>(k));
  for_each_combination(static_cast<int>(bids.size()), k, [&](const std::vector<int>& idx) {
    for (int i = 0; i < k; ++i) sub[static_cast<std::size_t>(i)] = bids[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    const ScreenVector sv = screen_vector(moments(sub), mode);
    for (const auto& name : names) {
      if (auto v = screen_by_name(sv, name)) values[name].push_back(*v);
    }
  });

  std::map<std::string, SummaryStats> out;
  for (const auto& name : names) {
    SummaryStats st;
    const auto& v = values[name];
    st.defined_count = static_cast<int>(v.size());
    if (!v.empty()) {
      st.min = *std::min_element(v.begin(), v.end());
      st.max = *std::max_element(v.begin(), v.end());
      double s = 0.0;
      for (double x : v) s += x;
      st.mean = s / static_cast<double>(v.size());
      st.median = median_of(v);
    }
    out[name] = st;
  }
  return out;
}

}  // namespace

SubgroupSummary subgroup_summary(const std::vector<double>& bids, KurtosisMode mode) {
  if (bids.size() < 4)
    throw Error(ErrorCode::TooFewBids, "subgroup_summary: needs at least 4 bids");
  SubgroupSummary s;
  const int n = static_cast<int>(bids.size());
  s.subgroup_count_3 = binomial(n, 3);
  s.subgroup_count_4 = binomial(n, 4);
  s.k3 = summarize_k(bids, 3, mode);
  s.k4 = summarize_k(bids, 4, mode);
  return s;
}

SubgroupSummary subgroup_summary(const Tender& t, KurtosisMode mode) {
  std::vector<double> values;
  values.reserve(t.bids.size());
  for (const auto& b : t.bids) values.push_back(b.value);
  return subgroup_summary(values, mode);
}

}  // namespace bidscreen
