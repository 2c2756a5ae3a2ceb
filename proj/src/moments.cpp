#include "bidscreen/moments.hpp"

#include <algorithm>
#include <cmath>

#include "bidscreen/error.hpp"

namespace bidscreen {

double sample_mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_std(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n < 2) return 0.0;
  const double m = sample_mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

TenderMoments moments(const std::vector<double>& bids) {
  if (bids.size() < 2) throw Error(ErrorCode::TooFewBids, "moments: need at least 2 bids");
  TenderMoments m;
  m.n = static_cast<int>(bids.size());
  m.sorted_bids = bids;
  std::stable_sort(m.sorted_bids.begin(), m.sorted_bids.end());
  m.mean = sample_mean(m.sorted_bids);
  m.std = sample_std(m.sorted_bids);
  m.min = m.sorted_bids.front();
  m.max = m.sorted_bids.back();
  if (m.n >= 3) {
    std::vector<double> losing(m.sorted_bids.begin() + 1, m.sorted_bids.end());
    m.losing_std = sample_std(losing);
    m.losing_std_defined = true;
  }
  return m;
}

TenderMoments moments(const Tender& t) {
  std::vector<double> values;
  values.reserve(t.bids.size());
  for (const auto& b : t.bids) values.push_back(b.value);
  return moments(values);
}

}  // namespace bidscreen
