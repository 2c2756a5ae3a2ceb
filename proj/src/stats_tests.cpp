#include "bidscreen/stats_tests.hpp"

#include <algorithm>
#include <cmath>

#include "bidscreen/error.hpp"
#include "bidscreen/screens.hpp"

namespace bidscreen {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

/// Midranks of the pooled sample, in pooled order.
std::vector<double> midranks(const std::vector<double>& pooled) {
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;  // ranks are 1-based
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
    i = j + 1;
  }
  return rank;
}

}  // namespace

double mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto rank = midranks(pooled);
  double rank_sum_a = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) rank_sum_a += rank[i];
  const double n1 = static_cast<double>(a.size());
  return rank_sum_a - n1 * (n1 + 1.0) / 2.0;
}

TestResult mann_whitney(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySample, "mann_whitney: empty sample");
  TestResult r;
  r.n1 = static_cast<int>(a.size());
  r.n2 = static_cast<int>(b.size());
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double n = n1 + n2;

  const double u = mann_whitney_u(a, b);
  const double mu = n1 * n2 / 2.0;

  // tie correction over pooled tie groups
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());
  double tie_term = 0.0;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j + 1 < pooled.size() && pooled[j + 1] == pooled[i]) ++j;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));

  if (var <= 0.0) {  // every pooled value tied
    r.statistic = 0.0;
    r.p_value = 1.0;
    return r;
  }
  const double shift = std::abs(u - mu);
  const double corrected = std::max(0.0, shift - 0.5);
  double z = corrected / std::sqrt(var);
  if (u < mu) z = -z;
  r.statistic = z;
  r.p_value = std::min(1.0, 2.0 * (1.0 - normal_cdf(std::abs(z))));
  return r;
}

double ks_two_sample_d(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> sa(a), sb(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double n1 = static_cast<double>(sa.size());
  const double n2 = static_cast<double>(sb.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
  }
  return d;
}

double kolmogorov_series_p(double x) {
  if (x <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySample, "ks_two_sample: empty sample");
  TestResult r;
  r.n1 = static_cast<int>(a.size());
  r.n2 = static_cast<int>(b.size());
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double d = ks_two_sample_d(a, b);
  r.statistic = d * std::sqrt(n1 * n2 / (n1 + n2));
  r.p_value = kolmogorov_series_p(r.statistic);
  return r;
}

std::map<std::string, std::pair<TestResult, TestResult>> screen_distribution_suite(
    const std::map<std::string, std::vector<double>>& simulated,
    const std::map<std::string, std::vector<double>>& real) {
  std::map<std::string, std::pair<TestResult, TestResult>> out;
  for (const auto& name : ratio_screen_names()) {
    const auto si = simulated.find(name);
    const auto ri = real.find(name);
    if (si == simulated.end() || ri == real.end()) continue;
    if (si->second.empty() || ri->second.empty()) continue;
    out[name] = {mann_whitney(si->second, ri->second), ks_two_sample(si->second, ri->second)};
  }
  return out;
}

}  // namespace bidscreen
