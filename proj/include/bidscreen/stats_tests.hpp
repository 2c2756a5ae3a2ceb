#pragma once

#include <map>
#include <string>
#include <vector>

namespace bidscreen {

struct TestResult {
  double statistic = 0.0;  // MW z-statistic, or the asymptotic KS statistic
  double p_value = 1.0;
  int n1 = 0;
  int n2 = 0;
};

/// Two-sided Mann-Whitney / Wilcoxon rank-sum test with midrank tie handling,
/// tie-corrected variance and a 0.5 continuity correction. When every pooled
/// value is tied the statistic is 0 and p = 1.
TestResult mann_whitney(const std::vector<double>& a, const std::vector<double>& b);

/// U statistic of sample a (number of (a, b) pairs with a > b, ties count 1/2).
double mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

/// Two-sided two-sample Kolmogorov-Smirnov test. statistic is the asymptotic
/// form D * sqrt(n1 n2 / (n1 + n2)); the p-value comes from the Kolmogorov
/// series 2 * sum_k (-1)^(k-1) exp(-2 k^2 x^2).
TestResult ks_two_sample(const std::vector<double>& a, const std::vector<double>& b);

/// sup |ECDF_a - ECDF_b|.
double ks_two_sample_d(const std::vector<double>& a, const std::vector<double>& b);

double kolmogorov_series_p(double x);

/// One Mann-Whitney and one KS result per ratio screen, comparing simulated
/// against real screen samples. Samples with an empty side yield no row.
std::map<std::string, std::pair<TestResult, TestResult>> screen_distribution_suite(
    const std::map<std::string, std::vector<double>>& simulated,
    const std::map<std::string, std::vector<double>>& real);

}  // namespace bidscreen
