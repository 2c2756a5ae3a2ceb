#pragma once

#include <cstdint>
#include <vector>

#include "bidscreen/features.hpp"

namespace bidscreen {

/// L1-penalized logistic regression. The fit maximizes
///   sum_i [ y_i eta_i - log(1 + exp(eta_i)) ] - lambda * sum_j |beta_j|
/// with eta = beta0 + x beta, on internally standardized predictors.
struct LassoModel {
  double intercept = 0.0;
  std::vector<double> coefficients;  // standardized scale, model-spec order
  double lambda = 0.0;
  std::vector<double> center;  // training means
  std::vector<double> scale;   // training stds (1 for constant predictors)

  /// Slopes and intercept mapped back to the original predictor scale.
  std::vector<double> coefficients_original() const;
  double intercept_original() const;

  double probability(const std::vector<double>& x) const;
  int predict(const std::vector<double>& x) const;  // p > 0.5 -> collusive
  double l1_norm() const;
};

struct LassoParams {
  int max_outer = 200;          // IRLS relinearizations
  int max_inner = 2000;         // coordinate sweeps per linearization
  double tol = 1e-8;            // relative change of the penalized objective
  int cv_folds = 15;
  int grid_size = 100;          // log-spaced from lambda_max to 1e-4 lambda_max
  double grid_floor = 1e-4;
};

/// Grid from the smallest all-zero-slopes lambda down to its grid_floor.
std::vector<double> default_lambda_grid(const std::vector<FeatureRow>& rows,
                                        const LassoParams& params = {});

/// Single fit at a fixed lambda (warm start optional).
LassoModel fit_lasso_at(const std::vector<FeatureRow>& rows, double lambda,
                        const LassoParams& params = {}, const LassoModel* warm = nullptr);

/// Path fit with lambda chosen by k-fold cross-validation minimizing the
/// Brier score on held-out folds; ties prefer the larger lambda.
struct LassoCvResult {
  LassoModel model;
  std::vector<double> grid;
  std::vector<double> cv_error;   // mean squared prediction error per lambda
  std::size_t chosen = 0;
};
LassoCvResult fit_lasso(const std::vector<FeatureRow>& rows, const std::vector<double>& grid,
                        const LassoParams& params, std::uint64_t seed);
LassoCvResult fit_lasso(const std::vector<FeatureRow>& rows, const LassoParams& params,
                        std::uint64_t seed);

/// Penalized objective (to maximize) of a model on rows; used by tests.
double lasso_objective(const LassoModel& model, const std::vector<FeatureRow>& rows,
                       double lambda);

}  // namespace bidscreen
