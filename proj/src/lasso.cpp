#include "bidscreen/lasso.hpp"

#include <algorithm>
#include <cmath>

#include "bidscreen/error.hpp"
#include "bidscreen/rng.hpp"

namespace bidscreen {

namespace {

double log1pexp(double eta) {
  if (eta > 30.0) return eta + std::log1p(std::exp(-eta));
  return std::log1p(std::exp(eta));
}

double sigmoid(double eta) {
  if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

double soft_threshold(double v, double lambda) {
  if (v > lambda) return v - lambda;
  if (v < -lambda) return v + lambda;
  return 0.0;
}

struct Standardized {
  std::vector<std::vector<double>> columns;  // standardized, column-major
  std::vector<double> y;
  std::vector<double> center, scale;
  std::vector<bool> active;  // false for constant predictors
  std::size_t n = 0;
  std::size_t p = 0;
};

Standardized standardize(const std::vector<FeatureRow>& rows) {
  Standardized s;
  s.n = rows.size();
  s.p = rows.front().x.size();
  s.center.assign(s.p, 0.0);
  s.scale.assign(s.p, 1.0);
  s.active.assign(s.p, true);
  s.columns.assign(s.p, std::vector<double>(s.n, 0.0));
  s.y.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    s.y[i] = rows[i].label == Label::Collusive ? 1.0 : 0.0;
  for (std::size_t j = 0; j < s.p; ++j) {
    double m = 0.0;
    for (std::size_t i = 0; i < s.n; ++i) m += rows[i].x[j];
    m /= static_cast<double>(s.n);
    double ss = 0.0;
    for (std::size_t i = 0; i < s.n; ++i) ss += (rows[i].x[j] - m) * (rows[i].x[j] - m);
    const double sd = std::sqrt(ss / static_cast<double>(s.n));  // population std
    s.center[j] = m;
    if (sd > 0.0) {
      s.scale[j] = sd;
    } else {
      s.scale[j] = 1.0;
      s.active[j] = false;
    }
    auto& col = s.columns[j];
    for (std::size_t i = 0; i < s.n; ++i) col[i] = (rows[i].x[j] - s.center[j]) / s.scale[j];
  }
  return s;
}

double objective(const Standardized& s, double b0, const std::vector<double>& beta,
                 double lambda) {
  double obj = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) {
    double eta = b0;
    for (std::size_t j = 0; j < s.p; ++j)
      if (beta[j] != 0.0) eta += beta[j] * s.columns[j][i];
    obj += s.y[i] * eta - log1pexp(eta);
  }
  for (std::size_t j = 0; j < s.p; ++j) obj -= lambda * std::abs(beta[j]);
  return obj;
}

/// IRLS with coordinate-descent inner loop on the working least squares
/// problem; soft-thresholding handles the penalty. Backtracks halfway to the
/// previous iterate whenever a relinearization would lower the objective.
void fit_standardized(const Standardized& s, double lambda, const LassoParams& params, double& b0,
                      std::vector<double>& beta) {
  std::vector<double> eta(s.n, 0.0);
  auto recompute_eta = [&] {
    for (std::size_t i = 0; i < s.n; ++i) {
      double e = b0;
      for (std::size_t j = 0; j < s.p; ++j)
        if (beta[j] != 0.0) e += beta[j] * s.columns[j][i];
      eta[i] = e;
    }
  };
  recompute_eta();
  double obj = objective(s, b0, beta, lambda);

  std::vector<double> w(s.n), z(s.n), r(s.n);
  for (int outer = 0; outer < params.max_outer; ++outer) {
    for (std::size_t i = 0; i < s.n; ++i) {
      const double p = sigmoid(eta[i]);
      w[i] = std::max(p * (1.0 - p), 1e-9);
      z[i] = eta[i] + (s.y[i] - p) / w[i];
      r[i] = z[i] - eta[i];  // working residual
    }

    const double prev_b0 = b0;
    const std::vector<double> prev_beta = beta;

    for (int inner = 0; inner < params.max_inner; ++inner) {
      double max_step = 0.0;
      // intercept (unpenalized)
      double sw = 0.0, swr = 0.0;
      for (std::size_t i = 0; i < s.n; ++i) {
        sw += w[i];
        swr += w[i] * r[i];
      }
      const double d0 = swr / sw;
      if (d0 != 0.0) {
        b0 += d0;
        for (std::size_t i = 0; i < s.n; ++i) r[i] -= d0;
        max_step = std::max(max_step, std::abs(d0));
      }
      for (std::size_t j = 0; j < s.p; ++j) {
        if (!s.active[j]) continue;
        const auto& col = s.columns[j];
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < s.n; ++i) {
          num += w[i] * col[i] * (r[i] + col[i] * beta[j]);
          den += w[i] * col[i] * col[i];
        }
        if (den <= 0.0) continue;
        const double bj = soft_threshold(num, lambda) / den;
        const double diff = bj - beta[j];
        if (diff != 0.0) {
          beta[j] = bj;
          for (std::size_t i = 0; i < s.n; ++i) r[i] -= diff * col[i];
          max_step = std::max(max_step, std::abs(diff));
        }
      }
      if (max_step < 1e-11) break;
    }

    recompute_eta();
    double new_obj = objective(s, b0, beta, lambda);
    // Newton overshoot guard
    int halvings = 0;
    while (new_obj < obj && halvings < 40) {
      b0 = 0.5 * (b0 + prev_b0);
      for (std::size_t j = 0; j < s.p; ++j) beta[j] = 0.5 * (beta[j] + prev_beta[j]);
      recompute_eta();
      new_obj = objective(s, b0, beta, lambda);
      ++halvings;
    }
    const double rel = std::abs(new_obj - obj) / (std::abs(obj) + 1e-10);
    obj = new_obj;
    if (rel < params.tol) return;
  }
  throw Error(ErrorCode::NonConvergence,
              "fit_lasso: no convergence within max_outer relinearizations");
}

double lambda_max_of(const Standardized& s) {
  double ybar = 0.0;
  for (double yi : s.y) ybar += yi;
  ybar /= static_cast<double>(s.n);
  double lmax = 0.0;
  for (std::size_t j = 0; j < s.p; ++j) {
    if (!s.active[j]) continue;
    double g = 0.0;
    for (std::size_t i = 0; i < s.n; ++i) g += s.columns[j][i] * (s.y[i] - ybar);
    lmax = std::max(lmax, std::abs(g));
  }
  return std::max(lmax, 1e-10);
}

LassoModel model_from(const Standardized& s, double b0, std::vector<double> beta, double lambda) {
  LassoModel m;
  m.intercept = b0;
  m.coefficients = std::move(beta);
  m.lambda = lambda;
  m.center = s.center;
  m.scale = s.scale;
  return m;
}

}  // namespace

std::vector<double> LassoModel::coefficients_original() const {
  std::vector<double> out(coefficients.size());
  for (std::size_t j = 0; j < coefficients.size(); ++j) out[j] = coefficients[j] / scale[j];
  return out;
}

double LassoModel::intercept_original() const {
  double b0 = intercept;
  for (std::size_t j = 0; j < coefficients.size(); ++j)
    b0 -= coefficients[j] * center[j] / scale[j];
  return b0;
}

double LassoModel::probability(const std::vector<double>& x) const {
  if (x.size() != coefficients.size())
    throw Error(ErrorCode::DimensionMismatch, "lasso: feature length mismatch");
  double eta = intercept;
  for (std::size_t j = 0; j < x.size(); ++j)
    eta += coefficients[j] * (x[j] - center[j]) / scale[j];
  return sigmoid(eta);
}

int LassoModel::predict(const std::vector<double>& x) const {
  return probability(x) > 0.5 ? 1 : 0;
}

double LassoModel::l1_norm() const {
  double s = 0.0;
  for (double b : coefficients) s += std::abs(b);
  return s;
}

std::vector<double> default_lambda_grid(const std::vector<FeatureRow>& rows,
                                        const LassoParams& params) {
  const Standardized s = standardize(rows);
  const double lmax = lambda_max_of(s);
  const double lmin = lmax * params.grid_floor;
  std::vector<double> grid(static_cast<std::size_t>(params.grid_size));
  const double step = std::log(lmin / lmax) / static_cast<double>(params.grid_size - 1);
  for (int k = 0; k < params.grid_size; ++k)
    grid[static_cast<std::size_t>(k)] = lmax * std::exp(step * k);
  return grid;
}

LassoModel fit_lasso_at(const std::vector<FeatureRow>& rows, double lambda,
                        const LassoParams& params, const LassoModel* warm) {
  if (rows.empty()) throw Error(ErrorCode::EmptyTrainingSet, "fit_lasso: no rows");
  const Standardized s = standardize(rows);
  bool has0 = false, has1 = false;
  for (double yi : s.y) (yi > 0.5 ? has1 : has0) = true;
  if (!has0 || !has1)
    throw Error(ErrorCode::SingleClassDataset, "fit_lasso: training data has a single class");

  double b0;
  std::vector<double> beta;
  if (warm != nullptr && warm->coefficients.size() == s.p) {
    b0 = warm->intercept;
    beta = warm->coefficients;
  } else {
    double ybar = 0.0;
    for (double yi : s.y) ybar += yi;
    ybar /= static_cast<double>(s.n);
    b0 = std::log(ybar / (1.0 - ybar));
    beta.assign(s.p, 0.0);
  }
  fit_standardized(s, lambda, params, b0, beta);
  return model_from(s, b0, std::move(beta), lambda);
}

LassoCvResult fit_lasso(const std::vector<FeatureRow>& rows, const std::vector<double>& grid,
                        const LassoParams& params, std::uint64_t seed) {
  if (static_cast<int>(rows.size()) < params.cv_folds)
    throw Error(ErrorCode::EmptyTrainingSet, "fit_lasso: fewer rows than folds");

  // fold assignment by shuffled position
  RandomStream rng(seed, 0x6c6173736f);
  std::vector<int> order(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) order[i] = static_cast<int>(i);
  rng.shuffle(order);
  std::vector<int> fold_of(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    fold_of[static_cast<std::size_t>(order[i])] =
        static_cast<int>(i % static_cast<std::size_t>(params.cv_folds));

  std::vector<double> sse(grid.size(), 0.0);
  for (int f = 0; f < params.cv_folds; ++f) {
    std::vector<FeatureRow> train;
    std::vector<const FeatureRow*> test;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (fold_of[i] == f) test.push_back(&rows[i]);
      else train.push_back(rows[i]);
    }
    bool has0 = false, has1 = false;
    for (const auto& row : train) (row.label == Label::Collusive ? has1 : has0) = true;
    if (!has0 || !has1)
      throw Error(ErrorCode::DegenerateFold,
                  "fit_lasso: cross-validation fold with single-class training data");

    LassoModel warm;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      warm = fit_lasso_at(train, grid[k], params, k == 0 ? nullptr : &warm);
      for (const auto* row : test) {
        const double y = row->label == Label::Collusive ? 1.0 : 0.0;
        const double p = warm.probability(row->x);
        sse[k] += (p - y) * (p - y);
      }
    }
  }

  LassoCvResult res;
  res.grid = grid;
  res.cv_error.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    res.cv_error[k] = sse[k] / static_cast<double>(rows.size());
  res.chosen = 0;
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (res.cv_error[k] < res.cv_error[res.chosen]) res.chosen = k;  // tie -> larger lambda

  LassoModel warm;
  for (std::size_t k = 0; k <= res.chosen; ++k)
    warm = fit_lasso_at(rows, grid[k], params, k == 0 ? nullptr : &warm);
  res.model = warm;
  return res;
}

LassoCvResult fit_lasso(const std::vector<FeatureRow>& rows, const LassoParams& params,
                        std::uint64_t seed) {
  return fit_lasso(rows, default_lambda_grid(rows, params), params, seed);
}

double lasso_objective(const LassoModel& model, const std::vector<FeatureRow>& rows,
                       double lambda) {
  double obj = 0.0;
  for (const auto& row : rows) {
    double eta = model.intercept;
    for (std::size_t j = 0; j < row.x.size(); ++j)
      eta += model.coefficients[j] * (row.x[j] - model.center[j]) / model.scale[j];
    const double y = row.label == Label::Collusive ? 1.0 : 0.0;
    obj += y * eta - log1pexp(eta);
  }
  for (double b : model.coefficients) obj -= lambda * std::abs(b);
  return obj;
}

}  // namespace bidscreen
