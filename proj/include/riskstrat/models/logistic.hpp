#pragma once

#include <cstdint>
#include <vector>

#include "riskstrat/models/dataset.hpp"

namespace riskstrat {

enum class Penalty { l1, l2 };

std::string to_string(Penalty p);

struct LogisticConfig {
    Penalty penalty = Penalty::l2;
    double C = 1.0;  // inverse regularization strength; penalty enters as (1/C)*P(w)
    std::uint64_t seed = 0;
    int max_passes = 1000;
    double tol = 1e-8;       // objective-change part of the stopping rule
    double grad_tol = 1e-6;  // L2 also requires the gradient norm below this
};

struct LogisticModel {
    std::vector<double> weights;
    double intercept = 0.0;
    Penalty penalty = Penalty::l2;
    double C = 1.0;

    double decision(const CsrMatrix& X, int row) const;
    double predict_proba(const CsrMatrix& X, int row) const;
    double predict_proba(const SparseCountVector& x) const;
};

/// Penalized logistic regression:
///   min_w,b  sum_i log(1 + exp(-t_i (w.x_i + b))) + (1/C) P(w),  t in {-1,+1}
/// with P = ||w||_1 or 0.5 ||w||_2^2 and the intercept unpenalized.
/// L2 runs full-batch gradient descent with backtracking line search;
/// L1 runs proximal gradient steps with soft-thresholding.
LogisticModel train_logistic(const CsrMatrix& X, const std::vector<int>& y,
                             const LogisticConfig& config);

/// Full objective at (w, b); exposed for the optimality tests.
double logistic_objective(const CsrMatrix& X, const std::vector<int>& y,
                          const std::vector<double>& w, double b, Penalty penalty, double C);

/// Gradient of the full objective (L2 only adds the penalty term; for L1 the
/// penalty is nonsmooth, so this returns the gradient of the smooth part).
void logistic_gradient(const CsrMatrix& X, const std::vector<int>& y,
                       const std::vector<double>& w, double b, Penalty penalty, double C,
                       std::vector<double>& grad_w, double& grad_b);

double sigmoid(double z);

/// log(1 + exp(-m)) computed without overflow.
double log1p_exp_neg(double margin);

}  // namespace riskstrat
