#include "riskstrat/models/logistic.hpp"

#include <cmath>

#include "riskstrat/kernels/kernels.hpp"
#include "riskstrat/util/errors.hpp"

namespace riskstrat {

std::string to_string(Penalty p) {
    return p == Penalty::l1 ? "l1" : "l2";
}

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double log1p_exp_neg(double margin) {
    if (margin > 0.0) return std::log1p(std::exp(-margin));
    return -margin + std::log1p(std::exp(margin));
}

namespace {

void compute_margins(const CsrMatrix& X, const std::vector<double>& w, double b,
                     std::vector<double>& margins) {
    margins.resize(static_cast<std::size_t>(X.n_rows));
    for (int r = 0; r < X.n_rows; ++r) {
        margins[static_cast<std::size_t>(r)] = X.row_dot(r, w.data()) + b;
    }
}

double data_loss(const std::vector<double>& margins, const std::vector<int>& y) {
    double loss = 0.0;
    for (std::size_t i = 0; i < margins.size(); ++i) {
        const double t = y[i] ? 1.0 : -1.0;
        loss += log1p_exp_neg(t * margins[i]);
    }
    return loss;
}

double penalty_value(const std::vector<double>& w, Penalty penalty, double C) {
    if (penalty == Penalty::l2) {
        return 0.5 / C * kernels::sumsq(w.data(), w.size());
    }
    double l1 = 0.0;
    for (double v : w) l1 += std::fabs(v);
    return l1 / C;
}

// Gradient of the data term only.
void data_gradient(const CsrMatrix& X, const std::vector<int>& y,
                   const std::vector<double>& margins, std::vector<double>& grad_w,
                   double& grad_b) {
    grad_w.assign(static_cast<std::size_t>(X.n_cols), 0.0);
    grad_b = 0.0;
    for (int r = 0; r < X.n_rows; ++r) {
        const double t = y[static_cast<std::size_t>(r)] ? 1.0 : -1.0;
        const double dz = -t * sigmoid(-t * margins[static_cast<std::size_t>(r)]);
        X.row_axpy(r, dz, grad_w.data());
        grad_b += dz;
    }
}

}  // namespace

double logistic_objective(const CsrMatrix& X, const std::vector<int>& y,
                          const std::vector<double>& w, double b, Penalty penalty, double C) {
    std::vector<double> margins;
    compute_margins(X, w, b, margins);
    return data_loss(margins, y) + penalty_value(w, penalty, C);
}

void logistic_gradient(const CsrMatrix& X, const std::vector<int>& y,
                       const std::vector<double>& w, double b, Penalty penalty, double C,
                       std::vector<double>& grad_w, double& grad_b) {
    std::vector<double> margins;
    compute_margins(X, w, b, margins);
    data_gradient(X, y, margins, grad_w, grad_b);
    if (penalty == Penalty::l2) {
        kernels::axpy(1.0 / C, w.data(), grad_w.data(), w.size());
    }
}

LogisticModel train_logistic(const CsrMatrix& X, const std::vector<int>& y,
                             const LogisticConfig& config) {
    if (X.n_rows != static_cast<int>(y.size()) || X.n_rows < 2) {
        throw DataError("logistic training needs |X| == |y| >= 2");
    }
    bool has_pos = false, has_neg = false;
    for (int label : y) (label ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) {
        throw DataError("logistic training needs both classes present");
    }
    if (config.C <= 0.0) throw DataError("C must be positive");

    const std::size_t d = static_cast<std::size_t>(X.n_cols);
    std::vector<double> w(d, 0.0);
    double b = 0.0;

    std::vector<double> margins, trial_margins;
    std::vector<double> grad_w(d), trial_w(d), delta_w(d);

    compute_margins(X, w, b, margins);
    double smooth = data_loss(margins, y);
    double objective = smooth + penalty_value(w, config.penalty, config.C);

    double step = 1.0;
    const double lambda = 1.0 / config.C;

    for (int pass = 0; pass < config.max_passes; ++pass) {
        double grad_b = 0.0;
        data_gradient(X, y, margins, grad_w, grad_b);

        if (config.penalty == Penalty::l2) {
            kernels::axpy(lambda, w.data(), grad_w.data(), d);
            const double grad_sq = kernels::sumsq(grad_w.data(), d) + grad_b * grad_b;
            if (grad_sq == 0.0) break;

            double trial_b = 0.0, trial_obj = 0.0;
            step *= 2.0;  // allow the step to grow back after a cautious pass
            while (true) {
                for (std::size_t j = 0; j < d; ++j) trial_w[j] = w[j] - step * grad_w[j];
                trial_b = b - step * grad_b;
                compute_margins(X, trial_w, trial_b, trial_margins);
                trial_obj = data_loss(trial_margins, y) +
                            penalty_value(trial_w, Penalty::l2, config.C);
                if (trial_obj <= objective - 0.5 * step * grad_sq || step < 1e-18) break;
                step *= 0.5;
            }
            w.swap(trial_w);
            b = trial_b;
            margins.swap(trial_margins);
            const double improvement = objective - trial_obj;
            objective = trial_obj;
            if (improvement >= 0.0 && improvement < config.tol) break;
        } else {
            // Proximal gradient step on the smooth part, then soft-threshold.
            double trial_b = 0.0, trial_smooth = 0.0;
            step *= 2.0;
            while (true) {
                for (std::size_t j = 0; j < d; ++j) trial_w[j] = w[j] - step * grad_w[j];
                kernels::soft_threshold(trial_w.data(), step * lambda, trial_w.data(), d);
                trial_b = b - step * grad_b;
                compute_margins(X, trial_w, trial_b, trial_margins);
                trial_smooth = data_loss(trial_margins, y);
                // Quadratic upper-bound check for the smooth part at the trial point.
                for (std::size_t j = 0; j < d; ++j) delta_w[j] = trial_w[j] - w[j];
                const double delta_b = trial_b - b;
                const double lin = kernels::dot(grad_w.data(), delta_w.data(), d) + grad_b * delta_b;
                const double quad = kernels::sumsq(delta_w.data(), d) + delta_b * delta_b;
                if (trial_smooth <= smooth + lin + quad / (2.0 * step) || step < 1e-18) break;
                step *= 0.5;
            }
            w.swap(trial_w);
            b = trial_b;
            margins.swap(trial_margins);
            smooth = trial_smooth;
            const double new_obj = smooth + penalty_value(w, Penalty::l1, config.C);
            const double improvement = objective - new_obj;
            objective = new_obj;
            if (improvement >= 0.0 && improvement < config.tol) break;
        }
    }

    for (double v : w) {
        if (!std::isfinite(v)) throw DataError("logistic training produced non-finite weights");
    }
    if (!std::isfinite(b)) throw DataError("logistic training produced a non-finite intercept");

    LogisticModel model;
    model.weights = std::move(w);
    model.intercept = b;
    model.penalty = config.penalty;
    model.C = config.C;
    return model;
}

double LogisticModel::decision(const CsrMatrix& X, int row) const {
    if (X.n_cols != static_cast<int>(weights.size())) {
        throw DataError("logistic model dimension " + std::to_string(weights.size()) +
                        " != feature dimension " + std::to_string(X.n_cols));
    }
    return X.row_dot(row, weights.data()) + intercept;
}

double LogisticModel::predict_proba(const CsrMatrix& X, int row) const {
    return sigmoid(decision(X, row));
}

double LogisticModel::predict_proba(const SparseCountVector& x) const {
    if (x.dimension != static_cast<int>(weights.size())) {
        throw DataError("logistic model dimension " + std::to_string(weights.size()) +
                        " != feature dimension " + std::to_string(x.dimension));
    }
    double z = intercept;
    for (const auto& [col, count] : x.entries) {
        z += weights[static_cast<std::size_t>(col)] * count;
    }
    return sigmoid(z);
}

}  // namespace riskstrat
