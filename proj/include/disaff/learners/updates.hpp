#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "disaff/error.hpp"
#include "disaff/learners/linear_model.hpp"

// Single-example update rules. All of them work in model space: callers pass
// vectors already mapped through `LinearModel::augment` (train_sweep does).

namespace disaff::learners {

enum class StepOutcome { updated, unchanged, skipped_zero };

inline void check_label(int y) {
    if (y != 1 && y != -1) throw ValidationError("label must be +1 or -1");
}

/// PA-I: tau = min(C, loss / |x|^2) on hinge loss > 0.
inline StepOutcome pa_step(LinearModel& model, const SparseVector& x, int y, double C) {
    check_label(y);
    const double sq = x.squared_norm();
    if (sq == 0.0) return StepOutcome::skipped_zero;
    const double loss = std::max(0.0, 1.0 - y * model.dot(x));
    if (loss <= 0.0) return StepOutcome::unchanged;
    const double tau = std::min(C, loss / sq);
    model.add_scaled(x, tau * y);
    model.increment_updates();
    return StepOutcome::updated;
}

inline StepOutcome pa_step(LinearModel& model, const SparseVector& x, int y) {
    return pa_step(model, x, y, model.hyperparameters().C);
}

/// ALMA_2(alpha) with B = 1/alpha, C = sqrt(2). The input is normalized; on a
/// margin violation w moves by eta = C/sqrt(k) and is projected back into the
/// unit ball.
inline StepOutcome alma_step(LinearModel& model, const SparseVector& x, int y, double alpha) {
    check_label(y);
    if (!(alpha > 0.0 && alpha <= 1.0)) throw ValidationError("ALMA: alpha must lie in (0, 1]");
    const double norm = x.norm();
    if (norm == 0.0) return StepOutcome::skipped_zero;
    const SparseVector xn = x.scaled(1.0 / norm);
    const double B = 1.0 / alpha;
    const double C = std::sqrt(2.0);
    const double k = static_cast<double>(model.update_count() + 1);
    const double gamma = B / std::sqrt(k);
    if (y * model.dot(xn) > (1.0 - alpha) * gamma) return StepOutcome::unchanged;
    model.add_scaled(xn, y * C / std::sqrt(k));
    const double n = model.norm();
    if (n > 1.0) model.scale_by(1.0 / n);
    model.increment_updates();
    return StepOutcome::updated;
}

inline StepOutcome alma_step(LinearModel& model, const SparseVector& x, int y) {
    return alma_step(model, x, y, model.hyperparameters().alpha);
}

/// Pegasos single-example step with eta = 1/(lambda t), t counting every
/// presented example, followed by the optional projection onto the ball of
/// radius 1/sqrt(lambda).
inline StepOutcome pegasos_step(LinearModel& model, const SparseVector& x, int y, double lambda,
                                bool projection = true) {
    check_label(y);
    if (!(lambda > 0.0)) throw ValidationError("Pegasos: lambda must be positive");
    if (x.squared_norm() == 0.0) return StepOutcome::skipped_zero;
    const double t = static_cast<double>(model.update_count() + 1);
    const double eta = 1.0 / (lambda * t);
    const bool violated = y * model.dot(x) < 1.0;
    model.scale_by(1.0 - eta * lambda);
    if (violated) model.add_scaled(x, eta * y);
    if (projection) {
        const double radius = 1.0 / std::sqrt(lambda);
        const double n = model.norm();
        if (n > radius) model.scale_by(radius / n);
    }
    model.increment_updates();
    return violated ? StepOutcome::updated : StepOutcome::unchanged;
}

inline StepOutcome pegasos_step(LinearModel& model, const SparseVector& x, int y) {
    return pegasos_step(model, x, y, model.hyperparameters().lambda, model.hyperparameters().projection);
}

/// Dispatches on the model's algorithm with its stored hyperparameters.
inline StepOutcome step(LinearModel& model, const SparseVector& x, int y) {
    switch (model.algorithm()) {
        case Algorithm::pa: return pa_step(model, x, y);
        case Algorithm::alma: return alma_step(model, x, y);
        case Algorithm::pegasos: return pegasos_step(model, x, y);
    }
    return StepOutcome::unchanged;
}

}  // namespace disaff::learners
