// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/naive_bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "triage/error.hpp"

namespace triage {

NaiveBayesModel train_naive_bayes(std::span<const FeatureVector> x, std::span<const TriageLabel> y, double alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha)) throw InputError("classify", "naive Bayes smoothing must be positive");
    validate_training_set(x, y);

    NaiveBayesModel m;
    m.alpha = alpha;
    m.dimension = x.front().dimension();
    m.fingerprint = x.front().fingerprint;
    const std::size_t d = m.dimension;
    const std::size_t sparse_dim = x.front().sparse_dim;

    // Implicit sparse zeros count as observed values, so sparse minima start at 0.
    std::vector<double> minimum(d, 0.0);
    for (std::size_t j = sparse_dim; j < d; ++j) minimum[j] = x.front().dense[j - sparse_dim];
    for (const auto& v : x) {
        for (const auto& [c, val] : v.sparse) minimum[c] = std::min(minimum[c], val);
        for (std::size_t j = 0; j < v.dense.size(); ++j)
            minimum[sparse_dim + j] = std::min(minimum[sparse_dim + j], v.dense[j]);
    }
    m.shift.resize(d);
    for (std::size_t j = 0; j < d; ++j) m.shift[j] = minimum[j] < 0 ? -minimum[j] : 0.0;

    std::array<std::vector<double>, kLabelCount> totals;
    std::array<std::size_t, kLabelCount> docs{};
    for (auto& t : totals) t.assign(d, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::size_t l = index_of(y[i]);
        ++docs[l];
        auto& t = totals[l];
        for (std::size_t j = 0; j < d; ++j) t[j] += m.shift[j];
        for (const auto& [c, val] : x[i].sparse) t[c] += val;
        for (std::size_t j = 0; j < x[i].dense.size(); ++j) t[sparse_dim + j] += x[i].dense[j];
    }

    const auto n = static_cast<double>(x.size());
    for (std::size_t l = 0; l < kLabelCount; ++l) {
        m.log_prior[l] = docs[l] == 0 ? -std::numeric_limits<double>::infinity()
                                      : std::log(static_cast<double>(docs[l]) / n);
        double sum = 0;
        for (double t : totals[l]) sum += t;
        const double denom = sum + alpha * static_cast<double>(d);
        m.log_theta[l].resize(d);
        for (std::size_t j = 0; j < d; ++j) m.log_theta[l][j] = std::log((totals[l][j] + alpha) / denom);
    }
    return m;
}

std::array<double, kLabelCount> log_joint(const NaiveBayesModel& model, const FeatureVector& x) {
    check_compatible(x, model.dimension, model.fingerprint);
    const std::size_t sparse_dim = x.sparse_dim;
    std::array<double, kLabelCount> out{};
    for (std::size_t l = 0; l < kLabelCount; ++l) {
        const auto& theta = model.log_theta[l];
        double s = model.log_prior[l];
        // Every coordinate contributes shift * log theta; explicit entries adjust it.
        for (std::size_t j = 0; j < model.dimension; ++j) s += model.shift[j] * theta[j];
        for (const auto& [c, val] : x.sparse)
            s += (std::max(val + model.shift[c], 0.0) - model.shift[c]) * theta[c];
        for (std::size_t j = 0; j < x.dense.size(); ++j) {
            const std::size_t c = sparse_dim + j;
            s += (std::max(x.dense[j] + model.shift[c], 0.0) - model.shift[c]) * theta[c];
        }
        out[l] = s;
    }
    return out;
}

Prediction predict(const NaiveBayesModel& model, const FeatureVector& x) {
    Prediction p;
    p.scores = log_joint(model, x);
    p.label = argmax_label(p.scores);
    return p;
}

}  // namespace triage
