// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/knn.hpp"

#include <algorithm>
#include <numeric>

#include "triage/error.hpp"

namespace triage {

KnnModel train_knn(std::span<const FeatureVector> x, std::span<const TriageLabel> y, std::size_t k) {
    if (x.empty()) throw InputError("classify", "training set is empty");
    if (k < 1 || k > x.size())
        throw InputError("classify", "k = " + std::to_string(k) + " is outside [1, " + std::to_string(x.size()) + "]");
    validate_training_set(x, y);
    KnnModel m;
    m.k = k;
    m.points.assign(x.begin(), x.end());
    m.labels.assign(y.begin(), y.end());
    m.dimension = x.front().dimension();
    m.fingerprint = x.front().fingerprint;
    return m;
}

std::vector<std::size_t> nearest_neighbors(const KnnModel& model, const FeatureVector& x) {
    check_compatible(x, model.dimension, model.fingerprint);
    const std::size_t n = model.points.size();
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = squared_distance(model.points[i], x);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto closer = [&](std::size_t a, std::size_t b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        if (model.labels[a] != model.labels[b]) return model.labels[a] > model.labels[b];
        return a < b;
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(model.k), order.end(), closer);
    order.resize(model.k);
    return order;
}

Prediction predict(const KnnModel& model, const FeatureVector& x) {
    Prediction p;
    for (std::size_t i : nearest_neighbors(model, x)) p.scores[index_of(model.labels[i])] += 1.0;
    p.label = argmax_label(p.scores);
    return p;
}

}  // namespace triage
