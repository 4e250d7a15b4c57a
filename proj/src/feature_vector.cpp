// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/feature_vector.hpp"

#include <algorithm>
#include <cmath>

namespace triage {

double FeatureVector::dot(std::span<const double> weights) const noexcept {
    double sum = 0.0;
    for (const auto& [col, value] : sparse) sum += weights[col] * value;
    const double* tail = weights.data() + sparse_dim;
    for (std::size_t j = 0; j < dense.size(); ++j) sum += tail[j] * dense[j];
    return sum;
}

void FeatureVector::add_scaled_to(double scale, std::span<double> out) const noexcept {
    for (const auto& [col, value] : sparse) out[col] += scale * value;
    double* tail = out.data() + sparse_dim;
    for (std::size_t j = 0; j < dense.size(); ++j) tail[j] += scale * dense[j];
}

double FeatureVector::squared_norm() const noexcept {
    double sum = 0.0;
    for (const auto& [_, value] : sparse) sum += value * value;
    for (double value : dense) sum += value * value;
    return sum;
}

bool FeatureVector::all_finite() const noexcept {
    for (const auto& [_, value] : sparse)
        if (!std::isfinite(value)) return false;
    for (double value : dense)
        if (!std::isfinite(value)) return false;
    return true;
}

std::vector<double> FeatureVector::to_dense() const {
    std::vector<double> out(dimension(), 0.0);
    add_scaled_to(1.0, out);
    return out;
}

FeatureVector FeatureVector::from_dense(std::vector<double> values, std::uint64_t fingerprint) {
    FeatureVector v;
    v.dense = std::move(values);
    v.fingerprint = fingerprint;
    return v;
}

double squared_distance(const FeatureVector& a, const FeatureVector& b) noexcept {
    double sum = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.sparse.size() || j < b.sparse.size()) {
        if (j == b.sparse.size() || (i < a.sparse.size() && a.sparse[i].first < b.sparse[j].first)) {
            sum += a.sparse[i].second * a.sparse[i].second;
            ++i;
        } else if (i == a.sparse.size() || b.sparse[j].first < a.sparse[i].first) {
            sum += b.sparse[j].second * b.sparse[j].second;
            ++j;
        } else {
            const double d = a.sparse[i].second - b.sparse[j].second;
            sum += d * d;
            ++i;
            ++j;
        }
    }
    const std::size_t n = std::min(a.dense.size(), b.dense.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double d = a.dense[k] - b.dense[k];
        sum += d * d;
    }
    return sum;
}

}  // namespace triage
