// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "triage/feature_vector.hpp"
#include "triage/label.hpp"
#include "triage/svm.hpp"

namespace triage {

/// Euclidean k-nearest-neighbour vote.
struct KnnModel {
    std::size_t k = 1;
    std::vector<FeatureVector> points;
    std::vector<TriageLabel> labels;
    std::size_t dimension = 0;
    std::uint64_t fingerprint = 0;
};

/// Throws InputError like train_svm, and unless 1 <= k <= |x|.
KnnModel train_knn(std::span<const FeatureVector> x, std::span<const TriageLabel> y, std::size_t k);

/// Indices of the k nearest training points, ordered by distance, then
/// higher severity, then training order.
std::vector<std::size_t> nearest_neighbors(const KnnModel& model, const FeatureVector& x);

/// Scores are vote counts; the most severe label wins a tied vote.
Prediction predict(const KnnModel& model, const FeatureVector& x);

}  // namespace triage
