// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace triage {

/// A post's features: a sparse block (TF-IDF columns) followed by a dense
/// block. Coordinates [0, sparse_dim) are sparse, the dense block follows.
struct FeatureVector {
    std::size_t sparse_dim = 0;
    std::vector<std::pair<std::uint32_t, double>> sparse;  // sorted by column, no duplicates
    std::vector<double> dense;
    std::uint64_t fingerprint = 0;  // of the pipeline that produced it; 0 for hand-built vectors

    std::size_t dimension() const noexcept { return sparse_dim + dense.size(); }

    /// Dot product with a full-dimension weight vector.
    double dot(std::span<const double> weights) const noexcept;
    /// out += scale * x
    void add_scaled_to(double scale, std::span<double> out) const noexcept;
    double squared_norm() const noexcept;
    bool all_finite() const noexcept;

    /// Densifies into a full-dimension vector.
    std::vector<double> to_dense() const;

    /// Builds a vector with only a dense block.
    static FeatureVector from_dense(std::vector<double> values, std::uint64_t fingerprint = 0);
};

double squared_distance(const FeatureVector& a, const FeatureVector& b) noexcept;

}  // namespace triage
