// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "triage/feature_vector.hpp"
#include "triage/label.hpp"
#include "triage/svm.hpp"

namespace triage {

/// Multinomial naive Bayes over min-shifted features.
///
/// Standardized features can be negative, so each feature is shifted by
/// max(0, -min) over the training rows before counting. Shifted values
/// that fall below zero at prediction time are clamped.
struct NaiveBayesModel {
    double alpha = 1.0;
    std::vector<double> shift;
    std::array<double, kLabelCount> log_prior{};  // -inf for labels absent from training
    std::array<std::vector<double>, kLabelCount> log_theta;
    std::size_t dimension = 0;
    std::uint64_t fingerprint = 0;
};

/// Throws InputError like train_svm, and for alpha <= 0.
NaiveBayesModel train_naive_bayes(std::span<const FeatureVector> x, std::span<const TriageLabel> y, double alpha = 1.0);

/// log P(c) + sum_j x_j log theta_cj for every label.
std::array<double, kLabelCount> log_joint(const NaiveBayesModel& model, const FeatureVector& x);

Prediction predict(const NaiveBayesModel& model, const FeatureVector& x);

}  // namespace triage
