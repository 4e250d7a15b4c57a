// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "triage/feature_vector.hpp"
#include "triage/label.hpp"

namespace triage {

enum class Penalty { L1, L2 };
enum class ClassWeight { Uniform, Balanced };

std::string_view to_string(Penalty p) noexcept;
std::string_view to_string(ClassWeight w) noexcept;
Penalty parse_penalty(std::string_view name);
ClassWeight parse_class_weight(std::string_view name);

struct TrainConfig {
    double C = 1.0;
    Penalty penalty = Penalty::L1;
    std::size_t max_iterations = 2000;
    std::uint64_t seed = 0;
    ClassWeight class_weight = ClassWeight::Uniform;
    // Solver schedule: the hinge is Huber-smoothed with width `initial_smoothing`;
    // whenever a pass improves the smoothed objective by less than `tolerance`
    // (relative), the width is multiplied by `smoothing_decay`. Training stops
    // when that happens at `min_smoothing` or after max_iterations passes.
    double initial_smoothing = 1.0;
    double smoothing_decay = 0.5;
    double min_smoothing = 1e-6;
    double tolerance = 1e-6;
    /// Throws InputError unless C > 0, max_iterations >= 1 and the step schedule is sane.
    void validate() const;
    bool operator==(const TrainConfig&) const = default;
};

/// Decision scores and the argmax label.
struct Prediction {
    TriageLabel label = TriageLabel::Green;
    std::array<double, kLabelCount> scores{};
};

/// Argmax; ties go to the more severe label.
TriageLabel argmax_label(const std::array<double, kLabelCount>& scores) noexcept;

/// One binary problem: labels are +1/-1, per-example loss weights c_i.
struct BinaryProblem {
    std::span<const FeatureVector> x;
    std::span<const double> sign;
    std::span<const double> weight;
    std::size_t dimension = 0;
};

/// (1/n) sum_i c_i max(0, 1 - s_i (w.x_i + b)) + R(w) / (C n),
/// with R = ||w||_1 for L1 and 0.5 ||w||^2 for L2.
double svm_objective(const BinaryProblem& problem, std::span<const double> w, double b, double C, Penalty penalty);

/// A subgradient of svm_objective: hinge terms with margin exactly 1
/// contribute nothing, and sign(0) = 0 for L1.
void svm_subgradient(const BinaryProblem& problem, std::span<const double> w, double b, double C, Penalty penalty,
                     std::span<double> grad_w, double& grad_b);

struct BinarySolution {
    std::vector<double> w;
    double b = 0;
    double objective = 0;
    std::size_t iterations = 0;
};

/// Proximal coordinate descent (Newton step plus backtracking per
/// coordinate, coordinates in seeded random order) on a Huber-smoothed
/// hinge whose width shrinks each pass. Returns the iterate with the lowest
/// exact svm_objective.
BinarySolution train_binary_svm(const BinaryProblem& problem, const TrainConfig& cfg);

/// One-vs-rest linear SVM.
struct LinearSvmModel {
    std::array<std::vector<double>, kLabelCount> weights;
    std::array<double, kLabelCount> bias{};
    std::size_t dimension = 0;
    std::uint64_t fingerprint = 0;
    TrainConfig config;
    // Training diagnostics; not part of the decision function.
    std::array<std::size_t, kLabelCount> iterations{};
    std::array<double, kLabelCount> objective{};
};

/// Throws InputError on empty input, length or dimension mismatch, mixed
/// fingerprints, non-finite features or fewer than two distinct labels.
LinearSvmModel train_svm(std::span<const FeatureVector> x, std::span<const TriageLabel> y, const TrainConfig& cfg);

/// Throws FingerprintMismatch when x came from another pipeline and
/// InputError on a dimension mismatch.
Prediction predict(const LinearSvmModel& model, const FeatureVector& x);

/// Shared input checks for every trainer.
void validate_training_set(std::span<const FeatureVector> x, std::span<const TriageLabel> y);
void check_compatible(const FeatureVector& x, std::size_t dimension, std::uint64_t fingerprint);

}  // namespace triage
