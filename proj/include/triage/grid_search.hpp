// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "triage/knn.hpp"
#include "triage/metrics.hpp"
#include "triage/naive_bayes.hpp"
#include "triage/svm.hpp"

namespace triage {

enum class ClassifierKind { Svm, NaiveBayes, Knn };

std::string_view to_string(ClassifierKind kind) noexcept;
/// "svm", "nb" or "knn".
ClassifierKind parse_classifier_kind(std::string_view name);

/// A classifier family plus its hyperparameters.
struct ClassifierConfig {
    ClassifierKind kind = ClassifierKind::Svm;
    TrainConfig svm;
    double alpha = 1.0;  // naive Bayes smoothing
    std::size_t k = 5;   // neighbours

    bool operator==(const ClassifierConfig&) const = default;
    /// Compact description of the parameters that apply to `kind`.
    std::string describe() const;
};

using Classifier = std::variant<LinearSvmModel, NaiveBayesModel, KnnModel>;

Classifier train_classifier(std::span<const FeatureVector> x, std::span<const TriageLabel> y,
                            const ClassifierConfig& config);
Prediction predict(const Classifier& model, const FeatureVector& x);
std::vector<TriageLabel> predict_labels(const Classifier& model, std::span<const FeatureVector> x);

/// Values to try per hyperparameter. Empty lists keep the base value.
struct ParamGrid {
    std::vector<double> C;
    std::vector<Penalty> penalty;
    std::vector<ClassWeight> class_weight;
    std::vector<std::size_t> max_iterations;
    std::vector<std::size_t> k;
    std::vector<double> alpha;

    bool empty() const noexcept;
    std::size_t cell_count() const noexcept;

    /// Semicolon-separated `key=v1,v2,...` terms; integer keys also accept
    /// `lo..hi`. Example: "C=0.1,1,10;penalty=l1,l2" or "k=1..25".
    static ParamGrid parse(std::string_view text);
    std::string to_text() const;

    /// C over {0.01, 0.1, 1, 10, 100}.
    static ParamGrid default_svm();
    /// k over 1..25.
    static ParamGrid default_knn();
};

struct GridCell {
    ClassifierConfig config;
    std::vector<double> fold_scores;
    double mean_score = 0;
};

struct GridResult {
    ClassifierConfig best;
    double best_score = 0;
    std::vector<GridCell> cells;  // in enumeration order
    SelectionMetric metric = SelectionMetric::MacroF1NonGreen;
};

/// Exhaustive grid search with stratified k-fold cross validation.
/// The best cell has the highest mean fold score; ties go to smaller C,
/// then smaller k, then enumeration order. Throws InputError for an empty
/// grid and propagates fold and training errors.
GridResult grid_search(std::span<const FeatureVector> x, std::span<const TriageLabel> y, const ClassifierConfig& base,
                       const ParamGrid& grid, std::size_t k_folds = 5, std::uint64_t seed = 0,
                       SelectionMetric metric = SelectionMetric::MacroF1NonGreen);

}  // namespace triage
