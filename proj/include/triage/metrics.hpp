// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "triage/label.hpp"

namespace triage {

/// counts[true][predicted]
struct ConfusionMatrix {
    std::array<std::array<std::size_t, kLabelCount>, kLabelCount> counts{};

    void add(TriageLabel truth, TriageLabel predicted) { ++counts[index_of(truth)][index_of(predicted)]; }
    std::size_t total() const noexcept;

    /// Throws InputError when lengths differ.
    static ConfusionMatrix from(std::span<const TriageLabel> truth, std::span<const TriageLabel> predicted);

    bool operator==(const ConfusionMatrix&) const = default;
};

struct Prf {
    double precision = 0;
    double recall = 0;
    double f1 = 0;
};

/// Precision, recall and F1 from raw counts; every 0/0 is 0.
Prf prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) noexcept;

std::array<Prf, kLabelCount> per_class_prf(const ConfusionMatrix& cm) noexcept;

/// P/R/F1 of the positive side after collapsing labels into two groups.
Prf binary_prf(const ConfusionMatrix& cm, const std::function<bool(TriageLabel)>& positive);

/// F1 of the flagged (non-green) side in the flagged-vs-green collapse.
double flagged_f1_score(const ConfusionMatrix& cm);
/// Mean of the urgent and non-urgent F1 scores.
double urgent_f1_score(const ConfusionMatrix& cm);
/// F1 of crisis in the crisis-vs-rest collapse.
double crisis_f1_score(const ConfusionMatrix& cm);

struct EvalReport {
    ConfusionMatrix confusion;
    std::array<Prf, kLabelCount> per_class{};
    double macro_f1_non_green = 0;  // mean F1 of amber, red and crisis
    double flagged_f1 = 0;
    double urgent_f1 = 0;
    double crisis_f1 = 0;
    double accuracy = 0;
    double macro_f1_all = 0;
    std::size_t count = 0;
};

EvalReport evaluate(const ConfusionMatrix& cm);
/// Throws InputError for empty or mismatched inputs.
EvalReport official_metrics(std::span<const TriageLabel> truth, std::span<const TriageLabel> predicted);

enum class SelectionMetric { MacroF1NonGreen, FlaggedF1, UrgentF1, CrisisF1, Accuracy };

double metric_value(const EvalReport& report, SelectionMetric metric) noexcept;
std::string_view to_string(SelectionMetric metric) noexcept;
SelectionMetric parse_selection_metric(std::string_view name);

}  // namespace triage
