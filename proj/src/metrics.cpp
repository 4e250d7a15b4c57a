// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/metrics.hpp"

#include "triage/error.hpp"

namespace triage {

std::size_t ConfusionMatrix::total() const noexcept {
    std::size_t n = 0;
    for (const auto& row : counts)
        for (std::size_t c : row) n += c;
    return n;
}

ConfusionMatrix ConfusionMatrix::from(std::span<const TriageLabel> truth, std::span<const TriageLabel> predicted) {
    if (truth.size() != predicted.size())
        throw InputError("eval", "label sequences differ in length (" + std::to_string(truth.size()) + " vs " +
                                     std::to_string(predicted.size()) + ")");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < truth.size(); ++i) cm.add(truth[i], predicted[i]);
    return cm;
}

Prf prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) noexcept {
    Prf out;
    if (tp + fp > 0) out.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (tp + fn > 0) out.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (out.precision + out.recall > 0) out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
    return out;
}

std::array<Prf, kLabelCount> per_class_prf(const ConfusionMatrix& cm) noexcept {
    std::array<Prf, kLabelCount> out{};
    for (std::size_t c = 0; c < kLabelCount; ++c) {
        std::size_t fp = 0;
        std::size_t fn = 0;
        for (std::size_t o = 0; o < kLabelCount; ++o) {
            if (o == c) continue;
            fp += cm.counts[o][c];
            fn += cm.counts[c][o];
        }
        out[c] = prf_from_counts(cm.counts[c][c], fp, fn);
    }
    return out;
}

Prf binary_prf(const ConfusionMatrix& cm, const std::function<bool(TriageLabel)>& positive) {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    for (std::size_t t = 0; t < kLabelCount; ++t)
        for (std::size_t p = 0; p < kLabelCount; ++p) {
            const bool tpos = positive(label_at(t));
            const bool ppos = positive(label_at(p));
            if (tpos && ppos) tp += cm.counts[t][p];
            else if (!tpos && ppos) fp += cm.counts[t][p];
            else if (tpos && !ppos) fn += cm.counts[t][p];
        }
    return prf_from_counts(tp, fp, fn);
}

double flagged_f1_score(const ConfusionMatrix& cm) {
    return binary_prf(cm, [](TriageLabel l) { return flagged(l); }).f1;
}

double urgent_f1_score(const ConfusionMatrix& cm) {
    const double yes = binary_prf(cm, [](TriageLabel l) { return urgent(l); }).f1;
    const double no = binary_prf(cm, [](TriageLabel l) { return !urgent(l); }).f1;
    return 0.5 * (yes + no);
}

double crisis_f1_score(const ConfusionMatrix& cm) {
    return binary_prf(cm, [](TriageLabel l) { return l == TriageLabel::Crisis; }).f1;
}

EvalReport evaluate(const ConfusionMatrix& cm) {
    EvalReport r;
    r.confusion = cm;
    r.count = cm.total();
    r.per_class = per_class_prf(cm);
    r.macro_f1_non_green = (r.per_class[index_of(TriageLabel::Amber)].f1 + r.per_class[index_of(TriageLabel::Red)].f1 +
                            r.per_class[index_of(TriageLabel::Crisis)].f1) /
                           3.0;
    r.macro_f1_all = 0;
    for (const auto& prf : r.per_class) r.macro_f1_all += prf.f1 / static_cast<double>(kLabelCount);
    r.flagged_f1 = flagged_f1_score(cm);
    r.urgent_f1 = urgent_f1_score(cm);
    r.crisis_f1 = crisis_f1_score(cm);
    std::size_t correct = 0;
    for (std::size_t c = 0; c < kLabelCount; ++c) correct += cm.counts[c][c];
    r.accuracy = r.count == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(r.count);
    return r;
}

EvalReport official_metrics(std::span<const TriageLabel> truth, std::span<const TriageLabel> predicted) {
    if (truth.empty()) throw InputError("eval", "cannot evaluate an empty prediction set");
    return evaluate(ConfusionMatrix::from(truth, predicted));
}

double metric_value(const EvalReport& report, SelectionMetric metric) noexcept {
    switch (metric) {
        case SelectionMetric::MacroF1NonGreen: return report.macro_f1_non_green;
        case SelectionMetric::FlaggedF1: return report.flagged_f1;
        case SelectionMetric::UrgentF1: return report.urgent_f1;
        case SelectionMetric::CrisisF1: return report.crisis_f1;
        case SelectionMetric::Accuracy: return report.accuracy;
    }
    return report.macro_f1_non_green;
}

std::string_view to_string(SelectionMetric metric) noexcept {
    switch (metric) {
        case SelectionMetric::MacroF1NonGreen: return "macro_f1_non_green";
        case SelectionMetric::FlaggedF1: return "flagged_f1";
        case SelectionMetric::UrgentF1: return "urgent_f1";
        case SelectionMetric::CrisisF1: return "crisis_f1";
        case SelectionMetric::Accuracy: return "accuracy";
    }
    return "macro_f1_non_green";
}

SelectionMetric parse_selection_metric(std::string_view name) {
    for (auto m : {SelectionMetric::MacroF1NonGreen, SelectionMetric::FlaggedF1, SelectionMetric::UrgentF1,
                   SelectionMetric::CrisisF1, SelectionMetric::Accuracy})
        if (to_string(m) == name) return m;
    throw InputError("eval", "unknown selection metric '" + std::string(name) + "'");
}

}  // namespace triage
