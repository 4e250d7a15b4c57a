// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include <algorithm>

#include "triage/error.hpp"
#include "triage/metrics.hpp"
#include "triage/random.hpp"

using namespace triage;

namespace {

using L = TriageLabel;

std::vector<TriageLabel> random_labels(Rng& rng, std::size_t n) {
    std::vector<TriageLabel> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(label_at(uniform_index(rng, kLabelCount)));
    return out;
}

double brute_f1(std::span<const TriageLabel> truth, std::span<const TriageLabel> pred,
                const std::function<bool(TriageLabel)>& positive) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const bool t = positive(truth[i]), p = positive(pred[i]);
        tp += t && p;
        fp += !t && p;
        fn += t && !p;
    }
    const double precision = tp + fp > 0 ? tp / (tp + fp) : 0;
    const double recall = tp + fn > 0 ? tp / (tp + fn) : 0;
    return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0;
}

}  // namespace

TEST_CASE("five-post fixture") {
    const std::vector<L> truth = {L::Crisis, L::Red, L::Amber, L::Green, L::Green};
    const std::vector<L> pred = {L::Crisis, L::Amber, L::Amber, L::Green, L::Green};
    const auto r = official_metrics(truth, pred);
    CHECK(std::abs(r.macro_f1_non_green - 5.0 / 9.0) < 1e-9);
    CHECK(std::abs(r.flagged_f1 - 1.0) < 1e-9);
    CHECK(std::abs(r.urgent_f1 - 16.0 / 21.0) < 1e-9);
    CHECK(std::abs(r.crisis_f1 - 1.0) < 1e-9);
    CHECK(r.accuracy == doctest::Approx(0.8));
    CHECK(r.count == 5);
}

TEST_CASE("per-class values") {
    ConfusionMatrix cm;
    for (int i = 0; i < 3; ++i) cm.add(L::Crisis, L::Crisis);
    cm.add(L::Crisis, L::Red);
    cm.add(L::Red, L::Crisis);
    cm.add(L::Amber, L::Crisis);
    const auto prf = per_class_prf(cm);
    CHECK(prf[3].precision == doctest::Approx(0.6));
    CHECK(prf[3].recall == doctest::Approx(0.75));
    CHECK(prf[3].f1 == doctest::Approx(2 * 0.45 / 1.35));
    CHECK(prf[0].f1 == 0.0);
    CHECK(prf[0].precision == 0.0);
    CHECK(prf[0].recall == 0.0);
}

TEST_CASE("degenerate predictions") {
    const std::vector<L> truth = {L::Crisis, L::Red, L::Amber, L::Green};
    auto r = official_metrics(truth, truth);
    CHECK(r.macro_f1_non_green == 1.0);
    CHECK(r.flagged_f1 == 1.0);
    CHECK(r.urgent_f1 == 1.0);
    CHECK(r.crisis_f1 == 1.0);
    const std::vector<L> green(4, L::Green);
    r = official_metrics(truth, green);
    CHECK(r.macro_f1_non_green == 0.0);
    CHECK(r.flagged_f1 == 0.0);
    CHECK_THROWS_AS(official_metrics(truth, std::span(green).first(3)), InputError);
}

TEST_CASE("metric properties on random label vectors") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + uniform_index(rng, 40);
        auto truth = random_labels(rng, n);
        auto pred = random_labels(rng, n);
        const auto r = official_metrics(truth, pred);
        for (double v : {r.macro_f1_non_green, r.flagged_f1, r.urgent_f1, r.crisis_f1, r.accuracy, r.macro_f1_all}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(r.confusion.total() == n);

        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        seeded_shuffle(std::span<std::size_t>(order), rng);
        std::vector<L> t2, p2;
        for (auto i : order) {
            t2.push_back(truth[i]);
            p2.push_back(pred[i]);
        }
        const auto shuffled = official_metrics(t2, p2);
        CHECK(shuffled.macro_f1_non_green == r.macro_f1_non_green);
        CHECK(shuffled.urgent_f1 == r.urgent_f1);

        CHECK(r.flagged_f1 == doctest::Approx(brute_f1(truth, pred, flagged)));
        const double urgent_pos = brute_f1(truth, pred, urgent);
        const double urgent_neg = brute_f1(truth, pred, [](L l) { return !urgent(l); });
        CHECK(r.urgent_f1 == doctest::Approx((urgent_pos + urgent_neg) / 2));
        CHECK(r.crisis_f1 == doctest::Approx(brute_f1(truth, pred, [](L l) { return l == L::Crisis; })));

        truth.push_back(L::Green);
        pred.push_back(L::Green);
        CHECK(official_metrics(truth, pred).macro_f1_non_green == doctest::Approx(r.macro_f1_non_green));
    }
}

TEST_CASE("selection metric names") {
    for (auto m : {SelectionMetric::MacroF1NonGreen, SelectionMetric::FlaggedF1, SelectionMetric::UrgentF1,
                   SelectionMetric::CrisisF1, SelectionMetric::Accuracy})
        CHECK(parse_selection_metric(to_string(m)) == m);
    CHECK_THROWS_AS(parse_selection_metric("auc"), InputError);
}
