// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include <cmath>

#include "triage/error.hpp"
#include "triage/random.hpp"
#include "triage/knn.hpp"
#include "triage/naive_bayes.hpp"

using namespace triage;

namespace {

FeatureVector dense(std::vector<double> v) { return FeatureVector::from_dense(std::move(v)); }

}  // namespace

TEST_CASE("naive bayes log joint matches the hand table") {
    const std::vector<std::pair<std::vector<double>, TriageLabel>> posts = {
        {{3, 0, 1}, TriageLabel::Green},  {{2, 1, 0}, TriageLabel::Green},  {{4, 0, 0}, TriageLabel::Green},
        {{1, 2, 0}, TriageLabel::Amber},  {{0, 3, 1}, TriageLabel::Amber},  {{1, 1, 1}, TriageLabel::Amber},
        {{0, 1, 2}, TriageLabel::Red},    {{0, 2, 3}, TriageLabel::Red},    {{1, 0, 2}, TriageLabel::Red},
        {{0, 0, 4}, TriageLabel::Crisis}, {{0, 1, 5}, TriageLabel::Crisis}, {{0, 0, 3}, TriageLabel::Crisis}};
    std::vector<FeatureVector> x;
    std::vector<TriageLabel> y;
    for (const auto& [v, l] : posts) {
        x.push_back(dense(v));
        y.push_back(l);
    }
    const auto model = train_naive_bayes(x, y, 1.0);
    const std::vector<std::pair<std::vector<double>, std::array<double, 4>>> table = {
        {{1, 0, 0}, {-1.722766597741104, -2.852631429913318, -3.332204510175204, -4.158883083359671}},
        {{0, 1, 1}, {-5.278114659230518, -3.471670638319541, -3.198673117550682, -3.673375267577971}},
        {{2, 2, 2}, {-9.842879430583571, -8.489721053106045, -8.902872172092099, -11.505633618515613}}};
    for (const auto& [query, expected] : table) {
        const auto got = log_joint(model, dense(query));
        for (std::size_t l = 0; l < kLabelCount; ++l) CHECK(std::abs(got[l] - expected[l]) < 1e-9);
    }
    CHECK(predict(model, dense({1, 0, 0})).label == TriageLabel::Green);
    CHECK(predict(model, dense({0, 1, 1})).label == TriageLabel::Red);
}

TEST_CASE("naive bayes with disjoint support") {
    const std::vector<FeatureVector> x = {dense({1, 0}), dense({2, 0}), dense({0, 1}), dense({0, 3})};
    const std::vector<TriageLabel> y = {TriageLabel::Green, TriageLabel::Green, TriageLabel::Red, TriageLabel::Red};
    const auto model = train_naive_bayes(x, y);
    CHECK(predict(model, dense({5, 0})).label == TriageLabel::Green);
    CHECK(predict(model, dense({0, 5})).label == TriageLabel::Red);
}

TEST_CASE("naive bayes follows the prior on uniform features") {
    std::vector<FeatureVector> x;
    std::vector<TriageLabel> y;
    for (int i = 0; i < 10; ++i) {
        x.push_back(dense({1, 1}));
        y.push_back(i == 0 ? TriageLabel::Crisis : TriageLabel::Amber);
    }
    const auto model = train_naive_bayes(x, y);
    CHECK(predict(model, dense({1, 1})).label == TriageLabel::Amber);
    CHECK(std::isinf(log_joint(model, dense({1, 1}))[0]));
}

TEST_CASE("naive bayes shifts negative features") {
    const std::vector<FeatureVector> x = {dense({-1, 2}), dense({-2, 0}), dense({1, -1})};
    const std::vector<TriageLabel> y = {TriageLabel::Green, TriageLabel::Green, TriageLabel::Amber};
    const auto model = train_naive_bayes(x, y);
    CHECK(model.shift[0] == 2.0);
    CHECK(model.shift[1] == 1.0);
    for (double v : log_joint(model, dense({-5, -5}))) CHECK_FALSE(std::isnan(v));
    CHECK_THROWS_AS(train_naive_bayes(x, y, 0.0), InputError);
}

TEST_CASE("knn examples") {
    const std::vector<FeatureVector> x = {dense({0, 0}), dense({0.1, 0}), dense({5, 5}), dense({0.2, 0})};
    const std::vector<TriageLabel> y = {TriageLabel::Green, TriageLabel::Green, TriageLabel::Crisis, TriageLabel::Red};
    CHECK(predict(train_knn(x, y, 1), dense({5, 5})).label == TriageLabel::Crisis);
    CHECK(predict(train_knn(x, y, 3), dense({0, 0})).label == TriageLabel::Green);
    const std::vector<FeatureVector> pair = {dense({-1}), dense({1})};
    const std::vector<TriageLabel> gr = {TriageLabel::Green, TriageLabel::Red};
    CHECK(predict(train_knn(pair, gr, 2), dense({0})).label == TriageLabel::Red);
    const auto pred = predict(train_knn(x, y, 3), dense({0, 0}));
    CHECK(pred.scores[0] == 2.0);
    CHECK(pred.scores[2] == 1.0);
}

TEST_CASE("knn with k equal to the corpus size predicts the majority") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FeatureVector> x;
        std::vector<TriageLabel> y;
        std::array<double, kLabelCount> counts{};
        const std::size_t n = 2 + uniform_index(rng, 15);
        for (std::size_t i = 0; i < n; ++i) {
            x.push_back(dense({uniform_unit(rng), uniform_unit(rng)}));
            y.push_back(label_at(uniform_index(rng, kLabelCount)));
            counts[index_of(y.back())] += 1;
        }
        const auto model = train_knn(x, y, n);
        for (int q = 0; q < 5; ++q)
            CHECK(predict(model, dense({uniform_unit(rng) * 3, uniform_unit(rng)})).label == argmax_label(counts));
    }
}

TEST_CASE("knn argument checks") {
    const std::vector<FeatureVector> x = {dense({0}), dense({1})};
    const std::vector<TriageLabel> y = {TriageLabel::Green, TriageLabel::Red};
    CHECK_THROWS_AS(train_knn(x, y, 0), InputError);
    CHECK_THROWS_AS(train_knn(x, y, 3), InputError);
}
