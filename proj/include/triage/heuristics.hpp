// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triage/corpus.hpp"
#include "triage/patterns.hpp"
#include "triage/sentiment.hpp"
#include "triage/text.hpp"

namespace triage {

/// Keyword resources for the crisis-post heuristics.
struct HeuristicBundle {
    PhraseMatcher hopelessness;
    PhraseMatcher coping;
    PhraseMatcher temporal;
    PhraseMatcher advice;
    /// Optional external misspelling counter; adds a feature when set.
    std::function<double(const TokenList&)> misspelling_counter;

    static HeuristicBundle standard();
};

struct CrisisHeuristics {
    double hopelessness = 0;  // keyword count
    double coping = 0;        // keyword count
    double is_short = 0;      // fewer than 50 words, or at most two sentences
    double is_long = 0;       // 50 words or more
    double neg_pos_neg = 0;   // sentence sentiment signs contain -, +, - as a subsequence
    double service_dissatisfaction = 0;  // mentions an advisor or helpline and sentiment < 0
    double temporal = 0;      // today / yesterday / tomorrow count
    double advice_seeking = 0;
    std::optional<double> misspellings;

    static std::vector<std::string> names(bool with_misspellings);
    std::vector<double> values() const;
};

CrisisHeuristics crisis_heuristics(const LabeledPost& post, const HeuristicBundle& bundle,
                                   const SentimentScorer& scorer);

}  // namespace triage
