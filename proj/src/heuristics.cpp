// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/heuristics.hpp"

#include <algorithm>

#include "triage/surface.hpp"

namespace triage {

HeuristicBundle HeuristicBundle::standard() {
    const std::vector<std::string> hopelessness = {
        "feel tired",   "fed up",         "better dead",    "give up life", "the end is near",
        "sick of life", "sick of existence", "holding on", "hopeless times", "hope",
        "trying help",  "trying talking", "hard to try",    "hard to do"};
    const std::vector<std::string> coping = {"getting there", "i faced the world", "getting up and working"};
    const std::vector<std::string> temporal = {"today", "yesterday", "tomorrow"};
    const std::vector<std::string> advice = {"any tips", "has anyone", "what should"};
    return HeuristicBundle{PhraseMatcher(hopelessness), PhraseMatcher(coping), PhraseMatcher(temporal),
                           PhraseMatcher(advice), {}};
}

std::vector<std::string> CrisisHeuristics::names(bool with_misspellings) {
    std::vector<std::string> out = {"heur.hopelessness", "heur.coping",   "heur.is_short",
                                    "heur.is_long",      "heur.neg_pos_neg", "heur.service_dissatisfaction",
                                    "heur.temporal",     "heur.advice_seeking"};
    if (with_misspellings) out.emplace_back("heur.misspellings");
    return out;
}

std::vector<double> CrisisHeuristics::values() const {
    std::vector<double> out = {hopelessness, coping,  is_short, is_long, neg_pos_neg, service_dissatisfaction,
                               temporal,     advice_seeking};
    if (misspellings) out.push_back(*misspellings);
    return out;
}

namespace {

bool has_neg_pos_neg(const std::vector<int>& signs) {
    int stage = 0;  // 0: want -, 1: want +, 2: want -
    for (int s : signs) {
        if (stage == 0 && s < 0) stage = 1;
        else if (stage == 1 && s > 0) stage = 2;
        else if (stage == 2 && s < 0) return true;
    }
    return false;
}

bool is_second_person(const std::string& token) {
    return token == "you" || token == "your" || token == "yours" || token == "yourself" || token == "yourselves";
}

}  // namespace

CrisisHeuristics crisis_heuristics(const LabeledPost& post, const HeuristicBundle& bundle,
                                   const SentimentScorer& scorer) {
    CrisisHeuristics h;
    const TokenList tokens = tokenize(post.body);
    const auto sentences = split_sentences(post.body);
    const std::size_t words = word_count(tokens);

    h.hopelessness = static_cast<double>(bundle.hopelessness.count(post.body));
    h.coping = static_cast<double>(bundle.coping.count(post.body));
    h.is_short = (words < 50 || sentences.size() <= 2) ? 1.0 : 0.0;
    h.is_long = words >= 50 ? 1.0 : 0.0;

    std::vector<int> signs;
    for (const auto& sentence : sentences) {
        const double s = scorer.score(sentence.tokens);
        if (s > 0) signs.push_back(1);
        else if (s < 0) signs.push_back(-1);
    }
    h.neg_pos_neg = has_neg_pos_neg(signs) ? 1.0 : 0.0;

    const std::size_t service_mentions =
        pattern_counts(post.body, PatternSet::Advisors) + pattern_counts(post.body, PatternSet::Helplines);
    h.service_dissatisfaction = (service_mentions >= 1 && scorer.score(tokens) < 0) ? 1.0 : 0.0;

    h.temporal = static_cast<double>(bundle.temporal.count(post.body));

    if (post.body.find('?') != std::string::npos) {
        bool advice = std::any_of(tokens.begin(), tokens.end(), is_second_person) || bundle.advice.count(post.body) > 0;
        for (const auto& sentence : sentences) {
            if (advice) break;
            advice = !sentence.tokens.empty() && sentence.tokens.front() == "any" && sentence.tokens.back() == "?";
        }
        h.advice_seeking = advice ? 1.0 : 0.0;
    }

    if (bundle.misspelling_counter) h.misspellings = bundle.misspelling_counter(tokens);
    return h;
}

}  // namespace triage
