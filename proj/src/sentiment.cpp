// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/sentiment.hpp"

#include <algorithm>

#include "triage/error.hpp"

namespace triage {

LexiconRatioScorer::LexiconRatioScorer(std::shared_ptr<const Lexicon> lexicon, NegationList negation,
                                       std::string positive, std::string negative)
    : lexicon_(std::move(lexicon)),
      negation_(std::move(negation)),
      positive_(std::move(positive)),
      negative_(std::move(negative)) {
    if (!lexicon_) throw InputError("features", "sentiment scorer needs a polarity lexicon");
}

double LexiconRatioScorer::score(std::span<const std::string> tokens) const {
    const CategoryCounts counts = match_counts(tokens, *lexicon_, negation_);
    const auto pos = static_cast<double>(counts.count(positive_));
    const auto neg = static_cast<double>(counts.count(negative_));
    if (pos + neg == 0.0) return 0.0;
    return std::clamp((pos - neg) / (pos + neg), -1.0, 1.0);
}

std::string LexiconRatioScorer::describe() const {
    return "lexicon-ratio:" + lexicon_->name() + ":" + std::to_string(lexicon_->digest()) + ":" +
           std::to_string(negation_.size());
}

double sentiment_score(const LabeledPost& post, const SentimentScorer& scorer) {
    return scorer.score(tokenize(post.body));
}

}  // namespace triage
