// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <memory>
#include <span>
#include <string>

#include "triage/corpus.hpp"
#include "triage/lexicon.hpp"

namespace triage {

/// Scores token sequences in [-1, 1]; negative means negative sentiment.
class SentimentScorer {
public:
    virtual ~SentimentScorer() = default;
    virtual double score(std::span<const std::string> tokens) const = 0;
    /// Identifies the scorer in pipeline fingerprints.
    virtual std::string describe() const = 0;
};

/// (pos - neg) / (pos + neg) over negation-aware lexicon counts, 0 when
/// neither category matches.
class LexiconRatioScorer final : public SentimentScorer {
public:
    LexiconRatioScorer(std::shared_ptr<const Lexicon> lexicon, NegationList negation,
                       std::string positive = "positive", std::string negative = "negative");

    double score(std::span<const std::string> tokens) const override;
    std::string describe() const override;

private:
    std::shared_ptr<const Lexicon> lexicon_;
    NegationList negation_;
    std::string positive_;
    std::string negative_;
};

double sentiment_score(const LabeledPost& post, const SentimentScorer& scorer);

}  // namespace triage
