// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "triage/embedding.hpp"
#include "triage/heuristics.hpp"
#include "triage/lexicon.hpp"
#include "triage/sentiment.hpp"

namespace triage {

/// One lexicon of a bundle plus the feature options it contributes.
struct LexiconSpec {
    std::shared_ptr<const Lexicon> lexicon;
    bool weighted = false;                        // also emit per-category weight sums
    std::vector<std::string> negative_categories;  // emit a count over these when non-empty
};

/// Everything a feature pipeline reads besides the posts themselves.
struct Resources {
    std::vector<LexiconSpec> lexicons;
    NegationList negation = NegationList::standard();
    std::optional<EmbeddingTable> embeddings;
    std::shared_ptr<const SentimentScorer> sentiment;
    HeuristicBundle heuristics = HeuristicBundle::standard();

    const LexiconSpec* find_lexicon(const std::string& name) const;

    /// Installs the lexicon-ratio scorer over the "mpqa" lexicon when present.
    void use_default_sentiment();
};

/// Reads a JSON manifest:
///   {"lexicons": [{"name": "mpqa", "path": "mpqa.tsv", "polarity_aware": true,
///                  "polarity_map": {"positive": "negative", "negative": "positive"},
///                  "weighted": false, "negative_categories": []}, ...]}
/// Relative paths resolve against the manifest's directory. Errors name the
/// offending entry.
std::vector<LexiconSpec> load_lexicon_manifest(const std::filesystem::path& manifest);

/// Directory holding the bundled stand-in lexicons and embedding table.
std::filesystem::path bundled_resource_dir();
std::filesystem::path bundled_manifest();
std::filesystem::path bundled_embeddings();

/// Loads a manifest and optional embedding table and installs the default
/// sentiment scorer.
std::shared_ptr<Resources> load_resources(const std::filesystem::path& manifest,
                                          const std::optional<std::filesystem::path>& embeddings);

}  // namespace triage
