// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "triage/label.hpp"

namespace triage {

struct LabeledPost {
    std::string post_id;
    std::string author_rank;
    std::string body;
    std::optional<TriageLabel> label;  // absent for prediction-only input
};

enum class CorpusFormat { Jsonl, Csv };

/// Picks the format from the file extension (".csv" is CSV, anything else JSONL).
CorpusFormat format_for_path(const std::filesystem::path& path);

/// Loads posts in file order. Throws InputError on I/O failure, a malformed
/// record (with its line number) or a duplicated post_id.
std::vector<LabeledPost> load_posts(const std::filesystem::path& path, CorpusFormat format);
std::vector<LabeledPost> parse_posts(std::string_view content, CorpusFormat format);

void save_posts(const std::filesystem::path& path, std::span<const LabeledPost> posts,
                CorpusFormat format);
std::string serialize_posts(std::span<const LabeledPost> posts, CorpusFormat format);

/// Throws InputError naming the first post without a label.
void require_labels(std::span<const LabeledPost> posts);
std::vector<TriageLabel> labels_of(std::span<const LabeledPost> posts);

struct CorpusStats {
    std::array<std::size_t, kLabelCount> counts{};
    std::array<double, kLabelCount> percentages{};
    std::size_t total = 0;

    bool operator==(const CorpusStats&) const = default;
};

CorpusStats corpus_stats(std::span<const LabeledPost> posts);

/// Stratified k-fold assignment: per label, the label's posts (in input
/// order) are shuffled with `seed` and dealt round-robin into folds.
/// Returns one fold index per input position.
std::vector<std::size_t> stratified_folds(std::span<const TriageLabel> labels, std::size_t k,
                                          std::uint64_t seed);

/// Same assignment keyed by post_id.
std::unordered_map<std::string, std::size_t> stratified_folds(std::span<const LabeledPost> posts,
                                                              std::size_t k, std::uint64_t seed);

}  // namespace triage
