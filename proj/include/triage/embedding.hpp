// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "triage/corpus.hpp"

namespace triage {

/// Word-vector table in the textual "count dim" + "word v1 ... vd" format.
class EmbeddingTable {
public:
    explicit EmbeddingTable(std::size_t dimension = 0) : dimension_(dimension) {}

    /// Throws InputError on dimension mismatch or non-finite values. Words are
    /// lowercased; the first occurrence of a word wins.
    void add(std::string_view word, std::vector<double> vector);

    const std::vector<double>* find(const std::string& word) const;
    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    std::uint64_t digest() const;

    static EmbeddingTable parse(std::string_view content);
    static EmbeddingTable load(const std::filesystem::path& path);

private:
    std::size_t dimension_;
    std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// Mean vector over the in-table tokens; zero vector when none are known.
std::vector<double> mean_embedding(std::span<const std::string> tokens, const EmbeddingTable& table);

struct PostEmbedding {
    std::vector<double> post;
    std::vector<double> last_sentence;
};

PostEmbedding embed_post(const LabeledPost& post, const EmbeddingTable& table);

}  // namespace triage
