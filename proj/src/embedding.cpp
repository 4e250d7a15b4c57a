// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "triage/error.hpp"
#include "triage/hash.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_double(std::string_view text, double& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

void EmbeddingTable::add(std::string_view word, std::vector<double> vector) {
    if (dimension_ == 0) dimension_ = vector.size();
    if (vector.size() != dimension_ || dimension_ == 0)
        throw InputError("features", "embedding for '" + std::string(word) + "' has dimension " +
                                         std::to_string(vector.size()) + ", expected " + std::to_string(dimension_));
    if (!std::all_of(vector.begin(), vector.end(), [](double v) { return std::isfinite(v); }))
        throw InputError("features", "embedding for '" + std::string(word) + "' has non-finite entries");
    vectors_.emplace(normalize_case(word), std::move(vector));
}

const std::vector<double>* EmbeddingTable::find(const std::string& word) const {
    auto it = vectors_.find(word);
    return it == vectors_.end() ? nullptr : &it->second;
}

std::uint64_t EmbeddingTable::digest() const {
    std::vector<const std::string*> words;
    words.reserve(vectors_.size());
    for (const auto& [word, _] : vectors_) words.push_back(&word);
    std::sort(words.begin(), words.end(), [](auto* a, auto* b) { return *a < *b; });
    Fnv1a hash;
    hash.update(static_cast<std::uint64_t>(dimension_));
    for (const std::string* word : words) {
        hash.update(*word);
        for (double v : vectors_.at(*word)) hash.update(v);
    }
    return hash.digest();
}

EmbeddingTable EmbeddingTable::parse(std::string_view content) {
    EmbeddingTable table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t end = content.find('\n', pos);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (line_no == 1 && fields.size() == 2) {
            double count = 0;
            double dim = 0;
            if (parse_double(fields[0], count) && parse_double(fields[1], dim)) {
                table.dimension_ = static_cast<std::size_t>(dim);
                continue;
            }
        }
        if (fields.size() < 2)
            throw InputError("features", "embedding line " + std::to_string(line_no) + " has no vector");
        std::vector<double> vector;
        vector.reserve(fields.size() - 1);
        for (std::size_t f = 1; f < fields.size(); ++f) {
            double value = 0;
            if (!parse_double(fields[f], value))
                throw InputError("features", "embedding line " + std::to_string(line_no) + ": bad number '" +
                                                 std::string(fields[f]) + "'");
            vector.push_back(value);
        }
        try {
            table.add(fields[0], std::move(vector));
        } catch (const InputError& e) {
            throw InputError("features", "embedding line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return table;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("features", "cannot open embedding table '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::vector<double> mean_embedding(std::span<const std::string> tokens, const EmbeddingTable& table) {
    std::vector<double> mean(table.dimension(), 0.0);
    std::size_t known = 0;
    for (const auto& token : tokens) {
        if (const auto* v = table.find(token)) {
            for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += (*v)[d];
            ++known;
        }
    }
    if (known > 0)
        for (double& x : mean) x /= static_cast<double>(known);
    return mean;
}

PostEmbedding embed_post(const LabeledPost& post, const EmbeddingTable& table) {
    PostEmbedding out;
    out.post = mean_embedding(tokenize(post.body), table);
    auto sentences = split_sentences(post.body);
    out.last_sentence = sentences.empty() ? std::vector<double>(table.dimension(), 0.0)
                                          : mean_embedding(sentences.back().tokens, table);
    return out;
}

}  // namespace triage
