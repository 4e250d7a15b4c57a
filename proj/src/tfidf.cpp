// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "triage/error.hpp"

namespace triage {

TfidfModel::TfidfModel(std::vector<std::string> terms, std::vector<double> idf, std::size_t min_n,
                       std::size_t max_n, std::size_t max_features)
    : terms_(std::move(terms)), idf_(std::move(idf)), min_n_(min_n), max_n_(max_n), max_features_(max_features) {
    if (terms_.size() != idf_.size()) throw InputError("features", "TF-IDF vocabulary and idf sizes differ");
    if (min_n_ == 0 || max_n_ < min_n_) throw InputError("features", "invalid TF-IDF n-gram range");
    for (std::size_t c = 0; c < terms_.size(); ++c) {
        if (!(idf_[c] > 0.0) || !std::isfinite(idf_[c]))
            throw InputError("features", "TF-IDF idf values must be positive");
        if (!index_.emplace(terms_[c], static_cast<std::uint32_t>(c)).second)
            throw InputError("features", "duplicate TF-IDF term '" + terms_[c] + "'");
    }
}

TfidfModel TfidfModel::fit(std::span<const TokenList> documents, std::size_t max_features, std::size_t min_n,
                           std::size_t max_n) {
    if (documents.empty()) throw InputError("features", "cannot fit TF-IDF on an empty corpus");
    if (max_features < 1) throw InputError("features", "TF-IDF max_features must be at least 1");

    struct Stats {
        std::size_t tf = 0;
        std::size_t df = 0;
        std::size_t last_doc = static_cast<std::size_t>(-1);
    };
    std::unordered_map<std::string, Stats> stats;
    for (std::size_t d = 0; d < documents.size(); ++d) {
        for (auto& gram : joined_ngrams(documents[d], min_n, max_n)) {
            Stats& s = stats[std::move(gram)];
            ++s.tf;
            if (s.last_doc != d) {
                ++s.df;
                s.last_doc = d;
            }
        }
    }

    std::vector<std::pair<const std::string*, const Stats*>> ranked;
    ranked.reserve(stats.size());
    for (const auto& [term, s] : stats) ranked.emplace_back(&term, &s);
    const std::size_t keep = std::min(max_features, ranked.size());
    auto by_frequency = [](const auto& a, const auto& b) {
        if (a.second->tf != b.second->tf) return a.second->tf > b.second->tf;
        return *a.first < *b.first;
    };
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end(), by_frequency);
    ranked.resize(keep);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return *a.first < *b.first; });

    const double n_docs = static_cast<double>(documents.size());
    std::vector<std::string> terms;
    std::vector<double> idf;
    terms.reserve(keep);
    idf.reserve(keep);
    for (const auto& [term, s] : ranked) {
        terms.push_back(*term);
        idf.push_back(std::log((1.0 + n_docs) / (1.0 + static_cast<double>(s->df))) + 1.0);
    }
    return TfidfModel(std::move(terms), std::move(idf), min_n, max_n, max_features);
}

std::vector<std::pair<std::uint32_t, double>> TfidfModel::transform(std::span<const std::string> tokens) const {
    std::map<std::uint32_t, double> tf;
    for (const auto& gram : joined_ngrams(tokens, min_n_, max_n_)) {
        auto it = index_.find(gram);
        if (it != index_.end()) tf[it->second] += 1.0;
    }
    std::vector<std::pair<std::uint32_t, double>> out;
    out.reserve(tf.size());
    double norm = 0.0;
    for (const auto& [col, count] : tf) {
        const double value = count * idf_[col];
        out.emplace_back(col, value);
        norm += value * value;
    }
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (auto& entry : out) entry.second /= norm;
    }
    return out;
}

long TfidfModel::column(const std::string& term) const {
    auto it = index_.find(term);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

double TfidfModel::idf_of(const std::string& term) const {
    const long col = column(term);
    return col < 0 ? 0.0 : idf_[static_cast<std::size_t>(col)];
}

}  // namespace triage
