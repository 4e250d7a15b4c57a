// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triage/text.hpp"

namespace triage {

/// N-gram TF-IDF vocabulary with smoothed idf:
///   idf(t) = ln((1 + N) / (1 + df(t))) + 1
/// The vocabulary keeps the `max_features` n-grams with the highest raw
/// corpus frequency (ties broken lexicographically). Columns follow the
/// lexicographic order of the kept n-grams.
class TfidfModel {
public:
    TfidfModel() = default;
    TfidfModel(std::vector<std::string> terms, std::vector<double> idf, std::size_t min_n, std::size_t max_n,
               std::size_t max_features);

    /// Throws InputError for an empty corpus or max_features < 1.
    static TfidfModel fit(std::span<const TokenList> documents, std::size_t max_features,
                          std::size_t min_n = 1, std::size_t max_n = 2);

    /// Raw tf times idf, L2-normalized; unknown n-grams are ignored.
    std::vector<std::pair<std::uint32_t, double>> transform(std::span<const std::string> tokens) const;

    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<std::string>& terms() const noexcept { return terms_; }
    const std::vector<double>& idf() const noexcept { return idf_; }
    std::size_t min_n() const noexcept { return min_n_; }
    std::size_t max_n() const noexcept { return max_n_; }
    std::size_t max_features() const noexcept { return max_features_; }

    /// Column of an n-gram (space-joined), or -1.
    long column(const std::string& term) const;
    double idf_of(const std::string& term) const;

private:
    std::vector<std::string> terms_;
    std::vector<double> idf_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::size_t min_n_ = 1;
    std::size_t max_n_ = 2;
    std::size_t max_features_ = 0;
};

}  // namespace triage
