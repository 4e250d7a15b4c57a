// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "triage/text.hpp"

namespace triage {

/// Tokens that trigger the one-token negation rule.
class NegationList {
public:
    NegationList() = default;
    explicit NegationList(std::unordered_set<std::string> terms) : terms_(std::move(terms)) {}

    /// The 24 standard negation terms (no, nobody, ..., didn't).
    static NegationList standard();
    /// An empty list; matching then never shifts or skips.
    static NegationList none() { return NegationList(); }

    bool contains(std::string_view token) const { return terms_.contains(std::string(token)); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::vector<std::string> sorted_terms() const;

private:
    std::unordered_set<std::string> terms_;
};

struct LexiconMeta {
    std::string name;
    bool polarity_aware = false;
    std::map<std::string, std::string> polarity_map;  // must be an involution
};

/// Term and phrase resource (up to trigrams) mapping each entry to one or
/// more categories with weights.
class Lexicon {
public:
    static constexpr std::size_t kMaxOrder = 3;

    /// Throws InputError if polarity_map is not an involution.
    explicit Lexicon(LexiconMeta meta);

    /// Adds or overwrites (term, category). The term is tokenized and lowercased;
    /// throws InputError when it is empty or longer than three tokens.
    void add(std::string_view term, const std::string& category, double weight = 1.0);

    const std::string& name() const noexcept { return meta_.name; }
    bool polarity_aware() const noexcept { return meta_.polarity_aware; }
    const std::map<std::string, std::string>& polarity_map() const noexcept { return meta_.polarity_map; }

    /// Category credited when `category` is negated, if it can be shifted.
    std::optional<std::string> opposite(const std::string& category) const;

    /// Sorted categories seen in entries or in the polarity map.
    std::vector<std::string> categories() const;

    /// Entry for an n-gram joined by single spaces; nullptr when absent.
    const std::map<std::string, double>* find(const std::string& joined) const;

    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t max_order() const noexcept { return max_order_; }
    bool has_weights() const noexcept { return has_weights_; }

    /// Content hash over metadata and entries, independent of insertion order.
    std::uint64_t digest() const;

private:
    LexiconMeta meta_;
    std::unordered_map<std::string, std::map<std::string, double>> entries_;
    std::map<std::string, bool> categories_;
    std::size_t max_order_ = 0;
    bool has_weights_ = false;
};

/// Parses `term<TAB>category[<TAB>weight]` lines; '#' lines and blank lines are skipped.
Lexicon parse_lexicon(std::string_view content, LexiconMeta meta);
Lexicon load_lexicon(const std::filesystem::path& path, LexiconMeta meta);

struct CategoryCounts {
    std::map<std::string, std::size_t> counts;
    std::map<std::string, double> weighted;

    std::size_t total() const;
    std::size_t count(const std::string& category) const;
    double weight(const std::string& category) const;
};

/// Greedy longest-first matching with the one-token negation rule.
///
/// A match starting at token i is negated when token i-1 is in `negation`.
/// A negated match credits the opposite category when the lexicon is
/// polarity aware and the category is mapped, and nothing otherwise. Tokens
/// consumed by a match are not matched again. Every lexicon category is
/// present in the result, possibly with zero.
CategoryCounts match_counts(std::span<const std::string> tokens, const Lexicon& lexicon,
                            const NegationList& negation);

/// Same matching as match_counts; `weighted` accumulates entry weights.
/// Shifted matches move their weight to the opposite category unchanged.
CategoryCounts weighted_sum(std::span<const std::string> tokens, const Lexicon& lexicon,
                            const NegationList& negation);

}  // namespace triage
