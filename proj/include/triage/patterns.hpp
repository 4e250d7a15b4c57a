// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triage {

/// Counts non-overlapping phrase occurrences in raw text, leftmost then
/// longest first. Matching is case-insensitive and a match must not start
/// or end inside a word (the neighbouring characters must not be letters
/// or digits), so "cut" does not fire inside "cute".
class PhraseMatcher {
public:
    PhraseMatcher() = default;
    explicit PhraseMatcher(std::span<const std::string> phrases);

    std::size_t count(std::string_view text) const;

    /// Every (begin, length) match in scan order.
    std::vector<std::pair<std::size_t, std::size_t>> matches(std::string_view text) const;

    const std::vector<std::string>& phrases() const noexcept { return phrases_; }

private:
    struct Node {
        std::array<std::int32_t, 256> next;
        bool terminal = false;
        Node() { next.fill(-1); }
    };
    std::vector<Node> nodes_{Node{}};
    std::vector<std::string> phrases_;
};

enum class PatternSet { Helplines, SelfHarm, Advisors };

inline constexpr std::array<PatternSet, 3> kAllPatternSets = {PatternSet::Helplines, PatternSet::SelfHarm,
                                                              PatternSet::Advisors};

std::string_view to_string(PatternSet set) noexcept;
/// Accepts "helplines", "self_harm" and "advisors"; throws InputError otherwise.
PatternSet parse_pattern_set(std::string_view name);

/// The built-in phrase list for a set, lowercased.
const std::vector<std::string>& pattern_phrases(PatternSet set);
const PhraseMatcher& pattern_matcher(PatternSet set);

std::size_t pattern_counts(std::string_view text, PatternSet set);
std::size_t pattern_counts(std::string_view text, std::string_view set_name);

}  // namespace triage
