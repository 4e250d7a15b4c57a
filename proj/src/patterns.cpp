// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/patterns.hpp"

#include "triage/error.hpp"
#include "triage/text.hpp"

namespace triage {
namespace {

bool is_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

}  // namespace

PhraseMatcher::PhraseMatcher(std::span<const std::string> phrases) {
    for (const auto& raw : phrases) {
        std::string phrase = normalize_case(raw);
        if (phrase.empty()) continue;
        std::size_t node = 0;
        for (char c : phrase) {
            auto& slot = nodes_[node].next[static_cast<unsigned char>(c)];
            if (slot < 0) {
                slot = static_cast<std::int32_t>(nodes_.size());
                nodes_.emplace_back();
            }
            node = static_cast<std::size_t>(nodes_[node].next[static_cast<unsigned char>(c)]);
        }
        nodes_[node].terminal = true;
        phrases_.push_back(std::move(phrase));
    }
}

std::vector<std::pair<std::size_t, std::size_t>> PhraseMatcher::matches(std::string_view raw) const {
    const std::string text = normalize_case(raw);
    std::vector<std::pair<std::size_t, std::size_t>> found;
    std::size_t i = 0;
    while (i < text.size()) {
        if (i > 0 && is_alnum(text[i - 1]) && is_alnum(text[i])) {
            ++i;
            continue;
        }
        std::size_t best = 0;
        std::size_t node = 0;
        for (std::size_t j = i; j < text.size(); ++j) {
            const std::int32_t next = nodes_[node].next[static_cast<unsigned char>(text[j])];
            if (next < 0) break;
            node = static_cast<std::size_t>(next);
            if (nodes_[node].terminal) {
                const bool boundary = j + 1 == text.size() || !is_alnum(text[j]) || !is_alnum(text[j + 1]);
                if (boundary) best = j + 1 - i;
            }
        }
        if (best > 0) {
            found.emplace_back(i, best);
            i += best;
        } else {
            ++i;
        }
    }
    return found;
}

std::size_t PhraseMatcher::count(std::string_view text) const { return matches(text).size(); }

std::string_view to_string(PatternSet set) noexcept {
    switch (set) {
        case PatternSet::Helplines: return "helplines";
        case PatternSet::SelfHarm: return "self_harm";
        case PatternSet::Advisors: return "advisors";
    }
    return "helplines";
}

PatternSet parse_pattern_set(std::string_view name) {
    for (PatternSet set : kAllPatternSets)
        if (to_string(set) == name) return set;
    throw InputError("features", "unknown pattern set '" + std::string(name) + "'");
}

const std::vector<std::string>& pattern_phrases(PatternSet set) {
    static const std::vector<std::string> helplines = {
        "mental health", "australia", "general practitioner", "doctor", "psychologist",
        "counsellor", "gp", "emergency", "000", "lifeline", "131114", "13 11 14",
        "kids help line", "1800 55 1800", "1800551800", "salvation army care line",
        "1300 36 36 22", "1300363622", "e-couch", "moodgym", "bluepages",
        "black dog institute", "reachout", "beyondblue", "www.moodgym.anu.edu.au",
        "www.ecouch.anu.edu.au", "www.bluepages.anu.edu.au", "www.researchout.org.au",
        "www.blackdoginstitute.org.au"};
    static const std::vector<std::string> self_harm = {
        "suicide", "kill myself", "kill my self", "cut myself", "cut my self", "hurt myself",
        "hurt my self", "harm myself", "harm my self", "i want to die", "don't want to live",
        "end my life", "kill", "hurt", "cut", "want to die", "i don't want to live"};
    // "manager" appears twice in the published list; the duplicate is harmless.
    static const std::vector<std::string> advisors = {
        "supervisor", "supervisors", "mentor", "manager", "tutor", "case-manager", "managers",
        "manager", "psych", "psychiatrist", "gp", "gps", "counsellor", "counselor"};
    switch (set) {
        case PatternSet::Helplines: return helplines;
        case PatternSet::SelfHarm: return self_harm;
        case PatternSet::Advisors: return advisors;
    }
    return helplines;
}

const PhraseMatcher& pattern_matcher(PatternSet set) {
    static const PhraseMatcher helplines(pattern_phrases(PatternSet::Helplines));
    static const PhraseMatcher self_harm(pattern_phrases(PatternSet::SelfHarm));
    static const PhraseMatcher advisors(pattern_phrases(PatternSet::Advisors));
    switch (set) {
        case PatternSet::Helplines: return helplines;
        case PatternSet::SelfHarm: return self_harm;
        case PatternSet::Advisors: return advisors;
    }
    return helplines;
}

std::size_t pattern_counts(std::string_view text, PatternSet set) { return pattern_matcher(set).count(text); }

std::size_t pattern_counts(std::string_view text, std::string_view set_name) {
    return pattern_counts(text, parse_pattern_set(set_name));
}

}  // namespace triage
