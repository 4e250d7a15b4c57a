// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "triage/corpus.hpp"

namespace triage {

inline constexpr std::array<std::string_view, 12> kPronouns = {"i",  "me", "you", "he", "him",  "she",
                                                                "her", "it", "we",  "us", "they", "them"};

struct SurfaceStats {
    std::array<std::size_t, kPronouns.size()> pronouns{};
    double mean_word_length = 0.0;  // code points per word, URLs and punctuation excluded
    std::size_t web_links = 0;
};

SurfaceStats surface_stats(std::span<const std::string> tokens);
SurfaceStats surface_stats(const LabeledPost& post);

/// Tokens that are neither punctuation nor URLs.
std::size_t word_count(std::span<const std::string> tokens);

}  // namespace triage
