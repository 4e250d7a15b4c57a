// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/surface.hpp"

#include "triage/text.hpp"

namespace triage {
namespace {

std::size_t code_points(std::string_view s) {
    std::size_t n = 0;
    for (char c : s)
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    return n;
}

}  // namespace

std::size_t word_count(std::span<const std::string> tokens) {
    std::size_t n = 0;
    for (const auto& token : tokens)
        if (!is_punct_token(token) && !is_url_token(token)) ++n;
    return n;
}

SurfaceStats surface_stats(std::span<const std::string> tokens) {
    SurfaceStats stats;
    std::size_t words = 0;
    std::size_t chars = 0;
    for (const auto& token : tokens) {
        if (is_url_token(token)) {
            ++stats.web_links;
            continue;
        }
        if (is_punct_token(token)) continue;
        ++words;
        chars += code_points(token);
        for (std::size_t p = 0; p < kPronouns.size(); ++p)
            if (token == kPronouns[p]) ++stats.pronouns[p];
    }
    if (words > 0) stats.mean_word_length = static_cast<double>(chars) / static_cast<double>(words);
    return stats;
}

SurfaceStats surface_stats(const LabeledPost& post) { return surface_stats(tokenize(post.body)); }

}  // namespace triage
