// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "triage/corpus.hpp"
#include "triage/label.hpp"

namespace triage {

/// Knobs of the planted-signal corpus generator.
///
/// A post is filler words with two kinds of planted phrases inserted at
/// random positions. Topic phrases are label specific; each comes from the
/// post's own label with probability `own_label_rate`, otherwise from an
/// adjacent severity. Affect words come from positive, mild and severe
/// bands with label-dependent odds, sometimes negated ("never worried").
/// Affect separates green from the rest but barely separates red from
/// crisis; topics separate all four.
struct SyntheticOptions {
    std::array<std::size_t, kLabelCount> counts{};  // per label, severity order
    std::string id_prefix = "post";
    double own_label_rate = 0.9;
    double negated_affect_rate = 0.15;
    std::size_t min_filler = 8;
    std::size_t max_filler = 20;
    std::size_t min_topics = 2;
    std::size_t max_topics = 4;
    std::size_t min_affect = 1;
    std::size_t max_affect = 3;
};

/// Labeled posts in a seeded random order.
std::vector<LabeledPost> generate_synthetic(const SyntheticOptions& options, std::uint64_t seed);

struct SyntheticSplit {
    std::vector<LabeledPost> train;
    std::vector<LabeledPost> test;
};

/// The standard 1200/400 split with a forum-like label skew:
/// train 723/299/138/40 and test 216/94/48/42 (green/amber/red/crisis).
SyntheticSplit standard_synthetic_split(std::uint64_t seed);

/// The topic phrases planted for a label.
const std::vector<std::string>& synthetic_topics(TriageLabel label);
const std::vector<std::string>& synthetic_ranks();

}  // namespace triage
