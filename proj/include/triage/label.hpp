// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace triage {

/// Triage severity, totally ordered Green < Amber < Red < Crisis.
enum class TriageLabel : unsigned char { Green = 0, Amber = 1, Red = 2, Crisis = 3 };

inline constexpr std::size_t kLabelCount = 4;
inline constexpr std::array<TriageLabel, kLabelCount> kAllLabels = {
    TriageLabel::Green, TriageLabel::Amber, TriageLabel::Red, TriageLabel::Crisis};

constexpr std::size_t index_of(TriageLabel label) noexcept { return static_cast<std::size_t>(label); }
constexpr TriageLabel label_at(std::size_t index) noexcept { return static_cast<TriageLabel>(index); }

/// Any non-green post needs moderator action.
constexpr bool flagged(TriageLabel label) noexcept { return label != TriageLabel::Green; }
constexpr bool urgent(TriageLabel label) noexcept {
    return label == TriageLabel::Red || label == TriageLabel::Crisis;
}

std::string_view to_string(TriageLabel label) noexcept;

/// Case-insensitive parse; nullopt for anything but the four label names.
std::optional<TriageLabel> parse_label(std::string_view text) noexcept;

}  // namespace triage
