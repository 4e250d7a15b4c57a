// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/label.hpp"

#include <algorithm>
#include <cctype>

namespace triage {

std::string_view to_string(TriageLabel label) noexcept {
    switch (label) {
        case TriageLabel::Green: return "green";
        case TriageLabel::Amber: return "amber";
        case TriageLabel::Red: return "red";
        case TriageLabel::Crisis: return "crisis";
    }
    return "green";
}

std::optional<TriageLabel> parse_label(std::string_view text) noexcept {
    for (TriageLabel label : kAllLabels) {
        std::string_view name = to_string(label);
        if (name.size() == text.size() &&
            std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
                return a == std::tolower(static_cast<unsigned char>(b));
            })) {
            return label;
        }
    }
    return std::nullopt;
}

}  // namespace triage
