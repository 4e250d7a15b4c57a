// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include "triage/label.hpp"

using namespace triage;

TEST_CASE("labels are ordered by severity") {
    CHECK(TriageLabel::Green < TriageLabel::Amber);
    CHECK(TriageLabel::Amber < TriageLabel::Red);
    CHECK(TriageLabel::Red < TriageLabel::Crisis);
    for (std::size_t i = 0; i < kLabelCount; ++i) CHECK(index_of(label_at(i)) == i);
}

TEST_CASE("flagged and urgent groupings") {
    CHECK_FALSE(flagged(TriageLabel::Green));
    CHECK(flagged(TriageLabel::Amber));
    CHECK(flagged(TriageLabel::Crisis));
    CHECK_FALSE(urgent(TriageLabel::Amber));
    CHECK(urgent(TriageLabel::Red));
    CHECK(urgent(TriageLabel::Crisis));
}

TEST_CASE("label parsing is case-insensitive") {
    CHECK(parse_label("CRISIS") == TriageLabel::Crisis);
    CHECK(parse_label("Amber") == TriageLabel::Amber);
    CHECK(parse_label("green") == TriageLabel::Green);
    CHECK_FALSE(parse_label("orange").has_value());
    CHECK_FALSE(parse_label("").has_value());
    for (TriageLabel l : kAllLabels) CHECK(parse_label(to_string(l)) == l);
}
