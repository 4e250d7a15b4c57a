// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace triage {

/// 64-bit FNV-1a, used for content fingerprints.
class Fnv1a {
public:
    void update(std::string_view bytes) noexcept {
        for (char c : bytes) {
            state_ ^= static_cast<unsigned char>(c);
            state_ *= 0x100000001b3ULL;
        }
    }
    void update(double value) noexcept {
        const auto bits = std::bit_cast<std::uint64_t>(value);
        for (int shift = 0; shift < 64; shift += 8) {
            state_ ^= (bits >> shift) & 0xFFU;
            state_ *= 0x100000001b3ULL;
        }
    }
    void update(std::uint64_t value) noexcept { update(std::bit_cast<double>(value)); }

    std::uint64_t digest() const noexcept { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace triage
