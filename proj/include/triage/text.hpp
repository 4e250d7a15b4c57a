// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triage {

using TokenList = std::vector<std::string>;

enum class TokenKind { Word, Punct, Url };

/// A token together with the byte range it was read from.
struct Token {
    std::string text;
    std::size_t begin = 0;
    std::size_t end = 0;
    TokenKind kind = TokenKind::Word;
};

/// Lowercased word, punctuation and URL tokens.
///
/// Whitespace separates tokens. Each non-word character becomes its own
/// token, except apostrophes between two word characters ("can't" stays
/// whole) and URLs starting with http://, https:// or www., which are kept
/// as one token minus trailing punctuation. Curly apostrophes are read as
/// ASCII ones. Bytes >= 0x80 count as word characters.
std::vector<Token> scan_tokens(std::string_view text);
TokenList tokenize(std::string_view text);

bool is_url_token(std::string_view token) noexcept;
bool is_punct_token(std::string_view token) noexcept;

struct Sentence {
    std::string text;
    TokenList tokens;
};

/// Greedy split after runs of '.', '!' or '?' tokens and at line breaks.
/// Empty or whitespace-only text yields no sentences.
std::vector<Sentence> split_sentences(std::string_view text);

using Ngram = std::vector<std::string>;

/// Contiguous n-grams in order; throws std::invalid_argument for n == 0.
std::vector<Ngram> ngrams(std::span<const std::string> tokens, std::size_t n);

/// N-grams for every order in [min_n, max_n], each joined with single spaces.
std::vector<std::string> joined_ngrams(std::span<const std::string> tokens, std::size_t min_n,
                                       std::size_t max_n);

/// ASCII lowercase with curly quotes folded to ASCII.
std::string normalize_case(std::string_view text);

}  // namespace triage
