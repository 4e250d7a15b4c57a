// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/text.hpp"

#include <stdexcept>

namespace triage {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_word_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_url_tail_punct(char c) {
    switch (c) {
        case '.': case ',': case '!': case '?': case ';': case ':': case ')': case ']':
        case '}': case '"': case '\'': case '>':
            return true;
        default:
            return false;
    }
}

bool starts_url(std::string_view lowered) {
    return lowered.starts_with("http://") || lowered.starts_with("https://") ||
           lowered.starts_with("www.");
}

char lower_ascii(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

// Folds U+2018/U+2019 to '\'' and U+201C/U+201D to '"', keeping a map back
// to the source offsets.
struct Normalized {
    std::string text;
    std::vector<std::size_t> source;  // source offset of each byte, plus end sentinel
};

Normalized fold(std::string_view in) {
    Normalized out;
    out.text.reserve(in.size());
    out.source.reserve(in.size() + 1);
    for (std::size_t i = 0; i < in.size();) {
        if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
            static_cast<unsigned char>(in[i + 1]) == 0x80) {
            const auto third = static_cast<unsigned char>(in[i + 2]);
            if (third == 0x98 || third == 0x99 || third == 0x9C || third == 0x9D) {
                out.text.push_back(third <= 0x99 ? '\'' : '"');
                out.source.push_back(i);
                i += 3;
                continue;
            }
        }
        out.text.push_back(lower_ascii(in[i]));
        out.source.push_back(i);
        ++i;
    }
    out.source.push_back(in.size());
    return out;
}

}  // namespace

std::string normalize_case(std::string_view text) { return fold(text).text; }

bool is_url_token(std::string_view token) noexcept { return starts_url(token); }

bool is_punct_token(std::string_view token) noexcept {
    return token.size() == 1 && !is_word_char(token[0]);
}

std::vector<Token> scan_tokens(std::string_view raw) {
    const Normalized norm = fold(raw);
    const std::string_view text = norm.text;
    std::vector<Token> tokens;

    auto emit = [&](std::size_t b, std::size_t e, TokenKind kind) {
        tokens.push_back(Token{std::string(text.substr(b, e - b)), norm.source[b], norm.source[e], kind});
    };

    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t chunk_end = i;
        while (chunk_end < text.size() && !is_space(text[chunk_end])) ++chunk_end;

        std::size_t p = i;
        while (p < chunk_end) {
            if (starts_url(text.substr(p, chunk_end - p))) {
                std::size_t url_end = chunk_end;
                while (url_end > p && is_url_tail_punct(text[url_end - 1])) --url_end;
                emit(p, url_end, TokenKind::Url);
                p = url_end;
                continue;
            }
            if (is_word_char(text[p])) {
                std::size_t q = p;
                while (q < chunk_end) {
                    if (is_word_char(text[q])) {
                        ++q;
                    } else if (text[q] == '\'' && q + 1 < chunk_end && is_word_char(text[q + 1])) {
                        ++q;
                    } else {
                        break;
                    }
                }
                emit(p, q, TokenKind::Word);
                p = q;
            } else {
                emit(p, p + 1, TokenKind::Punct);
                ++p;
            }
        }
        i = chunk_end;
    }
    return tokens;
}

TokenList tokenize(std::string_view text) {
    TokenList out;
    for (auto& token : scan_tokens(text)) out.push_back(std::move(token.text));
    return out;
}

std::vector<Sentence> split_sentences(std::string_view text) {
    const auto tokens = scan_tokens(text);
    std::vector<Sentence> sentences;
    std::size_t start = 0;

    auto close = [&](std::size_t end) {
        if (end <= start) return;
        Sentence sentence;
        const std::size_t b = tokens[start].begin;
        const std::size_t e = tokens[end - 1].end;
        sentence.text = std::string(text.substr(b, e - b));
        for (std::size_t t = start; t < end; ++t) sentence.tokens.push_back(tokens[t].text);
        sentences.push_back(std::move(sentence));
        start = end;
    };

    auto is_terminator = [](const Token& token) {
        return token.kind == TokenKind::Punct &&
               (token.text == "." || token.text == "!" || token.text == "?");
    };

    for (std::size_t t = 0; t < tokens.size(); ++t) {
        if (t > start) {
            std::string_view gap = text.substr(tokens[t - 1].end, tokens[t].begin - tokens[t - 1].end);
            if (gap.find('\n') != std::string_view::npos) close(t);
        }
        if (is_terminator(tokens[t])) {
            if (t + 1 == tokens.size() || !is_terminator(tokens[t + 1])) close(t + 1);
        }
    }
    close(tokens.size());
    return sentences;
}

std::vector<Ngram> ngrams(std::span<const std::string> tokens, std::size_t n) {
    if (n == 0) throw std::invalid_argument("n-gram order must be at least 1");
    std::vector<Ngram> out;
    if (tokens.size() < n) return out;
    out.reserve(tokens.size() - n + 1);
    for (std::size_t i = 0; i + n <= tokens.size(); ++i)
        out.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                         tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    return out;
}

std::vector<std::string> joined_ngrams(std::span<const std::string> tokens, std::size_t min_n,
                                       std::size_t max_n) {
    if (min_n == 0 || max_n < min_n) throw std::invalid_argument("invalid n-gram range");
    std::vector<std::string> out;
    for (std::size_t n = min_n; n <= max_n; ++n) {
        for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
            std::string gram = tokens[i];
            for (std::size_t j = 1; j < n; ++j) {
                gram.push_back(' ');
                gram += tokens[i + j];
            }
            out.push_back(std::move(gram));
        }
    }
    return out;
}

}  // namespace triage
