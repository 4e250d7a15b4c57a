// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include "triage/random.hpp"
#include "triage/text.hpp"

using namespace triage;

namespace {

std::string join(const TokenList& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

std::string random_text(Rng& rng) {
    static const std::vector<std::string> pieces = {
        "I",   "can't", "do",  "this", "!!",  "Help", ".",   "please", "?",  "www.reachout.com",
        "don't", "feel", "ok", ",",    "\n",  "It's", "...", "go",     "http://a.b/c", "13 11 14",
        "café", "(",    ")",   "'",    "\"",  "so",   "tired"};
    std::string out;
    const std::size_t n = uniform_index(rng, 25);
    for (std::size_t i = 0; i < n; ++i) {
        out += pieces[uniform_index(rng, pieces.size())];
        out += uniform_index(rng, 3) ? " " : "";
    }
    return out;
}

}  // namespace

TEST_CASE("tokenize examples") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("I can't do this!!") == TokenList{"i", "can't", "do", "this", "!", "!"});
    CHECK(tokenize("see www.moodgym.anu.edu.au now") == TokenList{"see", "www.moodgym.anu.edu.au", "now"});
    CHECK(tokenize("Visit https://ReachOut.com/help.") ==
          TokenList{"visit", "https://reachout.com/help", "."});
}

TEST_CASE("token classes") {
    CHECK(is_url_token("www.reachout.com"));
    CHECK(is_url_token("http://x.org"));
    CHECK_FALSE(is_url_token("hello"));
    CHECK(is_punct_token("!"));
    CHECK_FALSE(is_punct_token("a"));
}

TEST_CASE("sentence splitting") {
    CHECK(split_sentences("I am fine").size() == 1);
    CHECK(split_sentences("I'm tired. I give up.").size() == 2);
    const auto s = split_sentences("help!!\nplease");
    REQUIRE(s.size() == 2);
    CHECK(s[0].text == "help!!");
    CHECK(s[1].text == "please");
    CHECK(split_sentences("").empty());
}

TEST_CASE("ngrams") {
    const TokenList abc = {"a", "b", "c"};
    CHECK(ngrams(abc, 2) == std::vector<Ngram>{{"a", "b"}, {"b", "c"}});
    CHECK(ngrams(TokenList{"a"}, 3).empty());
    CHECK(ngrams(TokenList{"i", "feel", "so", "tired"}, 3) ==
          std::vector<Ngram>{{"i", "feel", "so"}, {"feel", "so", "tired"}});
    CHECK(joined_ngrams(abc, 1, 2) == std::vector<std::string>{"a", "b", "c", "a b", "b c"});
    CHECK_THROWS(ngrams(abc, 0));
}

TEST_CASE("text properties on random inputs") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string text = random_text(rng);
        const auto tokens = tokenize(text);
        const std::string lowered = normalize_case(text);
        for (const auto& t : tokens) {
            CHECK_FALSE(t.empty());
            for (char ch : t) CHECK(lowered.find(ch) != std::string::npos);
        }
        CHECK(tokenize(join(tokens)) == tokens);
        CHECK(ngrams(tokens, 2).size() == (tokens.empty() ? 0 : tokens.size() - 1));
        TokenList from_sentences;
        std::string rebuilt;
        for (const auto& s : split_sentences(text)) {
            from_sentences.insert(from_sentences.end(), s.tokens.begin(), s.tokens.end());
            rebuilt += s.text;
        }
        CHECK(from_sentences == tokens);
        std::string squeezed_text, squeezed_rebuilt;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) squeezed_text += ch;
        for (char ch : rebuilt)
            if (!std::isspace(static_cast<unsigned char>(ch))) squeezed_rebuilt += ch;
        CHECK(squeezed_rebuilt == squeezed_text);
    }
}
