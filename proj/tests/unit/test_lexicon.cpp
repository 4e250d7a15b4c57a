// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include "../support/checks.hpp"
#include "triage/error.hpp"
#include "triage/lexicon.hpp"

using namespace triage;

namespace {

LexiconMeta polarity_meta(std::string name) {
    return {std::move(name), true, {{"positive", "negative"}, {"negative", "positive"}}};
}

}  // namespace

TEST_CASE("the standard negation list") {
    const auto negation = NegationList::standard();
    CHECK(negation.size() == 24);
    CHECK(negation.contains("don't"));
    CHECK(negation.contains("never"));
    CHECK(negation.contains("scarcely"));
    CHECK_FALSE(negation.contains("not"));
    CHECK(NegationList::none().empty());
}

TEST_CASE("lexicon loading") {
    const auto lex = parse_lexicon("# comment\nhappy\tpositive\nsad\tnegative\n", polarity_meta("mpqa"));
    CHECK(lex.size() == 2);
    CHECK(lex.polarity_aware());
    CHECK(lex.opposite("positive") == "negative");

    const auto tri = parse_lexicon("give up hope\thopeless\n", {"phq", false, {}});
    CHECK(tri.max_order() == 3);
    CHECK(tri.find("give up hope") != nullptr);

    const auto upper = parse_lexicon("Happy\tpositive\n", polarity_meta("x"));
    CHECK(upper.find("happy") != nullptr);

    const auto weighted = parse_lexicon("feel great\tPOS_P\t0.8\n", {"perma", true, {{"POS_P", "NEG_P"}, {"NEG_P", "POS_P"}}});
    CHECK(weighted.has_weights());
    CHECK(weighted.find("feel great")->at("POS_P") == doctest::Approx(0.8));
}

TEST_CASE("lexicon load errors") {
    CHECK_THROWS_AS(parse_lexicon("happy\tpositive\n", {"bad", true, {{"positive", "negative"}}}), InputError);
    CHECK_THROWS_AS(parse_lexicon("justaterm\n", polarity_meta("x")), InputError);
    CHECK_THROWS_AS(parse_lexicon("a\tpositive\tnotanumber\n", polarity_meta("x")), InputError);
    CHECK_THROWS_AS(parse_lexicon("a b c d\tpositive\n", polarity_meta("x")), InputError);
    CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.tsv", polarity_meta("x")), InputError);
}

TEST_CASE("match counts with the negation rule") {
    const auto mpqa = parse_lexicon("like\tpositive\n", polarity_meta("mpqa"));
    const auto negation = NegationList::standard();
    const TokenList negated = {"i", "don't", "like", "it"};
    auto counts = match_counts(negated, mpqa, negation);
    CHECK(counts.count("positive") == 0);
    CHECK(counts.count("negative") == 1);

    counts = match_counts(TokenList{"like", "it"}, mpqa, negation);
    CHECK(counts.count("positive") == 1);
    CHECK(counts.count("negative") == 0);

    const auto disorder = parse_lexicon("anxiety\tdisorder\n", {"mental_disorder", false, {}});
    CHECK(match_counts(TokenList{"never", "anxiety"}, disorder, negation).count("disorder") == 0);
    CHECK(match_counts(TokenList{"anxiety"}, disorder, negation).count("disorder") == 1);

    SUBCASE("negation disabled") {
        CHECK(match_counts(negated, mpqa, NegationList::none()).count("positive") == 1);
    }
    SUBCASE("punctuation blocks negation") {
        const auto c = match_counts(TokenList{"don't", ",", "like"}, mpqa, negation);
        CHECK(c.count("positive") == 1);
    }
    SUBCASE("unmapped category in a polarity-aware lexicon is skipped") {
        const auto emolex = parse_lexicon("like\tpositive\nscared\tfear\n", polarity_meta("emolex"));
        const auto c = match_counts(TokenList{"never", "scared"}, emolex, negation);
        CHECK(c.count("fear") == 0);
        CHECK(c.total() == 0);
    }
}

TEST_CASE("longest match first without recounting") {
    const auto lex = parse_lexicon("give up\tquit\ngive up hope\thopeless\nhope\tpositive\n", polarity_meta("x"));
    const auto c = match_counts(TokenList{"i", "give", "up", "hope"}, lex, NegationList::standard());
    CHECK(c.count("hopeless") == 1);
    CHECK(c.count("quit") == 0);
    CHECK(c.count("positive") == 0);
}

TEST_CASE("weighted sums") {
    const LexiconMeta perma{"perma", true, {{"POS_P", "NEG_P"}, {"NEG_P", "POS_P"}}};
    const auto lex = parse_lexicon("feel great\tPOS_P\t0.8\n", perma);
    const auto negation = NegationList::standard();
    auto sums = weighted_sum(TokenList{"feel", "great", "today"}, lex, negation);
    CHECK(sums.weight("POS_P") == doctest::Approx(0.8));
    CHECK(sums.weight("NEG_P") == doctest::Approx(0.0));
    sums = weighted_sum(TokenList{"don't", "feel", "great"}, lex, negation);
    CHECK(sums.weight("NEG_P") == doctest::Approx(0.8));
    CHECK(sums.weight("POS_P") == doctest::Approx(0.0));
    sums = weighted_sum(TokenList{}, lex, negation);
    CHECK(sums.weight("POS_P") == 0.0);
    CHECK(sums.weight("NEG_P") == 0.0);
}

TEST_CASE("negation flip and skip on random cases") {
    CHECK(checks::negation_violations(400, 3) == 0);
}

TEST_CASE("monotonicity and the token bound") {
    Rng rng(17);
    const auto lex = parse_lexicon("a\tpositive\nb\tnegative\nc\tpositive\n", polarity_meta("x"));
    const TokenList vocab = {"a", "b", "c", "d", "e", "."};
    for (int trial = 0; trial < 200; ++trial) {
        TokenList tokens;
        const std::size_t n = uniform_index(rng, 15);
        for (std::size_t i = 0; i < n; ++i) tokens.push_back(vocab[uniform_index(rng, vocab.size())]);
        const auto before = match_counts(tokens, lex, NegationList::standard());
        CHECK(before.total() <= tokens.size());
        TokenList longer = tokens;
        const std::size_t extra = uniform_index(rng, 10);
        for (std::size_t i = 0; i < extra; ++i) longer.push_back(vocab[uniform_index(rng, vocab.size())]);
        const auto after = match_counts(longer, lex, NegationList::standard());
        for (const auto& cat : lex.categories()) CHECK(after.count(cat) >= before.count(cat));
    }
}
