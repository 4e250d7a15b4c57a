// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "triage/corpus.hpp"
#include "triage/error.hpp"
#include "triage/random.hpp"

using namespace triage;

namespace {

std::vector<TriageLabel> make_labels(std::size_t g, std::size_t a, std::size_t r, std::size_t c) {
    std::vector<TriageLabel> out;
    out.insert(out.end(), g, TriageLabel::Green);
    out.insert(out.end(), a, TriageLabel::Amber);
    out.insert(out.end(), r, TriageLabel::Red);
    out.insert(out.end(), c, TriageLabel::Crisis);
    return out;
}

}  // namespace

TEST_CASE("jsonl records map to posts") {
    const std::string text =
        R"({"post_id": "a", "author_rank": "regular", "body": "hi", "label": "green"})" "\n"
        R"({"post_id": "b", "author_rank": "", "body": "meh", "label": "amber"})" "\n"
        R"({"post_id": "c", "author_rank": "staff", "body": "help", "label": "crisis"})" "\n";
    const auto posts = parse_posts(text, CorpusFormat::Jsonl);
    REQUIRE(posts.size() == 3);
    CHECK(posts[0].post_id == "a");
    CHECK(posts[0].author_rank == "regular");
    CHECK(posts[1].label == TriageLabel::Amber);
    CHECK(posts[2].label == TriageLabel::Crisis);
}

TEST_CASE("upper-case label parses") {
    const auto posts = parse_posts(R"({"post_id": "x", "body": "b", "label": "CRISIS"})", CorpusFormat::Jsonl);
    CHECK(posts.at(0).label == TriageLabel::Crisis);
}

TEST_CASE("labels are optional but unknown labels are rejected") {
    const auto posts = parse_posts(R"({"post_id": "x", "body": "b"})", CorpusFormat::Jsonl);
    CHECK_FALSE(posts.at(0).label.has_value());
    CHECK_THROWS_AS(require_labels(posts), InputError);
    CHECK_THROWS_AS(parse_posts(R"({"post_id": "x", "body": "b", "label": "blue"})", CorpusFormat::Jsonl),
                    InputError);
}

TEST_CASE("duplicate post ids name the id and both lines") {
    const std::string text = R"({"post_id": "p0", "body": "x"})" "\n"
                             R"({"post_id": "p1", "body": "x"})" "\n"
                             R"({"post_id": "p2", "body": "x"})" "\n"
                             R"({"post_id": "p3", "body": "x"})" "\n"
                             R"({"post_id": "p1", "body": "x"})" "\n";
    try {
        parse_posts(text, CorpusFormat::Jsonl);
        FAIL("expected an error");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("p1") != std::string::npos);
        CHECK(msg.find('2') != std::string::npos);
        CHECK(msg.find('5') != std::string::npos);
    }
}

TEST_CASE("malformed records report their line") {
    const std::string text = R"({"post_id": "a", "body": "x"})" "\n{oops\n";
    try {
        parse_posts(text, CorpusFormat::Jsonl);
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("csv with quoted fields") {
    const std::string text = "post_id,author_rank,body,label\n"
                             "a,regular,\"hello, world\",green\n"
                             "b,,\"she said \"\"hi\"\"\nthen left\",red\n";
    const auto posts = parse_posts(text, CorpusFormat::Csv);
    REQUIRE(posts.size() == 2);
    CHECK(posts[0].body == "hello, world");
    CHECK(posts[1].body == "she said \"hi\"\nthen left");
    CHECK(posts[1].label == TriageLabel::Red);
}

TEST_CASE("serialization round trip keeps posts and stats") {
    std::vector<LabeledPost> posts = {{"1", "r", "one \"two\"", TriageLabel::Green},
                                      {"2", "", "line\nbreak, comma", TriageLabel::Red},
                                      {"3", "x", "", TriageLabel::Crisis}};
    for (auto format : {CorpusFormat::Jsonl, CorpusFormat::Csv}) {
        const auto back = parse_posts(serialize_posts(posts, format), format);
        REQUIRE(back.size() == posts.size());
        for (std::size_t i = 0; i < posts.size(); ++i) {
            CHECK(back[i].post_id == posts[i].post_id);
            CHECK(back[i].body == posts[i].body);
            CHECK(back[i].label == posts[i].label);
        }
        CHECK(corpus_stats(back) == corpus_stats(posts));
    }
}

TEST_CASE("file io and format by extension") {
    const auto dir = std::filesystem::temp_directory_path() / "triage_corpus_test";
    std::filesystem::create_directories(dir);
    std::vector<LabeledPost> posts = {{"1", "r", "hello", TriageLabel::Amber}};
    save_posts(dir / "a.csv", posts, format_for_path(dir / "a.csv"));
    CHECK(format_for_path(dir / "a.csv") == CorpusFormat::Csv);
    CHECK(format_for_path(dir / "a.jsonl") == CorpusFormat::Jsonl);
    const auto back = load_posts(dir / "a.csv", CorpusFormat::Csv);
    CHECK(back.at(0).label == TriageLabel::Amber);
    CHECK_THROWS_AS(load_posts(dir / "missing.jsonl", CorpusFormat::Jsonl), InputError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("corpus stats") {
    SUBCASE("one of each label") {
        std::vector<LabeledPost> posts;
        for (TriageLabel l : kAllLabels) posts.push_back({std::string(to_string(l)), "", "", l});
        const auto s = corpus_stats(posts);
        for (double p : s.percentages) CHECK(p == doctest::Approx(25.0));
    }
    SUBCASE("hand count 6/3/1/0") {
        std::vector<LabeledPost> posts;
        const auto labels = make_labels(6, 3, 1, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) posts.push_back({std::to_string(i), "", "", labels[i]});
        const auto s = corpus_stats(posts);
        CHECK(s.total == 10);
        CHECK(s.percentages[0] == doctest::Approx(60.0));
        CHECK(s.percentages[1] == doctest::Approx(30.0));
        CHECK(s.percentages[2] == doctest::Approx(10.0));
        CHECK(s.percentages[3] == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS(corpus_stats(std::vector<LabeledPost>{}), InputError);
}

TEST_CASE("stratified folds: exact divisibility") {
    const auto labels = make_labels(5, 5, 0, 0);
    const auto folds = stratified_folds(labels, 5, 3);
    for (std::size_t f = 0; f < 5; ++f) {
        std::size_t g = 0, a = 0;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (folds[i] == f) (labels[i] == TriageLabel::Green ? g : a)++;
        CHECK(g == 1);
        CHECK(a == 1);
    }
}

TEST_CASE("stratified folds: four crisis posts over five folds") {
    const auto labels = make_labels(20, 0, 0, 4);
    const auto folds = stratified_folds(labels, 5, 11);
    std::array<std::size_t, 5> crisis{};
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == TriageLabel::Crisis) ++crisis[folds[i]];
    CHECK(std::count(crisis.begin(), crisis.end(), 0) == 1);
    CHECK(std::count(crisis.begin(), crisis.end(), 1) == 4);
}

TEST_CASE("stratified folds: determinism and preconditions") {
    const auto labels = make_labels(7, 5, 3, 2);
    CHECK(stratified_folds(labels, 5, 42) == stratified_folds(labels, 5, 42));
    CHECK_THROWS_AS(stratified_folds(labels, 1, 0), InputError);
    CHECK_THROWS_AS(stratified_folds(make_labels(1, 1, 0, 0), 3, 0), InputError);
}

TEST_CASE("stratified folds: partition and balance on random corpora") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 2 + uniform_index(rng, 6);
        std::vector<TriageLabel> labels;
        const std::size_t n = k + uniform_index(rng, 60);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(label_at(uniform_index(rng, kLabelCount)));
        const auto folds = stratified_folds(labels, k, trial);
        REQUIRE(folds.size() == n);
        std::vector<std::array<std::size_t, kLabelCount>> counts(k);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(folds[i] < k);
            ++counts[folds[i]][index_of(labels[i])];
        }
        for (std::size_t l = 0; l < kLabelCount; ++l) {
            std::size_t lo = n, hi = 0;
            for (const auto& c : counts) {
                lo = std::min(lo, c[l]);
                hi = std::max(hi, c[l]);
            }
            CHECK(hi - lo <= 1);
        }
    }
}

TEST_CASE("stratified folds keyed by post id") {
    std::vector<LabeledPost> posts;
    const auto labels = make_labels(4, 3, 2, 1);
    for (std::size_t i = 0; i < labels.size(); ++i) posts.push_back({"p" + std::to_string(i), "", "", labels[i]});
    const auto by_id = stratified_folds(posts, 2, 5);
    const auto by_pos = stratified_folds(labels, 2, 5);
    REQUIRE(by_id.size() == posts.size());
    for (std::size_t i = 0; i < posts.size(); ++i) CHECK(by_id.at(posts[i].post_id) == by_pos[i]);
}
