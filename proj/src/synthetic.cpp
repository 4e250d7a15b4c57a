// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/synthetic.hpp"

#include <cstdio>

#include "triage/error.hpp"
#include "triage/random.hpp"

namespace triage {

namespace {

const std::vector<std::string> kFiller = {"i",    "the",  "and",  "today", "was",  "my",   "to",     "a",    "it",
                                          "so",   "feel", "really", "just", "about", "with", "have", "been", "this",
                                          "that", "for",  "of",   "in",   "on",   "at",   "some",   "things"};

// Topic phrases: label specific and mostly outside general affect lexicons.
const std::array<std::vector<std::string>, kLabelCount> kTopics = {{
    {"weekend", "movie night", "coffee", "football match", "new haircut", "road trip", "birthday party",
     "guitar practice", "cooking dinner", "beach day"},
    {"exams", "assignment due", "job interview", "therapist appointment", "medication change", "exam results",
     "moving house", "first shift", "group project", "waiting list"},
    {"stayed in bed", "skipped school", "stopped eating", "no one listens", "nothing works", "quit my job",
     "cannot get up", "ignored again", "gave up trying", "falling behind"},
    {"kill myself", "end my life", "pills tonight", "saying goodbye", "wrote a note", "no way out",
     "gave away my things", "last post", "the bridge", "final decision"},
}};

// Affect words, visible to sentiment lexicons, in three intensity bands.
const std::array<std::vector<std::string>, 3> kAffect = {{
    {"happy", "proud", "glad", "grateful", "excited", "calm", "hopeful"},
    {"worried", "stressed", "anxious", "nervous", "tired", "upset"},
    {"hopeless", "worthless", "empty", "numb", "miserable", "alone", "broken"},
}};

const std::vector<std::string> kNegators = {"never", "hardly", "barely"};

// Probability of each affect band per label; red and crisis overlap on purpose.
constexpr std::array<std::array<double, 3>, kLabelCount> kAffectMix = {{
    {0.70, 0.25, 0.05},
    {0.20, 0.60, 0.20},
    {0.05, 0.35, 0.60},
    {0.05, 0.30, 0.65},
}};

const std::vector<std::string> kRanks = {"",        "new member", "regular",  "frequent visitor",
                                         "mod squad", "staff",      "super star"};

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
    return items[static_cast<std::size_t>(uniform_index(rng, items.size()))];
}

std::size_t between(std::size_t lo, std::size_t hi, Rng& rng) {
    return lo + static_cast<std::size_t>(uniform_index(rng, hi - lo + 1));
}

std::size_t affect_band(TriageLabel label, Rng& rng) {
    const auto& mix = kAffectMix[index_of(label)];
    const double u = uniform_unit(rng);
    return u < mix[0] ? 0 : (u < mix[0] + mix[1] ? 1 : 2);
}

std::string affect_phrase(TriageLabel label, const SyntheticOptions& o, Rng& rng) {
    const std::size_t band = affect_band(label, rng);
    // A negated word of the opposite pole reads as the intended pole.
    if (uniform_unit(rng) < o.negated_affect_rate) {
        const std::string& negator = pick(kNegators, rng);
        if (band == 0) return negator + " " + pick(kAffect[1], rng);
        return negator + " " + pick(kAffect[0], rng);
    }
    return pick(kAffect[band], rng);
}

std::size_t topic_source(std::size_t l, const SyntheticOptions& o, Rng& rng) {
    if (uniform_unit(rng) < o.own_label_rate) return l;
    if (l == 0) return 1;
    if (l == kLabelCount - 1) return l - 1;
    return uniform_index(rng, 2) == 0 ? l - 1 : l + 1;
}

std::string make_body(TriageLabel label, const SyntheticOptions& o, Rng& rng) {
    std::vector<std::string> words;
    const std::size_t filler = between(o.min_filler, o.max_filler, rng);
    for (std::size_t i = 0; i < filler; ++i) words.push_back(pick(kFiller, rng));
    auto insert = [&](std::string phrase) {
        const std::size_t at = static_cast<std::size_t>(uniform_index(rng, words.size() + 1));
        words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), std::move(phrase));
    };
    const std::size_t topics = between(o.min_topics, o.max_topics, rng);
    for (std::size_t i = 0; i < topics; ++i) insert(pick(kTopics[topic_source(index_of(label), o, rng)], rng));
    const std::size_t affect = between(o.min_affect, o.max_affect, rng);
    for (std::size_t i = 0; i < affect; ++i) insert(affect_phrase(label, o, rng));

    std::string body;
    for (const auto& w : words) {
        if (!body.empty()) body += ' ';
        body += w;
    }
    return body;
}

}  // namespace

std::vector<LabeledPost> generate_synthetic(const SyntheticOptions& o, std::uint64_t seed) {
    if (o.min_filler > o.max_filler || o.min_topics > o.max_topics || o.min_affect > o.max_affect)
        throw InputError("synthetic", "invalid post length bounds");
    if (!(o.own_label_rate >= 0 && o.own_label_rate <= 1) || !(o.negated_affect_rate >= 0 && o.negated_affect_rate <= 1))
        throw InputError("synthetic", "rates must lie in [0, 1]");
    Rng rng(seed);
    std::vector<TriageLabel> labels;
    for (TriageLabel l : kAllLabels) labels.insert(labels.end(), o.counts[index_of(l)], l);
    seeded_shuffle(std::span<TriageLabel>(labels), rng);

    std::vector<LabeledPost> posts;
    posts.reserve(labels.size());
    char id[32];
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::snprintf(id, sizeof id, "-%05zu", i + 1);
        LabeledPost p;
        p.post_id = o.id_prefix + id;
        p.author_rank = pick(kRanks, rng);
        p.body = make_body(labels[i], o, rng);
        p.label = labels[i];
        posts.push_back(std::move(p));
    }
    return posts;
}

SyntheticSplit standard_synthetic_split(std::uint64_t seed) {
    SyntheticOptions train;
    train.counts = {723, 299, 138, 40};
    train.id_prefix = "train";
    SyntheticOptions test;
    test.counts = {216, 94, 48, 42};
    test.id_prefix = "test";
    // Derive the test stream from the seed without overlapping the train stream.
    return {generate_synthetic(train, seed), generate_synthetic(test, seed ^ 0x9e3779b97f4a7c15ULL)};
}

const std::vector<std::string>& synthetic_topics(TriageLabel label) { return kTopics[index_of(label)]; }
const std::vector<std::string>& synthetic_ranks() { return kRanks; }

}  // namespace triage
