// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "triage/error.hpp"
#include "triage/hash.hpp"
#include "triage/patterns.hpp"
#include "triage/surface.hpp"

namespace triage {

// ---------------------------------------------------------------------------
// FeatureConfig

const std::vector<std::string>& FeatureConfig::preset_names() {
    static const std::vector<std::string> names = {"only-lexicons",           "lexicons-negation", "tfidf-lexicons",
                                                   "tfidf-lexicons-negation", "full",              "full-heuristics"};
    return names;
}

FeatureConfig FeatureConfig::preset(std::string_view name) {
    FeatureConfig c;
    c.name = std::string(name);
    if (name == "only-lexicons") {
        c.lexicons = true;
    } else if (name == "lexicons-negation") {
        c.lexicons = c.negation = true;
    } else if (name == "tfidf-lexicons") {
        c.tfidf = c.lexicons = true;
    } else if (name == "tfidf-lexicons-negation") {
        c.tfidf = c.lexicons = c.negation = true;
    } else if (name == "full" || name == "full-heuristics") {
        c.tfidf = c.lexicons = c.negation = true;
        c.surface = c.patterns = c.sentiment = c.embeddings = c.user_rank = true;
        c.heuristics = name == "full-heuristics";
    } else {
        throw InputError("features", "unknown feature preset '" + std::string(name) + "'");
    }
    return c;
}

std::vector<FeatureConfig> FeatureConfig::ablation_presets() {
    std::vector<FeatureConfig> rows;
    for (std::size_t i = 0; i < 5; ++i) rows.push_back(preset(preset_names()[i]));
    return rows;
}

namespace {

bool parse_switch(const std::string& key, const std::string& value) {
    if (value == "on" || value == "true" || value == "1" || value == "yes") return true;
    if (value == "off" || value == "false" || value == "0" || value == "no") return false;
    throw InputError("features", "feature config key '" + key + "' expects on/off, got '" + value + "'");
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || out == 0)
        throw InputError("features", "feature config key '" + key + "' expects a positive integer, got '" + value + "'");
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

const char* on_off(bool b) { return b ? "on" : "off"; }

}  // namespace

FeatureConfig FeatureConfig::parse(std::string_view text) {
    FeatureConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw InputError("features", "feature config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key == "preset") {
            const std::string keep_name = c.name;
            c = preset(value);
            if (keep_name != "custom") c.name = keep_name;
        } else if (key == "name") {
            c.name = value;
        } else if (key == "tfidf") {
            c.tfidf = parse_switch(key, value);
        } else if (key == "tfidf.max_features") {
            c.max_features = parse_count(key, value);
        } else if (key == "tfidf.ngram_min") {
            c.ngram_min = parse_count(key, value);
        } else if (key == "tfidf.ngram_max") {
            c.ngram_max = parse_count(key, value);
        } else if (key == "lexicons") {
            c.lexicons = parse_switch(key, value);
        } else if (key == "lexicons.negation" || key == "negation") {
            c.negation = parse_switch(key, value);
        } else if (key == "surface") {
            c.surface = parse_switch(key, value);
        } else if (key == "patterns") {
            c.patterns = parse_switch(key, value);
        } else if (key == "sentiment") {
            c.sentiment = parse_switch(key, value);
        } else if (key == "embeddings") {
            c.embeddings = parse_switch(key, value);
        } else if (key == "user_rank") {
            c.user_rank = parse_switch(key, value);
        } else if (key == "heuristics") {
            c.heuristics = parse_switch(key, value);
        } else {
            throw InputError("features", "feature config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    if (c.ngram_max < c.ngram_min) throw InputError("features", "tfidf.ngram_max is below tfidf.ngram_min");
    return c;
}

std::string FeatureConfig::to_text() const {
    std::ostringstream out;
    out << "name = " << name << "\n"
        << "tfidf = " << on_off(tfidf) << "\n"
        << "tfidf.max_features = " << max_features << "\n"
        << "tfidf.ngram_min = " << ngram_min << "\n"
        << "tfidf.ngram_max = " << ngram_max << "\n"
        << "lexicons = " << on_off(lexicons) << "\n"
        << "lexicons.negation = " << on_off(negation) << "\n"
        << "surface = " << on_off(surface) << "\n"
        << "patterns = " << on_off(patterns) << "\n"
        << "sentiment = " << on_off(sentiment) << "\n"
        << "embeddings = " << on_off(embeddings) << "\n"
        << "user_rank = " << on_off(user_rank) << "\n"
        << "heuristics = " << on_off(heuristics) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// ScalerModel

ScalerModel ScalerModel::fit(std::span<const std::vector<double>> rows, std::size_t width) {
    ScalerModel s;
    s.mean.assign(width, 0.0);
    s.stddev.assign(width, kMinStd);
    if (rows.empty()) return s;
    const auto n = static_cast<double>(rows.size());
    for (const auto& row : rows)
        for (std::size_t j = 0; j < width; ++j) s.mean[j] += row[j];
    for (double& m : s.mean) m /= n;
    std::vector<double> var(width, 0.0);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < width; ++j) {
            const double d = row[j] - s.mean[j];
            var[j] += d * d;
        }
    for (std::size_t j = 0; j < width; ++j) s.stddev[j] = std::max(std::sqrt(var[j] / n), kMinStd);
    return s;
}

void ScalerModel::apply(std::span<double> row) const {
    for (std::size_t j = 0; j < mean.size(); ++j)
        row[j] = stddev[j] <= kMinStd ? 0.0 : (row[j] - mean[j]) / stddev[j];
}

// ---------------------------------------------------------------------------
// FeaturePipeline

FeaturePipeline::FeaturePipeline(FeatureConfig config, std::shared_ptr<const Resources> resources)
    : config_(std::move(config)), resources_(std::move(resources)) {
    if (!resources_) throw InputError("features", "feature pipeline needs resources");
    check_resources();
}

void FeaturePipeline::check_resources() const {
    if (config_.lexicons && resources_->lexicons.empty())
        throw InputError("features", "lexicon block enabled but no lexicons are loaded");
    if ((config_.sentiment || config_.heuristics) && !resources_->sentiment)
        throw InputError("features", "sentiment needs a scorer; load an 'mpqa' lexicon or install one");
    if (config_.embeddings && !resources_->embeddings)
        throw InputError("features", "embedding block enabled but no embedding table is loaded");
    if (config_.tfidf && config_.ngram_max < config_.ngram_min)
        throw InputError("features", "invalid TF-IDF n-gram range");
}

void FeaturePipeline::build_layout() {
    dense_names_.clear();
    if (config_.lexicons) {
        for (const auto& spec : resources_->lexicons) {
            const std::string prefix = "lex." + spec.lexicon->name() + ".";
            const auto categories = spec.lexicon->categories();
            for (const auto& c : categories) dense_names_.push_back(prefix + c);
            if (spec.weighted)
                for (const auto& c : categories) dense_names_.push_back(prefix + c + ".wsum");
            if (!spec.negative_categories.empty()) dense_names_.push_back(prefix + "negative_total");
            dense_names_.push_back(prefix + "total");
        }
    }
    if (config_.surface) {
        for (auto p : kPronouns) dense_names_.push_back("pron." + std::string(p));
        dense_names_.emplace_back("mean_word_length");
        dense_names_.emplace_back("web_links");
    }
    if (config_.patterns)
        for (auto set : kAllPatternSets) dense_names_.push_back("pattern." + std::string(to_string(set)));
    if (config_.sentiment) dense_names_.emplace_back("sentiment");
    if (config_.embeddings) {
        const std::size_t d = resources_->embeddings->dimension();
        for (std::size_t i = 0; i < d; ++i) dense_names_.push_back("emb.post." + std::to_string(i));
        for (std::size_t i = 0; i < d; ++i) dense_names_.push_back("emb.last." + std::to_string(i));
    }
    if (config_.heuristics)
        for (auto& n : CrisisHeuristics::names(static_cast<bool>(resources_->heuristics.misspelling_counter)))
            dense_names_.push_back(std::move(n));
    scaled_width_ = dense_names_.size();
    if (config_.user_rank) {
        for (const auto& r : rank_vocabulary_) dense_names_.push_back("rank." + (r.empty() ? std::string("(none)") : r));
        dense_names_.emplace_back("rank.OTHER");
    }
}

std::vector<double> FeaturePipeline::raw_dense(const LabeledPost& post, const TokenList& tokens) const {
    std::vector<double> out;
    out.reserve(scaled_width_);
    if (config_.lexicons) {
        const NegationList none;
        const NegationList& negation = config_.negation ? resources_->negation : none;
        for (const auto& spec : resources_->lexicons) {
            const CategoryCounts counts = weighted_sum(tokens, *spec.lexicon, negation);
            for (const auto& [_, n] : counts.counts) out.push_back(static_cast<double>(n));
            if (spec.weighted)
                for (const auto& [_, w] : counts.weighted) out.push_back(w);
            if (!spec.negative_categories.empty()) {
                std::size_t neg = 0;
                for (const auto& c : spec.negative_categories) neg += counts.count(c);
                out.push_back(static_cast<double>(neg));
            }
            out.push_back(static_cast<double>(counts.total()));
        }
    }
    if (config_.surface) {
        const SurfaceStats s = surface_stats(tokens);
        for (std::size_t p : s.pronouns) out.push_back(static_cast<double>(p));
        out.push_back(s.mean_word_length);
        out.push_back(static_cast<double>(s.web_links));
    }
    if (config_.patterns)
        for (auto set : kAllPatternSets) out.push_back(static_cast<double>(pattern_counts(post.body, set)));
    if (config_.sentiment) out.push_back(resources_->sentiment->score(tokens));
    if (config_.embeddings) {
        const PostEmbedding e = embed_post(post, *resources_->embeddings);
        out.insert(out.end(), e.post.begin(), e.post.end());
        out.insert(out.end(), e.last_sentence.begin(), e.last_sentence.end());
    }
    if (config_.heuristics) {
        const auto h = crisis_heuristics(post, resources_->heuristics, *resources_->sentiment).values();
        out.insert(out.end(), h.begin(), h.end());
    }
    return out;
}

void FeaturePipeline::compute_fingerprint() {
    Fnv1a hash;
    hash.update(config_.to_text());
    if (tfidf_) {
        for (std::size_t c = 0; c < tfidf_->size(); ++c) {
            hash.update(tfidf_->terms()[c]);
            hash.update(tfidf_->idf()[c]);
        }
    }
    for (double m : scaler_.mean) hash.update(m);
    for (double s : scaler_.stddev) hash.update(s);
    for (const auto& r : rank_vocabulary_) {
        hash.update(r);
        hash.update(std::string_view("\x1f", 1));
    }
    for (const auto& n : dense_names_) hash.update(n);
    if (config_.lexicons) {
        for (const auto& spec : resources_->lexicons) {
            hash.update(spec.lexicon->digest());
            hash.update(static_cast<std::uint64_t>(spec.weighted));
            for (const auto& c : spec.negative_categories) hash.update(c);
        }
        if (config_.negation)
            for (const auto& t : resources_->negation.sorted_terms()) hash.update(t);
    }
    if (config_.sentiment || config_.heuristics) hash.update(resources_->sentiment->describe());
    if (config_.embeddings) hash.update(resources_->embeddings->digest());
    fingerprint_ = hash.digest();
    if (fingerprint_ == 0) fingerprint_ = 1;  // 0 marks hand-built vectors
}

FeaturePipeline FeaturePipeline::fit(std::span<const LabeledPost> train, FeatureConfig config,
                                     std::shared_ptr<const Resources> resources) {
    if (train.empty()) throw InputError("features", "cannot fit a feature pipeline on an empty corpus");
    FeaturePipeline p(std::move(config), std::move(resources));

    std::vector<TokenList> docs;
    docs.reserve(train.size());
    for (const auto& post : train) docs.push_back(tokenize(post.body));

    if (p.config_.tfidf)
        p.tfidf_ = TfidfModel::fit(docs, p.config_.max_features, p.config_.ngram_min, p.config_.ngram_max);
    if (p.config_.user_rank) {
        std::set<std::string> ranks;
        for (const auto& post : train) ranks.insert(post.author_rank);
        p.rank_vocabulary_.assign(ranks.begin(), ranks.end());
    }
    p.build_layout();

    std::vector<std::vector<double>> rows;
    rows.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) rows.push_back(p.raw_dense(train[i], docs[i]));
    p.scaler_ = ScalerModel::fit(rows, p.scaled_width_);
    p.compute_fingerprint();
    return p;
}

FeaturePipeline FeaturePipeline::restore(FeatureConfig config, std::optional<TfidfModel> tfidf, ScalerModel scaler,
                                         std::vector<std::string> rank_vocabulary,
                                         std::shared_ptr<const Resources> resources) {
    FeaturePipeline p(std::move(config), std::move(resources));
    if (p.config_.tfidf != tfidf.has_value())
        throw InputError("features", "saved TF-IDF state does not match the feature config");
    p.tfidf_ = std::move(tfidf);
    p.rank_vocabulary_ = std::move(rank_vocabulary);
    p.build_layout();
    if (scaler.mean.size() != p.scaled_width_ || scaler.stddev.size() != p.scaled_width_)
        throw FingerprintMismatch("features", "fingerprint mismatch: saved scaler has " + std::to_string(scaler.mean.size()) +
                                                  " features but the supplied resources produce " +
                                                  std::to_string(p.scaled_width_));
    p.scaler_ = std::move(scaler);
    p.compute_fingerprint();
    return p;
}

std::size_t FeaturePipeline::dimension() const noexcept {
    return (tfidf_ ? tfidf_->size() : 0) + dense_names_.size();
}

FeatureVector FeaturePipeline::transform(const LabeledPost& post) const {
    const TokenList tokens = tokenize(post.body);
    FeatureVector v;
    v.fingerprint = fingerprint_;
    if (tfidf_) {
        v.sparse_dim = tfidf_->size();
        v.sparse = tfidf_->transform(tokens);
    }
    v.dense = raw_dense(post, tokens);
    scaler_.apply(v.dense);
    if (config_.user_rank) {
        const std::size_t base = v.dense.size();
        v.dense.resize(base + rank_vocabulary_.size() + 1, 0.0);
        auto it = std::lower_bound(rank_vocabulary_.begin(), rank_vocabulary_.end(), post.author_rank);
        if (it != rank_vocabulary_.end() && *it == post.author_rank)
            v.dense[base + static_cast<std::size_t>(it - rank_vocabulary_.begin())] = 1.0;
        else
            v.dense.back() = 1.0;
    }
    return v;
}

std::vector<FeatureVector> FeaturePipeline::transform(std::span<const LabeledPost> posts) const {
    std::vector<FeatureVector> out;
    out.reserve(posts.size());
    for (const auto& post : posts) out.push_back(transform(post));
    return out;
}

}  // namespace triage
