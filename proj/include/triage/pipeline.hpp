// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triage/corpus.hpp"
#include "triage/feature_vector.hpp"
#include "triage/resources.hpp"
#include "triage/tfidf.hpp"

namespace triage {

/// Which feature blocks a pipeline emits.
///
/// Vector layout: the TF-IDF block is the sparse part; the dense part holds,
/// in order, lexicon counts, surface statistics, pattern counts, sentiment,
/// post and last-sentence embeddings, crisis heuristics (all z-scored) and
/// finally the unscaled user-rank one-hot with a trailing OTHER column.
struct FeatureConfig {
    std::string name = "custom";
    bool tfidf = false;
    std::size_t max_features = 5000;
    std::size_t ngram_min = 1;
    std::size_t ngram_max = 2;
    bool lexicons = false;
    bool negation = false;  // apply the negation rule inside the lexicon block
    bool surface = false;   // pronouns, mean word length, web links
    bool patterns = false;  // helpline, self-harm and advisor phrase counts
    bool sentiment = false;
    bool embeddings = false;
    bool user_rank = false;
    bool heuristics = false;

    bool operator==(const FeatureConfig&) const = default;

    /// "only-lexicons", "lexicons-negation", "tfidf-lexicons",
    /// "tfidf-lexicons-negation", "full" and "full-heuristics".
    static FeatureConfig preset(std::string_view name);
    static const std::vector<std::string>& preset_names();
    /// The five feature-set comparison rows, in table order.
    static std::vector<FeatureConfig> ablation_presets();

    /// `key = value` lines; `preset = <name>` starts from a preset. Unknown
    /// keys or values throw InputError.
    static FeatureConfig parse(std::string_view text);
    std::string to_text() const;
};

/// Per-feature standardization fitted on the training rows.
struct ScalerModel {
    static constexpr double kMinStd = 1e-8;

    std::vector<double> mean;
    std::vector<double> stddev;  // max(observed population std, kMinStd)

    static ScalerModel fit(std::span<const std::vector<double>> rows, std::size_t width);
    /// Features that were constant on the training rows map to 0.
    void apply(std::span<double> row) const;
};

/// A fitted feature extractor. Immutable after fit; transform is thread safe.
class FeaturePipeline {
public:
    static FeaturePipeline fit(std::span<const LabeledPost> train, FeatureConfig config,
                               std::shared_ptr<const Resources> resources);

    /// Rebuilds a pipeline from saved state, e.g. from a model file.
    static FeaturePipeline restore(FeatureConfig config, std::optional<TfidfModel> tfidf, ScalerModel scaler,
                                   std::vector<std::string> rank_vocabulary,
                                   std::shared_ptr<const Resources> resources);

    FeatureVector transform(const LabeledPost& post) const;
    std::vector<FeatureVector> transform(std::span<const LabeledPost> posts) const;

    const FeatureConfig& config() const noexcept { return config_; }
    const std::optional<TfidfModel>& tfidf() const noexcept { return tfidf_; }
    const ScalerModel& scaler() const noexcept { return scaler_; }
    const std::vector<std::string>& rank_vocabulary() const noexcept { return rank_vocabulary_; }
    /// Names of the dense block, scaled features first, then rank columns.
    const std::vector<std::string>& dense_names() const noexcept { return dense_names_; }
    std::size_t scaled_width() const noexcept { return scaled_width_; }
    std::size_t dimension() const noexcept;
    std::uint64_t fingerprint() const noexcept { return fingerprint_; }

private:
    FeaturePipeline(FeatureConfig config, std::shared_ptr<const Resources> resources);
    void check_resources() const;
    void build_layout();
    std::vector<double> raw_dense(const LabeledPost& post, const TokenList& tokens) const;
    void compute_fingerprint();

    FeatureConfig config_;
    std::shared_ptr<const Resources> resources_;
    std::optional<TfidfModel> tfidf_;
    ScalerModel scaler_;
    std::vector<std::string> rank_vocabulary_;
    std::vector<std::string> dense_names_;
    std::size_t scaled_width_ = 0;
    std::uint64_t fingerprint_ = 0;
};

}  // namespace triage
