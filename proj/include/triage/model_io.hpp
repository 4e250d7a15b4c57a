// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "triage/pipeline.hpp"
#include "triage/svm.hpp"

namespace triage {

inline constexpr int kModelFormatVersion = 1;

/// Where a model's lexicons and embeddings were loaded from. Stored in the
/// model file so `eval` and `predict` can reload them by default.
struct ResourcePaths {
    std::string manifest;
    std::optional<std::string> embeddings;
};

/// Everything a model file holds, before resources are attached.
struct SavedModel {
    FeatureConfig features;
    std::optional<TfidfModel> tfidf;
    ScalerModel scaler;
    std::vector<std::string> rank_vocabulary;
    LinearSvmModel svm;
    ResourcePaths resources;
};

/// Self-describing JSON document ({"format": "triage-model", "version": 1, ...}).
/// Output is byte-identical for identical inputs.
std::string serialize_model(const FeaturePipeline& pipeline, const LinearSvmModel& model,
                            const ResourcePaths& resources);
void save_model(const std::filesystem::path& path, const FeaturePipeline& pipeline, const LinearSvmModel& model,
                const ResourcePaths& resources);

/// Throws InputError for malformed documents and unknown versions.
SavedModel parse_model(const std::string& text);
SavedModel load_model(const std::filesystem::path& path);

/// Rebuilds the fitted pipeline over `resources`. Throws FingerprintMismatch
/// when the result differs from the pipeline the model was trained with.
FeaturePipeline restore_pipeline(const SavedModel& saved, std::shared_ptr<const Resources> resources);

}  // namespace triage
