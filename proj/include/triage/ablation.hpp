// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "triage/corpus.hpp"
#include "triage/grid_search.hpp"
#include "triage/metrics.hpp"
#include "triage/pipeline.hpp"

namespace triage {

struct AblationRow {
    std::string name;
    EvalReport report;
};

/// Fits each feature config on `train` only, trains `classifier` and
/// evaluates on `test`. Both corpora must be labeled.
std::vector<AblationRow> ablation_run(std::span<const LabeledPost> train, std::span<const LabeledPost> test,
                                      std::span<const FeatureConfig> rows, std::shared_ptr<const Resources> resources,
                                      const ClassifierConfig& classifier = {});

/// Aligned plain-text table: one line per row with the six metrics.
std::string format_ablation_table(std::span<const AblationRow> rows);

/// One JSON object per line: config name, six metrics, confusion matrix.
std::string ablation_jsonl(std::span<const AblationRow> rows);

/// The JSON record used for a single report (also by `eval`).
std::string report_json(const std::string& name, const EvalReport& report);

}  // namespace triage
