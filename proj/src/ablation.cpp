// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/ablation.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace triage {

std::vector<AblationRow> ablation_run(std::span<const LabeledPost> train, std::span<const LabeledPost> test,
                                      std::span<const FeatureConfig> rows, std::shared_ptr<const Resources> resources,
                                      const ClassifierConfig& classifier) {
    std::vector<AblationRow> out;
    if (rows.empty()) return out;
    require_labels(train);
    require_labels(test);
    const auto train_y = labels_of(train);
    const auto test_y = labels_of(test);
    for (const FeatureConfig& config : rows) {
        const FeaturePipeline pipeline = FeaturePipeline::fit(train, config, resources);
        const auto train_x = pipeline.transform(train);
        const auto test_x = pipeline.transform(test);
        const Classifier model = train_classifier(train_x, train_y, classifier);
        out.push_back({config.name, official_metrics(test_y, predict_labels(model, test_x))});
    }
    return out;
}

namespace {

struct Column {
    const char* header;
    double EvalReport::*field;
};

constexpr Column kColumns[] = {
    {"macro_f1_non_green", &EvalReport::macro_f1_non_green},
    {"flagged_f1", &EvalReport::flagged_f1},
    {"urgent_f1", &EvalReport::urgent_f1},
    {"crisis_f1", &EvalReport::crisis_f1},
    {"accuracy", &EvalReport::accuracy},
    {"macro_f1_all", &EvalReport::macro_f1_all},
};

}  // namespace

std::string format_ablation_table(std::span<const AblationRow> rows) {
    std::size_t name_width = 6;
    for (const auto& r : rows) name_width = std::max(name_width, r.name.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width)) << "config";
    for (const auto& c : kColumns) out << "  " << std::right << std::setw(18) << c.header;
    out << "\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << r.name;
        for (const auto& c : kColumns) out << "  " << std::right << std::setw(18) << r.report.*(c.field);
        out << "\n";
    }
    return out.str();
}

std::string report_json(const std::string& name, const EvalReport& report) {
    nlohmann::ordered_json j;
    j["config"] = name;
    for (const auto& c : kColumns) j[c.header] = report.*(c.field);
    j["count"] = report.count;
    nlohmann::ordered_json cm = nlohmann::ordered_json::array();
    for (const auto& row : report.confusion.counts) cm.push_back(row);
    j["confusion"] = cm;
    nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
    for (TriageLabel l : kAllLabels) {
        const Prf& p = report.per_class[index_of(l)];
        per_class[std::string(to_string(l))] = {{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
    }
    j["per_class"] = per_class;
    return j.dump();
}

std::string ablation_jsonl(std::span<const AblationRow> rows) {
    std::string out;
    for (const auto& r : rows) out += report_json(r.name, r.report) + "\n";
    return out;
}

}  // namespace triage
