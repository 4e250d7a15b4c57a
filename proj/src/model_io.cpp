// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triage/error.hpp"

namespace triage {

using nlohmann::ordered_json;

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
    if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw InputError("model_io", "malformed fingerprint '" + s + "'");
    return std::stoull(s, nullptr, 16);
}

}  // namespace

std::string serialize_model(const FeaturePipeline& pipeline, const LinearSvmModel& model,
                            const ResourcePaths& resources) {
    if (model.fingerprint != pipeline.fingerprint() || model.dimension != pipeline.dimension())
        throw FingerprintMismatch("model_io", "classifier was not trained on this pipeline's features");
    ordered_json j;
    j["format"] = "triage-model";
    j["version"] = kModelFormatVersion;
    j["fingerprint"] = hex64(pipeline.fingerprint());
    j["features"] = pipeline.config().to_text();

    ordered_json res;
    res["manifest"] = resources.manifest;
    res["embeddings"] = resources.embeddings ? ordered_json(*resources.embeddings) : ordered_json(nullptr);
    j["resources"] = res;

    if (const auto& t = pipeline.tfidf()) {
        ordered_json tj;
        tj["min_n"] = t->min_n();
        tj["max_n"] = t->max_n();
        tj["max_features"] = t->max_features();
        tj["terms"] = t->terms();
        tj["idf"] = t->idf();
        j["tfidf"] = tj;
    } else {
        j["tfidf"] = nullptr;
    }
    j["scaler"] = {{"mean", pipeline.scaler().mean}, {"stddev", pipeline.scaler().stddev}};
    j["rank_vocabulary"] = pipeline.rank_vocabulary();
    j["dense_names"] = pipeline.dense_names();

    ordered_json cls;
    cls["kind"] = "linear-svm";
    cls["C"] = model.config.C;
    cls["penalty"] = std::string(to_string(model.config.penalty));
    cls["class_weight"] = std::string(to_string(model.config.class_weight));
    cls["max_iterations"] = model.config.max_iterations;
    cls["seed"] = model.config.seed;
    cls["dimension"] = model.dimension;
    ordered_json labels = ordered_json::array();
    ordered_json weights = ordered_json::array();
    ordered_json bias = ordered_json::array();
    for (TriageLabel l : kAllLabels) {
        labels.push_back(std::string(to_string(l)));
        weights.push_back(model.weights[index_of(l)]);
        bias.push_back(model.bias[index_of(l)]);
    }
    cls["labels"] = labels;
    cls["bias"] = bias;
    cls["weights"] = weights;
    j["classifier"] = cls;
    return j.dump(1) + "\n";
}

void save_model(const std::filesystem::path& path, const FeaturePipeline& pipeline, const LinearSvmModel& model,
                const ResourcePaths& resources) {
    const std::string text = serialize_model(pipeline, model, resources);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("model_io", "cannot write model file '" + path.string() + "'");
    out << text;
    if (!out) throw InputError("model_io", "failed writing model file '" + path.string() + "'");
}

SavedModel parse_model(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("model_io", std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || j.value("format", "") != "triage-model")
            throw InputError("model_io", "not a triage model file");
        const int version = j.at("version").get<int>();
        if (version != kModelFormatVersion)
            throw InputError("model_io", "unsupported model file version " + std::to_string(version) +
                                             " (this build reads version " + std::to_string(kModelFormatVersion) + ")");
        SavedModel m;
        m.features = FeatureConfig::parse(j.at("features").get<std::string>());
        const auto& res = j.at("resources");
        m.resources.manifest = res.at("manifest").get<std::string>();
        if (!res.at("embeddings").is_null()) m.resources.embeddings = res.at("embeddings").get<std::string>();

        if (!j.at("tfidf").is_null()) {
            const auto& t = j.at("tfidf");
            m.tfidf = TfidfModel(t.at("terms").get<std::vector<std::string>>(), t.at("idf").get<std::vector<double>>(),
                                 t.at("min_n").get<std::size_t>(), t.at("max_n").get<std::size_t>(),
                                 t.at("max_features").get<std::size_t>());
        }
        m.scaler.mean = j.at("scaler").at("mean").get<std::vector<double>>();
        m.scaler.stddev = j.at("scaler").at("stddev").get<std::vector<double>>();
        m.rank_vocabulary = j.at("rank_vocabulary").get<std::vector<std::string>>();

        const auto& cls = j.at("classifier");
        if (cls.at("kind").get<std::string>() != "linear-svm")
            throw InputError("model_io", "unsupported classifier kind '" + cls.at("kind").get<std::string>() + "'");
        LinearSvmModel& svm = m.svm;
        svm.config.C = cls.at("C").get<double>();
        svm.config.penalty = parse_penalty(cls.at("penalty").get<std::string>());
        svm.config.class_weight = parse_class_weight(cls.at("class_weight").get<std::string>());
        svm.config.max_iterations = cls.at("max_iterations").get<std::size_t>();
        svm.config.seed = cls.at("seed").get<std::uint64_t>();
        svm.dimension = cls.at("dimension").get<std::size_t>();
        svm.fingerprint = parse_hex64(j.at("fingerprint").get<std::string>());
        const auto labels = cls.at("labels").get<std::vector<std::string>>();
        const auto& weights = cls.at("weights");
        const auto& bias = cls.at("bias");
        if (labels.size() != kLabelCount || weights.size() != kLabelCount || bias.size() != kLabelCount)
            throw InputError("model_io", "classifier must have one weight vector per label");
        for (std::size_t i = 0; i < kLabelCount; ++i) {
            const auto label = parse_label(labels[i]);
            if (!label) throw InputError("model_io", "unknown label '" + labels[i] + "' in model file");
            const std::size_t l = index_of(*label);
            svm.weights[l] = weights[i].get<std::vector<double>>();
            svm.bias[l] = bias[i].get<double>();
            if (svm.weights[l].size() != svm.dimension)
                throw InputError("model_io", "weight vector for '" + labels[i] + "' has the wrong dimension");
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("model_io", std::string("malformed model file: ") + e.what());
    }
}

SavedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("model_io", "cannot read model file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

FeaturePipeline restore_pipeline(const SavedModel& saved, std::shared_ptr<const Resources> resources) {
    FeaturePipeline p = FeaturePipeline::restore(saved.features, saved.tfidf, saved.scaler, saved.rank_vocabulary,
                                                 std::move(resources));
    if (p.fingerprint() != saved.svm.fingerprint || p.dimension() != saved.svm.dimension)
        throw FingerprintMismatch("model_io", "the supplied resources or feature config do not match the model's "
                                              "fitted pipeline (fingerprint " +
                                                  hex64(p.fingerprint()) + " vs " + hex64(saved.svm.fingerprint) + ")");
    return p;
}

}  // namespace triage
