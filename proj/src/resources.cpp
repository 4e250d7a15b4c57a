// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/resources.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "triage/error.hpp"

namespace triage {

const LexiconSpec* Resources::find_lexicon(const std::string& name) const {
    for (const auto& spec : lexicons)
        if (spec.lexicon->name() == name) return &spec;
    return nullptr;
}

void Resources::use_default_sentiment() {
    if (const auto* mpqa = find_lexicon("mpqa")) sentiment = std::make_shared<LexiconRatioScorer>(mpqa->lexicon, negation);
}

std::vector<LexiconSpec> load_lexicon_manifest(const std::filesystem::path& manifest) {
    using json = nlohmann::json;
    std::ifstream in(manifest);
    if (!in) throw InputError("lexicons", "cannot open lexicon manifest '" + manifest.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("lexicons", "manifest '" + manifest.string() + "' is not valid JSON: " + e.what());
    }
    if (!doc.contains("lexicons") || !doc["lexicons"].is_array())
        throw InputError("lexicons", "manifest '" + manifest.string() + "' has no \"lexicons\" array");

    std::vector<LexiconSpec> specs;
    for (std::size_t i = 0; i < doc["lexicons"].size(); ++i) {
        const json& entry = doc["lexicons"][i];
        std::string label = "manifest entry " + std::to_string(i);
        try {
            LexiconMeta meta;
            meta.name = entry.at("name").get<std::string>();
            label = "manifest entry '" + meta.name + "'";
            std::filesystem::path path = entry.at("path").get<std::string>();
            if (path.is_relative()) path = manifest.parent_path() / path;
            meta.polarity_aware = entry.value("polarity_aware", false);
            if (entry.contains("polarity_map"))
                meta.polarity_map = entry["polarity_map"].get<std::map<std::string, std::string>>();
            if (!std::filesystem::exists(path))
                throw InputError("lexicons", label + ": lexicon file '" + path.string() + "' does not exist");
            if (specs.end() != std::find_if(specs.begin(), specs.end(),
                                            [&](const auto& s) { return s.lexicon->name() == meta.name; }))
                throw InputError("lexicons", label + ": duplicate lexicon name");

            LexiconSpec spec;
            spec.lexicon = std::make_shared<const Lexicon>(load_lexicon(path, std::move(meta)));
            spec.weighted = entry.value("weighted", false);
            if (entry.contains("negative_categories"))
                spec.negative_categories = entry["negative_categories"].get<std::vector<std::string>>();
            specs.push_back(std::move(spec));
        } catch (const json::exception& e) {
            throw InputError("lexicons", label + ": " + e.what());
        } catch (const InputError& e) {
            if (std::string(e.what()).find(label) != std::string::npos) throw;
            throw InputError("lexicons", label + ": " + e.what());
        }
    }
    return specs;
}

std::filesystem::path bundled_resource_dir() { return std::filesystem::path(TRIAGE_RESOURCE_DIR); }
std::filesystem::path bundled_manifest() { return bundled_resource_dir() / "lexicons" / "manifest.json"; }
std::filesystem::path bundled_embeddings() { return bundled_resource_dir() / "embeddings" / "tiny.vec"; }

std::shared_ptr<Resources> load_resources(const std::filesystem::path& manifest,
                                          const std::optional<std::filesystem::path>& embeddings) {
    auto resources = std::make_shared<Resources>();
    resources->lexicons = load_lexicon_manifest(manifest);
    if (embeddings) resources->embeddings = EmbeddingTable::load(*embeddings);
    resources->use_default_sentiment();
    return resources;
}

}  // namespace triage
