// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace triage {

/// Everything a CLI run depends on. Written as run_config.json next to the
/// outputs; `--config run_config.json` replays it, and explicit flags
/// override the file.
struct RunConfig {
    std::string command;
    std::string train;
    std::string test;
    std::string input;
    std::string model;
    std::string output;
    std::string manifest;    // empty: bundled stand-in lexicons
    std::string embeddings;  // empty: bundled table; "none" disables
    std::string out_dir = ".";
    std::string preset = "tfidf-lexicons-negation";
    std::string features_file;
    std::vector<std::string> rows;
    std::string classifier = "svm";
    double C = 1.0;
    std::string penalty = "l1";
    std::string class_weight = "uniform";
    std::size_t max_iterations = 2000;
    std::size_t k = 5;
    double alpha = 1.0;
    std::string grid;  // empty: no search; "default" uses the standard grid
    std::size_t folds = 5;
    std::string select_metric = "macro_f1_non_green";
    std::uint64_t seed = 0;
    std::string format = "jsonl";

    std::string to_json() const;
    /// Throws InputError on malformed JSON or unknown keys.
    static RunConfig from_json(const std::string& text);
};

/// Runs one CLI invocation. `args` excludes the program name.
/// Returns 0 on success, 2 for user or configuration errors, 1 otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triage
