// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "triage/ablation.hpp"
#include "triage/corpus.hpp"
#include "triage/error.hpp"
#include "triage/grid_search.hpp"
#include "triage/model_io.hpp"
#include "triage/pipeline.hpp"
#include "triage/resources.hpp"
#include "triage/synthetic.hpp"

namespace triage {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// RunConfig

#define TRIAGE_RUN_FIELDS(X)                                                                                      \
    X(command) X(train) X(test) X(input) X(model) X(output) X(manifest) X(embeddings) X(out_dir) X(preset)          \
        X(features_file) X(rows) X(classifier) X(C) X(penalty) X(class_weight) X(max_iterations) X(k) X(alpha)      \
            X(grid) X(folds) X(select_metric) X(seed) X(format)

std::string RunConfig::to_json() const {
    ordered_json j;
#define TRIAGE_WRITE(field) j[#field] = field;
    TRIAGE_RUN_FIELDS(TRIAGE_WRITE)
#undef TRIAGE_WRITE
    return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(const std::string& text) {
    RunConfig c;
    try {
        const auto j = ordered_json::parse(text);
        if (!j.is_object()) throw InputError("cli", "run config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            bool known = false;
#define TRIAGE_READ(field)              \
    if (key == #field) {                \
        value.get_to(c.field);          \
        known = true;                   \
    }
            TRIAGE_RUN_FIELDS(TRIAGE_READ)
#undef TRIAGE_READ
            if (!known) throw InputError("cli", "unknown run config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError("cli", std::string("malformed run config: ") + e.what());
    }
    return c;
}

#undef TRIAGE_RUN_FIELDS

// ---------------------------------------------------------------------------
// Helpers

namespace {

std::string read_file(const fs::path& path, const char* module) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(module, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cli", "cannot write '" + path.string() + "'");
    out << text;
}

std::vector<LabeledPost> load_corpus(const std::string& path, const char* what) {
    if (path.empty()) throw InputError("cli", std::string("missing --") + what + " corpus path");
    return load_posts(path, format_for_path(path));
}

std::vector<LabeledPost> load_labeled(const std::string& path, const char* what) {
    auto posts = load_corpus(path, what);
    require_labels(posts);
    return posts;
}

std::string absolute_string(const fs::path& p) { return fs::weakly_canonical(fs::absolute(p)).string(); }

ResourcePaths resolve_resource_paths(const RunConfig& c) {
    ResourcePaths paths;
    paths.manifest = c.manifest.empty() ? absolute_string(bundled_manifest()) : absolute_string(c.manifest);
    if (c.embeddings != "none")
        paths.embeddings = c.embeddings.empty() ? absolute_string(bundled_embeddings()) : absolute_string(c.embeddings);
    return paths;
}

std::shared_ptr<Resources> load_resource_paths(const ResourcePaths& paths) {
    std::optional<fs::path> emb;
    if (paths.embeddings) emb = *paths.embeddings;
    return load_resources(paths.manifest, emb);
}

FeatureConfig resolve_features(const RunConfig& c) {
    if (!c.features_file.empty()) return FeatureConfig::parse(read_file(c.features_file, "features"));
    return FeatureConfig::preset(c.preset);
}

ClassifierConfig resolve_classifier(const RunConfig& c) {
    ClassifierConfig cc;
    cc.kind = parse_classifier_kind(c.classifier);
    cc.svm.C = c.C;
    cc.svm.penalty = parse_penalty(c.penalty);
    cc.svm.class_weight = parse_class_weight(c.class_weight);
    cc.svm.max_iterations = c.max_iterations;
    cc.svm.seed = c.seed;
    cc.svm.validate();
    cc.k = c.k;
    cc.alpha = c.alpha;
    return cc;
}

ParamGrid resolve_grid(const RunConfig& c, ClassifierKind kind) {
    if (c.grid != "default") return ParamGrid::parse(c.grid);
    switch (kind) {
        case ClassifierKind::Knn: return ParamGrid::default_knn();
        case ClassifierKind::NaiveBayes: {
            ParamGrid g;
            g.alpha = {0.1, 0.5, 1.0, 2.0};
            return g;
        }
        case ClassifierKind::Svm: break;
    }
    return ParamGrid::default_svm();
}

void print_metrics(std::ostream& out, const EvalReport& r) {
    out << std::fixed << std::setprecision(4) << "macro_f1_non_green\t" << r.macro_f1_non_green << "\n"
        << "flagged_f1\t" << r.flagged_f1 << "\n"
        << "urgent_f1\t" << r.urgent_f1 << "\n"
        << "crisis_f1\t" << r.crisis_f1 << "\n";
    out << std::defaultfloat;
}

std::string confusion_text(const EvalReport& r) {
    std::ostringstream out;
    out << "confusion (rows: true, columns: predicted)\n" << std::setw(8) << "";
    for (TriageLabel l : kAllLabels) out << std::setw(8) << to_string(l);
    out << "\n";
    for (TriageLabel t : kAllLabels) {
        out << std::setw(8) << to_string(t);
        for (TriageLabel p : kAllLabels) out << std::setw(8) << r.confusion.counts[index_of(t)][index_of(p)];
        out << "\n";
    }
    out << "\n" << std::setw(8) << "label" << std::setw(11) << "precision" << std::setw(9) << "recall" << std::setw(9)
        << "f1" << "\n"
        << std::fixed << std::setprecision(4);
    for (TriageLabel l : kAllLabels) {
        const Prf& p = r.per_class[index_of(l)];
        out << std::setw(8) << to_string(l) << std::setw(11) << p.precision << std::setw(9) << p.recall << std::setw(9)
            << p.f1 << "\n";
    }
    return out.str();
}

void write_run_config(const RunConfig& c) { write_file(fs::path(c.out_dir) / "run_config.json", c.to_json()); }

// ---------------------------------------------------------------------------
// Commands

int cmd_train(const RunConfig& c, std::ostream& out) {
    const ClassifierConfig base = resolve_classifier(c);
    if (base.kind != ClassifierKind::Svm)
        throw InputError("cli", "train writes linear SVM models only; compare baselines with `ablate --classifier`");
    const FeatureConfig features = resolve_features(c);
    const ResourcePaths paths = resolve_resource_paths(c);
    const auto resources = load_resource_paths(paths);
    const auto train = load_labeled(c.train, "train");
    const auto y = labels_of(train);

    const FeaturePipeline pipeline = FeaturePipeline::fit(train, features, resources);
    const auto x = pipeline.transform(train);

    std::ostringstream log;
    log << "features: " << features.name << "\n" << "feature_dimension: " << pipeline.dimension() << "\n"
        << "train_posts: " << train.size() << "\n";

    ClassifierConfig chosen = base;
    if (!c.grid.empty()) {
        const ParamGrid grid = resolve_grid(c, base.kind);
        const SelectionMetric metric = parse_selection_metric(c.select_metric);
        const GridResult result = grid_search(x, y, base, grid, c.folds, c.seed, metric);
        log << "grid: " << grid.to_text() << "\n" << "folds: " << c.folds << "\n"
            << "selection_metric: " << to_string(metric) << "\n";
        for (const auto& cell : result.cells) {
            log << "cell: " << cell.config.describe() << " mean=" << cell.mean_score << " folds=";
            for (std::size_t i = 0; i < cell.fold_scores.size(); ++i) log << (i ? "," : "") << cell.fold_scores[i];
            log << "\n";
        }
        log << "best_cv_score: " << result.best_score << "\n";
        chosen = result.best;
    }
    const LinearSvmModel model = train_svm(x, y, chosen.svm);
    log << "C: " << chosen.svm.C << "\n"
        << "penalty: " << to_string(chosen.svm.penalty) << "\n"
        << "class_weight: " << to_string(chosen.svm.class_weight) << "\n"
        << "max_iterations: " << chosen.svm.max_iterations << "\n";
    for (TriageLabel l : kAllLabels)
        log << "iterations." << to_string(l) << ": " << model.iterations[index_of(l)] << "\n"
            << "objective." << to_string(l) << ": " << model.objective[index_of(l)] << "\n";

    const fs::path model_path = c.model.empty() ? fs::path(c.out_dir) / "model.json" : fs::path(c.model);
    if (model_path.has_parent_path()) fs::create_directories(model_path.parent_path());
    save_model(model_path, pipeline, model, paths);
    write_file(fs::path(c.out_dir) / "train_log.txt", log.str());
    write_run_config(c);
    out << "model written to " << model_path.string() << "\n" << log.str();
    return 0;
}

struct LoadedModel {
    SavedModel saved;
    FeaturePipeline pipeline;
};

LoadedModel load_for_inference(const RunConfig& c) {
    if (c.model.empty()) throw InputError("cli", "missing --model path");
    SavedModel saved = load_model(c.model);
    ResourcePaths paths = saved.resources;
    if (!c.manifest.empty()) paths.manifest = c.manifest;
    if (c.embeddings == "none") paths.embeddings.reset();
    else if (!c.embeddings.empty()) paths.embeddings = c.embeddings;
    FeaturePipeline pipeline = restore_pipeline(saved, load_resource_paths(paths));
    return {std::move(saved), std::move(pipeline)};
}

int cmd_eval(const RunConfig& c, std::ostream& out) {
    const LoadedModel m = load_for_inference(c);
    const auto test = load_labeled(c.test, "test");
    std::vector<TriageLabel> predicted;
    predicted.reserve(test.size());
    for (const auto& post : test) predicted.push_back(predict(m.saved.svm, m.pipeline.transform(post)).label);
    const EvalReport report = official_metrics(labels_of(test), predicted);
    write_file(fs::path(c.out_dir) / "eval_report.json", report_json(m.saved.features.name, report) + "\n");
    write_file(fs::path(c.out_dir) / "eval_report.txt", confusion_text(report));
    write_run_config(c);
    print_metrics(out, report);
    return 0;
}

int cmd_ablate(const RunConfig& c, std::ostream& out) {
    std::vector<FeatureConfig> rows;
    if (c.rows.empty()) rows = FeatureConfig::ablation_presets();
    for (const auto& name : c.rows) rows.push_back(FeatureConfig::preset(name));
    if (!c.features_file.empty()) rows.push_back(FeatureConfig::parse(read_file(c.features_file, "features")));
    const ClassifierConfig classifier = resolve_classifier(c);
    const auto resources = load_resource_paths(resolve_resource_paths(c));
    const auto train = load_labeled(c.train, "train");
    const auto test = load_labeled(c.test, "test");
    const auto results = ablation_run(train, test, rows, resources, classifier);
    const std::string table = format_ablation_table(results);
    write_file(fs::path(c.out_dir) / "ablation.txt", table);
    write_file(fs::path(c.out_dir) / "ablation.jsonl", ablation_jsonl(results));
    write_run_config(c);
    out << "classifier: " << classifier.describe() << "\n" << table;
    return 0;
}

int cmd_predict(const RunConfig& c, std::ostream& out) {
    const LoadedModel m = load_for_inference(c);
    const auto posts = load_corpus(c.input, "input");
    std::ostringstream buf;
    buf << std::fixed << std::setprecision(6);
    for (const auto& post : posts) {
        const Prediction p = predict(m.saved.svm, m.pipeline.transform(post));
        buf << post.post_id << '\t' << to_string(p.label);
        for (double s : p.scores) buf << '\t' << s;
        buf << '\n';
    }
    if (c.output.empty() || c.output == "-") {
        out << buf.str();
    } else {
        write_file(c.output, buf.str());
    }
    return 0;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
    const auto posts = load_corpus(c.input, "input");
    const CorpusStats s = corpus_stats(posts);
    out << "label\tcount\tpercent\n" << std::fixed << std::setprecision(2);
    for (TriageLabel l : kAllLabels)
        out << to_string(l) << '\t' << s.counts[index_of(l)] << '\t' << s.percentages[index_of(l)] << "\n";
    out << "total\t" << s.total << "\t100.00\n" << std::defaultfloat;
    return 0;
}

int cmd_gen_synthetic(const RunConfig& c, std::ostream& out) {
    CorpusFormat format;
    if (c.format == "jsonl") format = CorpusFormat::Jsonl;
    else if (c.format == "csv") format = CorpusFormat::Csv;
    else throw InputError("cli", "unknown corpus format '" + c.format + "' (expected jsonl or csv)");
    const SyntheticSplit split = standard_synthetic_split(c.seed);
    const fs::path dir(c.out_dir);
    fs::create_directories(dir);
    const fs::path train = dir / ("train." + c.format);
    const fs::path test = dir / ("test." + c.format);
    save_posts(train, split.train, format);
    save_posts(test, split.test, format);
    write_run_config(c);
    out << "wrote " << split.train.size() << " posts to " << train.string() << "\n"
        << "wrote " << split.test.size() << " posts to " << test.string() << "\n";
    return 0;
}

// Scans for `--config PATH` ahead of the real parse so its values become flag defaults.
RunConfig initial_config(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
        if (!path.empty()) return RunConfig::from_json(read_file(path, "cli"));
    }
    return {};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    try {
        c = initial_config(args);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Triage severity classifier for peer-support forum posts", "triage"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "Replay a run_config.json; explicit flags override it");

    auto add_paths = [&](CLI::App* sub) {
        sub->add_option("--manifest", c.manifest, "Lexicon manifest (default: bundled stand-ins)");
        sub->add_option("--embeddings", c.embeddings, "Word-vector table (default: bundled; 'none' disables)");
        sub->add_option("--out-dir", c.out_dir, "Directory for outputs");
    };
    auto add_features = [&](CLI::App* sub) {
        sub->add_option("--preset", c.preset, "Feature preset");
        sub->add_option("--features", c.features_file, "Feature config file (key = value lines)");
    };
    auto add_classifier = [&](CLI::App* sub) {
        sub->add_option("--C", c.C, "SVM regularization trade-off");
        sub->add_option("--penalty", c.penalty, "l1 or l2");
        sub->add_option("--class-weight", c.class_weight, "uniform or balanced");
        sub->add_option("--max-iterations", c.max_iterations, "SVM iteration cap");
        sub->add_option("--seed", c.seed, "Seed for folds and generators");
    };

    CLI::App* train = app.add_subcommand("train", "Fit features and a linear SVM, write a model file");
    train->add_option("--train", c.train, "Labeled training corpus (.jsonl or .csv)");
    train->add_option("--model", c.model, "Model output path (default: <out-dir>/model.json)");
    train->add_option("--grid", c.grid, "Grid, e.g. 'C=0.1,1,10;penalty=l1,l2', or 'default'");
    train->add_option("--folds", c.folds, "Cross-validation folds");
    train->add_option("--select-metric", c.select_metric, "Grid selection metric");
    add_paths(train);
    add_features(train);
    add_classifier(train);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a model on a labeled corpus");
    eval->add_option("--model", c.model, "Model file");
    eval->add_option("--test", c.test, "Labeled test corpus");
    add_paths(eval);

    CLI::App* ablate = app.add_subcommand("ablate", "Compare feature sets on a train/test split");
    ablate->add_option("--train", c.train, "Labeled training corpus");
    ablate->add_option("--test", c.test, "Labeled test corpus");
    ablate->add_option("--rows", c.rows, "Preset names to run (default: the five comparison presets)")->delimiter(',');
    ablate->add_option("--features", c.features_file, "Extra custom row from a feature config file");
    ablate->add_option("--classifier", c.classifier, "svm, nb or knn");
    ablate->add_option("--k", c.k, "KNN neighbours");
    ablate->add_option("--alpha", c.alpha, "Naive Bayes smoothing");
    add_paths(ablate);
    add_classifier(ablate);

    CLI::App* predict_cmd = app.add_subcommand("predict", "Label posts with a model (TSV: id, label, 4 scores)");
    predict_cmd->add_option("--model", c.model, "Model file");
    predict_cmd->add_option("--input", c.input, "Corpus to label; labels are optional");
    predict_cmd->add_option("--output", c.output, "Output file (default: stdout)");
    add_paths(predict_cmd);

    CLI::App* stats = app.add_subcommand("stats", "Label distribution of a corpus");
    stats->add_option("--input", c.input, "Labeled corpus");

    CLI::App* gen = app.add_subcommand("gen-synthetic", "Write the planted-signal synthetic train/test corpus");
    gen->add_option("--out-dir", c.out_dir, "Output directory");
    gen->add_option("--seed", c.seed, "Generator seed");
    gen->add_option("--format", c.format, "jsonl or csv");

    for (CLI::App* sub : {train, eval, ablate, predict_cmd, stats, gen})
        sub->add_option("--config", config_path, "Replay a run_config.json; explicit flags override it");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: [cli] " << e.what() << "\n";
        return 2;
    }

    try {
        for (CLI::App* sub : app.get_subcommands()) {
            if (sub->get_help_ptr() && sub->get_help_ptr()->count()) continue;
            c.command = sub->get_name();
        }
        if (c.command == "train") return cmd_train(c, out);
        if (c.command == "eval") return cmd_eval(c, out);
        if (c.command == "ablate") return cmd_ablate(c, out);
        if (c.command == "predict") return cmd_predict(c, out);
        if (c.command == "stats") return cmd_stats(c, out);
        if (c.command == "gen-synthetic") return cmd_gen_synthetic(c, out);
        throw InputError("cli", "unknown command '" + c.command + "'");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: [internal] " << e.what() << "\n";
        return 1;
    }
}

}  // namespace triage
