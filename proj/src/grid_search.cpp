// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/grid_search.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "triage/corpus.hpp"
#include "triage/error.hpp"

namespace triage {

std::string_view to_string(ClassifierKind kind) noexcept {
    switch (kind) {
        case ClassifierKind::Svm: return "svm";
        case ClassifierKind::NaiveBayes: return "nb";
        case ClassifierKind::Knn: return "knn";
    }
    return "svm";
}

ClassifierKind parse_classifier_kind(std::string_view name) {
    if (name == "svm") return ClassifierKind::Svm;
    if (name == "nb" || name == "naive-bayes") return ClassifierKind::NaiveBayes;
    if (name == "knn") return ClassifierKind::Knn;
    throw InputError("classify", "unknown classifier '" + std::string(name) + "' (expected svm, nb or knn)");
}

std::string ClassifierConfig::describe() const {
    std::ostringstream out;
    out << to_string(kind);
    switch (kind) {
        case ClassifierKind::Svm:
            out << " C=" << svm.C << " penalty=" << to_string(svm.penalty) << " class_weight=" << to_string(svm.class_weight)
                << " max_iterations=" << svm.max_iterations;
            break;
        case ClassifierKind::NaiveBayes: out << " alpha=" << alpha; break;
        case ClassifierKind::Knn: out << " k=" << k; break;
    }
    return out.str();
}

Classifier train_classifier(std::span<const FeatureVector> x, std::span<const TriageLabel> y,
                            const ClassifierConfig& config) {
    switch (config.kind) {
        case ClassifierKind::NaiveBayes: return train_naive_bayes(x, y, config.alpha);
        case ClassifierKind::Knn: return train_knn(x, y, config.k);
        case ClassifierKind::Svm: break;
    }
    return train_svm(x, y, config.svm);
}

Prediction predict(const Classifier& model, const FeatureVector& x) {
    return std::visit([&](const auto& m) { return predict(m, x); }, model);
}

std::vector<TriageLabel> predict_labels(const Classifier& model, std::span<const FeatureVector> x) {
    std::vector<TriageLabel> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(predict(model, v).label);
    return out;
}

// ---------------------------------------------------------------------------
// ParamGrid

bool ParamGrid::empty() const noexcept {
    return C.empty() && penalty.empty() && class_weight.empty() && max_iterations.empty() && k.empty() && alpha.empty();
}

std::size_t ParamGrid::cell_count() const noexcept {
    if (empty()) return 0;
    auto f = [](std::size_t n) { return n == 0 ? std::size_t{1} : n; };
    return f(C.size()) * f(penalty.size()) * f(class_weight.size()) * f(max_iterations.size()) * f(k.size()) *
           f(alpha.size());
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        std::string part(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        const auto b = part.find_first_not_of(" \t");
        const auto e = part.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : part.substr(b, e - b + 1));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_real(const std::string& key, const std::string& v) {
    double out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
        throw InputError("classify", "grid key '" + key + "' expects numbers, got '" + v + "'");
    return out;
}

double parse_positive(const std::string& key, const std::string& v) {
    const double out = parse_real(key, v);
    if (!(out > 0)) throw InputError("classify", "grid key '" + key + "' expects positive values, got '" + v + "'");
    return out;
}

std::size_t parse_size(const std::string& key, const std::string& v) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw InputError("classify", "grid key '" + key + "' expects integers, got '" + v + "'");
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& key, const std::vector<std::string>& values) {
    std::vector<std::size_t> out;
    for (const auto& v : values) {
        const auto dots = v.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_size(key, v));
            continue;
        }
        const std::size_t lo = parse_size(key, v.substr(0, dots));
        const std::size_t hi = parse_size(key, v.substr(dots + 2));
        if (hi < lo) throw InputError("classify", "grid key '" + key + "' has an empty range '" + v + "'");
        for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
    }
    return out;
}

template <typename T, typename F>
void join(std::ostream& out, const std::vector<T>& values, F&& fmt) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        fmt(out, values[i]);
    }
}

}  // namespace

ParamGrid ParamGrid::parse(std::string_view text) {
    ParamGrid g;
    for (const auto& term : split(text, ';')) {
        if (term.empty()) continue;
        const auto eq = term.find('=');
        if (eq == std::string::npos) throw InputError("classify", "grid term '" + term + "' is not key=values");
        const std::string key = split(std::string_view(term).substr(0, eq), ',').front();
        auto values = split(std::string_view(term).substr(eq + 1), ',');
        if (values.empty() || values.front().empty())
            throw InputError("classify", "grid key '" + key + "' has no values");
        if (key == "C") {
            for (const auto& v : values) g.C.push_back(parse_positive(key, v));
        } else if (key == "alpha") {
            for (const auto& v : values) g.alpha.push_back(parse_positive(key, v));
        } else if (key == "penalty") {
            for (const auto& v : values) g.penalty.push_back(parse_penalty(v));
        } else if (key == "class_weight") {
            for (const auto& v : values) g.class_weight.push_back(parse_class_weight(v));
        } else if (key == "max_iterations") {
            g.max_iterations = parse_sizes(key, values);
        } else if (key == "k") {
            g.k = parse_sizes(key, values);
        } else {
            throw InputError("classify", "unknown grid key '" + key + "'");
        }
    }
    return g;
}

std::string ParamGrid::to_text() const {
    std::ostringstream out;
    auto num = [](std::ostream& o, auto v) { o << v; };
    auto section = [&](const char* key, const auto& values, auto&& fmt) {
        if (values.empty()) return;
        if (out.tellp() > 0) out << ';';
        out << key << '=';
        join(out, values, fmt);
    };
    section("C", C, num);
    section("penalty", penalty, [](std::ostream& o, Penalty p) { o << to_string(p); });
    section("class_weight", class_weight, [](std::ostream& o, ClassWeight w) { o << to_string(w); });
    section("max_iterations", max_iterations, num);
    section("k", k, num);
    section("alpha", alpha, num);
    return out.str();
}

ParamGrid ParamGrid::default_svm() {
    ParamGrid g;
    g.C = {0.01, 0.1, 1, 10, 100};
    return g;
}

ParamGrid ParamGrid::default_knn() {
    ParamGrid g;
    for (std::size_t k = 1; k <= 25; ++k) g.k.push_back(k);
    return g;
}

// ---------------------------------------------------------------------------
// Search

namespace {

std::vector<ClassifierConfig> enumerate_cells(const ClassifierConfig& base, const ParamGrid& g) {
    auto or_base = [](const auto& values, auto fallback) {
        using T = std::decay_t<decltype(fallback)>;
        return values.empty() ? std::vector<T>{fallback} : std::vector<T>(values.begin(), values.end());
    };
    std::vector<ClassifierConfig> cells;
    for (double c : or_base(g.C, base.svm.C))
        for (Penalty p : or_base(g.penalty, base.svm.penalty))
            for (ClassWeight w : or_base(g.class_weight, base.svm.class_weight))
                for (std::size_t it : or_base(g.max_iterations, base.svm.max_iterations))
                    for (std::size_t k : or_base(g.k, base.k))
                        for (double a : or_base(g.alpha, base.alpha)) {
                            ClassifierConfig cell = base;
                            cell.svm.C = c;
                            cell.svm.penalty = p;
                            cell.svm.class_weight = w;
                            cell.svm.max_iterations = it;
                            cell.k = k;
                            cell.alpha = a;
                            cells.push_back(cell);
                        }
    return cells;
}

bool better(const GridCell& a, const GridCell& b) {
    if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
    if (a.config.svm.C != b.config.svm.C) return a.config.svm.C < b.config.svm.C;
    return a.config.k < b.config.k;
}

}  // namespace

GridResult grid_search(std::span<const FeatureVector> x, std::span<const TriageLabel> y, const ClassifierConfig& base,
                       const ParamGrid& grid, std::size_t k_folds, std::uint64_t seed, SelectionMetric metric) {
    if (grid.empty()) throw InputError("classify", "grid search needs at least one hyperparameter value");
    if (x.size() != y.size())
        throw InputError("classify", "got " + std::to_string(x.size()) + " feature vectors but " +
                                         std::to_string(y.size()) + " labels");
    const std::vector<std::size_t> fold_of = stratified_folds(y, k_folds, seed);

    struct Split {
        std::vector<FeatureVector> train_x;
        std::vector<TriageLabel> train_y;
        std::vector<FeatureVector> test_x;
        std::vector<TriageLabel> test_y;
    };
    std::vector<Split> splits(k_folds);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t f = 0; f < k_folds; ++f) {
            if (fold_of[i] == f) {
                splits[f].test_x.push_back(x[i]);
                splits[f].test_y.push_back(y[i]);
            } else {
                splits[f].train_x.push_back(x[i]);
                splits[f].train_y.push_back(y[i]);
            }
        }
    }

    GridResult result;
    result.metric = metric;
    for (const ClassifierConfig& config : enumerate_cells(base, grid)) {
        GridCell cell{config, {}, 0};
        for (std::size_t f = 0; f < k_folds; ++f) {
            const Split& s = splits[f];
            if (config.kind == ClassifierKind::Knn && config.k > s.train_x.size())
                throw InputError("classify", "k = " + std::to_string(config.k) + " exceeds the " +
                                                 std::to_string(s.train_x.size()) + " training posts of fold " +
                                                 std::to_string(f));
            const Classifier model = train_classifier(s.train_x, s.train_y, config);
            const auto predicted = predict_labels(model, s.test_x);
            cell.fold_scores.push_back(metric_value(official_metrics(s.test_y, predicted), metric));
        }
        double sum = 0;
        for (double v : cell.fold_scores) sum += v;
        cell.mean_score = sum / static_cast<double>(k_folds);
        result.cells.push_back(std::move(cell));
    }

    const GridCell* best = &result.cells.front();
    for (const auto& cell : result.cells)
        if (better(cell, *best)) best = &cell;
    result.best = best->config;
    result.best_score = best->mean_score;
    return result;
}

}  // namespace triage
