// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/svm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "triage/error.hpp"
#include "triage/random.hpp"

namespace triage {

std::string_view to_string(Penalty p) noexcept { return p == Penalty::L1 ? "l1" : "l2"; }
std::string_view to_string(ClassWeight w) noexcept { return w == ClassWeight::Uniform ? "uniform" : "balanced"; }

Penalty parse_penalty(std::string_view name) {
    if (name == "l1") return Penalty::L1;
    if (name == "l2") return Penalty::L2;
    throw InputError("classify", "unknown penalty '" + std::string(name) + "' (expected l1 or l2)");
}

ClassWeight parse_class_weight(std::string_view name) {
    if (name == "uniform") return ClassWeight::Uniform;
    if (name == "balanced") return ClassWeight::Balanced;
    throw InputError("classify", "unknown class weight '" + std::string(name) + "' (expected uniform or balanced)");
}

void TrainConfig::validate() const {
    if (!(C > 0) || !std::isfinite(C)) throw InputError("classify", "C must be positive");
    if (max_iterations < 1) throw InputError("classify", "max_iterations must be at least 1");
    if (!(initial_smoothing > 0) || !(min_smoothing > 0) || min_smoothing > initial_smoothing ||
        !(smoothing_decay > 0 && smoothing_decay < 1) || !(tolerance >= 0))
        throw InputError("classify", "invalid smoothing schedule");
}

TriageLabel argmax_label(const std::array<double, kLabelCount>& scores) noexcept {
    std::size_t best = 0;
    for (std::size_t l = 1; l < kLabelCount; ++l)
        if (scores[l] >= scores[best]) best = l;
    return label_at(best);
}

namespace {

double regularizer(std::span<const double> w, Penalty penalty) {
    double r = 0;
    if (penalty == Penalty::L1) {
        for (double v : w) r += std::abs(v);
    } else {
        for (double v : w) r += v * v;
        r *= 0.5;
    }
    return r;
}

// Fills margins s_i (w.x_i + b) and returns the weighted mean hinge loss.
double margins_and_loss(const BinaryProblem& p, std::span<const double> w, double b, std::vector<double>& margins) {
    const std::size_t n = p.x.size();
    margins.resize(n);
    double loss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        margins[i] = p.sign[i] * (p.x[i].dot(w) + b);
        if (margins[i] < 1.0) loss += p.weight[i] * (1.0 - margins[i]);
    }
    return loss / static_cast<double>(n);
}

}  // namespace

double svm_objective(const BinaryProblem& problem, std::span<const double> w, double b, double C, Penalty penalty) {
    std::vector<double> margins;
    const double n = static_cast<double>(problem.x.size());
    return margins_and_loss(problem, w, b, margins) + regularizer(w, penalty) / (C * n);
}

void svm_subgradient(const BinaryProblem& problem, std::span<const double> w, double b, double C, Penalty penalty,
                     std::span<double> grad_w, double& grad_b) {
    (void)b;
    const std::size_t n = problem.x.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    grad_b = 0;
    std::vector<double> margins;
    margins_and_loss(problem, w, b, margins);
    for (std::size_t i = 0; i < n; ++i) {
        if (margins[i] < 1.0) {
            const double coef = -problem.weight[i] * problem.sign[i] * inv_n;
            problem.x[i].add_scaled_to(coef, grad_w);
            grad_b += coef;
        }
    }
    const double reg = 1.0 / (C * static_cast<double>(n));
    for (std::size_t j = 0; j < grad_w.size(); ++j) {
        if (penalty == Penalty::L1) {
            grad_w[j] += reg * (w[j] > 0 ? 1.0 : (w[j] < 0 ? -1.0 : 0.0));
        } else {
            grad_w[j] += reg * w[j];
        }
    }
}

namespace {

// Huber-smoothed hinge as a function of the margin m; z = 1 - m.
inline double smooth_hinge(double m, double mu) {
    const double z = 1.0 - m;
    if (z <= 0) return 0;
    if (z < mu) return z * z / (2 * mu);
    return z - mu / 2;
}

inline double smooth_hinge_slope(double m, double mu) {  // d/dm
    const double z = 1.0 - m;
    if (z <= 0) return 0;
    if (z < mu) return -z / mu;
    return -1;
}

struct ColumnEntry {
    std::uint32_t row;
    double value;  // s_i * x_ij
};

}  // namespace

BinarySolution train_binary_svm(const BinaryProblem& problem, const TrainConfig& cfg) {
    cfg.validate();
    const std::size_t n = problem.x.size();
    const std::size_t d = problem.dimension;
    const double inv_n = 1.0 / static_cast<double>(n);
    const double lambda = 1.0 / (cfg.C * static_cast<double>(n));

    // Column-major copy of the signed design matrix; column d is the bias.
    std::vector<std::vector<ColumnEntry>> columns(d + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const FeatureVector& x = problem.x[i];
        const auto row = static_cast<std::uint32_t>(i);
        for (const auto& [c, v] : x.sparse)
            if (v != 0) columns[c].push_back({row, problem.sign[i] * v});
        for (std::size_t j = 0; j < x.dense.size(); ++j)
            if (x.dense[j] != 0) columns[x.sparse_dim + j].push_back({row, problem.sign[i] * x.dense[j]});
        columns[d].push_back({row, problem.sign[i]});
    }

    std::vector<double> w(d, 0.0);
    double b = 0;
    std::vector<double> margin(n, 0.0);
    auto penalty_of = [&](double v) { return cfg.penalty == Penalty::L1 ? lambda * std::abs(v) : 0.5 * lambda * v * v; };
    auto true_objective = [&] {
        double loss = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (margin[i] < 1.0) loss += problem.weight[i] * (1.0 - margin[i]);
        return loss * inv_n + regularizer(w, cfg.penalty) / (cfg.C * static_cast<double>(n));
    };

    double mu = cfg.initial_smoothing;
    auto smoothed_objective = [&] {
        double loss = 0;
        for (std::size_t i = 0; i < n; ++i) loss += problem.weight[i] * smooth_hinge(margin[i], mu);
        return loss * inv_n + regularizer(w, cfg.penalty) / (cfg.C * static_cast<double>(n));
    };

    BinarySolution best{w, b, true_objective(), 0};
    std::vector<std::size_t> order(d + 1);
    for (std::size_t j = 0; j <= d; ++j) order[j] = j;
    Rng rng(cfg.seed);
    double previous = smoothed_objective();
    std::size_t it = 0;
    while (it < cfg.max_iterations) {
        ++it;
        seeded_shuffle(std::span<std::size_t>(order), rng);
        for (std::size_t j : order) {
            const auto& col = columns[j];
            if (col.empty()) continue;
            const bool is_bias = j == d;
            const double wj = is_bias ? b : w[j];
            double g = 0, h = 0, h_bound = 0;
            for (const auto& e : col) {
                const double c = problem.weight[e.row];
                g += c * e.value * smooth_hinge_slope(margin[e.row], mu);
                const double z = 1.0 - margin[e.row];
                if (z > 0 && z < mu) h += c * e.value * e.value;
                h_bound += c * e.value * e.value;
            }
            g *= inv_n;
            h *= inv_n / mu;
            h_bound *= inv_n / mu;
            // Keep the model curvature away from 0 so the first trial step stays finite.
            double curvature = std::max(h, 1e-3 * h_bound);
            if (!is_bias && cfg.penalty == Penalty::L2) {
                g += lambda * wj;
                curvature += lambda;
            }
            double step;
            if (is_bias || cfg.penalty == Penalty::L2) {
                step = -g / curvature;
            } else {
                const double v = wj - g / curvature;
                const double t = lambda / curvature;
                step = (v > t ? v - t : (v < -t ? v + t : 0.0)) - wj;
            }
            if (step == 0) continue;

            // Backtracking on the smoothed objective restricted to this coordinate.
            const double reg_now = is_bias ? 0 : penalty_of(wj);
            const double g_loss = is_bias || cfg.penalty == Penalty::L1 ? g : g - lambda * wj;
            double accepted = 0;
            for (int trial = 0; trial < 40; ++trial, step *= 0.5) {
                double delta = 0;
                for (const auto& e : col) {
                    const double m = margin[e.row];
                    delta += problem.weight[e.row] * (smooth_hinge(m + e.value * step, mu) - smooth_hinge(m, mu));
                }
                delta *= inv_n;
                const double reg_change = is_bias ? 0 : penalty_of(wj + step) - reg_now;
                const double model = g_loss * step + reg_change;
                if (delta + reg_change <= 0.01 * model || delta + reg_change <= 0) {
                    if (delta + reg_change < 0) accepted = step;
                    break;
                }
            }
            if (accepted == 0) continue;
            for (const auto& e : col) margin[e.row] += e.value * accepted;
            if (is_bias) b += accepted;
            else w[j] += accepted;
        }

        const double f = true_objective();
        if (f < best.objective) {
            best.w = w;
            best.b = b;
            best.objective = f;
        }
        // Shrink the smoothing once a pass stops making progress at the current width.
        const double smoothed = smoothed_objective();
        if (previous - smoothed <= cfg.tolerance * std::max(smoothed, 1e-12)) {
            if (mu <= cfg.min_smoothing) break;
            mu = std::max(mu * cfg.smoothing_decay, cfg.min_smoothing);
            previous = smoothed_objective();
        } else {
            previous = smoothed;
        }
    }
    best.iterations = it;
    return best;
}

void check_compatible(const FeatureVector& x, std::size_t dimension, std::uint64_t fingerprint) {
    if (x.fingerprint != fingerprint)
        throw FingerprintMismatch("classify", "feature vector was built by a different feature pipeline");
    if (x.dimension() != dimension)
        throw InputError("classify", "feature dimension " + std::to_string(x.dimension()) + " does not match model dimension " +
                                         std::to_string(dimension));
}

void validate_training_set(std::span<const FeatureVector> x, std::span<const TriageLabel> y) {
    if (x.empty()) throw InputError("classify", "training set is empty");
    if (x.size() != y.size())
        throw InputError("classify", "got " + std::to_string(x.size()) + " feature vectors but " +
                                         std::to_string(y.size()) + " labels");
    const std::size_t dim = x.front().dimension();
    const std::size_t sparse_dim = x.front().sparse_dim;
    const std::uint64_t fp = x.front().fingerprint;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].dimension() != dim || x[i].sparse_dim != sparse_dim)
            throw InputError("classify", "feature vector " + std::to_string(i) + " has dimension " +
                                             std::to_string(x[i].dimension()) + ", expected " + std::to_string(dim));
        if (x[i].fingerprint != fp)
            throw FingerprintMismatch("classify", "training vectors come from different feature pipelines");
        if (!x[i].all_finite())
            throw InputError("classify", "feature vector " + std::to_string(i) + " has non-finite values");
    }
    std::set<TriageLabel> distinct(y.begin(), y.end());
    if (distinct.size() < 2) throw InputError("classify", "training set needs at least two distinct labels");
}

LinearSvmModel train_svm(std::span<const FeatureVector> x, std::span<const TriageLabel> y, const TrainConfig& cfg) {
    cfg.validate();
    validate_training_set(x, y);
    const std::size_t n = x.size();

    std::array<std::size_t, kLabelCount> per_label{};
    for (TriageLabel l : y) ++per_label[index_of(l)];
    const auto present = static_cast<double>(std::count_if(per_label.begin(), per_label.end(), [](auto c) { return c > 0; }));

    std::vector<double> weight(n, 1.0);
    if (cfg.class_weight == ClassWeight::Balanced)
        for (std::size_t i = 0; i < n; ++i)
            weight[i] = static_cast<double>(n) / (present * static_cast<double>(per_label[index_of(y[i])]));

    LinearSvmModel model;
    model.dimension = x.front().dimension();
    model.fingerprint = x.front().fingerprint;
    model.config = cfg;
    std::vector<double> sign(n);
    for (std::size_t l = 0; l < kLabelCount; ++l) {
        for (std::size_t i = 0; i < n; ++i) sign[i] = index_of(y[i]) == l ? 1.0 : -1.0;
        BinaryProblem problem{x, sign, weight, model.dimension};
        BinarySolution solution = train_binary_svm(problem, cfg);
        model.weights[l] = std::move(solution.w);
        model.bias[l] = solution.b;
        model.iterations[l] = solution.iterations;
        model.objective[l] = solution.objective;
    }
    return model;
}

Prediction predict(const LinearSvmModel& model, const FeatureVector& x) {
    check_compatible(x, model.dimension, model.fingerprint);
    Prediction p;
    for (std::size_t l = 0; l < kLabelCount; ++l) p.scores[l] = x.dot(model.weights[l]) + model.bias[l];
    p.label = argmax_label(p.scores);
    return p;
}

}  // namespace triage
