// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "triage/error.hpp"
#include "triage/hash.hpp"

namespace triage {

NegationList NegationList::standard() {
    return NegationList({"no",      "nobody",   "nothing", "none",     "never",    "neither",
                         "nor",     "nowhere",  "hardly",  "scarcely", "barely",   "don't",
                         "isn't",   "wasn't",   "doesn't", "ain't",    "can't",    "won't",
                         "wouldn't", "shouldn't", "couldn't", "hasn't", "haven't", "didn't"});
}

std::vector<std::string> NegationList::sorted_terms() const {
    std::vector<std::string> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end());
    return out;
}

Lexicon::Lexicon(LexiconMeta meta) : meta_(std::move(meta)) {
    for (const auto& [from, to] : meta_.polarity_map) {
        auto back = meta_.polarity_map.find(to);
        if (back == meta_.polarity_map.end() || back->second != from)
            throw InputError("lexicons", "polarity map of '" + meta_.name + "' is not an involution: '" +
                                             from + "' -> '" + to + "' has no inverse");
        categories_[from] = true;
    }
}

void Lexicon::add(std::string_view term, const std::string& category, double weight) {
    const TokenList tokens = tokenize(term);
    if (tokens.empty()) throw InputError("lexicons", "empty term in lexicon '" + meta_.name + "'");
    if (tokens.size() > kMaxOrder)
        throw InputError("lexicons", "term '" + std::string(term) + "' in lexicon '" + meta_.name +
                                         "' is longer than three tokens");
    if (category.empty()) throw InputError("lexicons", "empty category in lexicon '" + meta_.name + "'");
    if (!std::isfinite(weight)) throw InputError("lexicons", "non-finite weight in lexicon '" + meta_.name + "'");

    std::string joined = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); ++i) joined += " " + tokens[i];
    entries_[joined][category] = weight;
    categories_[category] = true;
    max_order_ = std::max(max_order_, tokens.size());
    if (weight != 1.0) has_weights_ = true;
}

std::optional<std::string> Lexicon::opposite(const std::string& category) const {
    if (!meta_.polarity_aware) return std::nullopt;
    auto it = meta_.polarity_map.find(category);
    if (it == meta_.polarity_map.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> Lexicon::categories() const {
    std::vector<std::string> out;
    out.reserve(categories_.size());
    for (const auto& [category, _] : categories_) out.push_back(category);
    return out;
}

const std::map<std::string, double>* Lexicon::find(const std::string& joined) const {
    auto it = entries_.find(joined);
    return it == entries_.end() ? nullptr : &it->second;
}

std::uint64_t Lexicon::digest() const {
    Fnv1a hash;
    hash.update(meta_.name);
    hash.update(std::string_view(meta_.polarity_aware ? "\x01" : "\x00", 1));
    for (const auto& [from, to] : meta_.polarity_map) {
        hash.update(from);
        hash.update(std::string_view("\x1f", 1));
        hash.update(to);
    }
    std::vector<const std::string*> terms;
    terms.reserve(entries_.size());
    for (const auto& [term, _] : entries_) terms.push_back(&term);
    std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) { return *a < *b; });
    for (const std::string* term : terms) {
        hash.update(*term);
        for (const auto& [category, weight] : entries_.at(*term)) {
            hash.update(category);
            hash.update(weight);
        }
        hash.update(std::string_view("\x1e", 1));
    }
    return hash.digest();
}

Lexicon parse_lexicon(std::string_view content, LexiconMeta meta) {
    Lexicon lexicon(std::move(meta));
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t end = content.find('\n', pos);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> cols;
        std::size_t start = 0;
        for (;;) {
            std::size_t tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
            if (tab == std::string_view::npos) break;
            start = tab + 1;
        }
        auto where = [&] { return "lexicon '" + lexicon.name() + "' line " + std::to_string(line_no); };
        if (cols.size() < 2 || cols.size() > 3)
            throw InputError("lexicons", where() + ": expected term, category and optional weight");

        double weight = 1.0;
        if (cols.size() == 3 && !cols[2].empty()) {
            std::string_view text = cols[2];
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), weight);
            if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(weight))
                throw InputError("lexicons", where() + ": weight '" + std::string(text) + "' is not a real number");
        }
        try {
            lexicon.add(cols[0], std::string(cols[1]), weight);
        } catch (const InputError& e) {
            throw InputError("lexicons", where() + ": " + e.what());
        }
    }
    return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path, LexiconMeta meta) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("lexicons", "cannot open lexicon '" + meta.name + "' at '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_lexicon(buffer.str(), std::move(meta));
}

std::size_t CategoryCounts::total() const {
    std::size_t sum = 0;
    for (const auto& [_, n] : counts) sum += n;
    return sum;
}

std::size_t CategoryCounts::count(const std::string& category) const {
    auto it = counts.find(category);
    return it == counts.end() ? 0 : it->second;
}

double CategoryCounts::weight(const std::string& category) const {
    auto it = weighted.find(category);
    return it == weighted.end() ? 0.0 : it->second;
}

namespace {

CategoryCounts match(std::span<const std::string> tokens, const Lexicon& lexicon,
                     const NegationList& negation) {
    CategoryCounts result;
    for (const auto& category : lexicon.categories()) {
        result.counts[category] = 0;
        result.weighted[category] = 0.0;
    }

    const std::size_t max_order = std::min(lexicon.max_order(), Lexicon::kMaxOrder);
    std::string key;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::map<std::string, double>* entry = nullptr;
        std::size_t matched = 0;
        for (std::size_t n = std::min(max_order, tokens.size() - i); n >= 1; --n) {
            key = tokens[i];
            for (std::size_t j = 1; j < n; ++j) {
                key.push_back(' ');
                key += tokens[i + j];
            }
            if ((entry = lexicon.find(key)) != nullptr) {
                matched = n;
                break;
            }
        }
        if (entry == nullptr) {
            ++i;
            continue;
        }

        const bool negated = i > 0 && negation.contains(tokens[i - 1]);
        for (const auto& [category, weight] : *entry) {
            std::string credited = category;
            if (negated) {
                auto flipped = lexicon.opposite(category);
                if (!flipped) continue;
                credited = *flipped;
            }
            result.counts[credited] += 1;
            result.weighted[credited] += weight;
        }
        i += matched;
    }
    return result;
}

}  // namespace

CategoryCounts match_counts(std::span<const std::string> tokens, const Lexicon& lexicon,
                            const NegationList& negation) {
    return match(tokens, lexicon, negation);
}

CategoryCounts weighted_sum(std::span<const std::string> tokens, const Lexicon& lexicon,
                            const NegationList& negation) {
    return match(tokens, lexicon, negation);
}

}  // namespace triage
