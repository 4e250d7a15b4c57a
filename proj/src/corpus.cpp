// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include "triage/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triage/error.hpp"
#include "triage/random.hpp"

namespace triage {
namespace {

using json = nlohmann::json;

struct ParsedRecord {
    LabeledPost post;
    std::size_t line = 0;
};

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
    throw InputError("corpus", "line " + std::to_string(line) + ": " + what);
}

std::optional<TriageLabel> label_field(const std::string& raw, std::size_t line) {
    if (raw.empty()) return std::nullopt;
    auto label = parse_label(raw);
    if (!label) malformed(line, "unknown label '" + raw + "'");
    return label;
}

std::string string_field(const json& record, const char* key, bool required, std::size_t line) {
    auto it = record.find(key);
    if (it == record.end() || it->is_null()) {
        if (required) malformed(line, std::string("missing field '") + key + "'");
        return {};
    }
    if (!it->is_string()) malformed(line, std::string("field '") + key + "' is not a string");
    return it->get<std::string>();
}

std::vector<ParsedRecord> parse_jsonl(std::string_view content) {
    std::vector<ParsedRecord> records;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t end = content.find('\n', pos);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            malformed(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!record.is_object()) malformed(line_no, "record is not a JSON object");
        ParsedRecord parsed;
        parsed.line = line_no;
        parsed.post.post_id = string_field(record, "post_id", true, line_no);
        parsed.post.author_rank = string_field(record, "author_rank", false, line_no);
        parsed.post.body = string_field(record, "body", true, line_no);
        parsed.post.label = label_field(string_field(record, "label", false, line_no), line_no);
        records.push_back(std::move(parsed));
    }
    return records;
}

// RFC 4180: fields separated by commas, optionally double-quoted, quotes
// escaped by doubling, line breaks allowed inside quoted fields.
struct CsvRow {
    std::vector<std::string> fields;
    std::size_t line = 0;
};

std::vector<CsvRow> parse_csv_rows(std::string_view content) {
    std::vector<CsvRow> rows;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < content.size()) {
        CsvRow row;
        row.line = line;
        std::string field;
        bool row_done = false;
        while (!row_done) {
            field.clear();
            if (i < content.size() && content[i] == '"') {
                const std::size_t open_line = line;
                ++i;
                for (;;) {
                    if (i >= content.size()) malformed(open_line, "unterminated quoted field");
                    char c = content[i++];
                    if (c == '"') {
                        if (i < content.size() && content[i] == '"') {
                            field.push_back('"');
                            ++i;
                        } else {
                            break;
                        }
                    } else {
                        if (c == '\n') ++line;
                        field.push_back(c);
                    }
                }
                if (i < content.size() && content[i] != ',' && content[i] != '\n' && content[i] != '\r')
                    malformed(line, "unexpected character after closing quote");
            } else {
                while (i < content.size() && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
                    if (content[i] == '"') malformed(line, "quote inside unquoted field");
                    field.push_back(content[i++]);
                }
            }
            row.fields.push_back(field);
            if (i < content.size() && content[i] == ',') {
                ++i;
                continue;
            }
            if (i < content.size() && content[i] == '\r') ++i;
            if (i < content.size() && content[i] == '\n') ++i;
            ++line;
            row_done = true;
        }
        if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ParsedRecord> parse_csv(std::string_view content) {
    auto rows = parse_csv_rows(content);
    if (rows.empty()) throw InputError("corpus", "CSV input has no header");
    const auto& header = rows.front().fields;
    auto column = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < header.size(); ++c)
            if (header[c] == name) return c;
        return std::nullopt;
    };
    auto id_col = column("post_id");
    auto body_col = column("body");
    auto rank_col = column("author_rank");
    auto label_col = column("label");
    if (!id_col || !body_col)
        malformed(rows.front().line, "CSV header must contain post_id and body");

    std::vector<ParsedRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != header.size())
            malformed(row.line, "expected " + std::to_string(header.size()) + " fields, got " +
                                    std::to_string(row.fields.size()));
        ParsedRecord parsed;
        parsed.line = row.line;
        parsed.post.post_id = row.fields[*id_col];
        if (parsed.post.post_id.empty()) malformed(row.line, "empty post_id");
        parsed.post.body = row.fields[*body_col];
        if (rank_col) parsed.post.author_rank = row.fields[*rank_col];
        if (label_col) parsed.post.label = label_field(row.fields[*label_col], row.line);
        records.push_back(std::move(parsed));
    }
    return records;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

CorpusFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? CorpusFormat::Csv : CorpusFormat::Jsonl;
}

std::vector<LabeledPost> parse_posts(std::string_view content, CorpusFormat format) {
    auto records = format == CorpusFormat::Jsonl ? parse_jsonl(content) : parse_csv(content);

    std::unordered_map<std::string, std::size_t> first_line;
    std::vector<LabeledPost> posts;
    posts.reserve(records.size());
    for (auto& record : records) {
        auto [it, inserted] = first_line.emplace(record.post.post_id, record.line);
        if (!inserted)
            throw InputError("corpus", "duplicate post_id '" + record.post.post_id + "' on lines " +
                                           std::to_string(it->second) + " and " +
                                           std::to_string(record.line));
        posts.push_back(std::move(record.post));
    }
    return posts;
}

std::vector<LabeledPost> load_posts(const std::filesystem::path& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("corpus", "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw InputError("corpus", "read failure on '" + path.string() + "'");
    return parse_posts(buffer.str(), format);
}

std::string serialize_posts(std::span<const LabeledPost> posts, CorpusFormat format) {
    std::string out;
    if (format == CorpusFormat::Jsonl) {
        for (const auto& post : posts) {
            json record = {{"post_id", post.post_id},
                           {"author_rank", post.author_rank},
                           {"body", post.body}};
            record["label"] = post.label ? json(std::string(to_string(*post.label))) : json(nullptr);
            out += record.dump();
            out.push_back('\n');
        }
    } else {
        out = "post_id,author_rank,body,label\n";
        for (const auto& post : posts) {
            out += csv_quote(post.post_id) + "," + csv_quote(post.author_rank) + "," +
                   csv_quote(post.body) + "," +
                   (post.label ? std::string(to_string(*post.label)) : std::string()) + "\n";
        }
    }
    return out;
}

void save_posts(const std::filesystem::path& path, std::span<const LabeledPost> posts,
                CorpusFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("corpus", "cannot write '" + path.string() + "'");
    out << serialize_posts(posts, format);
}

void require_labels(std::span<const LabeledPost> posts) {
    for (const auto& post : posts)
        if (!post.label) throw InputError("corpus", "post '" + post.post_id + "' has no label");
}

std::vector<TriageLabel> labels_of(std::span<const LabeledPost> posts) {
    require_labels(posts);
    std::vector<TriageLabel> labels;
    labels.reserve(posts.size());
    for (const auto& post : posts) labels.push_back(*post.label);
    return labels;
}

CorpusStats corpus_stats(std::span<const LabeledPost> posts) {
    if (posts.empty()) throw InputError("corpus", "cannot compute statistics of an empty corpus");
    require_labels(posts);
    CorpusStats stats;
    for (const auto& post : posts) ++stats.counts[index_of(*post.label)];
    stats.total = posts.size();
    for (std::size_t l = 0; l < kLabelCount; ++l)
        stats.percentages[l] = 100.0 * static_cast<double>(stats.counts[l]) / static_cast<double>(stats.total);
    return stats;
}

std::vector<std::size_t> stratified_folds(std::span<const TriageLabel> labels, std::size_t k,
                                          std::uint64_t seed) {
    if (k < 2) throw InputError("corpus", "fold count must be at least 2");
    if (k > labels.size())
        throw InputError("corpus", "fold count " + std::to_string(k) + " exceeds corpus size " +
                                       std::to_string(labels.size()));

    std::vector<std::size_t> folds(labels.size(), 0);
    Rng rng(seed);
    std::size_t next_fold = 0;
    for (TriageLabel label : kAllLabels) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) members.push_back(i);
        seeded_shuffle(std::span<std::size_t>(members), rng);
        for (std::size_t member : members) {
            folds[member] = next_fold;
            next_fold = (next_fold + 1) % k;
        }
    }
    return folds;
}

std::unordered_map<std::string, std::size_t> stratified_folds(std::span<const LabeledPost> posts,
                                                              std::size_t k, std::uint64_t seed) {
    auto labels = labels_of(posts);
    auto folds = stratified_folds(std::span<const TriageLabel>(labels), k, seed);
    std::unordered_map<std::string, std::size_t> assignment;
    for (std::size_t i = 0; i < posts.size(); ++i) assignment.emplace(posts[i].post_id, folds[i]);
    return assignment;
}

}  // namespace triage
