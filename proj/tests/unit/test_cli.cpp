// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triage/cli.hpp"
#include "triage/corpus.hpp"
#include "triage/error.hpp"
#include "triage/synthetic.hpp"

using namespace triage;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / "triage_cli_test") {
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        SyntheticOptions options;
        options.counts = {40, 20, 12, 8};
        options.id_prefix = "train";
        save_posts(dir_ / "train.jsonl", generate_synthetic(options, 1), CorpusFormat::Jsonl);
        options.counts = {12, 6, 4, 4};
        options.id_prefix = "test";
        save_posts(dir_ / "test.jsonl", generate_synthetic(options, 2), CorpusFormat::Jsonl);
    }
    ~Workspace() { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"train", "--C", "abc"}).code == 2);
}

TEST_CASE("run config round trip") {
    RunConfig c;
    c.command = "train";
    c.C = 0.5;
    c.rows = {"only-lexicons", "tfidf-lexicons"};
    c.seed = 9;
    const auto back = RunConfig::from_json(c.to_json());
    CHECK(back.to_json() == c.to_json());
    CHECK_THROWS_AS(RunConfig::from_json(R"({"colour": 1})"), InputError);
}

TEST_CASE("train, eval and predict") {
    Workspace ws;
    const auto out1 = ws.path("run1");
    const auto out2 = ws.path("run2");
    for (const auto& dir : {out1, out2}) {
        const auto r = run({"train", "--train", ws.path("train.jsonl"), "--out-dir", dir, "--seed", "4"});
        INFO(r.err);
        REQUIRE(r.code == 0);
    }
    const auto model1 = slurp(fs::path(out1) / "model.json");
    CHECK_FALSE(model1.empty());
    CHECK(model1 == slurp(fs::path(out2) / "model.json"));
    const auto log = slurp(fs::path(out1) / "train_log.txt");
    CHECK(log.find("C") != std::string::npos);
    CHECK(log.find("penalty") != std::string::npos);
    CHECK(log.find("iterations") != std::string::npos);
    const auto config = RunConfig::from_json(slurp(fs::path(out1) / "run_config.json"));
    CHECK(config.command == "train");
    CHECK(config.seed == 4);

    SUBCASE("replay from the emitted config") {
        const auto r = run({"train", "--config", (fs::path(out1) / "run_config.json").string(), "--out-dir", ws.path("run3")});
        INFO(r.err);
        REQUIRE(r.code == 0);
        CHECK(slurp(fs::path(ws.path("run3")) / "model.json") == model1);
    }

    SUBCASE("eval") {
        const auto r = run({"eval", "--model", out1 + "/model.json", "--test", ws.path("test.jsonl"), "--out-dir", out1});
        INFO(r.err);
        REQUIRE(r.code == 0);
        const auto report = nlohmann::json::parse(slurp(fs::path(out1) / "eval_report.json"));
        for (const char* key : {"macro_f1_non_green", "flagged_f1", "urgent_f1", "crisis_f1"}) {
            const double v = report.at(key).get<double>();
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }

    SUBCASE("eval against different lexicons is a fingerprint error") {
        const auto lex_dir = fs::path(ws.path("lex"));
        fs::create_directories(lex_dir);
        std::ofstream(lex_dir / "mpqa.tsv") << "happy\tpositive\nsad\tnegative\n";
        std::ofstream(lex_dir / "manifest.json")
            << R"({"lexicons": [{"name": "mpqa", "path": "mpqa.tsv", "polarity_aware": true,
                   "polarity_map": {"positive": "negative", "negative": "positive"}}]})";
        const auto r = run({"eval", "--model", out1 + "/model.json", "--test", ws.path("test.jsonl"), "--manifest",
                            (lex_dir / "manifest.json").string(), "--out-dir", out1});
        CHECK(r.code == 2);
        INFO(r.err);
        CHECK(r.err.find("fingerprint") != std::string::npos);
    }

    SUBCASE("predict keeps input order and handles empty bodies") {
        std::vector<LabeledPost> posts = {{"z1", "", "i feel fine today", std::nullopt},
                                          {"a2", "", "", std::nullopt},
                                          {"m3", "staff", "i want to end my life tonight", std::nullopt}};
        save_posts(ws.path("unlabeled.jsonl"), posts, CorpusFormat::Jsonl);
        const auto r = run({"predict", "--model", out1 + "/model.json", "--input", ws.path("unlabeled.jsonl")});
        INFO(r.err);
        REQUIRE(r.code == 0);
        const auto lines = lines_of(r.out);
        REQUIRE(lines.size() == 3);
        CHECK(lines[0].rfind("z1\t", 0) == 0);
        CHECK(lines[1].rfind("a2\t", 0) == 0);
        CHECK(lines[2].rfind("m3\t", 0) == 0);
        std::size_t tabs = 0;
        for (char ch : lines[0]) tabs += ch == '\t';
        CHECK(tabs == 5);
    }
}

TEST_CASE("missing lexicon path exits with status 2 naming the entry") {
    Workspace ws;
    const auto lex_dir = fs::path(ws.path("lex"));
    fs::create_directories(lex_dir);
    std::ofstream(lex_dir / "manifest.json") << R"({"lexicons": [{"name": "phantom", "path": "phantom.tsv"}]})";
    const auto r = run({"train", "--train", ws.path("train.jsonl"), "--manifest", (lex_dir / "manifest.json").string(),
                        "--out-dir", ws.path("out")});
    CHECK(r.code == 2);
    CHECK(r.err.find("phantom") != std::string::npos);
}

TEST_CASE("self-harm heavy posts are predicted as crisis") {
    Workspace ws;
    std::vector<LabeledPost> train;
    const std::vector<std::string> calm = {"had a nice day", "went to the park", "cooked pasta tonight",
                                           "watched a film", "saw my friends"};
    const std::vector<std::string> harm = {"i want to die", "i will kill myself", "thinking about suicide",
                                           "i want to cut myself", "going to end my life"};
    for (std::size_t i = 0; i < 20; ++i) {
        train.push_back({"g" + std::to_string(i), "", calm[i % calm.size()], TriageLabel::Green});
        train.push_back({"c" + std::to_string(i), "", harm[i % harm.size()], TriageLabel::Crisis});
    }
    save_posts(ws.path("harm.jsonl"), train, CorpusFormat::Jsonl);
    std::ofstream(ws.path("patterns.cfg")) << "name = patterns-only\npatterns = on\n";
    auto r = run({"train", "--train", ws.path("harm.jsonl"), "--features", ws.path("patterns.cfg"), "--out-dir",
                  ws.path("harm")});
    INFO(r.err);
    REQUIRE(r.code == 0);
    std::vector<LabeledPost> query = {{"q", "", "suicide, i want to die, kill myself, cut myself, hurt myself", std::nullopt}};
    save_posts(ws.path("query.jsonl"), query, CorpusFormat::Jsonl);
    r = run({"predict", "--model", ws.path("harm") + "/model.json", "--input", ws.path("query.jsonl")});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("q\tcrisis\t", 0) == 0);
}

TEST_CASE("ablate, stats and gen-synthetic") {
    Workspace ws;
    auto r = run({"ablate", "--train", ws.path("train.jsonl"), "--test", ws.path("test.jsonl"), "--rows",
                  "only-lexicons", "--out-dir", ws.path("abl")});
    INFO(r.err);
    REQUIRE(r.code == 0);
    CHECK(lines_of(slurp(fs::path(ws.path("abl")) / "ablation.jsonl")).size() == 1);

    r = run({"ablate", "--train", ws.path("train.jsonl"), "--test", ws.path("test.jsonl"), "--out-dir",
             ws.path("abl5"), "--classifier", "nb"});
    REQUIRE(r.code == 0);
    CHECK(lines_of(slurp(fs::path(ws.path("abl5")) / "ablation.jsonl")).size() == 5);

    r = run({"stats", "--input", ws.path("train.jsonl")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("crisis\t8") != std::string::npos);
    CHECK(r.out.find("total\t80") != std::string::npos);

    r = run({"gen-synthetic", "--out-dir", ws.path("gen"), "--seed", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto train = load_posts(fs::path(ws.path("gen")) / "train.csv", CorpusFormat::Csv);
    const auto test = load_posts(fs::path(ws.path("gen")) / "test.csv", CorpusFormat::Csv);
    CHECK(train.size() == 1200);
    CHECK(test.size() == 400);

    r = run({"stats", "--input", ws.path("missing.jsonl")});
    CHECK(r.code == 2);
}
