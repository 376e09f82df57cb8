#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "narranet/pipeline.hpp"

using namespace narranet;
namespace fs = std::filesystem;

namespace {

void put(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A six-chapter, three-book fixture with three characters, enough filler
// vocabulary for a two-topic factorization, and a few sentiment words.
struct Fixture {
    fs::path dir;

    explicit Fixture(const std::string& name) {
        dir = fs::temp_directory_path() / ("narranet_test_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);

        put(dir / "story.txt",
            "BOOK ONE\n"
            "CHAPTER 1: MEETING\nAda met Ben in the happy harbor town near boats and nets.\n"
            "CHAPTER 2: STORM\nAda sailed alone through a sad bad storm of rain and waves.\n"
            "BOOK TWO\n"
            "CHAPTER 3: MARKET\nBen and Cal argued at the market over bread and coins, bad mood.\n"
            "CHAPTER 4: FEAST\nAda and Ben shared a good feast with bread wine and songs.\n"
            "BOOK THREE\n"
            "CHAPTER 5: ROAD\nCal walked the long road past fields and fences, happy enough.\n"
            "CHAPTER 6: HOME\nAda and Ben and Cal came home to the harbor, good times.\n");
        put(dir / "roster.json",
            R"([{"name": "Ada", "aliases": ["Ada"]},
                {"name": "Ben", "aliases": ["Ben"]},
                {"name": "Cal", "aliases": ["Cal"]}])");
        put(dir / "lexicon.txt", "[positive]\ngood\nhapp*\n[negative]\nbad\nsad\n");
        put(dir / "config.json", config_json());
    }

    std::string config_json(const std::string& extra = "") const {
        return std::string(R"({
          "text": "story.txt",
          "roster": "roster.json",
          "lexicon": "lexicon.txt",
          "output_dir": ")") +
               (dir / "out").string() + R"(",
          "markers": {"book_pattern": "^BOOK [A-Z]+", "chapter_pattern": "^CHAPTER [0-9]+"},
          "vocab": {"min_df": 1, "max_df_fraction": 1.0},
          "topics": {"count": 2, "n_seeds": 2, "max_iter": 50},
          "phases": {
            "characters": ["Ada", "Ben"],
            "ranges": [{"name": "I", "begin": 1, "end": 2},
                       {"name": "II", "begin": 3, "end": 4},
                       {"name": "III", "begin": 5, "end": 6}]
          })" + extra +
               "\n}";
    }

    PipelineConfig load() const { return PipelineConfig::load((dir / "config.json").string()); }

    ~Fixture() { fs::remove_all(dir); }
};

} // namespace

TEST_CASE("config load resolves paths relative to the config file") {
    Fixture fx("load");
    auto c = fx.load();
    CHECK(c.text_path == (fx.dir / "story.txt").string());
    CHECK(c.unit_level == "chapter");
    CHECK(c.topic_count == 2);
    CHECK(c.phases.phases.size() == 3);
    CHECK(c.phase_character_a == "Ada");
}

TEST_CASE("config load rejects bad input") {
    Fixture fx("badcfg");
    SUBCASE("malformed JSON") {
        put(fx.dir / "config.json", "{ not json");
        CHECK_THROWS_AS(fx.load(), ConfigError);
    }
    SUBCASE("missing referenced file") {
        fs::remove(fx.dir / "lexicon.txt");
        CHECK_THROWS_AS(fx.load(), ConfigError);
    }
    SUBCASE("non-positive numeric parameter") {
        std::string cfg = fx.config_json();
        auto pos = cfg.find("\"count\": 2");
        REQUIRE(pos != std::string::npos);
        cfg.replace(pos, 10, "\"count\": 0");
        put(fx.dir / "config.json", cfg);
        CHECK_THROWS_AS(fx.load(), ConfigError);
    }
}

TEST_CASE("config hash covers every output-affecting field") {
    Fixture fx("hash");
    auto base = fx.load();
    std::string h0 = base.config_hash();

    std::vector<PipelineConfig> mutants(12, base);
    mutants[0].unit_level = "book";
    mutants[1].markers.chapter_pattern = "^CHAP";
    mutants[2].min_df = 2;
    mutants[3].max_df_fraction = 0.9;
    mutants[4].topic_count = 3;
    mutants[5].seed = 7;
    mutants[6].n_seeds = 3;
    mutants[7].max_iter = 10;
    mutants[8].rel_tol = 1e-6;
    mutants[9].sequence_threshold = 0.3;
    mutants[10].stage_window = 5;
    mutants[11].phases.phases[0].end = 3;
    std::set<std::string> hashes{h0};
    for (const auto& m : mutants) {
        std::string h = m.config_hash();
        CHECK(h != h0);
        hashes.insert(h);
    }
    CHECK(hashes.size() == mutants.size() + 1); // all distinct
    CHECK(fx.load().config_hash() == h0);       // and stable
}

TEST_CASE("stage dependencies and exit codes") {
    Fixture fx("deps");
    auto c = fx.load();
    CHECK(run_stage("network", c, true) == 3);  // needs ingest
    CHECK(run_stage("phases", c, true) == 3);   // needs topics
    CHECK(run_stage("mystery", c, true) == 2);  // unknown subcommand
}

TEST_CASE("full pipeline run produces every artifact and a manifest") {
    Fixture fx("all");
    auto c = fx.load();
    REQUIRE(run_stage("all", c, true) == 0);

    for (const char* name :
         {"corpus_manifest.json", "timelines.json", "network.gexf", "network.dot", "growth.csv",
          "path_stats.json", "centralities.json", "communities.json", "stages.json",
          "chapter_spi.csv", "profiles.json", "community_cosentiment.json", "sequences.json",
          "similarity.csv", "Q.csv", "H.csv", "H_run1.csv", "vocabulary.json", "topics.json",
          "topical_states.json", "nnmf_trace.json", "phase_report.json", "transfers.dot",
          "network_cosentiment.gexf", "community_topics.json", "report_manifest.json",
          "manifest.json"})
        CHECK_MESSAGE(fs::exists(fx.dir / "out" / name), name);

    auto manifest = slurp(fx.dir / "out" / "manifest.json");
    CHECK(manifest.find(c.config_hash()) != std::string::npos);
    for (const char* stage : {"ingest", "network", "sentiment", "sequences", "topics", "phases",
                              "report"})
        CHECK_MESSAGE(manifest.find("\"" + std::string(stage) + "\"") != std::string::npos, stage);
}

TEST_CASE("rerun with unchanged inputs reproduces identical analysis outputs") {
    Fixture fx("rerun");
    auto c = fx.load();
    REQUIRE(run_stage("all", c, true) == 0);

    std::vector<std::string> tracked = {"timelines.json", "network.gexf", "chapter_spi.csv",
                                        "sequences.json", "Q.csv", "H.csv", "phase_report.json",
                                        "report_manifest.json"};
    std::vector<std::string> digests;
    for (const auto& name : tracked) digests.push_back(digest_file((fx.dir / "out" / name).string()));

    REQUIRE(run_stage("all", c, true) == 0);
    for (std::size_t i = 0; i < tracked.size(); ++i)
        CHECK(digest_file((fx.dir / "out" / tracked[i]).string()) == digests[i]);
}

TEST_CASE("stage isolation: rerunning an upstream stage never changes its outputs") {
    Fixture fx("isolation");
    auto c = fx.load();
    REQUIRE(run_stage("all", c, true) == 0);
    auto ingest_digest = digest_file((fx.dir / "out" / "timelines.json").string());
    auto net_digest = digest_file((fx.dir / "out" / "network.gexf").string());

    // delete downstream caches, rerun upstream only
    fs::remove(fx.dir / "out" / "phase_report.json");
    fs::remove(fx.dir / "out" / "topics.json");
    REQUIRE(run_stage("ingest", c, true) == 0);
    REQUIRE(run_stage("network", c, true) == 0);
    CHECK(digest_file((fx.dir / "out" / "timelines.json").string()) == ingest_digest);
    CHECK(digest_file((fx.dir / "out" / "network.gexf").string()) == net_digest);
}

TEST_CASE("book-level regrouping merges chapters into book units") {
    Fixture fx("regroup");
    auto c = fx.load();
    c.unit_level = "book";
    c.output_dir = (fx.dir / "out_book").string();
    REQUIRE(run_stage("ingest", c, true) == 0);
    auto manifest = slurp(fs::path(c.output_dir) / "corpus_manifest.json");
    CHECK(manifest.find("\"chapter_count\": 3") != std::string::npos);

    // timelines now index book units 1..3
    auto tl = slurp(fs::path(c.output_dir) / "timelines.json");
    CHECK(tl.find("4") == std::string::npos);
}

TEST_CASE("digest helpers") {
    CHECK(digest_bytes("") == "cbf29ce484222325"); // FNV-1a offset basis
    CHECK(digest_bytes("a") != digest_bytes("b"));
    CHECK(digest_bytes("abc") == digest_bytes("abc"));
}
