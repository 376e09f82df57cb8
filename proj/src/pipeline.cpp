#include "narranet/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace narranet {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    fs::create_directories(fs::path(path).parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

void require_artifact(const std::string& path, const std::string& producer) {
    if (!fs::exists(path))
        throw StageDependencyMissing("missing " + path + "; run `" + producer + "` first");
}

} // namespace

std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string digest_file(const std::string& path) { return digest_bytes(read_file(path)); }

PipelineConfig PipelineConfig::load(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config JSON: ") + e.what());
    }
    PipelineConfig c;
    fs::path base = fs::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        if (p.empty() || fs::path(p).is_absolute()) return p;
        return (base / p).string();
    };
    try {
        c.text_path = resolve(j.at("text").get<std::string>());
        c.roster_path = resolve(j.at("roster").get<std::string>());
        c.lexicon_path = resolve(j.at("lexicon").get<std::string>());
        if (j.contains("stopwords")) c.stopwords_path = resolve(j["stopwords"].get<std::string>());
        if (j.contains("output_dir")) c.output_dir = j["output_dir"].get<std::string>();
        if (j.contains("unit_level")) c.unit_level = j["unit_level"].get<std::string>();
        const auto& m = j.at("markers");
        c.markers.volume_pattern = m.value("volume_pattern", "");
        c.markers.book_pattern = m.value("book_pattern", "");
        c.markers.chapter_pattern = m.at("chapter_pattern").get<std::string>();
        c.markers.start_marker = m.value("start_marker", "");
        c.markers.end_marker = m.value("end_marker", "");
        if (j.contains("vocab")) {
            c.min_df = j["vocab"].value("min_df", c.min_df);
            c.max_df_fraction = j["vocab"].value("max_df_fraction", c.max_df_fraction);
        }
        if (j.contains("topics")) {
            const auto& t = j["topics"];
            c.topic_count = t.value("count", c.topic_count);
            c.seed = t.value("seed", c.seed);
            c.n_seeds = t.value("n_seeds", c.n_seeds);
            c.max_iter = t.value("max_iter", c.max_iter);
            c.rel_tol = t.value("rel_tol", c.rel_tol);
        }
        if (j.contains("sequence_threshold")) {
            const auto& t = j["sequence_threshold"];
            c.sequence_threshold = t.is_string() ? -1.0 : t.get<double>();
        }
        if (j.contains("stages")) {
            c.stage_window = j["stages"].value("window", c.stage_window);
            c.stage_z = j["stages"].value("z", c.stage_z);
        }
        if (j.contains("phases")) {
            const auto& p = j["phases"];
            auto chars = p.at("characters");
            c.phase_character_a = chars.at(0).get<std::string>();
            c.phase_character_b = chars.at(1).get<std::string>();
            c.phase_window = p.value("window", 0);
            for (const auto& r : p.at("ranges")) {
                PhaseSpec::Range range;
                range.name = r.value("name", "");
                range.begin = r.at("begin").get<int>();
                range.end = r.at("end").get<int>();
                c.phases.phases.push_back(range);
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }

    for (const auto& p : {c.text_path, c.roster_path, c.lexicon_path})
        if (!fs::exists(p)) throw ConfigError("referenced file does not exist: " + p);
    if (!c.stopwords_path.empty() && !fs::exists(c.stopwords_path))
        throw ConfigError("referenced file does not exist: " + c.stopwords_path);
    if (c.topic_count < 1 || c.n_seeds < 1 || c.max_iter < 1 || c.rel_tol <= 0 ||
        c.min_df < 1 || c.stage_window < 1)
        throw ConfigError("numeric parameters must be positive");
    return c;
}

std::string PipelineConfig::canonical() const {
    json j;
    j["unit_level"] = unit_level;
    j["markers"] = {{"volume", markers.volume_pattern},
                    {"book", markers.book_pattern},
                    {"chapter", markers.chapter_pattern},
                    {"start", markers.start_marker},
                    {"end", markers.end_marker}};
    j["vocab"] = {{"min_df", min_df}, {"max_df_fraction", max_df_fraction}};
    j["topics"] = {{"count", topic_count}, {"seed", seed},        {"n_seeds", n_seeds},
                   {"max_iter", max_iter}, {"rel_tol", rel_tol}};
    j["sequence_threshold"] = sequence_threshold;
    j["stages"] = {{"window", stage_window}, {"z", stage_z}};
    json ranges = json::array();
    for (const auto& r : phases.phases) ranges.push_back({{"name", r.name}, {"begin", r.begin}, {"end", r.end}});
    j["phases"] = {{"a", phase_character_a},
                   {"b", phase_character_b},
                   {"window", phase_window},
                   {"ranges", ranges}};
    return j.dump();
}

std::string PipelineConfig::config_hash() const { return digest_bytes(canonical()); }

CharacterRoster load_roster(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad roster JSON: ") + e.what());
    }
    std::vector<RosterEntry> entries;
    for (const auto& item : j) {
        RosterEntry e;
        e.name = item.at("name").get<std::string>();
        for (const auto& a : item.at("aliases")) e.aliases.push_back(a.get<std::string>());
        e.mode = item.value("mode", "word") == "phrase" ? MatchMode::Phrase : MatchMode::WordBoundary;
        entries.push_back(std::move(e));
    }
    return CharacterRoster(std::move(entries));
}

namespace {

Corpus regroup(const Corpus& corpus, const std::string& level) {
    if (level == "chapter") return corpus;
    Corpus out;
    int ordinal = 0;
    std::pair<int, int> current{-1, -1};
    for (const auto& ch : corpus.chapters) {
        std::pair<int, int> key = level == "volume" ? std::pair{ch.ref.volume, 0}
                                                    : std::pair{ch.ref.volume, ch.ref.book};
        if (key != current) {
            current = key;
            ++ordinal;
            Chapter merged;
            merged.ref = UnitRef{ch.ref.volume, level == "volume" ? 1 : ch.ref.book, 1, ordinal};
            merged.title = ch.title;
            out.chapters.push_back(std::move(merged));
        }
        auto& unit = out.chapters.back();
        unit.raw_text += ch.raw_text;
        unit.tokens.insert(unit.tokens.end(), ch.tokens.begin(), ch.tokens.end());
    }
    return out;
}

struct StageContext {
    const PipelineConfig& config;
    std::string out;

    std::string path(const std::string& name) const { return out + "/" + name; }

    Corpus corpus() const {
        auto parsed = parse_narrative(read_file(config.text_path), config.markers);
        return regroup(parsed, config.unit_level);
    }

    std::vector<Timeline> timelines() const {
        require_artifact(path("timelines.json"), "ingest");
        json j = json::parse(read_file(path("timelines.json")));
        std::vector<Timeline> out;
        for (auto it = j.begin(); it != j.end(); ++it) {
            Timeline t;
            t.character = it.key();
            for (const auto& c : it.value()) t.chapters.push_back(c.get<int>());
            out.push_back(std::move(t));
        }
        return out;
    }

    int chapter_count() const {
        require_artifact(path("corpus_manifest.json"), "ingest");
        return json::parse(read_file(path("corpus_manifest.json"))).at("chapter_count").get<int>();
    }

    std::vector<double> chapter_spi() const {
        require_artifact(path("chapter_spi.csv"), "sentiment");
        std::istringstream in(read_file(path("chapter_spi.csv")));
        std::string line;
        std::getline(in, line); // header
        std::vector<double> spi;
        while (std::getline(in, line)) {
            auto last = line.rfind(',');
            spi.push_back(std::stod(line.substr(last + 1)));
        }
        return spi;
    }

    CommunityPartition communities(const CharacterNetwork& net) const {
        require_artifact(path("communities.json"), "network");
        json j = json::parse(read_file(path("communities.json")));
        CommunityPartition p;
        p.assignment.assign(net.node_count(), 0);
        for (auto it = j.at("assignment").begin(); it != j.at("assignment").end(); ++it) {
            int idx = net.node_index(it.key());
            if (idx >= 0) p.assignment[idx] = it.value().get<int>();
        }
        p.community_count = j.at("count").get<int>();
        p.modularity = j.at("modularity").get<double>();
        return p;
    }
};

void update_manifest(const StageContext& ctx, const std::string& stage,
                     const std::vector<std::string>& outputs, double seconds) {
    json manifest;
    std::string mpath = ctx.path("manifest.json");
    if (fs::exists(mpath)) {
        try {
            manifest = json::parse(read_file(mpath));
        } catch (...) {
            manifest = json::object();
        }
    }
    manifest["engine_version"] = "0.1.0";
    manifest["config_hash"] = ctx.config.config_hash();
    manifest["inputs"] = {{"text", digest_file(ctx.config.text_path)},
                          {"roster", digest_file(ctx.config.roster_path)},
                          {"lexicon", digest_file(ctx.config.lexicon_path)}};
    manifest["stages"][stage] = {{"outputs", outputs}, {"seconds", seconds}};
    write_file(mpath, manifest.dump(2) + "\n");
}

// ---- stages -------------------------------------------------------------

void stage_ingest(const StageContext& ctx) {
    auto corpus = ctx.corpus();
    auto roster = load_roster(ctx.config.roster_path);
    auto timelines = detect_appearances(corpus, roster);

    json manifest;
    manifest["chapter_count"] = corpus.chapter_count();
    manifest["volume_count"] = corpus.volume_count();
    manifest["book_count"] = corpus.book_count();
    json chapters = json::array();
    for (const auto& ch : corpus.chapters)
        chapters.push_back({{"ordinal", ch.ref.ordinal},
                            {"volume", ch.ref.volume},
                            {"book", ch.ref.book},
                            {"chapter", ch.ref.chapter},
                            {"title", ch.title},
                            {"token_count", ch.token_count()}});
    manifest["chapters"] = chapters;
    write_file(ctx.path("corpus_manifest.json"), manifest.dump(2) + "\n");

    json tl = json::object();
    for (const auto& t : timelines) tl[t.character] = t.chapters;
    write_file(ctx.path("timelines.json"), tl.dump(2) + "\n");
}

void stage_network(const StageContext& ctx) {
    auto timelines = ctx.timelines();
    int chapters = ctx.chapter_count();

    auto net = build_network(timelines);
    auto growth = growth_series(timelines, chapters);
    auto stats = path_statistics(net);
    auto cents = centralities(net, timelines);
    auto partition = detect_communities(net);
    auto stages = detect_stages(growth, ctx.config.stage_window, ctx.config.stage_z);

    write_file(ctx.path("network.gexf"), to_gexf(net, &partition));
    write_file(ctx.path("network.dot"), to_dot(net));
    std::vector<std::string> growth_chars;
    if (!ctx.config.phase_character_a.empty()) {
        growth_chars.push_back(ctx.config.phase_character_a);
        growth_chars.push_back(ctx.config.phase_character_b);
    }
    write_file(ctx.path("growth.csv"), growth_csv(growth, growth_chars));

    json jstats = {{"nodes", net.node_count()},
                   {"edges", net.edge_count()},
                   {"density", stats.density},
                   {"mean_geodesic", stats.mean_geodesic},
                   {"diameter", stats.diameter},
                   {"clustering", stats.clustering},
                   {"disconnected_pairs", stats.disconnected_pairs}};
    write_file(ctx.path("path_stats.json"), jstats.dump(2) + "\n");

    json jc = json::object();
    for (const auto& [name, c] : cents)
        jc[name] = {{"appearance", c.appearance},
                    {"degree", c.degree},
                    {"weighted_degree", c.weighted_degree}};
    write_file(ctx.path("centralities.json"), jc.dump(2) + "\n");

    json jp;
    jp["count"] = partition.community_count;
    jp["modularity"] = partition.modularity;
    json assignment = json::object();
    for (int u = 0; u < net.node_count(); ++u) assignment[net.nodes()[u]] = partition.assignment[u];
    jp["assignment"] = assignment;
    json labels = json::array();
    for (int i = 0; i < partition.community_count; ++i) labels.push_back(roman_numeral(i + 1));
    jp["labels"] = labels;
    write_file(ctx.path("communities.json"), jp.dump(2) + "\n");

    json js = json::array();
    for (const auto& s : stages)
        js.push_back({{"kind", stage_kind_name(s.kind)},
                      {"begin", s.begin},
                      {"end", s.end},
                      {"magnitude", s.magnitude}});
    write_file(ctx.path("stages.json"), js.dump(2) + "\n");
}

void stage_sentiment(const StageContext& ctx) {
    auto corpus = ctx.corpus();
    auto timelines = ctx.timelines();
    require_artifact(ctx.path("communities.json"), "network");
    auto lexicon = SentimentLexicon::load(ctx.config.lexicon_path);

    std::vector<ChapterSentiment> sentiments;
    std::vector<double> spi;
    for (const auto& ch : corpus.chapters) {
        sentiments.push_back(score_chapter(ch.tokens, lexicon, ch.ref.ordinal));
        spi.push_back(sentiments.back().spi);
    }
    write_file(ctx.path("chapter_spi.csv"), chapter_spi_csv(sentiments));

    auto net = build_network(timelines);
    auto pairs = pair_sentiments(net, spi);

    json profiles;
    profiles["baseline_sigma0"] = pairs.baseline;
    double mean_chapter = 0;
    for (double s : spi) mean_chapter += s;
    profiles["mean_chapter_spi"] = spi.empty() ? 0.0 : mean_chapter / spi.size();

    json jchars = json::object();
    for (const auto& t : timelines) {
        if (t.chapters.empty()) continue;
        auto p = aggregate_spi(t.character, t.chapters, spi);
        jchars[t.character] = {{"mean", p.mean},   {"q1", p.q1},
                               {"median", p.median}, {"q3", p.q3},
                               {"stderr", p.stderr_mean}, {"count", p.spi_set.size()}};
    }
    profiles["characters"] = jchars;

    json jpairs = json::array();
    for (const auto& e : pairs.edges)
        jpairs.push_back({{"a", e.a}, {"b", e.b}, {"mean_spi", e.mean_spi},
                          {"cosentiment", e.cosentiment}});
    profiles["pairs"] = jpairs;
    write_file(ctx.path("profiles.json"), profiles.dump(2) + "\n");

    auto partition = ctx.communities(net);
    auto cells = community_cosentiments(net, partition, pairs);
    json jm = json::array();
    for (const auto& c : cells)
        jm.push_back({{"community_a", roman_numeral(c.community_a + 1)},
                      {"community_b", roman_numeral(c.community_b + 1)},
                      {"positive_fraction", c.positive_fraction},
                      {"negative_fraction", c.negative_fraction},
                      {"edge_count", c.edge_count},
                      {"log_radius", c.log_radius}});
    write_file(ctx.path("community_cosentiment.json"), jm.dump(2) + "\n");
}

void stage_sequences(const StageContext& ctx) {
    auto corpus = ctx.corpus();
    auto timelines = ctx.timelines();
    auto spi = ctx.chapter_spi();

    auto vectors = book_vectors(timelines, corpus);
    auto bundle = bundle_sequences(vectors, ctx.config.sequence_threshold);
    annotate_sequence_spi(bundle, spi);

    auto net = build_network(timelines);
    auto pairs = pair_sentiments(net, spi);
    auto snapshots = sequence_snapshots(bundle, timelines, pairs);

    json js;
    js["threshold"] = bundle.threshold;
    js["auto_threshold"] = bundle.auto_threshold;
    js["retained_books"] = vectors.size();
    js["total_books"] = corpus.book_count();
    json seqs = json::array();
    for (std::size_t i = 0; i < bundle.sequences.size(); ++i) {
        const auto& s = bundle.sequences[i];
        json books = json::array();
        for (auto [v, b] : s.books) books.push_back({{"volume", v}, {"book", b}});
        seqs.push_back({{"index", s.index},
                        {"books", books},
                        {"chapter_begin", s.chapters.front()},
                        {"chapter_end", s.chapters.back()},
                        {"mean_spi", s.mean_spi},
                        {"sign", s.spi_sign},
                        {"positive_fraction", snapshots[i].positive_fraction},
                        {"negative_fraction", snapshots[i].negative_fraction}});
    }
    js["sequences"] = seqs;
    write_file(ctx.path("sequences.json"), js.dump(2) + "\n");
    write_file(ctx.path("similarity.csv"), similarity_csv(bundle, vectors));

    for (const auto& snap : snapshots) {
        char name[32];
        std::snprintf(name, sizeof(name), "snapshots/seq_%02d.gexf", snap.sequence_index);
        write_file(ctx.path(name), to_gexf(snap.subnetwork, nullptr, nullptr));
    }
}

void stage_topics(const StageContext& ctx) {
    auto corpus = ctx.corpus();
    auto timelines = ctx.timelines();

    VocabConfig vc;
    vc.min_df = ctx.config.min_df;
    vc.max_df_fraction = ctx.config.max_df_fraction;
    if (!ctx.config.stopwords_path.empty()) {
        std::istringstream in(read_file(ctx.config.stopwords_path));
        std::string w;
        while (in >> w) vc.stopwords.insert(w);
    }
    auto [vocab, m] = build_tfidf(corpus, vc);

    auto model = nnmf(m, ctx.config.topic_count, ctx.config.seed, ctx.config.max_iter,
                      ctx.config.rel_tol);
    write_file(ctx.path("Q.csv"), matrix_csv(model.Q));
    write_file(ctx.path("H.csv"), matrix_csv(model.H));
    for (int i = 1; i < ctx.config.n_seeds; ++i) {
        auto extra = nnmf(m, ctx.config.topic_count, ctx.config.seed + i, ctx.config.max_iter,
                          ctx.config.rel_tol);
        write_file(ctx.path("H_run" + std::to_string(i) + ".csv"), matrix_csv(extra.H));
    }

    json jv;
    jv["size"] = vocab.size();
    jv["words"] = vocab.words;
    jv["df"] = vocab.df;
    write_file(ctx.path("vocabulary.json"), jv.dump() + "\n");

    auto keywords = topic_keywords(model.Q, vocab, 10);
    json jt = json::array();
    for (const auto& tk : keywords) {
        json words = json::array();
        for (std::size_t i = 0; i < tk.keywords.size(); ++i)
            words.push_back({{"word", tk.keywords[i]},
                             {"weight", tk.weights[i]},
                             {"strongest", i == 0}});
        jt.push_back({{"topic", "T" + std::to_string(tk.topic + 1)}, {"keywords", words}});
    }
    write_file(ctx.path("topics.json"), jt.dump(2) + "\n");

    json jstates = json::object();
    for (const auto& t : timelines) {
        if (t.chapters.empty()) continue;
        auto state = topical_state(model.H, t.chapters);
        std::vector<double> comps(state.components.data(),
                                  state.components.data() + state.components.size());
        jstates[t.character] = {{"components", comps}, {"zero_mass", state.zero_mass}};
    }
    write_file(ctx.path("topical_states.json"), jstates.dump() + "\n");

    json trace = model.error_trace;
    write_file(ctx.path("nnmf_trace.json"), trace.dump() + "\n");
}

void stage_phases(const StageContext& ctx) {
    require_artifact(ctx.path("H.csv"), "topics");
    auto timelines = ctx.timelines();
    int chapters = ctx.chapter_count();

    if (ctx.config.phases.phases.empty())
        throw ConfigError("phase analysis requires a phase spec in the config");

    std::vector<Matrix> runs;
    runs.push_back(matrix_from_csv(read_file(ctx.path("H.csv"))));
    for (int i = 1; i < ctx.config.n_seeds; ++i) {
        auto p = ctx.path("H_run" + std::to_string(i) + ".csv");
        require_artifact(p, "topics");
        runs.push_back(matrix_from_csv(read_file(p)));
    }

    const Timeline* a = nullptr;
    const Timeline* b = nullptr;
    for (const auto& t : timelines) {
        if (t.character == ctx.config.phase_character_a) a = &t;
        if (t.character == ctx.config.phase_character_b) b = &t;
    }
    if (!a || !b) throw ConfigError("phase characters not found in roster timelines");

    auto report = phase_analysis(runs, ctx.config.phases, *a, *b, chapters,
                                 ctx.config.phase_window);

    json j;
    j["characters"] = {a->character, b->character};
    j["gap_chapters"] = report.gap_chapters;
    json phases = json::array();
    for (std::size_t p = 0; p < report.phase_states.size(); ++p) {
        json jp;
        jp["name"] = ctx.config.phases.phases[p].name;
        jp["begin"] = ctx.config.phases.phases[p].begin;
        jp["end"] = ctx.config.phases.phases[p].end;
        jp["correlation"] = report.correlation[p];
        jp["correlation_stddev"] = report.correlation_stddev[p];
        for (const auto& s : report.phase_states[p]) {
            std::vector<double> state(s.state.data(), s.state.data() + s.state.size());
            std::vector<double> delta(s.delta.data(), s.delta.data() + s.delta.size());
            jp["states"][s.character] = {{"absent", s.absent},
                                         {"state", state},
                                         {"delta", delta},
                                         {"top_gainers", s.top_gainers}};
        }
        phases.push_back(jp);
    }
    j["phases"] = phases;

    json jt = json::array();
    for (const auto& t : report.transfers) {
        const char* kind = t.kind == TransferKind::Transferred
                               ? "transferred"
                               : (t.kind == TransferKind::ExogenousBoth ? "exogenous-both"
                                                                        : "single-entry");
        jt.push_back({{"kind", kind},
                      {"topic", t.topic},
                      {"source", t.source},
                      {"target", t.target},
                      {"phase", t.phase}});
    }
    j["transfers"] = jt;
    write_file(ctx.path("phase_report.json"), j.dump(2) + "\n");

    // transfer diagram wants keyword tags
    std::vector<TopicKeywords> keywords;
    if (fs::exists(ctx.path("topics.json"))) {
        json topics = json::parse(read_file(ctx.path("topics.json")));
        for (const auto& t : topics) {
            TopicKeywords tk;
            tk.topic = static_cast<int>(keywords.size());
            for (const auto& w : t.at("keywords")) tk.keywords.push_back(w.at("word"));
            keywords.push_back(std::move(tk));
        }
    }
    write_file(ctx.path("transfers.dot"), transfers_dot(report.transfers, keywords));
}

void stage_report(const StageContext& ctx) {
    // bundle every figure's underlying data and re-emit the network with
    // cosentiment edge attributes
    for (const char* dep : {"growth.csv", "centralities.json", "chapter_spi.csv",
                            "sequences.json", "topics.json", "phase_report.json"})
        require_artifact(ctx.path(dep), "upstream stages");

    auto timelines = ctx.timelines();
    auto spi = ctx.chapter_spi();
    auto net = build_network(timelines);
    auto pairs = pair_sentiments(net, spi);
    auto partition = ctx.communities(net);
    write_file(ctx.path("network_cosentiment.gexf"), to_gexf(net, &partition, &pairs));

    // character and community topic data (Fig. 8 wheels)
    require_artifact(ctx.path("H.csv"), "topics");
    Matrix h = matrix_from_csv(read_file(ctx.path("H.csv")));
    auto comm = community_topics(h, partition, net, timelines);
    json jc = json::array();
    for (const auto& c : comm) {
        std::vector<double> comps(c.state.components.data(),
                                  c.state.components.data() + c.state.components.size());
        jc.push_back({{"community", roman_numeral(c.community + 1)},
                      {"chapters", c.chapters},
                      {"zero_mass", c.state.zero_mass},
                      {"components", comps}});
    }
    write_file(ctx.path("community_topics.json"), jc.dump() + "\n");

    json groups = {
        {"growth_series", {"growth.csv", "stages.json"}},
        {"centralities", {"centralities.json", "growth.csv"}},
        {"chapter_spi", {"chapter_spi.csv", "sequences.json"}},
        {"network_communities_cosentiment", {"network_cosentiment.gexf", "communities.json"}},
        {"sequence_snapshots", {"sequences.json", "similarity.csv"}},
        {"topic_table", {"topics.json", "vocabulary.json"}},
        {"topic_wheels", {"topical_states.json", "community_topics.json"}},
        {"phase_transfers", {"phase_report.json", "transfers.dot"}},
    };
    write_file(ctx.path("report_manifest.json"), json(groups).dump(2) + "\n");
}

} // namespace

int run_stage(const std::string& subcommand, const PipelineConfig& config, bool quiet) {
    static const std::vector<std::pair<std::string, void (*)(const StageContext&)>> stages = {
        {"ingest", stage_ingest},       {"network", stage_network},
        {"sentiment", stage_sentiment}, {"sequences", stage_sequences},
        {"topics", stage_topics},       {"phases", stage_phases},
        {"report", stage_report},
    };

    std::vector<std::string> to_run;
    if (subcommand == "all") {
        for (const auto& [name, fn] : stages) to_run.push_back(name);
    } else {
        bool known = false;
        for (const auto& [name, fn] : stages) known = known || name == subcommand;
        if (!known) {
            std::cerr << json({{"error", "unknown subcommand"}, {"subcommand", subcommand}}).dump()
                      << "\n";
            return 2;
        }
        to_run.push_back(subcommand);
    }

    StageContext ctx{config, config.output_dir};
    try {
        for (const auto& name : to_run) {
            auto t0 = std::chrono::steady_clock::now();
            for (const auto& [sname, fn] : stages)
                if (sname == name) fn(ctx);
            auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::vector<std::string> outputs; // directory listing for the manifest
            for (const auto& entry : fs::directory_iterator(ctx.out))
                if (entry.is_regular_file()) outputs.push_back(entry.path().filename().string());
            std::sort(outputs.begin(), outputs.end());
            update_manifest(ctx, name, outputs, dt);
            if (!quiet) std::cerr << "[narranet] " << name << " done in " << dt << "s\n";
        }
    } catch (const ConfigError& e) {
        std::cerr << json({{"error", "config"}, {"message", e.what()}}).dump() << "\n";
        return 2;
    } catch (const StageDependencyMissing& e) {
        std::cerr << json({{"error", "dependency"}, {"message", e.what()}}).dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json({{"error", "runtime"}, {"message", e.what()}}).dump() << "\n";
        return 4;
    }
    return 0;
}

} // namespace narranet
