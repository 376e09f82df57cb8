// narranet: narrative character-network analysis pipeline.
//
// Usage: narranet <subcommand> --config <file> [overrides]
// Subcommands: ingest, network, sentiment, sequences, topics, phases,
// report, all.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "narranet/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"narranet - dynamic character network analysis for chaptered narratives"};
    app.require_subcommand(1);

    std::string config_path;
    bool quiet = false;

    // per-field overrides
    std::string output_dir, unit_level;
    int topic_count = -1, n_seeds = -1, max_iter = -1, stage_window = -1, phase_window = -1;
    long long seed = -1;
    double rel_tol = -1, sequence_threshold = -2, stage_z = -1, max_df = -1;
    int min_df = -1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "pipeline config JSON")->required();
        cmd->add_flag("--quiet", quiet, "suppress progress output");
        cmd->add_option("--output-dir", output_dir);
        cmd->add_option("--unit-level", unit_level, "chapter|book|volume");
        cmd->add_option("--topic-count", topic_count);
        cmd->add_option("--seed", seed);
        cmd->add_option("--n-seeds", n_seeds);
        cmd->add_option("--max-iter", max_iter);
        cmd->add_option("--rel-tol", rel_tol);
        cmd->add_option("--sequence-threshold", sequence_threshold, "cosine threshold; omit for auto");
        cmd->add_option("--stage-window", stage_window);
        cmd->add_option("--stage-z", stage_z);
        cmd->add_option("--phase-window", phase_window);
        cmd->add_option("--min-df", min_df);
        cmd->add_option("--max-df-fraction", max_df);
    };

    for (const char* name : {"ingest", "network", "sentiment", "sequences", "topics", "phases",
                             "report", "all"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);
    const std::string subcommand = app.get_subcommands().front()->get_name();

    try {
        auto config = narranet::PipelineConfig::load(config_path);
        if (!output_dir.empty()) config.output_dir = output_dir;
        if (!unit_level.empty()) config.unit_level = unit_level;
        if (topic_count > 0) config.topic_count = topic_count;
        if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
        if (n_seeds > 0) config.n_seeds = n_seeds;
        if (max_iter > 0) config.max_iter = max_iter;
        if (rel_tol > 0) config.rel_tol = rel_tol;
        if (sequence_threshold > -2) config.sequence_threshold = sequence_threshold;
        if (stage_window > 0) config.stage_window = stage_window;
        if (stage_z >= 0) config.stage_z = stage_z;
        if (phase_window >= 0) config.phase_window = phase_window;
        if (min_df > 0) config.min_df = min_df;
        if (max_df > 0) config.max_df_fraction = max_df;
        return narranet::run_stage(subcommand, config, quiet);
    } catch (const narranet::ConfigError& e) {
        std::cerr << "{\"error\":\"config\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"runtime\",\"message\":\"" << e.what() << "\"}\n";
        return 4;
    }
}
