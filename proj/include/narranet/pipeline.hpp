#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "narranet/exports.hpp"

namespace narranet {

struct PipelineConfig {
    // inputs
    std::string text_path;
    std::string roster_path;
    std::string lexicon_path;
    std::string stopwords_path; // optional
    std::string output_dir = "out";
    SegmentationConfig markers;

    std::string unit_level = "chapter"; // chapter | book | volume

    // vocab filters
    int min_df = 3;
    double max_df_fraction = 0.5;

    // topics
    int topic_count = 50;
    std::uint64_t seed = 42;
    int n_seeds = 10;
    int max_iter = 200;
    double rel_tol = 1e-4;

    // sequences
    double sequence_threshold = -1.0; // <0 = auto (mean similarity)

    // phases
    PhaseSpec phases;
    std::string phase_character_a, phase_character_b;
    int phase_window = 0; // 0 = full phase

    // stage detection
    int stage_window = 10;
    double stage_z = 2.0;

    static PipelineConfig load(const std::string& path);

    /// Canonical serialized form; covers every output-affecting field.
    std::string canonical() const;
    std::string config_hash() const;
};

CharacterRoster load_roster(const std::string& path);

/// FNV-1a 64-bit digest, hex string.
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::string& path);

/// Runs one pipeline stage (or `all`). Returns process exit code:
/// 0 ok, 2 config error, 3 missing stage dependency, 4 runtime error.
int run_stage(const std::string& subcommand, const PipelineConfig& config, bool quiet = false);

} // namespace narranet
