#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "narranet/network.hpp"

namespace narranet {

using Matrix = Eigen::MatrixXd;

struct VocabConfig {
    std::set<std::string> stopwords;
    int min_df = 1;
    double max_df_fraction = 1.0;
};

struct Vocabulary {
    std::vector<std::string> words; // index order
    std::vector<int> df;

    int size() const { return static_cast<int>(words.size()); }
    int index_of(const std::string& word) const; // -1 if absent
};

/// TF-IDF word-chapter matrix, |W| x |D|.
/// tf = raw count, idf = ln((1+|D|)/(1+df)) + 1, columns L2-normalized.
std::pair<Vocabulary, Matrix> build_tfidf(const Corpus& corpus, const VocabConfig& config);

struct TopicModel {
    Matrix Q; // |W| x |T|
    Matrix H; // |T| x |D|
    int topic_count = 0;
    std::uint64_t seed = 0;
    std::vector<double> error_trace; // squared Frobenius reconstruction error per iteration
};

/// Multiplicative-update NNMF of M (>= 0) into Q*H, seeded uniform
/// non-negative init; stops when the relative error decrease drops
/// below rel_tol or at max_iter.
TopicModel nnmf(const Matrix& M, int topic_count, std::uint64_t seed,
                int max_iter = 200, double rel_tol = 1e-4);

struct TopicKeywords {
    int topic = 0;                      // 0-based
    std::vector<std::string> keywords;  // descending q_ij
    std::vector<double> weights;
};

std::vector<TopicKeywords> topic_keywords(const Matrix& Q, const Vocabulary& vocab, int top_n);

struct TopicalState {
    std::vector<int> window;       // ordinals used
    Eigen::VectorXd components;    // t_alpha_k, sums to 1 unless zero_mass
    bool zero_mass = false;        // all H entries in window were 0
};

/// Character-topic association over a chapter window: component k is the
/// window sum of H[k,.] normalized by the total mass of the window.
TopicalState topical_state(const Matrix& H, const std::vector<int>& window);

struct CommunityTopics {
    int community = 0;
    std::vector<int> chapters; // chapters with >= 2 member characters
    TopicalState state;
};

std::vector<CommunityTopics> community_topics(const Matrix& H, const CommunityPartition& partition,
                                              const CharacterNetwork& net,
                                              const std::vector<Timeline>& timelines);

struct PhaseSpec {
    struct Range {
        std::string name;
        int begin = 0, end = 0; // inclusive ordinals
    };
    std::vector<Range> phases; // ordered, non-overlapping; gaps allowed but flagged
};

enum class TransferKind { Transferred, ExogenousBoth, SingleEntry };

struct TransferLabel {
    TransferKind kind;
    int topic = 0;
    std::string source; // for Transferred: the character it came from
    std::string target; // gaining character ("both" targets emit one label per character)
    int phase = 0;      // 1-based phase index the gain happened in
};

struct PhaseCharacterState {
    std::string character;
    bool absent = false;              // no chapters inside the phase; state carried forward
    Eigen::VectorXd state;            // end-of-phase topical state
    Eigen::VectorXd delta;            // state - previous phase state
    std::vector<int> top_gainers;     // topics with largest delta, descending
};

struct PhaseReport {
    PhaseSpec spec;
    std::vector<int> gap_chapters; // ordinals not covered by any phase (within 1..C)
    // per phase, per character (two characters)
    std::vector<std::array<PhaseCharacterState, 2>> phase_states;
    std::vector<double> correlation;        // Pearson r between the two states, per phase
    std::vector<double> correlation_stddev; // dispersion over NNMF re-runs
    std::vector<TransferLabel> transfers;
};

/// Phase-by-phase topical-state analysis for a character pair.
/// `runs` holds H matrices from independent NNMF seeds; states, deltas and
/// transfers come from runs[0], correlation uncertainty from the spread.
/// window = 0 means the full phase range; otherwise the last `window`
/// chapters of the phase are used. A character absent from a phase keeps
/// its previous state (flagged `absent`).
PhaseReport phase_analysis(const std::vector<Matrix>& runs, const PhaseSpec& phases,
                           const Timeline& first, const Timeline& second,
                           int chapter_count, int window = 0, int transfer_top_n = 5);

/// Classification used inside phase_analysis, exposed for direct use:
/// inspects one phase transition given before-states and deltas.
std::vector<TransferLabel> classify_transfers(const Eigen::VectorXd& before_a,
                                              const Eigen::VectorXd& before_b,
                                              const Eigen::VectorXd& delta_a,
                                              const Eigen::VectorXd& delta_b,
                                              const std::string& name_a,
                                              const std::string& name_b,
                                              int phase, int top_n);

double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

} // namespace narranet
