#pragma once

#include <string>
#include <vector>

#include "narranet/network.hpp"

namespace narranet {

/// Positive/negative word lists with LIWC-style `*` suffix wildcards.
/// File format: `[positive]` / `[negative]` section headers, one entry
/// per line, `#` comments.
class SentimentLexicon {
public:
    SentimentLexicon(std::vector<std::string> positive, std::vector<std::string> negative);

    static SentimentLexicon load(const std::string& path);
    static SentimentLexicon parse(const std::string& text);

    bool is_positive(const std::string& token) const;
    bool is_negative(const std::string& token) const;
    std::size_t positive_size() const { return pos_exact_.size() + pos_stems_.size(); }
    std::size_t negative_size() const { return neg_exact_.size() + neg_stems_.size(); }

private:
    std::vector<std::string> pos_exact_, pos_stems_; // sorted
    std::vector<std::string> neg_exact_, neg_stems_;
};

struct ChapterSentiment {
    int ordinal = 0;
    double positive_pct = 0.0; // pi
    double negative_pct = 0.0; // nu
    double spi = 0.0;          // sigma = log10((pi+1)/(nu+1))
};

ChapterSentiment score_chapter(const std::vector<std::string>& tokens,
                               const SentimentLexicon& lexicon, int ordinal = 0);

struct SentimentProfile {
    std::string subject;
    std::vector<double> spi_set; // ordinal order
    double mean = 0.0;
    double q1 = 0.0, median = 0.0, q3 = 0.0;
    double stderr_mean = 0.0;
};

/// Aggregate chapter SPIs over a subject's chapter set. `chapter_spi`
/// is indexed by ordinal-1. Throws EmptySubject on an empty set.
SentimentProfile aggregate_spi(const std::string& subject, const std::vector<int>& chapters,
                               const std::vector<double>& chapter_spi);

inline double cosentiment(double pair_mean_spi, double baseline) {
    return pair_mean_spi - baseline;
}

struct EdgeSentiment {
    std::string a, b;
    double mean_spi = 0.0;
    double cosentiment = 0.0; // mean_spi - baseline
};

struct PairSentiments {
    double baseline = 0.0; // sigma0: mean pair SPI over all edges
    std::vector<EdgeSentiment> edges; // same order as network edges
};

PairSentiments pair_sentiments(const CharacterNetwork& net, const std::vector<double>& chapter_spi);

struct CommunityCosentimentCell {
    int community_a = 0, community_b = 0; // a <= b; a == b is intra
    double positive_fraction = 0.0;
    double negative_fraction = 0.0;
    int edge_count = 0;
    double log_radius = 0.0; // log10(edge_count), export value
};

std::vector<CommunityCosentimentCell> community_cosentiments(const CharacterNetwork& net,
                                                             const CommunityPartition& partition,
                                                             const PairSentiments& pairs);

} // namespace narranet
