#pragma once

#include <string>
#include <vector>

#include "narranet/sentiment.hpp"

namespace narranet {

/// Binary character-composition vector of one book. Books whose chapters
/// contain no roster character are dropped before bundling.
struct BookCompositionVector {
    int volume = 0, book = 0;
    std::vector<int> chapters;   // ordinals of the book
    std::vector<double> vec;     // dimension == roster size
};

enum class SimilarityKind { CosineBinary, CosineCounts, Jaccard };

std::vector<BookCompositionVector> book_vectors(const std::vector<Timeline>& timelines,
                                                const Corpus& corpus,
                                                SimilarityKind kind = SimilarityKind::CosineBinary);

struct Sequence {
    int index = 0;                       // 1-based, narrative order
    std::vector<std::pair<int, int>> books; // contiguous (volume, book) run
    std::vector<int> chapters;           // union of member book chapters
    double mean_spi = 0.0;
    int spi_sign = 0;                    // -1, 0, +1
};

struct SequenceBundle {
    std::vector<Sequence> sequences;
    std::vector<double> similarities; // s_i between consecutive retained books
    double threshold = 0.0;           // the value actually used
    bool auto_threshold = false;
};

/// Merge consecutive retained books whose similarity >= threshold
/// (threshold < 0 means auto: mean of the consecutive similarities).
SequenceBundle bundle_sequences(const std::vector<BookCompositionVector>& vectors,
                                double threshold /* <0 = auto */,
                                SimilarityKind kind = SimilarityKind::CosineBinary);

void annotate_sequence_spi(SequenceBundle& bundle, const std::vector<double>& chapter_spi);

struct SequenceSnapshot {
    int sequence_index = 0;
    CharacterNetwork subnetwork; // co-appearances within the sequence's chapters
    double positive_fraction = 0.0;
    double negative_fraction = 0.0;
};

/// Snapshot networks per sequence; edges keep their whole-novel
/// cosentiment sign for the fraction counts.
std::vector<SequenceSnapshot> sequence_snapshots(const SequenceBundle& bundle,
                                                 const std::vector<Timeline>& timelines,
                                                 const PairSentiments& pairs);

} // namespace narranet
