#pragma once

#include <string>
#include <vector>

#include "narranet/sentiment.hpp"
#include "narranet/sequence.hpp"
#include "narranet/topics.hpp"

namespace narranet {

/// GEXF export. Optional community labels (node attribute) and edge
/// cosentiments (weight is always the co-appearance count).
std::string to_gexf(const CharacterNetwork& net, const CommunityPartition* partition = nullptr,
                    const PairSentiments* pairs = nullptr);

std::string to_dot(const CharacterNetwork& net, const PairSentiments* pairs = nullptr);

/// Growth series CSV: ordinal,n,m plus one appearance/degree column pair
/// per requested character.
std::string growth_csv(const GrowthSeries& growth, const std::vector<std::string>& characters = {});

std::string chapter_spi_csv(const std::vector<ChapterSentiment>& sentiments);

std::string similarity_csv(const SequenceBundle& bundle,
                           const std::vector<BookCompositionVector>& vectors);

std::string matrix_csv(const Matrix& m);
Matrix matrix_from_csv(const std::string& text);

/// Fig. 9B-style transfer diagram.
std::string transfers_dot(const std::vector<TransferLabel>& transfers,
                          const std::vector<TopicKeywords>& keywords);

std::string roman_numeral(int value); // 1 -> I

} // namespace narranet
