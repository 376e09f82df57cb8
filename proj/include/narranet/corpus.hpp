#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "narranet/errors.hpp"

namespace narranet {

/// Position of a chapter in the volume/book/chapter hierarchy.
/// All indices are 1-based; `ordinal` is the global chapter position.
struct UnitRef {
    int volume = 0;
    int book = 0;    // within volume
    int chapter = 0; // within book
    int ordinal = 0; // global, contiguous 1..C

    bool operator==(const UnitRef&) const = default;
};

struct Chapter {
    UnitRef ref;
    std::string title;
    std::string raw_text;
    std::vector<std::string> tokens;

    int token_count() const { return static_cast<int>(tokens.size()); }
};

/// Heading patterns used to segment a plain-text narrative.
/// Patterns are ECMAScript regexes matched against whole lines.
/// Empty volume/book patterns flatten the hierarchy at that level.
struct SegmentationConfig {
    std::string volume_pattern;
    std::string book_pattern;
    std::string chapter_pattern;
    std::string start_marker; // text before the first line containing this is dropped
    std::string end_marker;   // text from the first line containing this on is dropped
};

struct Corpus {
    std::vector<Chapter> chapters; // ordinal order

    int chapter_count() const { return static_cast<int>(chapters.size()); }
    int volume_count() const;
    int book_count() const; // total books across volumes

    /// Distinct (volume, book) pairs in narrative order.
    std::vector<std::pair<int, int>> books() const;

    /// Ordinals belonging to a given (volume, book).
    std::vector<int> book_chapters(int volume, int book) const;

    const Chapter& chapter(int ordinal) const { return chapters.at(ordinal - 1); }
};

/// Lowercases and splits on every non-alphabetic byte. Digits and
/// punctuation never survive; empty fragments are dropped.
std::vector<std::string> tokenize(std::string_view text);

Corpus parse_narrative(const std::string& raw, const SegmentationConfig& markers);

} // namespace narranet
