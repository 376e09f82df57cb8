#pragma once

#include <string>
#include <vector>

#include "narranet/corpus.hpp"

namespace narranet {

enum class MatchMode { WordBoundary, Phrase };

struct RosterEntry {
    std::string name; // canonical
    std::vector<std::string> aliases;
    MatchMode mode = MatchMode::WordBoundary;
};

/// Character roster. Validates on construction: canonical names unique,
/// aliases non-empty, no alias token sequence claimed twice (AmbiguousAlias).
class CharacterRoster {
public:
    explicit CharacterRoster(std::vector<RosterEntry> entries);

    const std::vector<RosterEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<RosterEntry> entries_;
};

/// The set C_alpha: chapters (ordinals) where a character appears.
struct Timeline {
    std::string character;
    std::vector<int> chapters; // sorted, duplicate-free

    int appearance() const { return static_cast<int>(chapters.size()); }
    bool contains(int ordinal) const;
};

/// Alias matching is case-insensitive with word boundaries: an alias
/// matches when its token sequence occurs contiguously in the chapter's
/// token stream. Characters that never match get an empty timeline.
std::vector<Timeline> detect_appearances(const Corpus& corpus, const CharacterRoster& roster);

} // namespace narranet
