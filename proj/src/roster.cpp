#include "narranet/roster.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace narranet {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

} // namespace

CharacterRoster::CharacterRoster(std::vector<RosterEntry> entries) : entries_(std::move(entries)) {
    std::map<std::string, std::string> claimed; // normalized alias -> owner
    std::map<std::string, bool> names;
    for (const auto& e : entries_) {
        if (e.name.empty()) throw ConfigError("roster entry with empty canonical name");
        if (names.count(e.name)) throw ConfigError("duplicate canonical name: " + e.name);
        names[e.name] = true;
        if (e.aliases.empty()) throw ConfigError("roster entry without aliases: " + e.name);
        for (const auto& alias : e.aliases) {
            auto norm = join_tokens(tokenize(alias));
            if (norm.empty()) throw ConfigError("empty alias for " + e.name);
            auto [it, inserted] = claimed.emplace(norm, e.name);
            if (!inserted && it->second != e.name)
                throw AmbiguousAlias("alias '" + alias + "' claimed by both " + it->second +
                                     " and " + e.name);
        }
    }
}

bool Timeline::contains(int ordinal) const {
    return std::binary_search(chapters.begin(), chapters.end(), ordinal);
}

namespace {

bool contains_subsequence(const std::vector<std::string>& tokens,
                          const std::vector<std::string>& pattern) {
    if (pattern.empty() || pattern.size() > tokens.size()) return false;
    const std::size_t last = tokens.size() - pattern.size();
    for (std::size_t i = 0; i <= last; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < pattern.size(); ++j) {
            if (tokens[i + j] != pattern[j]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

std::vector<Timeline> detect_appearances(const Corpus& corpus, const CharacterRoster& roster) {
    std::vector<std::vector<std::vector<std::string>>> patterns; // per entry
    for (const auto& e : roster.entries()) {
        std::vector<std::vector<std::string>> ps;
        for (const auto& alias : e.aliases) ps.push_back(tokenize(alias));
        patterns.push_back(std::move(ps));
    }

    std::vector<Timeline> timelines;
    timelines.reserve(roster.size());
    for (std::size_t i = 0; i < roster.size(); ++i)
        timelines.push_back(Timeline{roster.entries()[i].name, {}});

    for (const auto& chapter : corpus.chapters) {
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            for (const auto& p : patterns[i]) {
                if (contains_subsequence(chapter.tokens, p)) {
                    timelines[i].chapters.push_back(chapter.ref.ordinal);
                    break;
                }
            }
        }
    }
    return timelines;
}

} // namespace narranet
