#include "narranet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace narranet {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : text) {
        if (std::isalpha(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int Corpus::volume_count() const {
    int v = 0;
    for (const auto& ch : chapters) v = std::max(v, ch.ref.volume);
    return v;
}

int Corpus::book_count() const { return static_cast<int>(books().size()); }

std::vector<std::pair<int, int>> Corpus::books() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& ch : chapters) {
        std::pair<int, int> id{ch.ref.volume, ch.ref.book};
        if (out.empty() || out.back() != id) out.push_back(id);
    }
    return out;
}

std::vector<int> Corpus::book_chapters(int volume, int book) const {
    std::vector<int> out;
    for (const auto& ch : chapters)
        if (ch.ref.volume == volume && ch.ref.book == book) out.push_back(ch.ref.ordinal);
    return out;
}

namespace {

std::vector<std::string> split_lines(const std::string& raw) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(raw);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string heading_title(const std::string& line, const std::smatch& m) {
    // Text after the matched heading token, stripped of separators.
    std::string rest = line.substr(m.position(0) + m.length(0));
    std::size_t i = 0;
    while (i < rest.size() && (rest[i] == ':' || rest[i] == '.' || rest[i] == '-' || rest[i] == ' '))
        ++i;
    return rest.substr(i);
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

Corpus parse_narrative(const std::string& raw, const SegmentationConfig& markers) {
    const bool has_volumes = !markers.volume_pattern.empty();
    const bool has_books = !markers.book_pattern.empty();
    if (markers.chapter_pattern.empty()) throw ConfigError("chapter_pattern is required");

    std::regex volume_re, book_re;
    std::regex chapter_re(markers.chapter_pattern);
    if (has_volumes) volume_re = std::regex(markers.volume_pattern);
    if (has_books) book_re = std::regex(markers.book_pattern);

    auto lines = split_lines(raw);

    std::size_t begin = 0, end = lines.size();
    if (!markers.start_marker.empty()) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (lines[i].find(markers.start_marker) != std::string::npos) {
                begin = i + 1;
                break;
            }
    }
    if (!markers.end_marker.empty()) {
        for (std::size_t i = begin; i < lines.size(); ++i)
            if (lines[i].find(markers.end_marker) != std::string::npos) {
                end = i;
                break;
            }
    }

    Corpus corpus;
    int volume = has_volumes ? 0 : 1;
    int book = has_books ? 0 : 1;
    int chapter_in_book = 0;
    int ordinal = 0;
    std::string body;
    bool in_chapter = false;
    Chapter current;

    auto flush = [&]() {
        if (!in_chapter) return;
        current.raw_text = body;
        current.tokens = tokenize(body);
        corpus.chapters.push_back(std::move(current));
        current = Chapter{};
        body.clear();
        in_chapter = false;
    };

    for (std::size_t i = begin; i < end; ++i) {
        const std::string& line = lines[i];
        std::smatch m;
        if (has_volumes && std::regex_search(line, m, volume_re)) {
            flush();
            ++volume;
            book = has_books ? 0 : 1;
            chapter_in_book = 0;
            continue;
        }
        if (has_books && std::regex_search(line, m, book_re)) {
            if (has_volumes && volume == 0)
                throw NonMonotoneHeading("book heading before any volume heading: " + line);
            flush();
            ++book;
            chapter_in_book = 0;
            continue;
        }
        if (std::regex_search(line, m, chapter_re)) {
            if ((has_volumes && volume == 0) || (has_books && book == 0))
                throw NonMonotoneHeading("chapter heading before volume/book heading: " + line);
            flush();
            in_chapter = true;
            current.ref = UnitRef{volume, book, ++chapter_in_book, ++ordinal};
            current.title = strip(heading_title(line, m));
            continue;
        }
        if (in_chapter) {
            body += line;
            body += '\n';
        }
    }
    flush();

    if (corpus.chapters.empty())
        throw NoChaptersFound("no chapter headings matched pattern: " + markers.chapter_pattern);
    return corpus;
}

} // namespace narranet
