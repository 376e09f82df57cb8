#include "narranet/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace narranet {

namespace {

bool matches(const std::vector<std::string>& exact, const std::vector<std::string>& stems,
             const std::string& token) {
    if (std::binary_search(exact.begin(), exact.end(), token)) return true;
    // stems are sorted; candidates are prefixes of token, so check the
    // entries that sort at or before the token
    auto it = std::upper_bound(stems.begin(), stems.end(), token);
    while (it != stems.begin()) {
        --it;
        if (token.compare(0, it->size(), *it) == 0) return true;
        // once the stem no longer shares the first character, stop
        if (it->empty() || token.empty() || (*it)[0] != token[0]) break;
    }
    return false;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

SentimentLexicon::SentimentLexicon(std::vector<std::string> positive,
                                   std::vector<std::string> negative) {
    auto split = [](std::vector<std::string>& entries, std::vector<std::string>& exact,
                    std::vector<std::string>& stems) {
        for (auto& e : entries) {
            if (e.empty()) throw ConfigError("empty lexicon entry");
            if (e.back() == '*') {
                e.pop_back();
                if (e.empty()) throw ConfigError("bare '*' lexicon entry");
                if (e.find('*') != std::string::npos)
                    throw ConfigError("'*' only allowed in final position: " + e + "*");
                stems.push_back(std::move(e));
            } else {
                if (e.find('*') != std::string::npos)
                    throw ConfigError("'*' only allowed in final position: " + e);
                exact.push_back(std::move(e));
            }
        }
        std::sort(exact.begin(), exact.end());
        std::sort(stems.begin(), stems.end());
    };
    split(positive, pos_exact_, pos_stems_);
    split(negative, neg_exact_, neg_stems_);

    for (const auto& e : neg_exact_)
        if (std::binary_search(pos_exact_.begin(), pos_exact_.end(), e))
            throw ConfigError("lexicon entry in both sections: " + e);
    for (const auto& s : neg_stems_)
        if (std::binary_search(pos_stems_.begin(), pos_stems_.end(), s))
            throw ConfigError("lexicon entry in both sections: " + s + "*");
}

SentimentLexicon SentimentLexicon::parse(const std::string& text) {
    std::vector<std::string> pos, neg;
    std::vector<std::string>* current = nullptr;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line == "[positive]") {
            current = &pos;
        } else if (line == "[negative]") {
            current = &neg;
        } else {
            if (!current) throw ConfigError("lexicon entry before any section: " + line);
            std::string lower;
            for (char c : line) lower.push_back(static_cast<char>(std::tolower(c)));
            current->push_back(lower);
        }
    }
    return SentimentLexicon(std::move(pos), std::move(neg));
}

SentimentLexicon SentimentLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool SentimentLexicon::is_positive(const std::string& token) const {
    return matches(pos_exact_, pos_stems_, token);
}

bool SentimentLexicon::is_negative(const std::string& token) const {
    return matches(neg_exact_, neg_stems_, token);
}

ChapterSentiment score_chapter(const std::vector<std::string>& tokens,
                               const SentimentLexicon& lexicon, int ordinal) {
    ChapterSentiment s;
    s.ordinal = ordinal;
    if (tokens.empty()) return s;
    int pos = 0, neg = 0;
    for (const auto& t : tokens) {
        if (lexicon.is_positive(t)) ++pos;
        if (lexicon.is_negative(t)) ++neg;
    }
    s.positive_pct = 100.0 * pos / static_cast<double>(tokens.size());
    s.negative_pct = 100.0 * neg / static_cast<double>(tokens.size());
    s.spi = std::log10((s.positive_pct + 1.0) / (s.negative_pct + 1.0));
    return s;
}

SentimentProfile aggregate_spi(const std::string& subject, const std::vector<int>& chapters,
                               const std::vector<double>& chapter_spi) {
    if (chapters.empty()) throw EmptySubject("empty chapter set for " + subject);
    SentimentProfile p;
    p.subject = subject;
    for (int c : chapters) p.spi_set.push_back(chapter_spi.at(c - 1));

    double sum = 0.0;
    for (double v : p.spi_set) sum += v;
    p.mean = sum / p.spi_set.size();

    double var = 0.0;
    for (double v : p.spi_set) var += (v - p.mean) * (v - p.mean);
    p.stderr_mean = p.spi_set.size() > 1
                        ? std::sqrt(var / (p.spi_set.size() - 1) / p.spi_set.size())
                        : 0.0;

    auto sorted = p.spi_set;
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&](double q) {
        double pos = q * (sorted.size() - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = std::min(lo + 1, sorted.size() - 1);
        double frac = pos - lo;
        return sorted[lo] * (1 - frac) + sorted[hi] * frac;
    };
    p.q1 = quantile(0.25);
    p.median = quantile(0.5);
    p.q3 = quantile(0.75);
    return p;
}

PairSentiments pair_sentiments(const CharacterNetwork& net, const std::vector<double>& chapter_spi) {
    PairSentiments out;
    double sum = 0.0;
    for (const auto& e : net.edges()) {
        double s = 0.0;
        for (int c : e.chapters) s += chapter_spi.at(c - 1);
        s /= e.chapters.size();
        out.edges.push_back(EdgeSentiment{e.a, e.b, s, 0.0});
        sum += s;
    }
    out.baseline = out.edges.empty() ? 0.0 : sum / out.edges.size();
    for (auto& es : out.edges) es.cosentiment = es.mean_spi - out.baseline;
    return out;
}

std::vector<CommunityCosentimentCell> community_cosentiments(const CharacterNetwork& net,
                                                             const CommunityPartition& partition,
                                                             const PairSentiments& pairs) {
    const int k = partition.community_count;
    std::vector<std::vector<int>> pos(k, std::vector<int>(k, 0)), neg = pos, tot = pos;
    for (std::size_t i = 0; i < pairs.edges.size(); ++i) {
        const auto& es = pairs.edges[i];
        int ca = partition.assignment.at(net.node_index(es.a));
        int cb = partition.assignment.at(net.node_index(es.b));
        int lo = std::min(ca, cb), hi = std::max(ca, cb);
        ++tot[lo][hi];
        if (es.cosentiment > 0) ++pos[lo][hi];
        if (es.cosentiment < 0) ++neg[lo][hi]; // ties at the baseline stay neutral
    }
    std::vector<CommunityCosentimentCell> cells;
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
            if (tot[a][b] == 0) continue;
            CommunityCosentimentCell cell;
            cell.community_a = a;
            cell.community_b = b;
            cell.edge_count = tot[a][b];
            cell.positive_fraction = static_cast<double>(pos[a][b]) / tot[a][b];
            cell.negative_fraction = static_cast<double>(neg[a][b]) / tot[a][b];
            cell.log_radius = std::log10(static_cast<double>(tot[a][b]));
            cells.push_back(cell);
        }
    }
    return cells;
}

} // namespace narranet
