#include "narranet/exports.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace narranet {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

} // namespace

std::string roman_numeral(int value) {
    static const std::pair<int, const char*> table[] = {
        {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
        {50, "L"},   {40, "XL"},  {10, "X"},  {9, "IX"},   {5, "V"},   {4, "IV"},
        {1, "I"}};
    std::string out;
    for (auto [v, s] : table)
        while (value >= v) {
            out += s;
            value -= v;
        }
    return out;
}

std::string to_gexf(const CharacterNetwork& net, const CommunityPartition* partition,
                    const PairSentiments* pairs) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
        << "  <graph defaultedgetype=\"undirected\">\n"
        << "    <attributes class=\"node\">\n"
        << "      <attribute id=\"community\" title=\"community\" type=\"string\"/>\n"
        << "    </attributes>\n"
        << "    <attributes class=\"edge\">\n"
        << "      <attribute id=\"cosentiment\" title=\"cosentiment\" type=\"double\"/>\n"
        << "      <attribute id=\"sign\" title=\"sign\" type=\"string\"/>\n"
        << "    </attributes>\n"
        << "    <nodes>\n";
    for (int u = 0; u < net.node_count(); ++u) {
        out << "      <node id=\"" << u << "\" label=\"" << xml_escape(net.nodes()[u]) << "\">";
        if (partition) {
            out << "<attvalues><attvalue for=\"community\" value=\""
                << roman_numeral(partition->assignment[u] + 1) << "\"/></attvalues>";
        }
        out << "</node>\n";
    }
    out << "    </nodes>\n    <edges>\n";
    for (std::size_t i = 0; i < net.edges().size(); ++i) {
        const auto& e = net.edges()[i];
        out << "      <edge id=\"" << i << "\" source=\"" << net.node_index(e.a) << "\" target=\""
            << net.node_index(e.b) << "\" weight=\"" << e.weight() << "\">";
        if (pairs) {
            double c = pairs->edges[i].cosentiment;
            const char* sign = c > 0 ? "positive" : (c < 0 ? "negative" : "neutral");
            out << "<attvalues><attvalue for=\"cosentiment\" value=\"" << fmt(c)
                << "\"/><attvalue for=\"sign\" value=\"" << sign << "\"/></attvalues>";
        }
        out << "</edge>\n";
    }
    out << "    </edges>\n  </graph>\n</gexf>\n";
    return out.str();
}

std::string to_dot(const CharacterNetwork& net, const PairSentiments* pairs) {
    std::ostringstream out;
    out << "graph narrative {\n";
    for (const auto& n : net.nodes()) out << "  \"" << n << "\";\n";
    for (std::size_t i = 0; i < net.edges().size(); ++i) {
        const auto& e = net.edges()[i];
        out << "  \"" << e.a << "\" -- \"" << e.b << "\" [weight=" << e.weight();
        if (pairs) {
            double c = pairs->edges[i].cosentiment;
            out << ", color=" << (c > 0 ? "blue" : (c < 0 ? "red" : "gray"));
        }
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string growth_csv(const GrowthSeries& growth, const std::vector<std::string>& characters) {
    std::ostringstream out;
    out << "ordinal,n,m";
    std::vector<std::size_t> cols;
    for (const auto& name : characters) {
        for (std::size_t i = 0; i < growth.characters.size(); ++i) {
            if (growth.characters[i] == name) {
                cols.push_back(i);
                out << ",a_" << name << ",k_" << name;
                break;
            }
        }
    }
    out << "\n";
    for (int t = 1; t <= growth.chapter_count; ++t) {
        out << t << "," << growth.nodes[t - 1] << "," << growth.edges[t - 1];
        for (auto i : cols) out << "," << growth.appearance[i][t - 1] << "," << growth.degree[i][t - 1];
        out << "\n";
    }
    return out.str();
}

std::string chapter_spi_csv(const std::vector<ChapterSentiment>& sentiments) {
    std::ostringstream out;
    out << "ordinal,positive_pct,negative_pct,spi\n";
    for (const auto& s : sentiments)
        out << s.ordinal << "," << fmt(s.positive_pct) << "," << fmt(s.negative_pct) << ","
            << fmt(s.spi) << "\n";
    return out.str();
}

std::string similarity_csv(const SequenceBundle& bundle,
                           const std::vector<BookCompositionVector>& vectors) {
    std::ostringstream out;
    out << "volume_a,book_a,volume_b,book_b,similarity,merged\n";
    for (std::size_t i = 0; i < bundle.similarities.size(); ++i) {
        out << vectors[i].volume << "," << vectors[i].book << "," << vectors[i + 1].volume << ","
            << vectors[i + 1].book << "," << fmt(bundle.similarities[i]) << ","
            << (bundle.similarities[i] >= bundle.threshold ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string matrix_csv(const Matrix& m) {
    std::ostringstream out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

Matrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        // strtod, not stod: stod throws out_of_range on subnormals (ERANGE),
        // which NNMF loadings routinely underflow into
        while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

std::string transfers_dot(const std::vector<TransferLabel>& transfers,
                          const std::vector<TopicKeywords>& keywords) {
    auto topic_tag = [&](int topic) {
        std::string tag = "T" + std::to_string(topic + 1);
        if (topic < static_cast<int>(keywords.size()) && !keywords[topic].keywords.empty())
            tag += " (" + keywords[topic].keywords.front() + ")";
        return tag;
    };
    std::ostringstream out;
    out << "digraph transfers {\n  rankdir=LR;\n";
    for (const auto& t : transfers) {
        switch (t.kind) {
            case TransferKind::Transferred:
                out << "  \"" << t.source << "\" -> \"" << t.target << "\" [label=\""
                    << topic_tag(t.topic) << " / phase " << t.phase << "\"];\n";
                break;
            case TransferKind::ExogenousBoth:
                out << "  \"exogenous\" -> \"" << t.target << "\" [label=\"" << topic_tag(t.topic)
                    << " / phase " << t.phase << "\", style=dashed];\n";
                break;
            case TransferKind::SingleEntry:
                out << "  \"exogenous\" -> \"" << t.target << "\" [label=\"" << topic_tag(t.topic)
                    << " / phase " << t.phase << "\", style=dotted];\n";
                break;
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace narranet
