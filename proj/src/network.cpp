#include "narranet/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace narranet {

CharacterNetwork::CharacterNetwork(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end());
    adjacency_.assign(nodes_.size(), {});
    for (const auto& e : edges_) {
        int u = node_index(e.a), v = node_index(e.b);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        weight_[{std::min(u, v), std::max(u, v)}] = e.weight();
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

int CharacterNetwork::node_index(const std::string& name) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
    if (it == nodes_.end() || *it != name) return -1;
    return static_cast<int>(it - nodes_.begin());
}

int CharacterNetwork::edge_weight(int u, int v) const {
    auto it = weight_.find({std::min(u, v), std::max(u, v)});
    return it == weight_.end() ? 0 : it->second;
}

CharacterNetwork build_network(const std::vector<Timeline>& timelines) {
    std::vector<const Timeline*> present;
    for (const auto& t : timelines)
        if (t.appearance() > 0) present.push_back(&t);

    std::vector<std::string> nodes;
    for (const auto* t : present) nodes.push_back(t->character);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < present.size(); ++i) {
        for (std::size_t j = i + 1; j < present.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(present[i]->chapters.begin(), present[i]->chapters.end(),
                                  present[j]->chapters.begin(), present[j]->chapters.end(),
                                  std::back_inserter(shared));
            if (shared.empty()) continue;
            const auto& a = present[i]->character;
            const auto& b = present[j]->character;
            if (a < b)
                edges.push_back(Edge{a, b, std::move(shared)});
            else
                edges.push_back(Edge{b, a, std::move(shared)});
        }
    }
    return CharacterNetwork(std::move(nodes), std::move(edges));
}

GrowthSeries growth_series(const std::vector<Timeline>& timelines, int chapter_count) {
    GrowthSeries g;
    g.chapter_count = chapter_count;
    g.nodes.assign(chapter_count, 0);
    g.edges.assign(chapter_count, 0);
    for (const auto& t : timelines) g.characters.push_back(t.character);
    g.appearance.assign(timelines.size(), std::vector<int>(chapter_count, 0));
    g.degree.assign(timelines.size(), std::vector<int>(chapter_count, 0));

    // node and appearance series
    std::vector<int> node_births; // first appearance per present character
    for (std::size_t i = 0; i < timelines.size(); ++i) {
        const auto& chs = timelines[i].chapters;
        if (!chs.empty()) node_births.push_back(chs.front());
        std::size_t pos = 0;
        int cum = 0;
        for (int t = 1; t <= chapter_count; ++t) {
            while (pos < chs.size() && chs[pos] <= t) {
                ++cum;
                ++pos;
            }
            g.appearance[i][t - 1] = cum;
        }
    }
    for (int birth : node_births)
        if (birth <= chapter_count) ++g.nodes[birth - 1];
    std::partial_sum(g.nodes.begin(), g.nodes.end(), g.nodes.begin());

    // edge and degree series from pairwise first co-appearances
    for (std::size_t i = 0; i < timelines.size(); ++i) {
        for (std::size_t j = i + 1; j < timelines.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(timelines[i].chapters.begin(), timelines[i].chapters.end(),
                                  timelines[j].chapters.begin(), timelines[j].chapters.end(),
                                  std::back_inserter(shared));
            if (shared.empty() || shared.front() > chapter_count) continue;
            int birth = shared.front();
            ++g.edges[birth - 1];
            for (int t = birth; t <= chapter_count; ++t) {
                ++g.degree[i][t - 1];
                ++g.degree[j][t - 1];
            }
        }
    }
    std::partial_sum(g.edges.begin(), g.edges.end(), g.edges.begin());
    return g;
}

PathStats path_statistics(const CharacterNetwork& net) {
    const int n = net.node_count();
    if (n == 0) throw EmptyNetwork("path_statistics on empty network");

    PathStats stats;
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    stats.density = pairs > 0 ? static_cast<double>(net.edge_count()) / pairs : 0.0;

    long long dist_sum = 0, connected_pairs = 0, disconnected = 0;
    int diameter = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : net.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = s + 1; v < n; ++v) {
            if (dist[v] < 0) {
                ++disconnected;
            } else {
                dist_sum += dist[v];
                ++connected_pairs;
                diameter = std::max(diameter, dist[v]);
            }
        }
    }
    stats.mean_geodesic = connected_pairs > 0 ? static_cast<double>(dist_sum) / connected_pairs : 0.0;
    stats.diameter = diameter;
    stats.disconnected_pairs = disconnected;

    // mean local clustering over nodes with degree >= 2
    double cc_sum = 0.0;
    int cc_nodes = 0;
    for (int u = 0; u < n; ++u) {
        const auto& adj = net.neighbors(u);
        const int k = static_cast<int>(adj.size());
        if (k < 2) continue;
        int links = 0;
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = i + 1; j < adj.size(); ++j)
                if (net.has_edge(adj[i], adj[j])) ++links;
        cc_sum += 2.0 * links / (static_cast<double>(k) * (k - 1));
        ++cc_nodes;
    }
    stats.clustering = cc_nodes > 0 ? cc_sum / cc_nodes : 0.0;
    return stats;
}

std::map<std::string, NodeCentrality> centralities(const CharacterNetwork& net,
                                                   const std::vector<Timeline>& timelines) {
    std::map<std::string, NodeCentrality> out;
    for (int u = 0; u < net.node_count(); ++u) {
        NodeCentrality c;
        c.degree = static_cast<int>(net.neighbors(u).size());
        for (int v : net.neighbors(u)) c.weighted_degree += net.edge_weight(u, v);
        out[net.nodes()[u]] = c;
    }
    for (const auto& t : timelines) {
        auto it = out.find(t.character);
        if (it != out.end()) it->second.appearance = t.appearance();
    }
    return out;
}

const char* stage_kind_name(StageAnnotation::Kind kind) {
    switch (kind) {
        case StageAnnotation::Kind::NodeBurst: return "node-burst";
        case StageAnnotation::Kind::Plateau: return "plateau";
        case StageAnnotation::Kind::EdgeLed: return "edge-led";
    }
    return "?";
}

namespace {

// New-count deltas per window of `window` chapters (last window may be short).
std::vector<double> window_deltas(const std::vector<int>& cumulative, int window) {
    std::vector<double> out;
    const int c = static_cast<int>(cumulative.size());
    for (int begin = 0; begin < c; begin += window) {
        int end = std::min(begin + window, c) - 1;
        int before = begin == 0 ? 0 : cumulative[begin - 1];
        out.push_back(cumulative[end] - before);
    }
    return out;
}

std::pair<double, double> mean_stddev(const std::vector<double>& xs) {
    if (xs.empty()) return {0.0, 0.0};
    double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= xs.size();
    return {mean, std::sqrt(var)};
}

} // namespace

std::vector<StageAnnotation> detect_stages(const GrowthSeries& growth, int window, double burst_z) {
    std::vector<StageAnnotation> out;
    const int c = growth.chapter_count;
    if (c == 0 || window < 1) return out;

    auto node_deltas = window_deltas(growth.nodes, window);
    auto edge_deltas = window_deltas(growth.edges, window);
    auto [node_mean, node_sd] = mean_stddev(node_deltas);
    auto [edge_mean, edge_sd] = mean_stddev(edge_deltas);
    const double node_thresh = node_mean + burst_z * node_sd;
    const double edge_thresh = edge_mean + burst_z * edge_sd;

    for (std::size_t w = 0; w < node_deltas.size(); ++w) {
        int begin = static_cast<int>(w) * window + 1;
        int end = std::min(begin + window - 1, c);
        if (node_sd > 0 && node_deltas[w] > node_thresh)
            out.push_back({StageAnnotation::Kind::NodeBurst, begin, end, node_deltas[w]});
        if (edge_sd > 0 && edge_deltas[w] > edge_thresh && node_deltas[w] < node_mean)
            out.push_back({StageAnnotation::Kind::EdgeLed, begin, end, edge_deltas[w]});
    }

    // plateaus: maximal runs of zero node growth at least `window` long
    int run_start = -1;
    for (int t = 1; t <= c; ++t) {
        int delta = growth.nodes[t - 1] - (t >= 2 ? growth.nodes[t - 2] : 0);
        if (delta == 0) {
            if (run_start < 0) run_start = t;
        } else if (run_start >= 0) {
            if (t - run_start >= window)
                out.push_back({StageAnnotation::Kind::Plateau, run_start, t - 1,
                               static_cast<double>(t - run_start)});
            run_start = -1;
        }
    }
    if (run_start >= 0 && c - run_start + 1 >= window)
        out.push_back({StageAnnotation::Kind::Plateau, run_start, c,
                       static_cast<double>(c - run_start + 1)});
    return out;
}

} // namespace narranet
