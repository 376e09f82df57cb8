#pragma once

#include <map>
#include <string>
#include <vector>

#include "narranet/roster.hpp"

namespace narranet {

/// Undirected co-appearance edge; endpoints stored in lexicographic order.
struct Edge {
    std::string a, b;
    std::vector<int> chapters; // shared ordinals, sorted
    int weight() const { return static_cast<int>(chapters.size()); }
};

class CharacterNetwork {
public:
    CharacterNetwork() = default;
    CharacterNetwork(std::vector<std::string> nodes, std::vector<Edge> edges);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int node_index(const std::string& name) const; // -1 if absent
    const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
    int edge_weight(int u, int v) const; // 0 if no edge
    bool has_edge(int u, int v) const { return edge_weight(u, v) > 0; }

private:
    std::vector<std::string> nodes_; // sorted
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::map<std::pair<int, int>, int> weight_; // ordered pair (min,max) -> weight
};

/// Characters with appearance > 0 become nodes; an edge exists iff the
/// two timelines intersect, weighted by the intersection size.
CharacterNetwork build_network(const std::vector<Timeline>& timelines);

struct GrowthSeries {
    int chapter_count = 0;
    std::vector<int> nodes;  // n(t), index t-1
    std::vector<int> edges;  // m(t)
    std::vector<std::string> characters;
    std::vector<std::vector<int>> appearance; // a_alpha(t), per character
    std::vector<std::vector<int>> degree;     // k_alpha(t)
};

GrowthSeries growth_series(const std::vector<Timeline>& timelines, int chapter_count);

struct PathStats {
    double density = 0.0;
    double mean_geodesic = 0.0; // over connected pairs only
    int diameter = 0;           // max finite geodesic
    double clustering = 0.0;    // mean local clustering, degree >= 2 nodes
    long long disconnected_pairs = 0;
};

PathStats path_statistics(const CharacterNetwork& net);

struct NodeCentrality {
    int appearance = 0;
    int degree = 0;
    long long weighted_degree = 0;
};

std::map<std::string, NodeCentrality> centralities(const CharacterNetwork& net,
                                                   const std::vector<Timeline>& timelines);

struct CommunityPartition {
    std::vector<int> assignment; // node index -> community label, 0-based
    int community_count = 0;     // labels 0..count-1, ordered by descending size
    double modularity = 0.0;
};

/// Weighted modularity of an assignment (any labeling).
double modularity(const CharacterNetwork& net, const std::vector<int>& assignment);

/// Greedy agglomerative modularity maximization with deterministic
/// tie-breaking (lowest canonical-name order of the merged pair).
CommunityPartition detect_communities(const CharacterNetwork& net);

struct StageAnnotation {
    enum class Kind { NodeBurst, Plateau, EdgeLed };
    Kind kind;
    int begin = 0, end = 0; // ordinal range, inclusive
    double magnitude = 0.0;
};

std::vector<StageAnnotation> detect_stages(const GrowthSeries& growth, int window, double burst_z);

const char* stage_kind_name(StageAnnotation::Kind kind);

} // namespace narranet
