#include "narranet/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace narranet {

double modularity(const CharacterNetwork& net, const std::vector<int>& assignment) {
    const int n = net.node_count();
    double total = 0.0; // 2W
    std::vector<double> strength(n, 0.0);
    for (int u = 0; u < n; ++u) {
        for (int v : net.neighbors(u)) {
            double w = net.edge_weight(u, v);
            strength[u] += w;
            total += w;
        }
    }
    if (total == 0.0) return 0.0;

    double q = 0.0;
    for (int u = 0; u < n; ++u) {
        for (int v : net.neighbors(u)) {
            if (assignment[u] == assignment[v]) q += net.edge_weight(u, v);
        }
    }
    // subtract expected within-community strength
    double expected = 0.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (assignment[u] == assignment[v]) expected += strength[u] * strength[v] / total;
    return (q - expected) / total;
}

namespace {

struct Community {
    bool alive = true;
    std::string name;            // lowest member canonical name, for tie-breaking
    std::vector<int> members;
    double strength = 0.0;       // sum of member strengths
};

} // namespace

CommunityPartition detect_communities(const CharacterNetwork& net) {
    const int n = net.node_count();
    CommunityPartition result;
    if (n == 0) return result;

    std::vector<double> strength(n, 0.0);
    double total = 0.0; // 2W
    for (int u = 0; u < n; ++u)
        for (int v : net.neighbors(u)) {
            double w = net.edge_weight(u, v);
            strength[u] += w;
            total += w;
        }

    std::vector<Community> comms(n);
    // between[i][j]: total edge weight between communities i and j (i < j)
    std::vector<std::vector<double>> between(n, std::vector<double>(n, 0.0));
    std::vector<int> owner(n);
    for (int u = 0; u < n; ++u) {
        comms[u].name = net.nodes()[u];
        comms[u].members = {u};
        comms[u].strength = strength[u];
        owner[u] = u;
    }
    for (const auto& e : net.edges()) {
        int u = net.node_index(e.a), v = net.node_index(e.b);
        between[std::min(u, v)][std::max(u, v)] += e.weight();
    }

    if (total == 0.0) {
        // no edges: every node its own community
        result.assignment.resize(n);
        std::iota(result.assignment.begin(), result.assignment.end(), 0);
        result.community_count = n;
        result.modularity = 0.0;
        return result;
    }

    // CNM-style agglomeration: merge the connected pair with the highest
    // modularity gain; stop when no merge improves modularity.
    const double eps = 1e-12;
    while (true) {
        double best_gain = -1.0;
        int best_i = -1, best_j = -1;
        for (int i = 0; i < n; ++i) {
            if (!comms[i].alive) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!comms[j].alive || between[i][j] <= 0.0) continue;
                double gain = 2.0 * (between[i][j] / total -
                                     comms[i].strength * comms[j].strength / (total * total));
                bool better = gain > best_gain + eps;
                if (!better && gain > best_gain - eps && best_i >= 0) {
                    // deterministic tie-break on the merged pair's names
                    auto key = std::minmax(comms[i].name, comms[j].name);
                    auto best_key = std::minmax(comms[best_i].name, comms[best_j].name);
                    better = key < best_key;
                }
                if (better) {
                    best_gain = gain;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < 0 || best_gain <= eps) break;

        // merge j into i
        auto& ci = comms[best_i];
        auto& cj = comms[best_j];
        ci.members.insert(ci.members.end(), cj.members.begin(), cj.members.end());
        ci.strength += cj.strength;
        ci.name = std::min(ci.name, cj.name);
        cj.alive = false;
        for (int k = 0; k < n; ++k) {
            if (k == best_i || k == best_j || !comms[k].alive) continue;
            double w = between[std::min(k, best_j)][std::max(k, best_j)];
            between[std::min(k, best_i)][std::max(k, best_i)] += w;
            between[std::min(k, best_j)][std::max(k, best_j)] = 0.0;
        }
        between[best_i][best_j] = 0.0;
    }

    // label by descending size, ties by community name
    std::vector<int> alive;
    for (int i = 0; i < n; ++i)
        if (comms[i].alive) alive.push_back(i);
    std::sort(alive.begin(), alive.end(), [&](int a, int b) {
        if (comms[a].members.size() != comms[b].members.size())
            return comms[a].members.size() > comms[b].members.size();
        return comms[a].name < comms[b].name;
    });

    result.assignment.assign(n, -1);
    for (std::size_t label = 0; label < alive.size(); ++label)
        for (int member : comms[alive[label]].members)
            result.assignment[member] = static_cast<int>(label);
    result.community_count = static_cast<int>(alive.size());
    result.modularity = modularity(net, result.assignment);
    return result;
}

} // namespace narranet
