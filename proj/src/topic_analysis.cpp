#include "narranet/topics.hpp"

#include <algorithm>
#include <cmath>

namespace narranet {

TopicalState topical_state(const Matrix& H, const std::vector<int>& window) {
    if (window.empty()) throw EmptyWindow("topical_state over empty chapter window");
    TopicalState state;
    state.window = window;
    Eigen::VectorXd sums = Eigen::VectorXd::Zero(H.rows());
    for (int c : window) {
        if (c < 1 || c > H.cols()) throw DimensionError("window ordinal out of range");
        sums += H.col(c - 1);
    }
    double total = sums.sum();
    if (total <= 0) {
        state.zero_mass = true;
        state.components = Eigen::VectorXd::Constant(H.rows(), 1.0 / H.rows());
    } else {
        state.components = sums / total;
    }
    return state;
}

std::vector<CommunityTopics> community_topics(const Matrix& H, const CommunityPartition& partition,
                                              const CharacterNetwork& net,
                                              const std::vector<Timeline>& timelines) {
    std::vector<CommunityTopics> out;
    for (int label = 0; label < partition.community_count; ++label) {
        // chapters containing >= 2 members of the community
        std::vector<int> members;
        for (int u = 0; u < net.node_count(); ++u)
            if (partition.assignment[u] == label) members.push_back(u);

        std::vector<int> hits(H.cols() + 1, 0);
        for (int u : members) {
            const auto& name = net.nodes()[u];
            for (const auto& t : timelines) {
                if (t.character != name) continue;
                for (int c : t.chapters)
                    if (c <= H.cols()) ++hits[c];
                break;
            }
        }
        CommunityTopics ct;
        ct.community = label;
        for (int c = 1; c <= H.cols(); ++c)
            if (hits[c] >= 2) ct.chapters.push_back(c);
        if (ct.chapters.empty()) {
            ct.state.zero_mass = true;
            ct.state.components = Eigen::VectorXd::Constant(H.rows(), 1.0 / H.rows());
        } else {
            ct.state = topical_state(H, ct.chapters);
        }
        out.push_back(std::move(ct));
    }
    return out;
}

double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    const double n = static_cast<double>(x.size());
    double mx = x.mean(), my = y.mean();
    Eigen::VectorXd dx = x.array() - mx, dy = y.array() - my;
    double denom = std::sqrt(dx.squaredNorm() * dy.squaredNorm());
    if (denom == 0 || n < 2) return 0.0;
    return dx.dot(dy) / denom;
}

namespace {

std::vector<int> top_indices(const Eigen::VectorXd& v, int n) {
    std::vector<int> order(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v[a] > v[b]; });
    order.resize(std::min<std::size_t>(order.size(), n));
    return order;
}

double median_component(const Eigen::VectorXd& v) {
    std::vector<double> xs(v.data(), v.data() + v.size());
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

} // namespace

std::vector<TransferLabel> classify_transfers(const Eigen::VectorXd& before_a,
                                              const Eigen::VectorXd& before_b,
                                              const Eigen::VectorXd& delta_a,
                                              const Eigen::VectorXd& delta_b,
                                              const std::string& name_a,
                                              const std::string& name_b,
                                              int phase, int top_n) {
    if (top_n < 1) throw DimensionError("top_n must be >= 1");
    // "weak" threshold: the median alone is unreliable on sparse normalized
    // states (most components are factorization noise near zero, so the
    // median is itself a noise value); anything below the uniform share is
    // weak regardless of where the noise median lands
    const double uniform = 1.0 / static_cast<double>(before_a.size());
    const double med_a = std::max(median_component(before_a), uniform);
    const double med_b = std::max(median_component(before_b), uniform);

    // gains: the top_n largest strictly positive deltas; held: topics in the
    // top_n of the before-state that are also above its median (ties at the
    // weak end of a sparse state do not count as "held")
    auto positive = [](const Eigen::VectorXd& v, std::vector<int> xs) {
        std::vector<int> out;
        for (int i : xs)
            if (v[i] > 0) out.push_back(i);
        return out;
    };
    auto strong = [](const Eigen::VectorXd& v, std::vector<int> xs, double med) {
        std::vector<int> out;
        for (int i : xs)
            if (v[i] > med) out.push_back(i);
        return out;
    };
    auto gain_a = positive(delta_a, top_indices(delta_a, top_n));
    auto gain_b = positive(delta_b, top_indices(delta_b, top_n));
    auto held_a = strong(before_a, top_indices(before_a, top_n), med_a);
    auto held_b = strong(before_b, top_indices(before_b, top_n), med_b);
    auto in = [](const std::vector<int>& xs, int v) {
        return std::find(xs.begin(), xs.end(), v) != xs.end();
    };

    std::vector<TransferLabel> labels;
    auto classify_side = [&](const std::vector<int>& gains, const std::vector<int>& other_gains,
                             const std::vector<int>& own_held, const std::vector<int>& other_held,
                             const Eigen::VectorXd& own_before, const Eigen::VectorXd& other_before,
                             double own_med, double other_med, const std::string& self,
                             const std::string& other) {
        for (int topic : gains) {
            bool weak_self = own_before[topic] <= own_med;
            bool weak_other = other_before[topic] <= other_med;
            if (in(other_held, topic) && !in(own_held, topic)) {
                labels.push_back({TransferKind::Transferred, topic, other, self, phase});
            } else if (weak_self && weak_other && in(other_gains, topic)) {
                labels.push_back({TransferKind::ExogenousBoth, topic, "", self, phase});
            } else if (weak_self && weak_other && !in(other_gains, topic)) {
                labels.push_back({TransferKind::SingleEntry, topic, "", self, phase});
            }
        }
    };
    classify_side(gain_a, gain_b, held_a, held_b, before_a, before_b, med_a, med_b, name_a, name_b);
    classify_side(gain_b, gain_a, held_b, held_a, before_b, before_a, med_b, med_a, name_b, name_a);
    return labels;
}

namespace {

// End-of-phase state: topical_state over the phase's chapters intersected
// with C_alpha, optionally narrowed to the last `window` of them. When the
// intersection is empty the previous state is carried forward.
struct EndState {
    Eigen::VectorXd state;
    bool absent = false;
};

EndState end_of_phase_state(const Matrix& H, const Timeline& timeline, int begin, int end,
                            int window, const Eigen::VectorXd* previous) {
    std::vector<int> inside;
    for (int c : timeline.chapters)
        if (c >= begin && c <= end) inside.push_back(c);
    if (window > 0 && static_cast<int>(inside.size()) > window)
        inside.erase(inside.begin(), inside.end() - window);

    EndState out;
    if (inside.empty()) {
        out.absent = true;
        out.state = previous ? *previous : Eigen::VectorXd::Zero(H.rows());
        return out;
    }
    out.state = topical_state(H, inside).components;
    return out;
}

} // namespace

PhaseReport phase_analysis(const std::vector<Matrix>& runs, const PhaseSpec& phases,
                           const Timeline& first, const Timeline& second, int chapter_count,
                           int window, int transfer_top_n) {
    if (runs.empty()) throw DimensionError("phase_analysis needs at least one NNMF run");
    for (std::size_t i = 0; i + 1 < phases.phases.size(); ++i) {
        if (phases.phases[i].end >= phases.phases[i + 1].begin)
            throw InvalidPhases("phase ranges overlap or are unordered");
    }
    for (const auto& p : phases.phases)
        if (p.begin < 1 || p.end < p.begin)
            throw InvalidPhases("invalid phase range " + p.name);

    PhaseReport report;
    report.spec = phases;

    std::vector<bool> covered(chapter_count + 1, false);
    for (const auto& p : phases.phases)
        for (int c = p.begin; c <= std::min(p.end, chapter_count); ++c) covered[c] = true;
    for (int c = 1; c <= chapter_count; ++c)
        if (!covered[c]) report.gap_chapters.push_back(c);

    const std::size_t n_phases = phases.phases.size();
    const Matrix& H = runs[0];

    // states and transfers from the primary run
    Eigen::VectorXd prev_a, prev_b;
    bool have_prev = false;
    for (std::size_t p = 0; p < n_phases; ++p) {
        const auto& range = phases.phases[p];
        auto ea = end_of_phase_state(H, first, range.begin, range.end, window,
                                     have_prev ? &prev_a : nullptr);
        auto eb = end_of_phase_state(H, second, range.begin, range.end, window,
                                     have_prev ? &prev_b : nullptr);
        PhaseCharacterState sa, sb;
        sa.character = first.character;
        sb.character = second.character;
        sa.absent = ea.absent;
        sb.absent = eb.absent;
        sa.state = ea.state;
        sb.state = eb.state;
        sa.delta = have_prev ? Eigen::VectorXd(ea.state - prev_a)
                             : Eigen::VectorXd(Eigen::VectorXd::Zero(H.rows()));
        sb.delta = have_prev ? Eigen::VectorXd(eb.state - prev_b)
                             : Eigen::VectorXd(Eigen::VectorXd::Zero(H.rows()));
        sa.top_gainers = [&] {
            std::vector<int> order(H.rows());
            for (Eigen::Index i = 0; i < H.rows(); ++i) order[i] = static_cast<int>(i);
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return sa.delta[x] > sa.delta[y]; });
            order.resize(std::min<std::size_t>(order.size(), transfer_top_n));
            return order;
        }();
        sb.top_gainers = [&] {
            std::vector<int> order(H.rows());
            for (Eigen::Index i = 0; i < H.rows(); ++i) order[i] = static_cast<int>(i);
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return sb.delta[x] > sb.delta[y]; });
            order.resize(std::min<std::size_t>(order.size(), transfer_top_n));
            return order;
        }();

        if (have_prev) {
            auto labels = classify_transfers(prev_a, prev_b, sa.delta, sb.delta, first.character,
                                             second.character, static_cast<int>(p) + 1,
                                             transfer_top_n);
            report.transfers.insert(report.transfers.end(), labels.begin(), labels.end());
        }

        prev_a = ea.state;
        prev_b = eb.state;
        have_prev = true;
        report.phase_states.push_back({std::move(sa), std::move(sb)});
    }

    // correlation per phase: mean and dispersion over all runs
    for (std::size_t p = 0; p < n_phases; ++p) {
        const auto& range = phases.phases[p];
        std::vector<double> rs;
        for (const auto& run : runs) {
            Eigen::VectorXd pa, pb;
            bool hp = false;
            Eigen::VectorXd a, b;
            for (std::size_t q = 0; q <= p; ++q) {
                const auto& rq = phases.phases[q];
                auto ea = end_of_phase_state(run, first, rq.begin, rq.end, window, hp ? &pa : nullptr);
                auto eb = end_of_phase_state(run, second, rq.begin, rq.end, window, hp ? &pb : nullptr);
                a = ea.state;
                b = eb.state;
                pa = a;
                pb = b;
                hp = true;
            }
            (void)range;
            rs.push_back(pearson(a, b));
        }
        double mean = 0;
        for (double r : rs) mean += r;
        mean /= rs.size();
        double var = 0;
        for (double r : rs) var += (r - mean) * (r - mean);
        var = rs.size() > 1 ? var / (rs.size() - 1) : 0.0;
        report.correlation.push_back(mean);
        report.correlation_stddev.push_back(std::sqrt(var));
    }
    return report;
}

} // namespace narranet
