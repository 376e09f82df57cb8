#include "narranet/topics.hpp"

#include <algorithm>
#include <random>

namespace narranet {

TopicModel nnmf(const Matrix& M, int topic_count, std::uint64_t seed, int max_iter,
                double rel_tol) {
    const auto rows = M.rows();
    const auto cols = M.cols();
    if (topic_count < 1 || topic_count >= std::min(rows, cols))
        throw DimensionError("topic_count must be in [1, min(|W|,|D|))");
    if ((M.array() < 0).any()) throw DimensionError("input matrix must be non-negative");

    TopicModel model;
    model.topic_count = topic_count;
    model.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(1e-4, 1.0);
    Matrix q(rows, topic_count), h(topic_count, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (int j = 0; j < topic_count; ++j) q(i, j) = uniform(rng);
    for (int i = 0; i < topic_count; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) h(i, j) = uniform(rng);

    const double eps = 1e-12;
    double prev_err = -1.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        // H <- H .* (Q^T M) ./ (Q^T Q H)
        Matrix qtm = q.transpose() * M;
        Matrix qtqh = (q.transpose() * q) * h;
        h = h.cwiseProduct(qtm.cwiseQuotient(qtqh.array().max(eps).matrix()));

        // Q <- Q .* (M H^T) ./ (Q H H^T)
        Matrix mht = M * h.transpose();
        Matrix qhht = q * (h * h.transpose());
        q = q.cwiseProduct(mht.cwiseQuotient(qhht.array().max(eps).matrix()));

        double err = (M - q * h).squaredNorm();
        model.error_trace.push_back(err);
        if (prev_err >= 0) {
            double denom = prev_err > 0 ? prev_err : 1.0;
            if ((prev_err - err) / denom < rel_tol) break;
        }
        prev_err = err;
    }

    model.Q = std::move(q);
    model.H = std::move(h);
    return model;
}

std::vector<TopicKeywords> topic_keywords(const Matrix& Q, const Vocabulary& vocab, int top_n) {
    if (top_n < 1) throw DimensionError("top_n must be >= 1");
    std::vector<TopicKeywords> out;
    for (int t = 0; t < Q.cols(); ++t) {
        std::vector<int> order(Q.rows());
        for (Eigen::Index i = 0; i < Q.rows(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return Q(a, t) > Q(b, t); });
        TopicKeywords tk;
        tk.topic = t;
        for (int i = 0; i < top_n && i < static_cast<int>(order.size()); ++i) {
            tk.keywords.push_back(vocab.words[order[i]]);
            tk.weights.push_back(Q(order[i], t));
        }
        out.push_back(std::move(tk));
    }
    return out;
}

} // namespace narranet
