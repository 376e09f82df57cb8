#include "narranet/topics.hpp"

#include <cmath>
#include <map>

namespace narranet {

int Vocabulary::index_of(const std::string& word) const {
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i] == word) return static_cast<int>(i);
    return -1;
}

std::pair<Vocabulary, Matrix> build_tfidf(const Corpus& corpus, const VocabConfig& config) {
    const int docs = corpus.chapter_count();

    std::map<std::string, int> df;
    std::vector<std::map<std::string, int>> counts(docs);
    for (int d = 0; d < docs; ++d) {
        for (const auto& t : corpus.chapters[d].tokens) {
            if (config.stopwords.count(t)) continue;
            if (++counts[d][t] == 1) ++df[t];
        }
    }

    Vocabulary vocab;
    const double max_df = config.max_df_fraction * docs;
    for (const auto& [word, f] : df) {
        if (f < config.min_df || f > max_df) continue;
        vocab.words.push_back(word);
        vocab.df.push_back(f);
    }
    if (vocab.words.empty()) throw EmptyVocabulary("all words removed by vocab filters");

    std::map<std::string, int> index;
    for (int i = 0; i < vocab.size(); ++i) index[vocab.words[i]] = i;

    Matrix m = Matrix::Zero(vocab.size(), docs);
    for (int d = 0; d < docs; ++d) {
        for (const auto& [word, tf] : counts[d]) {
            auto it = index.find(word);
            if (it == index.end()) continue;
            double idf = std::log((1.0 + docs) / (1.0 + df[word])) + 1.0;
            m(it->second, d) = tf * idf;
        }
        double norm = m.col(d).norm();
        if (norm > 0) m.col(d) /= norm;
    }
    return {std::move(vocab), std::move(m)};
}

} // namespace narranet
