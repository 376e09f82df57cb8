#include "narranet/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace narranet {

std::vector<BookCompositionVector> book_vectors(const std::vector<Timeline>& timelines,
                                                const Corpus& corpus, SimilarityKind kind) {
    std::vector<BookCompositionVector> out;
    for (auto [volume, book] : corpus.books()) {
        BookCompositionVector v;
        v.volume = volume;
        v.book = book;
        v.chapters = corpus.book_chapters(volume, book);
        v.vec.assign(timelines.size(), 0.0);
        for (std::size_t i = 0; i < timelines.size(); ++i) {
            int count = 0;
            for (int c : v.chapters)
                if (timelines[i].contains(c)) ++count;
            if (count > 0) v.vec[i] = kind == SimilarityKind::CosineCounts ? count : 1.0;
        }
        bool any = std::any_of(v.vec.begin(), v.vec.end(), [](double x) { return x > 0; });
        if (any) out.push_back(std::move(v)); // books with no characters are dropped
    }
    return out;
}

namespace {

double similarity(const std::vector<double>& a, const std::vector<double>& b, SimilarityKind kind) {
    if (kind == SimilarityKind::Jaccard) {
        int inter = 0, uni = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            bool x = a[i] > 0, y = b[i] > 0;
            if (x && y) ++inter;
            if (x || y) ++uni;
        }
        return uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
    }
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

} // namespace

SequenceBundle bundle_sequences(const std::vector<BookCompositionVector>& vectors,
                                double threshold, SimilarityKind kind) {
    SequenceBundle bundle;
    if (vectors.empty()) return bundle;

    for (std::size_t i = 0; i + 1 < vectors.size(); ++i)
        bundle.similarities.push_back(similarity(vectors[i].vec, vectors[i + 1].vec, kind));

    if (threshold < 0) {
        bundle.auto_threshold = true;
        bundle.threshold = bundle.similarities.empty()
                               ? 0.0
                               : std::accumulate(bundle.similarities.begin(),
                                                 bundle.similarities.end(), 0.0) /
                                     bundle.similarities.size();
    } else {
        bundle.threshold = threshold;
    }

    Sequence current;
    current.index = 1;
    auto push_book = [&](const BookCompositionVector& v) {
        current.books.emplace_back(v.volume, v.book);
        current.chapters.insert(current.chapters.end(), v.chapters.begin(), v.chapters.end());
    };
    push_book(vectors[0]);
    for (std::size_t i = 1; i < vectors.size(); ++i) {
        if (bundle.similarities[i - 1] >= bundle.threshold) {
            push_book(vectors[i]); // chain merge over consecutive links
        } else {
            bundle.sequences.push_back(std::move(current));
            current = Sequence{};
            current.index = static_cast<int>(bundle.sequences.size()) + 1;
            push_book(vectors[i]);
        }
    }
    bundle.sequences.push_back(std::move(current));
    for (auto& s : bundle.sequences) std::sort(s.chapters.begin(), s.chapters.end());
    return bundle;
}

void annotate_sequence_spi(SequenceBundle& bundle, const std::vector<double>& chapter_spi) {
    for (auto& s : bundle.sequences) {
        double sum = 0.0;
        for (int c : s.chapters) sum += chapter_spi.at(c - 1);
        s.mean_spi = s.chapters.empty() ? 0.0 : sum / s.chapters.size();
        s.spi_sign = s.mean_spi > 0 ? 1 : (s.mean_spi < 0 ? -1 : 0);
    }
}

std::vector<SequenceSnapshot> sequence_snapshots(const SequenceBundle& bundle,
                                                 const std::vector<Timeline>& timelines,
                                                 const PairSentiments& pairs) {
    // cosentiment sign lookup by endpoint pair
    std::map<std::pair<std::string, std::string>, double> cos;
    for (const auto& es : pairs.edges) cos[{es.a, es.b}] = es.cosentiment;

    std::vector<SequenceSnapshot> out;
    for (const auto& seq : bundle.sequences) {
        // restrict timelines to the sequence's chapters
        std::vector<Timeline> local;
        for (const auto& t : timelines) {
            Timeline lt{t.character, {}};
            for (int c : t.chapters)
                if (std::binary_search(seq.chapters.begin(), seq.chapters.end(), c))
                    lt.chapters.push_back(c);
            local.push_back(std::move(lt));
        }
        SequenceSnapshot snap;
        snap.sequence_index = seq.index;
        snap.subnetwork = build_network(local);
        int pos = 0, neg = 0;
        for (const auto& e : snap.subnetwork.edges()) {
            auto it = cos.find({e.a, e.b});
            double c = it == cos.end() ? 0.0 : it->second;
            if (c > 0) ++pos;
            if (c < 0) ++neg;
        }
        const int m = snap.subnetwork.edge_count();
        snap.positive_fraction = m > 0 ? static_cast<double>(pos) / m : 0.0;
        snap.negative_fraction = m > 0 ? static_cast<double>(neg) / m : 0.0;
        out.push_back(std::move(snap));
    }
    return out;
}

} // namespace narranet
