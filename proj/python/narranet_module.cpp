// Python bindings for the narranet core operations.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "narranet/exports.hpp"
#include "narranet/pipeline.hpp"

namespace py = pybind11;
using namespace narranet;

PYBIND11_MODULE(_core, m) {
    m.doc() = "narranet: dynamic character network analysis for chaptered narratives";

    py::register_exception<Error>(m, "NarranetError");

    // corpus
    py::class_<UnitRef>(m, "UnitRef")
        .def_readonly("volume", &UnitRef::volume)
        .def_readonly("book", &UnitRef::book)
        .def_readonly("chapter", &UnitRef::chapter)
        .def_readonly("ordinal", &UnitRef::ordinal);
    py::class_<Chapter>(m, "Chapter")
        .def_readonly("ref", &Chapter::ref)
        .def_readonly("title", &Chapter::title)
        .def_readonly("raw_text", &Chapter::raw_text)
        .def_readonly("tokens", &Chapter::tokens)
        .def_property_readonly("token_count", &Chapter::token_count);
    py::class_<SegmentationConfig>(m, "SegmentationConfig")
        .def(py::init<>())
        .def_readwrite("volume_pattern", &SegmentationConfig::volume_pattern)
        .def_readwrite("book_pattern", &SegmentationConfig::book_pattern)
        .def_readwrite("chapter_pattern", &SegmentationConfig::chapter_pattern)
        .def_readwrite("start_marker", &SegmentationConfig::start_marker)
        .def_readwrite("end_marker", &SegmentationConfig::end_marker);
    py::class_<Corpus>(m, "Corpus")
        .def_readonly("chapters", &Corpus::chapters)
        .def_property_readonly("chapter_count", &Corpus::chapter_count)
        .def_property_readonly("volume_count", &Corpus::volume_count)
        .def_property_readonly("book_count", &Corpus::book_count);
    m.def("tokenize", [](const std::string& s) { return tokenize(s); });
    m.def("parse_narrative", &parse_narrative);

    // roster and timelines
    py::enum_<MatchMode>(m, "MatchMode")
        .value("WORD_BOUNDARY", MatchMode::WordBoundary)
        .value("PHRASE", MatchMode::Phrase);
    py::class_<RosterEntry>(m, "RosterEntry")
        .def(py::init([](std::string name, std::vector<std::string> aliases, MatchMode mode) {
                 return RosterEntry{std::move(name), std::move(aliases), mode};
             }),
             py::arg("name"), py::arg("aliases"), py::arg("mode") = MatchMode::WordBoundary)
        .def_readwrite("name", &RosterEntry::name)
        .def_readwrite("aliases", &RosterEntry::aliases);
    py::class_<CharacterRoster>(m, "CharacterRoster")
        .def(py::init<std::vector<RosterEntry>>())
        .def_property_readonly("size", &CharacterRoster::size);
    py::class_<Timeline>(m, "Timeline")
        .def(py::init([](std::string character, std::vector<int> chapters) {
                 return Timeline{std::move(character), std::move(chapters)};
             }),
             py::arg("character"), py::arg("chapters"))
        .def_readonly("character", &Timeline::character)
        .def_readonly("chapters", &Timeline::chapters)
        .def_property_readonly("appearance", &Timeline::appearance);
    m.def("detect_appearances", &detect_appearances);
    m.def("load_roster", &load_roster);

    // network
    py::class_<Edge>(m, "Edge")
        .def_readonly("a", &Edge::a)
        .def_readonly("b", &Edge::b)
        .def_readonly("chapters", &Edge::chapters)
        .def_property_readonly("weight", &Edge::weight);
    py::class_<CharacterNetwork>(m, "CharacterNetwork")
        .def_property_readonly("nodes", &CharacterNetwork::nodes)
        .def_property_readonly("edges", &CharacterNetwork::edges)
        .def_property_readonly("node_count", &CharacterNetwork::node_count)
        .def_property_readonly("edge_count", &CharacterNetwork::edge_count);
    m.def("build_network", &build_network);
    py::class_<PathStats>(m, "PathStats")
        .def_readonly("density", &PathStats::density)
        .def_readonly("mean_geodesic", &PathStats::mean_geodesic)
        .def_readonly("diameter", &PathStats::diameter)
        .def_readonly("clustering", &PathStats::clustering);
    m.def("path_statistics", &path_statistics);
    py::class_<CommunityPartition>(m, "CommunityPartition")
        .def_readonly("assignment", &CommunityPartition::assignment)
        .def_readonly("community_count", &CommunityPartition::community_count)
        .def_readonly("modularity", &CommunityPartition::modularity);
    m.def("detect_communities", &detect_communities);

    // sentiment
    py::class_<SentimentLexicon>(m, "SentimentLexicon")
        .def(py::init<std::vector<std::string>, std::vector<std::string>>())
        .def_static("load", &SentimentLexicon::load)
        .def_static("parse", &SentimentLexicon::parse)
        .def("is_positive", &SentimentLexicon::is_positive)
        .def("is_negative", &SentimentLexicon::is_negative);
    py::class_<ChapterSentiment>(m, "ChapterSentiment")
        .def_readonly("ordinal", &ChapterSentiment::ordinal)
        .def_readonly("positive_pct", &ChapterSentiment::positive_pct)
        .def_readonly("negative_pct", &ChapterSentiment::negative_pct)
        .def_readonly("spi", &ChapterSentiment::spi);
    m.def("score_chapter", &score_chapter, py::arg("tokens"), py::arg("lexicon"),
          py::arg("ordinal") = 0);

    // topics
    py::class_<Vocabulary>(m, "Vocabulary")
        .def_readonly("words", &Vocabulary::words)
        .def_readonly("df", &Vocabulary::df)
        .def_property_readonly("size", &Vocabulary::size);
    m.def("build_tfidf", [](const Corpus& corpus, std::vector<std::string> stopwords, int min_df,
                            double max_df_fraction) {
              VocabConfig vc;
              vc.stopwords.insert(stopwords.begin(), stopwords.end());
              vc.min_df = min_df;
              vc.max_df_fraction = max_df_fraction;
              return build_tfidf(corpus, vc);
          },
          py::arg("corpus"), py::arg("stopwords") = std::vector<std::string>{},
          py::arg("min_df") = 1, py::arg("max_df_fraction") = 1.0);
    py::class_<TopicModel>(m, "TopicModel")
        .def_readonly("Q", &TopicModel::Q)
        .def_readonly("H", &TopicModel::H)
        .def_readonly("topic_count", &TopicModel::topic_count)
        .def_readonly("error_trace", &TopicModel::error_trace);
    m.def("nnmf", &nnmf, py::arg("M"), py::arg("topic_count"), py::arg("seed"),
          py::arg("max_iter") = 200, py::arg("rel_tol") = 1e-4);
    m.def("topical_state", [](const Matrix& H, const std::vector<int>& window) {
        auto s = topical_state(H, window);
        return py::make_tuple(s.components, s.zero_mass);
    });
    m.def("pearson", &pearson);

    // pipeline
    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def_static("load", &PipelineConfig::load)
        .def("config_hash", &PipelineConfig::config_hash)
        .def_readwrite("output_dir", &PipelineConfig::output_dir)
        .def_readwrite("topic_count", &PipelineConfig::topic_count)
        .def_readwrite("seed", &PipelineConfig::seed)
        .def_readwrite("n_seeds", &PipelineConfig::n_seeds);
    m.def("run_stage", &run_stage, py::arg("subcommand"), py::arg("config"),
          py::arg("quiet") = true);
}
