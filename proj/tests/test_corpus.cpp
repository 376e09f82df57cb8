#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "narranet/corpus.hpp"
#include "narranet/roster.hpp"

using namespace narranet;

TEST_CASE("tokenize applies the lowercase/alpha rules") {
    CHECK(tokenize("Jean Valjean, the convict!") ==
          std::vector<std::string>{"jean", "valjean", "the", "convict"});
    CHECK(tokenize("") == std::vector<std::string>{});
    CHECK(tokenize("l'homme 1832") == std::vector<std::string>{"l", "homme"});
}

TEST_CASE("tokenize is idempotent under whitespace join") {
    auto join = [](const std::vector<std::string>& ts) {
        std::string out;
        for (const auto& t : ts) {
            if (!out.empty()) out.push_back(' ');
            out += t;
        }
        return out;
    };
    for (const char* text : {"Hello, World!", "a1b2c3", "  ", "Mixed CASE text's fine"}) {
        auto once = tokenize(text);
        CHECK(tokenize(join(once)) == once);
    }
}

namespace {

SegmentationConfig simple_markers() {
    SegmentationConfig m;
    m.chapter_pattern = "^CHAPTER [IVXLC]+";
    return m;
}

} // namespace

TEST_CASE("parse_narrative single chapter") {
    auto corpus = parse_narrative("CHAPTER I\nabc\n", simple_markers());
    REQUIRE(corpus.chapter_count() == 1);
    CHECK(corpus.chapters[0].raw_text == "abc\n");
    CHECK(corpus.chapters[0].tokens == std::vector<std::string>{"abc"});
}

TEST_CASE("parse_narrative three chapters in file order") {
    auto corpus = parse_narrative(
        "CHAPTER I\none\nCHAPTER II\ntwo\nCHAPTER III\nthree\n", simple_markers());
    REQUIRE(corpus.chapter_count() == 3);
    for (int i = 0; i < 3; ++i) CHECK(corpus.chapters[i].ref.ordinal == i + 1);
    CHECK(corpus.chapters[2].tokens == std::vector<std::string>{"three"});
}

TEST_CASE("parse_narrative full hierarchy and trim markers") {
    SegmentationConfig m;
    m.volume_pattern = "^VOLUME [IVXLC]+";
    m.book_pattern = "^BOOK [IVXLC]+";
    m.chapter_pattern = "^CHAPTER [IVXLC]+";
    m.start_marker = "*** START ***";
    m.end_marker = "*** END ***";
    std::string text =
        "front matter ignored\n*** START ***\n"
        "VOLUME I: FIRST\nBOOK I: OPENING\nCHAPTER I: A\nalpha\nCHAPTER II: B\nbeta\n"
        "BOOK II: NEXT\nCHAPTER I: C\ngamma\n"
        "VOLUME II: SECOND\nBOOK I: LAST\nCHAPTER I: D\ndelta\n"
        "*** END ***\nback matter ignored\n";
    auto corpus = parse_narrative(text, m);
    REQUIRE(corpus.chapter_count() == 4);
    CHECK(corpus.volume_count() == 2);
    CHECK(corpus.book_count() == 3);
    CHECK(corpus.chapters[0].ref == UnitRef{1, 1, 1, 1});
    CHECK(corpus.chapters[1].ref == UnitRef{1, 1, 2, 2});
    CHECK(corpus.chapters[2].ref == UnitRef{1, 2, 1, 3});
    CHECK(corpus.chapters[3].ref == UnitRef{2, 1, 1, 4});
    CHECK(corpus.chapters[0].title == "A");
    // nothing from front/back matter leaks into chapter text
    for (const auto& ch : corpus.chapters) {
        CHECK(ch.raw_text.find("ignored") == std::string::npos);
    }
}

TEST_CASE("parse_narrative error paths") {
    CHECK_THROWS_AS(parse_narrative("no headings here\n", simple_markers()), NoChaptersFound);

    SegmentationConfig m;
    m.volume_pattern = "^VOLUME";
    m.book_pattern = "^BOOK";
    m.chapter_pattern = "^CHAPTER";
    CHECK_THROWS_AS(parse_narrative("BOOK I\nCHAPTER I\nx\n", m), NonMonotoneHeading);
}

TEST_CASE("ordinal contiguity invariant") {
    auto corpus = parse_narrative(
        "CHAPTER I\na\nCHAPTER II\nb\nCHAPTER III\nc\nCHAPTER IV\nd\n", simple_markers());
    CHECK(corpus.chapters.back().ref.ordinal == corpus.chapter_count());
    for (int i = 0; i < corpus.chapter_count(); ++i)
        CHECK(corpus.chapters[i].ref.ordinal == i + 1);
}

TEST_CASE("detect_appearances matches the brute-force scan") {
    auto corpus = parse_narrative(
        "CHAPTER I\nAnna walked in.\nCHAPTER II\nBo spoke.\nCHAPTER III\nAnna left.\n",
        simple_markers());
    CharacterRoster roster({{"Anna", {"Anna"}, MatchMode::WordBoundary},
                            {"Bo", {"Bo"}, MatchMode::WordBoundary}});
    auto timelines = detect_appearances(corpus, roster);
    REQUIRE(timelines.size() == 2);
    CHECK(timelines[0].chapters == std::vector<int>{1, 3});
    CHECK(timelines[1].chapters == std::vector<int>{2});
}

TEST_CASE("no-match character keeps an empty timeline") {
    auto corpus = parse_narrative("CHAPTER I\nsome real text\n", simple_markers());
    CharacterRoster roster({{"X", {"zzz"}, MatchMode::WordBoundary}});
    auto timelines = detect_appearances(corpus, roster);
    REQUIRE(timelines.size() == 1);
    CHECK(timelines[0].appearance() == 0);
}

TEST_CASE("multi-word phrase aliases respect word boundaries") {
    auto corpus = parse_narrative(
        "CHAPTER I\nMadame Thenardier scowled.\nCHAPTER II\nThenardier alone.\n"
        "CHAPTER III\nThe Mariusson case.\n",
        simple_markers());
    CharacterRoster roster({{"Mme Thenardier", {"Madame Thenardier"}, MatchMode::Phrase},
                            {"Marius", {"Marius"}, MatchMode::WordBoundary}});
    auto timelines = detect_appearances(corpus, roster);
    CHECK(timelines[0].chapters == std::vector<int>{1});
    // "Marius" must not match inside "Mariusson"
    CHECK(timelines[1].chapters.empty());
}

TEST_CASE("ambiguous alias is rejected at construction") {
    CHECK_THROWS_AS(CharacterRoster({{"A", {"Jean"}, MatchMode::WordBoundary},
                                     {"B", {"jean"}, MatchMode::WordBoundary}}),
                    AmbiguousAlias);
}

TEST_CASE("appearance monotone under appended chapters") {
    std::string text = "CHAPTER I\nAnna\n";
    CharacterRoster roster({{"Anna", {"Anna"}, MatchMode::WordBoundary}});
    int prev = 0;
    for (int i = 0; i < 5; ++i) {
        auto corpus = parse_narrative(text, simple_markers());
        auto timelines = detect_appearances(corpus, roster);
        CHECK(timelines[0].appearance() >= prev);
        prev = timelines[0].appearance();
        text += i % 2 ? "CHAPTER X\nAnna again\n" : "CHAPTER X\nnobody\n";
    }
}

TEST_CASE("detect_appearances is deterministic") {
    auto corpus = parse_narrative("CHAPTER I\nAnna and Bo\nCHAPTER II\nBo\n", simple_markers());
    CharacterRoster roster({{"Anna", {"Anna"}, MatchMode::WordBoundary},
                            {"Bo", {"Bo"}, MatchMode::WordBoundary}});
    auto a = detect_appearances(corpus, roster);
    auto b = detect_appearances(corpus, roster);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].chapters == b[i].chapters);
}
