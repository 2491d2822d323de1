#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mbl/util.hpp"
#include "mbl/windowing.hpp"

using namespace mbl;

namespace {

std::vector<WordRecord> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_lexicon(in);
}

const char* kBooking = "booking\t/b/1 /u/0 /-/0 /k/0 /ɪ/0 /ŋ/0 /-/0\n";

}  // namespace

TEST_CASE("parse a letter-aligned lexicon line") {
    const auto words = parse(kBooking);
    REQUIRE(words.size() == 1);
    CHECK(words[0].letters == U"booking");
    CHECK(words[0].labels.size() == 7);
    CHECK(words[0].labels[4] == "/ɪ/0");
    CHECK(words[0].word_id == 0);

    const auto single = parse("a\t/eɪ/1\n");
    REQUIRE(single.size() == 1);
    CHECK(single[0].letters == U"a");
    CHECK(single[0].labels == std::vector<ClassLabel>{"/eɪ/1"});
}

TEST_CASE("lexicon parse errors name the line") {
    CHECK_THROWS_WITH_AS(parse("abc\tX Y\n"), "line 1: 3 letters but 2 labels", Error);
    CHECK_THROWS_WITH_AS(parse("# header\n\nab\tX\n"), "line 3: 2 letters but 1 labels", Error);
    CHECK_THROWS_WITH_AS(parse("\tX\n"), "line 1: empty word", Error);
    CHECK_THROWS_AS(parse("a_b\tX Y Z\n"), Error);
    CHECK_THROWS_AS(parse("abc X Y Z\n"), Error);
}

TEST_CASE("comments, blank lines and duplicate words") {
    const auto words = parse("# comment\n\nab\tX Y\r\nab\tX Z\n  \ncd\tP Q\n");
    REQUIRE(words.size() == 3);
    CHECK(words[0].word_id == 0);
    CHECK(words[1].word_id == 1);
    CHECK(words[1].labels[1] == "Z");
    CHECK(words[2].word_id == 2);
}

TEST_CASE("windowing booking with width 7") {
    const auto word = parse(kBooking).front();
    const auto tokens = generate_windows(word, 7);
    REQUIRE(tokens.size() == 7);
    const char* expected[7][2] = {
        {"___book", "/b/1"}, {"__booki", "/u/0"}, {"_bookin", "/-/0"}, {"booking", "/k/0"},
        {"ooking_", "/ɪ/0"}, {"oking__", "/ŋ/0"}, {"king___", "/-/0"},
    };
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(utf8_encode(tokens[i].features) == expected[i][0]);
        CHECK(tokens[i].label == expected[i][1]);
        CHECK(tokens[i].position == i);
    }
}

TEST_CASE("degenerate windows") {
    WordRecord a{U"a", {"P"}, 0};
    const auto t3 = generate_windows(a, 3);
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].features == U"_a_");
    CHECK(t3[0].label == "P");

    WordRecord abc{U"abc", {"X", "Y", "Z"}, 4};
    const auto t1 = generate_windows(abc, 1);
    REQUIRE(t1.size() == 3);
    CHECK(t1[0].features == U"a");
    CHECK(t1[2].features == U"c");
    CHECK(t1[2].label == "Z");
    CHECK(t1[2].word_id == 4);

    CHECK_THROWS_AS(generate_windows(abc, 4), Error);
    CHECK_THROWS_AS(generate_windows(abc, 0), Error);
}

TEST_CASE("window invariants over a small corpus") {
    const auto words = parse(
        "booking\t/b/1 /u/0 /-/0 /k/0 /ɪ/0 /ŋ/0 /-/0\n"
        "soirée\t/s/0 /w/0 /-/0 /r/1 /eɪ/0 /-/0\n"
        "x\t/ks/1\n"
        "algorithm\t/æ/1 /l/0 /g/0 /ə/0 /r/0 /ɪ/0 /θ/0 /-/0 /m/0\n");
    for (std::size_t width : {1u, 3u, 5u, 7u, 9u}) {
        const auto tokens = generate_windows(words, width);
        std::size_t letters = 0;
        for (const auto& w : words) letters += w.letters.size();
        CHECK(tokens.size() == letters);

        std::size_t k = 0;
        for (const auto& w : words) {
            std::u32string focus;
            for (std::size_t i = 0; i < w.letters.size(); ++i, ++k) {
                CHECK(tokens[k].features.size() == width);
                CHECK(tokens[k].word_id == w.word_id);
                focus.push_back(tokens[k].features[(width - 1) / 2]);
            }
            CHECK(focus == w.letters);
        }
    }
}

TEST_CASE("lexicon write/parse round trip") {
    const auto words = parse(kBooking);
    std::ostringstream out;
    write_lexicon(out, words);
    CHECK(out.str() == kBooking);
}
