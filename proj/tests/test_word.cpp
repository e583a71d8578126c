#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "focksuture/word.hpp"

using namespace focksuture;

namespace {
Word W(const std::string& s) { return parse_word(s); }
}

TEST_CASE("parsing and printing") {
    CHECK(to_string(W("xyxy")) == "xyxy");
    CHECK(to_signs(W("xyxy")) == "-+-+");
    CHECK(parse_word("-+-+") == W("xyxy"));
    CHECK(parse_word("−+") == W("xy"));
    CHECK(parse_word("") == Word{});
    CHECK_THROWS_AS(parse_word("x+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a"), std::invalid_argument);
}

TEST_CASE("letter access and gradings") {
    Word w = W("xyxy");
    CHECK(w.n == 4);
    CHECK(w.at(0) == 'x');
    CHECK(w.at(1) == 'y');
    CHECK(w.n_x() == 2);
    CHECK(w.n_y() == 2);
    CHECK(w.euler() == 0);
    CHECK(W("yyy").euler() == 3);
    CHECK_THROWS_AS(w.at(4), std::out_of_range);
    CHECK(w.position_of('x', 2) == 3);
    CHECK(w.position_of('y', 1) == 2);
    CHECK_THROWS_AS(w.position_of('x', 3), std::out_of_range);
}

TEST_CASE("profiles") {
    WordProfile p = profile(W("xyxy"));
    CHECK(p.f_x == std::vector<int>{0, 1});
    CHECK(p.f_y == std::vector<int>{1, 2});
    CHECK(p.g_x == std::vector<int>{1, 1, 2, 2});
    CHECK(p.g_y == std::vector<int>{0, 1, 1, 2});
    CHECK(p.h_x == std::vector<int>{1, 3});
    CHECK(p.h_y == std::vector<int>{2, 4});

    WordProfile q = profile(W("yxxy"));
    CHECK(q.f_x == std::vector<int>{1, 1});
    CHECK(q.h_x == std::vector<int>{2, 3});
    CHECK(q.h_y == std::vector<int>{1, 4});
}

TEST_CASE("partial order") {
    CHECK(leq(W("xxyy"), W("yxyx")));
    CHECK_FALSE(leq(W("xyyx"), W("yxxy")));
    CHECK_FALSE(leq(W("yxxy"), W("xyyx")));
    CHECK(leq(W("xyxy"), W("xyxy")));
    CHECK_FALSE(leq(W("xy"), W("xxy")));  // different gradings
    CHECK_FALSE(leq(W("xx"), W("yy")));
    CHECK(word_difference(W("xxyy"), W("yxyx")) == 3);
    CHECK(word_difference(W("xy"), W("xy")) == 0);
    CHECK_THROWS_AS(word_difference(W("xy"), W("xxy")), std::invalid_argument);
}

TEST_CASE("min and max") {
    auto [lo, hi] = min_max(W("yxxy"), W("xyyx"));
    CHECK(lo == W("xyxy"));
    CHECK(hi == W("yxyx"));
    auto [a, b] = min_max(W("xy"), W("xy"));
    CHECK(a == W("xy"));
    CHECK(b == W("xy"));
}

TEST_CASE("block decomposition") {
    BlockDecomposition bd = block_decompose(W("yxxy"), W("xyyx"));
    REQUIRE(bd.blocks.size() == 3);
    CHECK(bd.blocks[0].first.empty());
    CHECK(bd.blocks[0].second.empty());
    CHECK(bd.blocks[1].first == W("yx"));
    CHECK(bd.blocks[1].second == W("xy"));
    CHECK(bd.blocks[2].first == W("xy"));
    CHECK(bd.blocks[2].second == W("yx"));

    BlockDecomposition same = block_decompose(W("xyx"), W("xyx"));
    CHECK(same.blocks.size() == 1);

    // comparable pair: a single block
    BlockDecomposition cmp = block_decompose(W("xxyy"), W("yxyx"));
    for (size_t i = 0; i < cmp.blocks.size(); i += 2)
        CHECK(leq(cmp.blocks[i].first, cmp.blocks[i].second));
    for (size_t i = 1; i < cmp.blocks.size(); i += 2)
        CHECK(leq(cmp.blocks[i].second, cmp.blocks[i].first));
}

TEST_CASE("block decomposition reassembles and alternates") {
    for (const Word& w0 : enumerate_words(2, 2)) {
        for (const Word& w1 : enumerate_words(2, 2)) {
            BlockDecomposition bd = block_decompose(w0, w1);
            std::string s0, s1;
            for (auto& [a, b] : bd.blocks) {
                s0 += to_string(a);
                s1 += to_string(b);
            }
            CHECK(s0 == to_string(w0));
            CHECK(s1 == to_string(w1));
            for (size_t i = 0; i < bd.blocks.size(); ++i) {
                if (i % 2 == 0)
                    CHECK(leq(bd.blocks[i].first, bd.blocks[i].second));
                else
                    CHECK(leq(bd.blocks[i].second, bd.blocks[i].first));
                if (i > 0 && i + 1 < bd.blocks.size())
                    CHECK_FALSE(bd.blocks[i].first.empty());
            }
        }
    }
}

TEST_CASE("enumeration") {
    auto ws = enumerate_words(1, 1);
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == W("xy"));
    CHECK(ws[1] == W("yx"));
    CHECK(enumerate_words(2, 2).size() == 6);
    CHECK(enumerate_words(0, 3) == std::vector<Word>{W("yyy")});
    CHECK(enumerate_words(3, 0) == std::vector<Word>{W("xxx")});
    auto big = enumerate_words(3, 3);
    CHECK(std::is_sorted(big.begin(), big.end()));
}

TEST_CASE("comparable pairs") {
    CHECK(comparable_pairs(1, 1).size() == 3);
    size_t total = 0;
    for (int nx = 0; nx <= 3; ++nx) total += comparable_pairs(nx, 3 - nx).size();
    CHECK(total == 14);  // Catalan(4)
}

TEST_CASE("elementary moves") {
    auto fw = elementary_moves(W("xy"), MoveDirection::forwards);
    CHECK(fw == std::vector<Word>{W("yx")});
    auto bw = elementary_moves(W("yx"), MoveDirection::backwards);
    CHECK(bw == std::vector<Word>{W("xy")});
    auto fw2 = elementary_moves(W("xxyy"), MoveDirection::forwards);
    std::set<Word> expect{W("xyxy"), W("yxxy"), W("xyyx"), W("yyxx")};
    CHECK(std::set<Word>(fw2.begin(), fw2.end()) == expect);
    for (const Word& w : fw2) CHECK(leq(W("xxyy"), w));
    CHECK(elementary_moves(W("yx"), MoveDirection::forwards).empty());
}

TEST_CASE("word creation and annihilation") {
    CHECK(word_create('x', 0, W("yx")) == W("xyx"));
    CHECK(word_create('x', 1, W("xy")) == W("xxy"));
    CHECK(word_create('x', 2, W("xy")) == W("xyx"));
    CHECK(word_create('y', 0, W("xy")) == W("yxy"));
    CHECK(word_create('+', 2, W("xy")) == W("xyy"));
    CHECK_THROWS_AS(word_create('x', 3, W("xy")), std::out_of_range);

    CHECK(word_annihilate('x', 0, W("xy")) == W("y"));
    CHECK_FALSE(word_annihilate('x', 0, W("yx")).has_value());
    CHECK(word_annihilate('x', 2, W("yx")) == W("y"));  // final index
    CHECK_FALSE(word_annihilate('y', 2, W("yx")).has_value());
    CHECK(word_annihilate('y', 1, W("xyy")) == W("xy"));
    CHECK_THROWS_AS(word_annihilate('y', 4, W("xyy")), std::out_of_range);

    // inverse relation on internal indices
    for (const Word& w : enumerate_words(2, 1))
        for (int i = 0; i <= 3; ++i)
            CHECK(word_annihilate('x', i, word_create('x', i, w)) == w);
}

TEST_CASE("annihilation can create comparability") {
    Word a = W("yxxy"), b = W("xyyx");
    CHECK_FALSE(leq(a, b));
    CHECK_FALSE(leq(b, a));
    Word a1 = *word_annihilate('x', 1, a);
    Word b1 = *word_annihilate('x', 1, b);
    CHECK(a1 == W("yxy"));
    CHECK(b1 == W("yyx"));
    CHECK(leq(a1, b1));
}

TEST_CASE("order axioms on a grading") {
    auto ws = enumerate_words(2, 2);
    for (const Word& a : ws) {
        CHECK(leq(a, a));
        for (const Word& b : ws) {
            if (leq(a, b) && leq(b, a)) CHECK(a == b);
            for (const Word& c : ws)
                if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
            auto [lo, hi] = min_max(a, b);
            CHECK(leq(lo, a));
            CHECK(leq(lo, b));
            CHECK(leq(a, hi));
            CHECK(leq(b, hi));
        }
    }
}

TEST_CASE("length guard") {
    Word w;
    for (int i = 0; i < 62; ++i) w = w.appended('x');
    CHECK_THROWS_AS(w.appended('y'), std::length_error);
}
