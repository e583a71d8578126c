#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "focksuture/duality.hpp"

using namespace focksuture;

namespace {
Word W(const std::string& s) { return parse_word(s); }
FockElement E(const std::string& s) { return FockElement::single(W(s), 1); }

IntMatrix mat_pow(const IntMatrix& m, int k) {
    IntMatrix r = IntMatrix::identity(m.rows);
    for (int i = 0; i < k; ++i) r = mat_mul(r, m);
    return r;
}
}

TEST_CASE("exceptional sets and psi") {
    CHECK(exceptional_set(W("xyxy"), 'x') == std::vector<int>{1, 2});
    CHECK(exceptional_set(W("xyxy"), 'y') == std::vector<int>{1});
    CHECK(exceptional_set(W("xxyy"), 'x') == std::vector<int>{2});
    CHECK(exceptional_set(W("yyy"), 'y').empty());
    CHECK(psi(W("xyxy"), 'x', {1}) == W("yxxy"));
    CHECK(psi(W("xyxy"), 'x', {2}) == W("xyyx"));
    CHECK(psi(W("xyxy"), 'x', {1, 2}) == W("yxyx"));
    CHECK_THROWS_AS(psi(W("xxyy"), 'x', {1}), std::invalid_argument);
}

TEST_CASE("printed Q examples") {
    CHECK(Q_minus(E("xyxy")) == E("xyxy") - E("xyyx") - E("yxxy") + E("yxyx"));
    CHECK(Q_plus(E("xyxy")) == E("xyxy") - E("xxyy"));
}

TEST_CASE("Q inverses") {
    CHECK(Q_minus_inv(E("xyxy")) ==
          E("xyxy") + E("xyyx") + E("yxxy") + E("yxyx") + E("yyxx"));
    for (int nx = 0; nx <= 2; ++nx)
        for (int ny = 0; ny <= 2; ++ny)
            for (const Word& w : enumerate_words(nx, ny)) {
                FockElement e = FockElement::single(w, 1);
                CHECK(Q_plus(Q_plus_inv(e)) == e);
                CHECK(Q_plus_inv(Q_plus(e)) == e);
                CHECK(Q_minus(Q_minus_inv(e)) == e);
                CHECK(Q_minus_inv(Q_minus(e)) == e);
            }
}

TEST_CASE("H on small words") {
    CHECK(H_apply(E("xy")) == E("yx"));
    CHECK(H_apply(E("yx")) == E("yx") - E("xy"));
    CHECK(H_apply(E("xxx")) == E("xxx"));
    CHECK(H_apply(E("yy")) == E("yy"));
    CHECK(H_apply(E("xxyy")) == E("yyxx"));
    CHECK(H_apply(E("xyxy")) == E("yyxx") - E("xxyy"));
    // y^b x^a goes to y^b x^a - y^{b-1} x y x^{a-1}
    CHECK(H_apply(E("yyxx")) == E("yyxx") - E("yxyx"));
    const GradedMatrix& g = H_matrix(1, 1);
    CHECK(g.mat.a == std::vector<int64_t>{0, -1, 1, 1});
}

TEST_CASE("inverse and adjoint property") {
    for (int nx = 0; nx <= 2; ++nx)
        for (int ny = 0; ny <= 2; ++ny) {
            for (const Word& w : enumerate_words(nx, ny)) {
                FockElement e = FockElement::single(w, 1);
                CHECK(H_inv(H_apply(e)) == e);
                CHECK(H_apply(H_inv(e)) == e);
            }
            for (const Word& u : enumerate_words(nx, ny))
                for (const Word& v : enumerate_words(nx, ny)) {
                    FockElement eu = FockElement::single(u, 1);
                    FockElement ev = FockElement::single(v, 1);
                    CHECK(pairing(eu, ev) == pairing(ev, H_apply(eu)));
                    CHECK(pairing(eu, ev) == pairing(H_inv(ev), eu));
                    CHECK(dot(eu, ev) == pairing(eu, Q_plus(ev)));
                    CHECK(dot(eu, ev) == pairing(Q_minus(eu), ev));
                }
        }
}

TEST_CASE("all routes to H agree") {
    for (int n = 0; n <= 5; ++n)
        for (int nx = 0; nx <= n; ++nx) {
            int ny = n - nx;
            const GradedMatrix& g = H_matrix(nx, ny);
            IntMatrix rec = H_recursive_matrix(nx, ny);
            CHECK(g.mat == rec);
            for (size_t j = 0; j < g.words.size(); ++j) {
                FockElement e = FockElement::single(g.words[j], 1);
                FockElement via_q = H_apply(e);
                INFO(to_string(g.words[j]));
                CHECK(via_q == H_terms_explicit(g.words[j]));
                CHECK(via_q == H_block_expansion(g.words[j]));
                CHECK(via_q == H_commutator_series(e));
            }
        }
}

TEST_CASE("periodicity") {
    CHECK(H_order(1, 1) == 6);
    CHECK(H_power_sign(1, 1) == -1);
    CHECK(H_order(1, 2) == 4);
    CHECK(H_power_sign(1, 2) == 1);
    CHECK(H_order(0, 5) == 1);
    CHECK(H_order(3, 1) == 10);
    for (int nx = 1; nx <= 3; ++nx)
        for (int ny = 1; ny <= 3; ++ny) {
            const GradedMatrix& g = H_matrix(nx, ny);
            int n = nx + ny;
            IntMatrix p = mat_pow(g.mat, n + 1);
            IntMatrix expect = IntMatrix::identity(g.mat.rows);
            if (H_power_sign(nx, ny) < 0)
                for (auto& v : expect.a) v = -v;
            CHECK(p == expect);
            // multiplicative order
            IntMatrix id = IntMatrix::identity(g.mat.rows);
            IntMatrix acc = g.mat;
            int order = 1;
            while (!(acc == id)) {
                acc = mat_mul(acc, g.mat);
                ++order;
                REQUIRE(order <= 2 * n + 2);
            }
            CHECK(order == H_order(nx, ny));
        }
}

TEST_CASE("pawn cycle") {
    auto c11 = pawn_cycle(1, 1);
    REQUIRE(c11.size() == 2);
    CHECK(c11[0] == W("yx"));
    CHECK(c11[1] == W("xy"));
    auto c22 = pawn_cycle(2, 2);
    REQUIRE(c22.size() == 4);
    CHECK(c22[0] == W("yyxx"));
    CHECK(c22[1] == W("yxyx"));
    CHECK(c22[2] == W("xyxy"));
    CHECK(c22[3] == W("xxyy"));
    CHECK(pawn_cycle(0, 3) == std::vector<Word>{W("yyy")});
    // total exceptional count along the cycle
    for (int nx = 1; nx <= 3; ++nx)
        for (int ny = 1; ny <= 3; ++ny) {
            int total = 0;
            for (const Word& w : pawn_cycle(nx, ny))
                total += static_cast<int>(exceptional_set(w, 'x').size());
            CHECK(total == nx * ny);
        }
}
