#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "focksuture/fock.hpp"

using namespace focksuture;

namespace {
Word W(const std::string& s) { return parse_word(s); }
FockElement E(const Word& w) { return FockElement::single(w, 1); }
FockElement E(const std::string& s) { return E(W(s)); }
}

TEST_CASE("element arithmetic") {
    FockElement a = E("xy") + E("yx");
    CHECK(a.coeff(W("xy")) == 1);
    CHECK(a.coeff(W("yx")) == 1);
    CHECK(a.coeff(W("xx")) == 0);
    CHECK((a - a).is_zero());
    CHECK(scale(a, 0).is_zero());
    CHECK(scale(a, -2).coeff(W("xy")) == -2);
    CHECK(negate(a) == scale(a, -1));
    CHECK(FockElement::vacuum().coeff(Word{}) == 1);
    CHECK(FockElement::single(W("xy"), 0).is_zero());
}

TEST_CASE("multiplication is concatenation") {
    FockElement p = mul(E("x") + E("y"), E("x") - E("y"));
    CHECK(p.coeff(W("xx")) == 1);
    CHECK(p.coeff(W("xy")) == -1);
    CHECK(p.coeff(W("yx")) == 1);
    CHECK(p.coeff(W("yy")) == -1);
    CHECK(mul(FockElement::vacuum(), E("xy")) == E("xy"));
}

TEST_CASE("pairing and dot") {
    CHECK(pairing(E("xy"), E("yx")) == 1);
    CHECK(pairing(E("yx"), E("xy")) == 0);
    CHECK(pairing(E("xy"), E("xy")) == 1);
    CHECK(pairing(E("x"), E("y")) == 0);
    CHECK(pairing(E("xy") - E("yx"), E("xy") - E("yx")) == 1);
    CHECK(dot(E("xy") + E("yx"), E("xy") - E("yx")) == 0);
    CHECK(dot(E("xy"), E("xy")) == 1);
}

TEST_CASE("operators extend linearly") {
    CHECK(create('y', 0, E("xy")) == E("yxy"));
    CHECK(annihilate('x', 0, E("xy") + E("yx")) == E("y"));
    CHECK(annihilate('y', 0, E("xy")).is_zero());
    CHECK(derivative('x', E("xyx")) == E("yx") + E("xy"));
    CHECK(differential('x', E("xyx")) == E("xy") - E("yx"));
}

TEST_CASE("differential squares to zero") {
    for (char s : {'x', 'y'})
        for (const Word& w : enumerate_words(2, 3))
            CHECK(differential(s, differential(s, E(w))).is_zero());
}

TEST_CASE("operator specs parse and apply") {
    OperatorSpec spec = parse_operator_spec("a*(y,0) a(x,0)");
    CHECK(to_string(spec) == "a*(y,0) a(x,0)");
    CHECK(apply(spec, E("xy")) == E("yy"));
    CHECK(apply(parse_operator_spec("-3"), E("x")) == scale(E("x"), -3));
    CHECK(apply(parse_operator_spec("T*(y,0)"), E("x")) == E("yx") - E("xy"));
    CHECK(apply(parse_operator_spec(""), E("x")) == E("x"));
    CHECK(parse_operator_spec("a(-,1)").atoms[0].species == 'x');
    CHECK_THROWS_AS(parse_operator_spec("b(x,1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator_spec("a(z,1)"), std::invalid_argument);
}

TEST_CASE("normal form") {
    auto agree = [](const std::string& text, int nx, int ny) {
        OperatorSpec spec = parse_operator_spec(text);
        OperatorSpec nf = normal_form(spec);
        // shape: creations (strictly decreasing) then annihilations (weakly decreasing)
        bool in_annih = false;
        int prev_c = 1 << 30, prev_a = 1 << 30;
        for (const OpAtom& at : nf.atoms) {
            if (at.kind == OpAtom::Annihilate) {
                in_annih = true;
                CHECK(at.index <= prev_a);
                prev_a = at.index;
            } else {
                CHECK_FALSE(in_annih);
                CHECK(at.index < prev_c);
                prev_c = at.index;
            }
        }
        for (const Word& w : enumerate_words(nx, ny)) {
            INFO(text, " on ", to_string(w));
            CHECK(apply(spec, FockElement::single(w, 1)) ==
                  apply(nf, FockElement::single(w, 1)));
        }
    };
    agree("a(x,1) a*(x,3)", 2, 1);
    agree("a(x,2) a*(x,2)", 2, 2);
    agree("a(x,3) a*(x,2)", 2, 2);
    agree("a*(x,1) a*(x,2)", 1, 2);
    agree("a(x,1) a(x,2)", 3, 1);
    agree("a(x,0) a*(x,1) a(x,2) a*(x,0)", 2, 2);
    CHECK_THROWS_AS(normal_form(parse_operator_spec("a(x,1) a(y,1)")), std::invalid_argument);
    CHECK_THROWS_AS(normal_form(parse_operator_spec("H")), std::invalid_argument);
}

TEST_CASE("gram matrices") {
    GramMatrix g = gram(1, 1, GramFlavor::pairing);
    REQUIRE(g.words.size() == 2);
    CHECK(g.mat.at(0, 0) == 1);
    CHECK(g.mat.at(0, 1) == 1);
    CHECK(g.mat.at(1, 0) == 0);
    CHECK(g.mat.at(1, 1) == 1);
    CHECK(det(g.mat) == 1);
    GramMatrix d22 = gram(2, 2, GramFlavor::pairing);
    CHECK(det(d22.mat) == 1);  // unitriangular in lexicographic order
    for (int i = 0; i < d22.mat.rows; ++i) {
        CHECK(d22.mat.at(i, i) == 1);
        for (int j = 0; j < i; ++j) CHECK(d22.mat.at(i, j) == 0);
    }
    CHECK(gram(2, 1, GramFlavor::dot).mat == IntMatrix::identity(3));
}

TEST_CASE("matrix helpers") {
    IntMatrix a = IntMatrix::identity(3);
    a.at(0, 1) = 2;
    IntMatrix b = IntMatrix::identity(3);
    b.at(2, 0) = -1;
    IntMatrix c = mat_mul(a, b);
    CHECK(c.at(0, 1) == 2);
    CHECK(c.at(2, 0) == -1);
    IntMatrix m;
    m.rows = m.cols = 3;
    m.a = {2, 0, 1, 1, 3, -1, 0, 4, 2};
    CHECK(det(m) == 2 * (3 * 2 + 4) + 1 * 4);  // 24
    CHECK_THROWS_AS(mat_mul(a, IntMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("pairing by symbolic reduction matches the direct form") {
    for (int n = 0; n <= 4; ++n)
        for (int nx = 0; nx <= n; ++nx)
            for (const Word& u : enumerate_words(nx, n - nx))
                for (const Word& v : enumerate_words(nx, n - nx)) {
                    INFO(to_string(u), " vs ", to_string(v));
                    CHECK(pairing_by_reduction(u, v) == (leq(u, v) ? 1 : 0));
                }
    CHECK(pairing_by_reduction(W("xy"), W("xxy")) == 0);
}

TEST_CASE("overflow is detected") {
    int64_t big = (int64_t{1} << 62);
    CHECK_THROWS_AS(checked_add(big, big), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
    FockElement huge = FockElement::single(W("x"), big);
    CHECK_THROWS_AS(add(huge, huge), std::overflow_error);
}
