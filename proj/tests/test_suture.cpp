#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "focksuture/duality.hpp"
#include "focksuture/suture.hpp"

using namespace focksuture;

namespace {
Word W(const std::string& s) { return parse_word(s); }
FockElement E(const std::string& s) { return FockElement::single(W(s), 1); }
}

TEST_CASE("interval elements") {
    SutureElement v = interval_element(W("xy"), W("yx"));
    CHECK(v.element == E("xy") - E("yx"));
    CHECK(v.wminus == W("xy"));
    CHECK(v.wplus == W("yx"));
    CHECK(v.normalized);
    CHECK(interval_element(W("xyx"), W("xyx")).element == E("xyx"));
    CHECK_THROWS_AS(interval_element(W("yx"), W("xy")), std::invalid_argument);
    // support lies inside the interval
    SutureElement big = interval_element(W("xxyy"), W("yxyx"));
    for (const auto& [w, c] : big.element.terms()) {
        CHECK((c == 1 || c == -1));
        CHECK(leq(W("xxyy"), w));
        CHECK(leq(w, W("yxyx")));
    }
}

TEST_CASE("membership test") {
    CHECK(is_suture_element(E("xy") - E("yx")));
    CHECK(is_suture_element(E("yx") - E("xy")));
    CHECK(is_suture_element(E("xyx")));
    CHECK_FALSE(is_suture_element(E("xy") + E("yx")));
    CHECK_FALSE(is_suture_element(scale(E("xy"), 2)));
    CHECK_FALSE(is_suture_element(FockElement::zero()));
    CHECK_FALSE(is_suture_element(E("x") + E("y")));
}

TEST_CASE("generated closures at small degree") {
    auto c1 = generate_C(2, GeneratorFamily::C1);
    auto c2 = generate_C(2, GeneratorFamily::C2);
    auto c3 = generate_C(2, GeneratorFamily::C3);
    CHECK(c1 == c2);
    CHECK(c1 == c3);
    CHECK(c1.count(negate(FockElement::vacuum())) == 1);
    CHECK(c1.count(FockElement::vacuum()) == 1);

    // degree 1 slice is {x, -x, y, -y}
    std::set<FockElement> deg1;
    for (const FockElement& e : c1)
        if (e.terms().front().first.n == 1) deg1.insert(e);
    std::set<FockElement> expect1{E("x"), negate(E("x")), E("y"), negate(E("y"))};
    CHECK(deg1 == expect1);

    // grading (1,1) slice is {xy, yx, xy - yx} up to sign
    std::set<FockElement> g11;
    for (const FockElement& e : c1) {
        const Word& w = e.terms().front().first;
        if (w.n_x() == 1 && w.n_y() == 1) g11.insert(e);
    }
    std::set<FockElement> expect11{E("xy"), negate(E("xy")), E("yx"),
                                   negate(E("yx")), E("xy") - E("yx"),
                                   E("yx") - E("xy")};
    CHECK(g11 == expect11);
    CHECK_THROWS_AS(generate_C(2, GeneratorFamily::C1, 3), std::length_error);
}

TEST_CASE("every closure member is a suture element and conversely") {
    auto c1 = generate_C(3, GeneratorFamily::C1);
    int count3[4] = {0, 0, 0, 0};  // per n_x at degree 3
    for (const FockElement& e : c1) {
        CHECK(is_suture_element(e));
        const Word& w = e.terms().front().first;
        if (w.n == 3) ++count3[w.n_x()];
    }
    for (int nx = 0; nx <= 3; ++nx)
        CHECK(count3[nx] == 2 * static_cast<int>(comparable_pairs(nx, 3 - nx).size()));
}

TEST_CASE("explicit chain reaching minus one") {
    FockElement e = FockElement::vacuum();
    e = create('x', 0, e);
    CHECK(e == E("x"));
    e = Tstar('y', 0, e);
    CHECK(e == E("yx") - E("xy"));
    e = annihilate('x', 0, e);
    CHECK(e == negate(E("y")));
    e = annihilate('y', 0, e);
    CHECK(e == negate(FockElement::vacuum()));

    FockElement h = E("xy");
    h = H_apply(H_apply(H_apply(h)));
    CHECK(h == negate(E("xy")));
}

TEST_CASE("bypass completion") {
    auto r = bypass_completion(as_suture(E("xy")), as_suture(E("yx")));
    REQUIRE(r.has_value());
    CHECK(r->element == E("xy") - E("yx"));
    CHECK_FALSE(bypass_completion(as_suture(E("xy")), as_suture(E("xy"))).has_value());
    CHECK_FALSE(bypass_completion(as_suture(E("xx")), as_suture(E("yy"))).has_value());
    // swapped arguments are admissible
    auto r2 = bypass_completion(as_suture(E("yx")), as_suture(E("xy")));
    REQUIRE(r2.has_value());
    CHECK(r2->element == E("xy") - E("yx"));
}

TEST_CASE("connecting chains") {
    SutureElement u = as_suture(E("xy"));
    CHECK(connecting_chain(u, u) == std::vector<SutureElement>{u});

    auto chain = connecting_chain(as_suture(E("xy")), as_suture(E("yx")));
    REQUIRE(chain.size() >= 2);
    CHECK(chain.front().element == E("xy"));
    CHECK(chain.back().element == E("yx"));

    CHECK_THROWS_AS(connecting_chain(as_suture(E("yx")), as_suture(E("xy"))),
                    std::invalid_argument);

    auto validate_chain = [](const SutureElement& a, const SutureElement& b) {
        auto ch = connecting_chain(a, b);
        REQUIRE(!ch.empty());
        CHECK(ch.front().element == a.element);
        CHECK(ch.back().element == b.element);
        for (size_t i = 0; i < ch.size(); ++i)
            for (size_t j = i; j < ch.size(); ++j)
                CHECK(pairing(ch[i].element, ch[j].element) == 1);
        for (size_t i = 1; i < ch.size(); ++i) {
            FockElement diff = ch[i - 1].element - ch[i].element;
            CHECK((diff.is_zero() || is_suture_element(diff)));
        }
    };
    validate_chain(as_suture(E("xxyy")), as_suture(E("yxyx")));
    validate_chain(as_suture(E("xxy")), as_suture(E("yxx")));
    validate_chain(interval_element(W("xy"), W("yx")),
                   as_suture(E("xy")));
    // exhaustive over comparable basis pairs at n = 4
    for (int nx = 0; nx <= 4; ++nx)
        for (auto& [a, b] : comparable_pairs(nx, 4 - nx))
            validate_chain(as_suture(FockElement::single(a, 1)),
                           as_suture(FockElement::single(b, 1)));
}
