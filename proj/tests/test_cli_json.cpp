#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "focksuture/duality.hpp"
#include "focksuture/json_io.hpp"
#include "focksuture/suture.hpp"
#include "focksuture/verify.hpp"

using namespace focksuture;
using nlohmann::json;

namespace {
FockElement E(const std::string& s) { return FockElement::single(parse_word(s), 1); }

template <typename T>
T roundtrip(const T& v) {
    return json::parse(json(v).dump()).template get<T>();
}
}

TEST_CASE("word json round-trip") {
    CHECK(json(parse_word("xyxy")) == json("xyxy"));
    CHECK(roundtrip(parse_word("yxxy")) == parse_word("yxxy"));
    CHECK(roundtrip(Word{}) == Word{});
}

TEST_CASE("element json round-trip") {
    FockElement e = E("xy") - E("yx") + scale(E("xxyy"), 3);
    json j(e);
    CHECK(j.at("terms").size() == 3);
    CHECK(roundtrip(e) == e);
    CHECK(roundtrip(FockElement{}).is_zero());
    CHECK(roundtrip(FockElement::vacuum()) == FockElement::vacuum());
}

TEST_CASE("diagram json round-trip") {
    for (int m = 1; m <= 5; ++m)
        for (const ChordDiagram& d : enumerate_diagrams(m)) CHECK(roundtrip(d) == d);
    // chords listed from their even endpoints
    json j(basis_diagram(parse_word("xy")));
    CHECK(j.at("m") == 3);
    for (const auto& chord : j.at("matching")) CHECK(chord.at(0).get<int>() % 2 == 0);
    CHECK_THROWS_AS(json::parse(R"({"m":1,"matching":[[0,2]]})").get<ChordDiagram>(),
                    std::invalid_argument);
}

TEST_CASE("operator spec json round-trip") {
    OperatorSpec spec = parse_operator_spec("a*(y,0) a(x,1) H");
    CHECK(json(spec) == json("a*(y,0) a(x,1) H"));
    OperatorSpec back = roundtrip(spec);
    CHECK(to_string(back) == to_string(spec));
    FockElement probe = E("xyx");
    CHECK(apply(back, probe) == apply(spec, probe));
}

TEST_CASE("suture element json round-trip") {
    SutureElement s = interval_element(parse_word("xy"), parse_word("yx"));
    json j(s);
    CHECK(j.at("first") == "xy");
    CHECK(j.at("last") == "yx");
    CHECK(roundtrip(s).element == s.element);
}

TEST_CASE("matrix json round-trip") {
    const GradedMatrix& g = H_matrix(2, 1);
    json j(g);
    CHECK(j.at("basis").size() == 3);
    CHECK(j.at("matrix").at("entries").size() == 3);
    CHECK(roundtrip(g.mat) == g.mat);
    SignedPairingMatrix sp = construct_full_rank_pairing(3);
    SignedPairingMatrix back = roundtrip(sp);
    CHECK(back.n == sp.n);
    CHECK(back.diagrams == sp.diagrams);
    CHECK(back.mat == sp.mat);
}

TEST_CASE("report json carries failures") {
    VerifyOptions o;
    o.max_n = 3;
    VerificationReport r = run_suite("q-formulas", o);
    CHECK(r.passed());
    json j(r);
    CHECK(j.at("passed") == true);
    CHECK(j.at("checks").size() == r.checks.size());
    VerificationReport back = json::parse(j.dump()).get<VerificationReport>();
    CHECK(back.suite == r.suite);
    CHECK(back.passed());
    CheckResult fail{"demo", "n <= 1", false, "witness", 0.5};
    json jf(fail);
    CHECK(jf.at("counterexample") == "witness");
    CHECK_FALSE(json::parse(jf.dump()).get<CheckResult>().pass);
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() == 20);
    for (const auto& n : names) CHECK(run_suite(n, VerifyOptions{.max_n = 2}).passed());
    CHECK_THROWS_AS(run_suite("no-such-suite", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("reports are reproducible with one worker") {
    VerifyOptions o;
    o.max_n = 3;
    o.seed = 42;
    o.jobs = 1;
    auto strip = [](std::vector<VerificationReport> rs) {
        for (auto& r : rs)
            for (auto& c : r.checks) c.millis = 0;  // timings are the only nondeterminism
        return json(rs).dump();
    };
    CHECK(strip(run_all(o)) == strip(run_all(o)));
}

TEST_CASE("full-rank pairing construction") {
    for (int n = 1; n <= 4; ++n) {
        SignedPairingMatrix g = construct_full_rank_pairing(n);
        CHECK(matrix_rank(g.mat) == g.mat.rows);
        for (int i = 0; i < g.mat.rows; ++i)
            for (int j = 0; j < g.mat.cols; ++j)
                CHECK((g.mat.at(i, j) != 0) == stackable(g.diagrams[i], g.diagrams[j]));
    }
    SignedPairingMatrix one = construct_full_rank_pairing(1);
    CHECK(one.mat.rows == 1);
    CHECK((one.mat.at(0, 0) == 1 || one.mat.at(0, 0) == -1));
}
