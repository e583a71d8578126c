/**
 * @file json_io.hpp
 * @brief JSON serialization for the library types (nlohmann::json ADL hooks).
 *
 * Words serialize as plain strings ("" for the vacuum), elements as
 * {"terms": [{"word": ..., "coeff": ...}]}, diagrams as
 * {"m": ..., "matching": [[p, q], ...]} with each chord listed from its even
 * point, and operator specs as their text form. Every emitter round-trips
 * through the corresponding from_json.
 */

#pragma once

#include <json.hpp>

#include "focksuture/diagram.hpp"
#include "focksuture/fock.hpp"
#include "focksuture/suture.hpp"
#include "focksuture/verify.hpp"
#include "focksuture/word.hpp"

namespace focksuture {

inline void to_json(nlohmann::json& j, const Word& w) { j = to_string(w); }

inline void from_json(const nlohmann::json& j, Word& w) {
    w = parse_word(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const FockElement& e) {
    j = nlohmann::json{{"terms", nlohmann::json::array()}};
    for (const auto& [w, c] : e.terms())
        j["terms"].push_back({{"word", to_string(w)}, {"coeff", c}});
}

inline void from_json(const nlohmann::json& j, FockElement& e) {
    e = FockElement{};
    for (const auto& t : j.at("terms"))
        e = add(e, FockElement::single(parse_word(t.at("word").get<std::string>()),
                                       t.at("coeff").get<int64_t>()));
}

inline void to_json(nlohmann::json& j, const ChordDiagram& d) {
    j = nlohmann::json{{"m", d.m}, {"matching", nlohmann::json::array()}};
    for (int p = 0; p < 2 * d.m; p += 2) j["matching"].push_back({p, d.match[p]});
}

inline void from_json(const nlohmann::json& j, ChordDiagram& d) {
    d.m = j.at("m").get<int>();
    d.match.assign(2 * d.m, -1);
    for (const auto& chord : j.at("matching")) {
        int p = chord.at(0).get<int>(), q = chord.at(1).get<int>();
        d.match[p] = q;
        d.match[q] = p;
    }
    validate(d);
}

inline void to_json(nlohmann::json& j, const OperatorSpec& spec) { j = to_string(spec); }

inline void from_json(const nlohmann::json& j, OperatorSpec& spec) {
    spec = parse_operator_spec(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const SutureElement& s) {
    j = nlohmann::json{{"element", s.element},
                       {"first", to_string(s.wminus)},
                       {"last", to_string(s.wplus)},
                       {"normalized", s.normalized}};
}

inline void from_json(const nlohmann::json& j, SutureElement& s) {
    s = as_suture(j.at("element").get<FockElement>());
}

inline void to_json(nlohmann::json& j, const IntMatrix& m) {
    j = nlohmann::json{{"rows", m.rows}, {"cols", m.cols}, {"entries", nlohmann::json::array()}};
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.cols; ++k) row.push_back(m.at(i, k));
        j["entries"].push_back(std::move(row));
    }
}

inline void from_json(const nlohmann::json& j, IntMatrix& m) {
    m.rows = j.at("rows").get<int>();
    m.cols = j.at("cols").get<int>();
    m.a.clear();
    for (const auto& row : j.at("entries"))
        for (const auto& v : row) m.a.push_back(v.get<int64_t>());
}

inline void to_json(nlohmann::json& j, const GradedMatrix& g) {
    j = nlohmann::json{{"basis", nlohmann::json::array()}, {"matrix", g.mat}};
    for (const Word& w : g.words) j["basis"].push_back(to_string(w));
}

inline void to_json(nlohmann::json& j, const CheckResult& r) {
    j = nlohmann::json{{"name", r.name},
                       {"params", r.params},
                       {"pass", r.pass},
                       {"millis", r.millis}};
    if (!r.pass) j["counterexample"] = r.counterexample;
}

inline void from_json(const nlohmann::json& j, CheckResult& r) {
    r.name = j.at("name").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.millis = j.at("millis").get<double>();
    r.counterexample = j.value("counterexample", "");
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks}};
}

inline void from_json(const nlohmann::json& j, VerificationReport& r) {
    r.suite = j.at("suite").get<std::string>();
    r.checks = j.at("checks").get<std::vector<CheckResult>>();
}

inline void to_json(nlohmann::json& j, const SignedPairingMatrix& g) {
    j = nlohmann::json{{"n", g.n}, {"diagrams", g.diagrams}, {"matrix", g.mat}};
}

inline void from_json(const nlohmann::json& j, SignedPairingMatrix& g) {
    g.n = j.at("n").get<int>();
    g.diagrams = j.at("diagrams").get<std::vector<ChordDiagram>>();
    g.mat = j.at("matrix").get<IntMatrix>();
}

}  // namespace focksuture
