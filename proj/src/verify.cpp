#include "focksuture/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "focksuture/duality.hpp"
#include "focksuture/suture.hpp"
#include "focksuture/word.hpp"

namespace focksuture {

namespace {

FockElement E(const Word& w) { return FockElement::single(w, 1); }

std::vector<std::pair<int, int>> gradings_up_to(int n_cap) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= n_cap; ++n)
        for (int nx = 0; nx <= n; ++nx) out.emplace_back(nx, n - nx);
    return out;
}

int64_t catalan(int m) {
    int64_t c = 1;
    for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

std::string describe(const FockElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << (w.empty() ? "1" : to_string(w));
        first = false;
    }
    return os.str();
}

/// Collects the results of one suite; each check body returns an empty string
/// on success or a counterexample description.
struct Ctx {
    const VerifyOptions& o;
    std::vector<CheckResult> out;

    explicit Ctx(const VerifyOptions& opts) : o(opts) {}

    int n_cap(int suite_cap) const { return std::min(suite_cap, o.max_n); }
    int m_cap(int suite_cap) const { return std::min(suite_cap, o.max_n + 1); }

    void run(const std::string& name, const std::string& params,
             const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        r.params = params;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.counterexample = body();
        } catch (const std::exception& ex) {
            r.counterexample = std::string("exception: ") + ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.pass = r.counterexample.empty();
        out.push_back(std::move(r));
    }
};

std::string cap_str(const char* var, int cap) {
    std::ostringstream os;
    os << var << " <= " << cap;
    return os.str();
}

// ---------------------------------------------------------------- word-order

void suite_word_order(Ctx& c) {
    int cap = c.n_cap(7);
    c.run("partial-order-axioms", cap_str("n", cap), [&]() -> std::string {
        int tcap = std::min(cap, 6);  // cubic transitivity scan
        for (auto [nx, ny] : gradings_up_to(cap)) {
            auto ws = enumerate_words(nx, ny);
            for (const Word& a : ws) {
                if (!leq(a, a)) return "not reflexive at " + to_string(a);
                for (const Word& b : ws)
                    if (leq(a, b) && leq(b, a) && !(a == b))
                        return "not antisymmetric at " + to_string(a) + ", " + to_string(b);
            }
            if (nx + ny > tcap) continue;
            for (const Word& a : ws)
                for (const Word& b : ws) {
                    if (!leq(a, b)) continue;
                    for (const Word& w : ws)
                        if (leq(b, w) && !leq(a, w))
                            return "not transitive at " + to_string(a) + " <= " +
                                   to_string(b) + " <= " + to_string(w);
                }
        }
        return "";
    });
    c.run("min-max-lattice", cap_str("n", std::min(cap, 5)), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(std::min(cap, 5)))
            for (const Word& a : enumerate_words(nx, ny))
                for (const Word& b : enumerate_words(nx, ny)) {
                    auto [lo, hi] = min_max(a, b);
                    if (!leq(lo, a) || !leq(lo, b) || !leq(a, hi) || !leq(b, hi))
                        return "extremes wrong at " + to_string(a) + ", " + to_string(b);
                    for (const Word& w : enumerate_words(nx, ny)) {
                        if (leq(w, a) && leq(w, b) && !leq(w, lo))
                            return "min not greatest lower bound at " + to_string(a) +
                                   ", " + to_string(b);
                        if (leq(a, w) && leq(b, w) && !leq(hi, w))
                            return "max not least upper bound at " + to_string(a) +
                                   ", " + to_string(b);
                    }
                }
        return "";
    });
    c.run("block-decomposition", cap_str("n", std::min(cap, 6)), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(std::min(cap, 6)))
            for (const Word& a : enumerate_words(nx, ny))
                for (const Word& b : enumerate_words(nx, ny)) {
                    BlockDecomposition d = block_decompose(a, b);
                    Word ca, cb;
                    for (size_t i = 0; i < d.blocks.size(); ++i) {
                        const auto& [u, v] = d.blocks[i];
                        if (u.n_x() != v.n_x() || u.n_y() != v.n_y())
                            return "block grading mismatch at " + to_string(a) + ", " + to_string(b);
                        if (i % 2 == 0 ? !leq(u, v) : !leq(v, u))
                            return "block comparability fails at " + to_string(a) + ", " + to_string(b);
                        if (u.empty() && i != 0 && i + 1 != d.blocks.size())
                            return "inner empty block at " + to_string(a) + ", " + to_string(b);
                        for (int k = 0; k < u.n; ++k) ca = ca.appended(u.at(k));
                        for (int k = 0; k < v.n; ++k) cb = cb.appended(v.at(k));
                    }
                    if (!(ca == a) || !(cb == b))
                        return "concatenation does not recover at " + to_string(a) + ", " + to_string(b);
                }
        return "";
    });
    c.run("elementary-moves", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                for (const Word& v : elementary_moves(w, MoveDirection::forwards)) {
                    if (!leq(w, v) || v == w)
                        return "forwards move does not increase: " + to_string(w) + " -> " + to_string(v);
                    auto back = elementary_moves(v, MoveDirection::backwards);
                    if (std::find(back.begin(), back.end(), w) == back.end())
                        return "backwards does not invert: " + to_string(w) + " -> " + to_string(v);
                }
                for (const Word& v : elementary_moves(w, MoveDirection::backwards))
                    if (!leq(v, w) || v == w)
                        return "backwards move does not decrease: " + to_string(w) + " -> " + to_string(v);
            }
        return "";
    });
    c.run("difference-consistency", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& a : enumerate_words(nx, ny))
                for (const Word& b : enumerate_words(nx, ny)) {
                    int d = word_difference(a, b);
                    if (leq(a, b) && d < 0) return "difference negative on comparable pair";
                    if (leq(a, b) && d == 0 && !(a == b))
                        return "zero difference on distinct comparable pair";
                    if (d != -word_difference(b, a)) return "difference not antisymmetric";
                }
        return "";
    });
}

// -------------------------------------------------------- operator-relations

void suite_operator_relations(Ctx& c) {
    int cap = c.n_cap(7);
    // Relations are tested on words short enough that every composite stays
    // within the length bound.
    c.run("annihilation-exchange", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? nx : ny;
                    for (int i = 0; i <= ns + 1; ++i)
                        for (int j = i + 1; j <= ns + 1; ++j) {
                            FockElement e = E(w);
                            if (annihilate(s, i, annihilate(s, j, e)) !=
                                annihilate(s, j - 1, annihilate(s, i, e)))
                                return std::string(1, s) + " annihilations at (" +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       ") on " + to_string(w);
                        }
                }
        return "";
    });
    c.run("creation-exchange", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap - 2))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? nx : ny;
                    for (int i = 0; i <= ns + 1; ++i)
                        for (int j = i; j <= ns + 1; ++j) {
                            FockElement e = E(w);
                            if (create(s, i, create(s, j, e)) !=
                                create(s, j + 1, create(s, i, e)))
                                return std::string(1, s) + " creations at (" +
                                       std::to_string(i) + "," + std::to_string(j) +
                                       ") on " + to_string(w);
                        }
                }
        return "";
    });
    c.run("annihilation-creation-exchange", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap - 1))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? nx : ny;
                    for (int j = 0; j <= ns + 1; ++j)
                        for (int i = 0; i <= ns + 1; ++i) {
                            // the initial annihilation of a final creation is
                            // the one pair with no exchange rule: the shifted
                            // right side can vanish while the left does not
                            if (i == 0 && j == ns + 1) continue;
                            FockElement e = E(w);
                            FockElement lhs = annihilate(s, i, create(s, j, e));
                            FockElement rhs;
                            if (i == j || i == j + 1) rhs = e;
                            else if (i < j) rhs = create(s, j - 1, annihilate(s, i, e));
                            else rhs = create(s, j, annihilate(s, i - 1, e));
                            if (lhs != rhs)
                                return std::string(1, s) + " a(" + std::to_string(i) +
                                       ") a*(" + std::to_string(j) + ") on " + to_string(w);
                        }
                }
        return "";
    });
    c.run("cross-species-commutation", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap - 2))
            for (const Word& w : enumerate_words(nx, ny)) {
                FockElement e = E(w);
                // Pairs involving a creation commute except at the shared
                // initial or shared final index. Two annihilations commute
                // when both are internal, or when one is initial and the
                // other final; a terminal paired with an internal one of the
                // other species need not commute.
                for (int i = 0; i <= nx + 1; ++i)
                    for (int j = 0; j <= ny + 1; ++j) {
                        bool shared_initial = (i == 0 && j == 0);
                        bool shared_final = (i == nx + 1 && j == ny + 1);
                        if (!shared_initial && !shared_final) {
                            if (create('x', i, create('y', j, e)) !=
                                create('y', j, create('x', i, e)))
                                return "a*x a*y at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") on " + to_string(w);
                            if (annihilate('x', i, create('y', j, e)) !=
                                create('y', j, annihilate('x', i, e)))
                                return "ax a*y at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") on " + to_string(w);
                            if (annihilate('y', j, create('x', i, e)) !=
                                create('x', i, annihilate('y', j, e)))
                                return "ay a*x at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") on " + to_string(w);
                        }
                        bool i_term = (i == 0 || i == nx + 1);
                        bool j_term = (j == 0 || j == ny + 1);
                        bool safe = (!i_term && !j_term) ||
                                    (i == 0 && j == ny + 1) || (i == nx + 1 && j == 0);
                        if (safe && annihilate('x', i, annihilate('y', j, e)) !=
                                        annihilate('y', j, annihilate('x', i, e)))
                            return "ax ay at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") on " + to_string(w);
                    }
                // the exceptional clean zeros
                if (!annihilate('x', 0, create('y', 0, e)).is_zero() ||
                    !annihilate('y', 0, create('x', 0, e)).is_zero() ||
                    !annihilate('x', nx + 1, create('y', ny + 1, e)).is_zero() ||
                    !annihilate('y', ny + 1, create('x', nx + 1, e)).is_zero())
                    return "shared-index zero fails on " + to_string(w);
            }
        return "";
    });
    c.run("differential-squares-to-zero", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'})
                    if (!differential(s, differential(s, E(w))).is_zero())
                        return std::string("d_") + s + "^2 != 0 on " + to_string(w);
        return "";
    });
    c.run("normal-form-agrees", cap_str("n", std::min(cap, 4)), [&]() -> std::string {
        std::vector<std::string> specs = {
            "a(x,1) a*(x,2)", "a(x,0) a*(x,0)", "a*(x,2) a*(x,0)",
            "a(x,2) a(x,1)",  "a(x,0) a*(x,1) a(x,2) a*(x,0)"};
        for (const std::string& text : specs) {
            OperatorSpec sp = parse_operator_spec(text);
            OperatorSpec nf = normal_form(sp);
            for (auto [nx, ny] : gradings_up_to(std::min(cap, 4)))
                for (const Word& w : enumerate_words(nx, ny)) {
                    if (nx < 3) continue;  // keep indices valid
                    if (apply(sp, E(w)) != apply(nf, E(w)))
                        return text + " on " + to_string(w);
                }
        }
        return "";
    });
}

// ---------------------------------------------------------- pairing-adjoints

void suite_pairing_adjoints(Ctx& c) {
    int cap = c.n_cap(7);
    c.run("adjoint-pairs", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            if (nx + ny == 0) continue;
            auto ws = enumerate_words(nx, ny);
            if (nx >= 1) {
                auto vs = enumerate_words(nx - 1, ny);
                for (const Word& u : ws)
                    for (const Word& v : vs)
                        for (int i = 0; i <= nx; ++i)
                            if (pairing(annihilate('x', i, E(u)), E(v)) !=
                                pairing(E(u), create('x', i, E(v))))
                                return "x-adjoint at i=" + std::to_string(i) + " on " +
                                       to_string(u) + ", " + to_string(v);
            }
            if (ny >= 1) {
                auto vs = enumerate_words(nx, ny - 1);
                for (const Word& u : ws)
                    for (const Word& v : vs)
                        for (int i = 0; i <= ny - 1 + 1; ++i)
                            if (pairing(create('y', i, E(v)), E(u)) !=
                                pairing(E(v), annihilate('y', i, E(u))))
                                return "y-adjoint at i=" + std::to_string(i) + " on " +
                                       to_string(u) + ", " + to_string(v);
            }
        }
        return "";
    });
    c.run("creation-isometry", cap_str("n", cap - 1), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap - 1)) {
            auto ws = enumerate_words(nx, ny);
            for (const Word& u : ws)
                for (const Word& v : ws)
                    for (char s : {'x', 'y'}) {
                        int ns = (s == 'x') ? nx : ny;
                        for (int i = 0; i <= ns + 1; ++i)
                            if (pairing(create(s, i, E(u)), create(s, i, E(v))) !=
                                pairing(E(u), E(v)))
                                return std::string(1, s) + "-creation not isometry at i=" +
                                       std::to_string(i) + " on " + to_string(u) + ", " + to_string(v);
                    }
        }
        return "";
    });
    c.run("multiplicativity", cap_str("n", std::min(cap, 6)), [&]() -> std::string {
        int mc = std::min(cap, 6);
        for (auto [nx0, ny0] : gradings_up_to(mc))
            for (auto [nx1, ny1] : gradings_up_to(mc - nx0 - ny0))
                for (const Word& u0 : enumerate_words(nx0, ny0))
                    for (const Word& v0 : enumerate_words(nx0, ny0))
                        for (const Word& u1 : enumerate_words(nx1, ny1))
                            for (const Word& v1 : enumerate_words(nx1, ny1))
                                if (pairing(mul(E(u0), E(u1)), mul(E(v0), E(v1))) !=
                                    pairing(E(u0), E(v0)) * pairing(E(u1), E(v1)))
                                    return "multiplicativity fails at " + to_string(u0) + "|" +
                                           to_string(u1) + " vs " + to_string(v0) + "|" + to_string(v1);
        return "";
    });
    c.run("gram-structure", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            GramMatrix g = gram(nx, ny, GramFlavor::pairing);
            for (int i = 0; i < g.mat.rows; ++i) {
                if (g.mat.at(i, i) != 1) return "pairing gram diagonal not 1";
                for (int j = 0; j < i; ++j)
                    if (g.mat.at(i, j) != 0) return "pairing gram not upper triangular";
            }
            if (det(g.mat) != 1) return "pairing gram determinant not 1";
            if (!(gram(nx, ny, GramFlavor::dot).mat == IntMatrix::identity(g.mat.rows)))
                return "dot gram not identity";
        }
        return "";
    });
    c.run("pairing-by-reduction", cap_str("n", std::min(cap, 5)), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(std::min(cap, 5)))
            for (const Word& u : enumerate_words(nx, ny))
                for (const Word& v : enumerate_words(nx, ny))
                    if (pairing_by_reduction(u, v) != (leq(u, v) ? 1 : 0))
                        return "reduction disagrees at " + to_string(u) + ", " + to_string(v);
        return "";
    });
}

// --------------------------------------------------------------- q-formulas

void suite_q_formulas(Ctx& c) {
    int cap = c.n_cap(8);
    c.run("printed-examples", "fixed words", [&]() -> std::string {
        Word w = parse_word("xyxy");
        FockElement qm = E(parse_word("xyxy")) - E(parse_word("xyyx")) -
                         E(parse_word("yxxy")) + E(parse_word("yxyx"));
        if (Q_minus(E(w)) != qm) return "Q-(xyxy) wrong: " + describe(Q_minus(E(w)));
        FockElement qp = E(parse_word("xyxy")) - E(parse_word("xxyy"));
        if (Q_plus(E(w)) != qp) return "Q+(xyxy) wrong: " + describe(Q_plus(E(w)));
        if (Q_plus_inv(E(parse_word("yx"))) != E(parse_word("xy")) + E(parse_word("yx")))
            return "Q+^-1(yx) wrong";
        for (int a = 0; a <= 4; ++a) {
            Word xa = enumerate_words(a, 0)[0];
            if (Q_minus(E(xa)) != E(xa)) return "Q-(x^a) != x^a";
        }
        return "";
    });
    c.run("inverses", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                FockElement e = E(w);
                if (Q_plus(Q_plus_inv(e)) != e || Q_plus_inv(Q_plus(e)) != e)
                    return "Q+ inverse fails at " + to_string(w);
                if (Q_minus(Q_minus_inv(e)) != e || Q_minus_inv(Q_minus(e)) != e)
                    return "Q- inverse fails at " + to_string(w);
            }
        return "";
    });
    c.run("psi-monotone", cap_str("n", std::min(cap, 6)), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(std::min(cap, 6)))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    std::vector<int> ex = exceptional_set(w, s);
                    for (uint32_t mask = 0; mask < (1u << ex.size()); ++mask) {
                        std::vector<int> T;
                        for (size_t k = 0; k < ex.size(); ++k)
                            if (mask & (1u << k)) T.push_back(ex[k]);
                        Word v = psi(w, s, T);
                        bool ok = (s == 'x') ? leq(w, v) : leq(v, w);
                        if (!ok)
                            return std::string("psi^") + s + " not monotone at " + to_string(w);
                    }
                }
        return "";
    });
}

// ------------------------------------------------------------- intertwining

void suite_intertwining(Ctx& c) {
    int cap = c.n_cap(7);
    c.run("dot-via-q", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            auto ws = enumerate_words(nx, ny);
            for (const Word& u : ws)
                for (const Word& v : ws) {
                    int64_t d = dot(E(u), E(v));
                    if (d != pairing(E(u), Q_plus(E(v))) || d != pairing(Q_minus(E(u)), E(v)))
                        return "dot/Q mismatch at " + to_string(u) + ", " + to_string(v);
                }
        }
        return "";
    });
    c.run("duality-identity", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            auto ws = enumerate_words(nx, ny);
            for (const Word& u : ws)
                for (const Word& v : ws) {
                    int64_t p = pairing(E(u), E(v));
                    if (p != pairing(E(v), H_apply(E(u))) || p != pairing(H_inv(E(v)), E(u)))
                        return "duality identity fails at " + to_string(u) + ", " + to_string(v);
                    if (p != pairing(H_apply(E(u)), H_apply(E(v))))
                        return "H not an isometry at " + to_string(u) + ", " + to_string(v);
                }
        }
        return "";
    });
    c.run("h-inverse", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                FockElement e = E(w);
                if (H_inv(H_apply(e)) != e || H_apply(H_inv(e)) != e)
                    return "H_inv not inverse at " + to_string(w);
            }
        return "";
    });
}

// ----------------------------------------------------------------- h-routes

void suite_h_routes(Ctx& c) {
    int cap = c.n_cap(8);
    c.run("matrix-equals-recursive", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            if (!(H_matrix(nx, ny).mat == H_recursive_matrix(nx, ny)))
                return "recursive assembly differs at (" + std::to_string(nx) + "," +
                       std::to_string(ny) + ")";
        return "";
    });
    c.run("routes-agree", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                FockElement h = H_apply(E(w));
                if (h != H_terms_explicit(w)) return "explicit route differs at " + to_string(w);
                if (h != H_block_expansion(w)) return "block route differs at " + to_string(w);
                if (h != H_commutator_series(E(w)))
                    return "commutator route differs at " + to_string(w);
            }
        return "";
    });
    c.run("block-term-count", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                if (nx == 0 || ny == 0) continue;
                // block count: maximal y-runs, plus one when a trailing x-run
                // forms a final block of its own
                int k = 0;
                for (int i = 0; i < w.n; ++i)
                    if (w.is_y(i) && (i + 1 == w.n || !w.is_y(i + 1))) ++k;
                if (!w.is_y(w.n - 1)) ++k;
                size_t expect = size_t{1} << (k - 1);
                if (H_block_expansion(w).terms().size() != expect)
                    return "term count at " + to_string(w) + ": got " +
                           std::to_string(H_block_expansion(w).terms().size()) +
                           ", want " + std::to_string(expect);
            }
        return "";
    });
}

// -------------------------------------------------------------- periodicity

void suite_periodicity(Ctx& c) {
    int cap = c.n_cap(9);
    c.run("power-identity", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            const GradedMatrix& g = H_matrix(nx, ny);
            int n = nx + ny;
            IntMatrix p = IntMatrix::identity(g.mat.rows);
            for (int k = 0; k < n + 1; ++k) p = mat_mul(p, g.mat);
            IntMatrix expect = IntMatrix::identity(g.mat.rows);
            if (H_power_sign(nx, ny) < 0)
                for (auto& v : expect.a) v = -v;
            if (!(p == expect))
                return "H^{n+1} wrong at (" + std::to_string(nx) + "," + std::to_string(ny) + ")";
        }
        return "";
    });
    c.run("multiplicative-order", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            const GradedMatrix& g = H_matrix(nx, ny);
            IntMatrix id = IntMatrix::identity(g.mat.rows);
            IntMatrix acc = g.mat;
            int order = 1;
            int bound = 2 * (nx + ny) + 2;
            while (!(acc == id)) {
                acc = mat_mul(acc, g.mat);
                ++order;
                if (order > bound)
                    return "order exceeds bound at (" + std::to_string(nx) + "," +
                           std::to_string(ny) + ")";
            }
            if (order != H_order(nx, ny))
                return "order mismatch at (" + std::to_string(nx) + "," + std::to_string(ny) +
                       "): " + std::to_string(order) + " vs " + std::to_string(H_order(nx, ny));
        }
        return "";
    });
    c.run("one-dimensional-identity", cap_str("n", cap), [&]() -> std::string {
        for (int n = 0; n <= cap; ++n)
            for (auto [nx, ny] : {std::pair{n, 0}, std::pair{0, n}})
                if (!(H_matrix(nx, ny).mat == IntMatrix::identity(1)))
                    return "H not identity on one-dimensional grading";
        return "";
    });
}

// --------------------------------------------------------------- pawn-cycle

void suite_pawn_cycle(Ctx& c) {
    int cap = c.n_cap(8);
    c.run("cycle-shape", cap_str("n", cap), [&]() -> std::string {
        auto expected = std::vector<std::string>{"yyyxx", "yyxyx", "yxyxy", "xyxyy", "xxyyy"};
        auto got = pawn_cycle(2, 3);
        if (got.size() != expected.size()) return "(2,3) cycle length wrong";
        for (size_t i = 0; i < got.size(); ++i)
            if (to_string(got[i]) != expected[i]) return "(2,3) cycle word " + std::to_string(i);
        for (auto [nx, ny] : gradings_up_to(cap)) {
            if (nx + ny == 0) continue;
            auto cyc = pawn_cycle(nx, ny);
            if (nx == 0 || ny == 0) {
                if (cyc.size() != 1) return "degenerate cycle not constant";
                continue;
            }
            Word first = cyc.front(), last = cyc.back();
            if (first.n_y() != ny || first.position_of('x', 1) != ny + 1)
                return "cycle does not start at y^b x^a";
            if (last.position_of('x', nx) != nx) return "cycle does not end at x^a y^b";
            for (size_t i = 1; i < cyc.size(); ++i)
                if (!leq(cyc[i], cyc[i - 1]) || cyc[i] == cyc[i - 1])
                    return "cycle not strictly decreasing at step " + std::to_string(i);
        }
        return "";
    });
    c.run("exceptional-count", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            if (nx == 0 || ny == 0) continue;
            int total = 0;
            for (const Word& w : pawn_cycle(nx, ny))
                total += static_cast<int>(exceptional_set(w, 'x').size());
            if (total != nx * ny)
                return "exceptional sum at (" + std::to_string(nx) + "," + std::to_string(ny) + ")";
        }
        return "";
    });
    c.run("interval-sign-law", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            if (nx == 0 || ny == 0) continue;
            auto cyc = pawn_cycle(nx, ny);
            int n = static_cast<int>(cyc.size());
            // P_0 = [min], P_1 = [max], P_i = [w_i, w_{i-1}] for 2 <= i <= n,
            // with w_i = cyc[i-1] (the cycle lists w_1 .. w_n).
            std::vector<FockElement> P(n + 1);
            P[0] = E(cyc[n - 1]);
            P[1] = E(cyc[0]);
            for (int i = 2; i <= n; ++i)
                P[i] = interval_element(cyc[i - 1], cyc[i - 2]).element;
            for (int i = 0; i <= n; ++i) {
                FockElement img = H_apply(P[i]);
                FockElement next = (i == n) ? P[0] : P[i + 1];
                int sign = 1;
                if (i < n)
                    sign = (exceptional_set(cyc[i], 'x').size() % 2 == 0) ? 1 : -1;
                if (img != scale(next, sign))
                    return "sign law fails at (" + std::to_string(nx) + "," +
                           std::to_string(ny) + ") step " + std::to_string(i) + ": H(" +
                           describe(P[i]) + ") = " + describe(img);
            }
        }
        return "";
    });
}

// --------------------------------------------------------- lemma-identities

void suite_lemma_identities(Ctx& c) {
    int cap = c.n_cap(7);
    auto ax = [](int k, FockElement e) {
        while (k-- > 0) e = annihilate('x', 0, e);
        return e;
    };
    auto cx = [](int k, FockElement e) {
        while (k-- > 0) e = create('x', 0, e);
        return e;
    };
    c.run("h-conjugation-by-y", cap_str("n", cap - 1), [&]() -> std::string {
        // a_{y,0} H a*_{y,0} = H
        for (auto [nx, ny] : gradings_up_to(cap - 1))
            for (const Word& w : enumerate_words(nx, ny))
                if (annihilate('y', 0, H_apply(create('y', 0, E(w)))) != H_apply(E(w)))
                    return "fails at " + to_string(w);
        return "";
    });
    c.run("h-shift-through-x", cap_str("n", cap - 2), [&]() -> std::string {
        // a_{y,0} H (a*_{x,0})^j a*_{y,0} = H (a*_{x,0})^j
        for (auto [nx, ny] : gradings_up_to(cap - 2))
            for (const Word& w : enumerate_words(nx, ny))
                for (int j = 0; j <= cap - 1 - nx - ny; ++j) {
                    FockElement lhs =
                        annihilate('y', 0, H_apply(cx(j, create('y', 0, E(w)))));
                    if (lhs != H_apply(cx(j, E(w))))
                        return "fails at " + to_string(w) + ", j=" + std::to_string(j);
                }
        return "";
    });
    c.run("h-negation-identity", cap_str("n", cap - 2), [&]() -> std::string {
        // a_{y,0} (a_{x,0})^{j+1} H (a*_{x,0})^j a*_{y,0} a*_{x,0} = -H
        for (auto [nx, ny] : gradings_up_to(cap - 2))
            for (const Word& w : enumerate_words(nx, ny))
                for (int j = 0; j <= cap - 2 - nx - ny; ++j) {
                    FockElement inner = cx(j, create('y', 0, create('x', 0, E(w))));
                    FockElement lhs = annihilate('y', 0, ax(j + 1, H_apply(inner)));
                    if (lhs != negate(H_apply(E(w))))
                        return "fails at " + to_string(w) + ", j=" + std::to_string(j);
                }
        return "";
    });
    c.run("vanishing-group", cap_str("n", cap - 2), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap - 2))
            for (const Word& w : enumerate_words(nx, ny))
                for (int j = 1; j <= cap - nx - ny; ++j) {
                    // a_{y,0} (a_{x,0})^j H (a*_{x,0})^j = 0
                    if (!annihilate('y', 0, ax(j, H_apply(cx(j, E(w))))).is_zero())
                        return "first zero operator fails at " + to_string(w) +
                               ", j=" + std::to_string(j);
                    // (a_{x,0})^{j+2} H (a*_{x,0})^j a*_{y,0} = 0
                    if (!ax(j + 2, H_apply(cx(j, create('y', 0, E(w))))).is_zero())
                        return "second zero operator fails at " + to_string(w) +
                               ", j=" + std::to_string(j);
                    // a_{x,0} H (a*_{x,0})^j (a*_{y,0})^2 = 0
                    if (!ax(1, H_apply(cx(j, create('y', 0, create('y', 0, E(w)))))).is_zero())
                        return "third zero operator fails at " + to_string(w) +
                               ", j=" + std::to_string(j);
                }
        return "";
    });
}

// ------------------------------------------------------------ temperley-lieb

void suite_temperley_lieb(Ctx& c) {
    int cap = c.n_cap(7);
    c.run("u-squared-zero", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? nx : ny;
                    for (int i = 0; i < ns; ++i)
                        if (!U(s, i, U(s, i, E(w))).is_zero())
                            return std::string("U_") + s + std::to_string(i) + "^2 on " + to_string(w);
                }
        return "";
    });
    c.run("braid-like-relations", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? nx : ny;
                    for (int i = 0; i + 1 < ns; ++i) {
                        FockElement e = E(w);
                        if (U(s, i, U(s, i + 1, U(s, i, e))) != negate(U(s, i, e)))
                            return std::string("U_i U_{i+1} U_i on ") + to_string(w);
                        if (U(s, i + 1, U(s, i, U(s, i + 1, e))) != negate(U(s, i + 1, e)))
                            return std::string("U_{i+1} U_i U_{i+1} on ") + to_string(w);
                    }
                }
        return "";
    });
    c.run("distant-commutation", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? nx : ny;
                    for (int i = 0; i < ns; ++i)
                        for (int j = i + 2; j < ns; ++j)
                            if (U(s, i, U(s, j, E(w))) != U(s, j, U(s, i, E(w))))
                                return "distant U commutation on " + to_string(w);
                }
        return "";
    });
    c.run("differentials-commute", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                if (differential('x', differential('y', E(w))) !=
                    differential('y', differential('x', E(w))))
                    return "d_x d_y != d_y d_x on " + to_string(w);
                if (derivative('x', derivative('y', E(w))) !=
                    derivative('y', derivative('x', E(w))))
                    return "a_x a_y != a_y a_x on " + to_string(w);
            }
        return "";
    });
}

// ------------------------------------------------------------------ counting

void suite_counting(Ctx& c) {
    int cap = c.n_cap(7);
    c.run("catalan-diagrams", cap_str("m", cap + 1), [&]() -> std::string {
        for (int m = 1; m <= cap + 1; ++m)
            if (static_cast<int64_t>(enumerate_diagrams(m).size()) != catalan(m))
                return "diagram count at m=" + std::to_string(m);
        return "";
    });
    c.run("pairs-match-diagrams", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap)) {
            int m = nx + ny + 1, e = ny - nx;
            size_t diag = 0;
            for (const ChordDiagram& d : enumerate_diagrams(m))
                if (euler_class(d) == e) ++diag;
            if (comparable_pairs(nx, ny).size() != diag)
                return "pair/diagram count at (" + std::to_string(nx) + "," +
                       std::to_string(ny) + ")";
        }
        return "";
    });
    c.run("closure-slice-size", cap_str("n", cap), [&]() -> std::string {
        auto cl = generate_C(cap, GeneratorFamily::C1);
        std::map<std::pair<int, int>, size_t> slice;
        for (const FockElement& e : cl) {
            const Word& w = e.terms().front().first;
            ++slice[{w.n_x(), w.n_y()}];
        }
        for (auto [nx, ny] : gradings_up_to(cap))
            if (slice[{nx, ny}] != 2 * comparable_pairs(nx, ny).size())
                return "closure slice at (" + std::to_string(nx) + "," + std::to_string(ny) + ")";
        return "";
    });
}

// -------------------------------------------------------------- isomorphism

void suite_isomorphism(Ctx& c) {
    int cap = c.n_cap(5);  // word length; diagrams have up to cap+1 chords
    c.run("basis-diagram-roundtrip", cap_str("n", cap), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap))
            for (const Word& w : enumerate_words(nx, ny)) {
                if (decompose(basis_diagram(w)) != E(w))
                    return "decompose(basis) at " + to_string(w);
                if (!(basis_word(basis_diagram(w)) == w))
                    return "basis_word inverse at " + to_string(w);
            }
        return "";
    });
    c.run("creation-coherence", cap_str("n", cap - 1), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement e = decompose(d);
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? diagram_n_x(d) : diagram_n_y(d);
                    for (int i = 0; i <= ns + 1; ++i) {
                        FockElement img = decompose(diagram_create(s, i, d));
                        FockElement want = create(s, i, e);
                        if (img != want && img != negate(want))
                            return std::string("a*_") + s + std::to_string(i) + " on diagram " +
                                   describe(e);
                    }
                }
            }
        return "";
    });
    c.run("annihilation-coherence", cap_str("n", cap), [&]() -> std::string {
        for (int m = 1; m <= cap + 1; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement e = decompose(d);
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? diagram_n_x(d) : diagram_n_y(d);
                    for (int i = 0; i <= ns + 1; ++i) {
                        auto img = diagram_annihilate(s, i, d);
                        FockElement want = annihilate(s, i, e);
                        if (want.is_zero() != !img.has_value())
                            return std::string("a_") + s + std::to_string(i) +
                                   " zero mismatch on " + describe(e);
                        if (img) {
                            FockElement got = decompose(*img);
                            if (got != want && got != negate(want))
                                return std::string("a_") + s + std::to_string(i) + " on " + describe(e);
                        }
                    }
                }
            }
        return "";
    });
    c.run("create-annihilate-roundtrip", cap_str("n", cap - 1), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m))
                for (char s : {'x', 'y'}) {
                    int ns = (s == 'x') ? diagram_n_x(d) : diagram_n_y(d);
                    for (int i = 0; i <= ns + 1; ++i) {
                        auto back = diagram_annihilate(s, i, diagram_create(s, i, d));
                        if (!back || !(*back == d))
                            return std::string("roundtrip ") + s + std::to_string(i) + " on " +
                                   describe(decompose(d));
                    }
                }
        return "";
    });
    c.run("pair-bijection", cap_str("m", c.m_cap(9)), [&]() -> std::string {
        for (int m = 1; m <= c.m_cap(9); ++m) {
            size_t count = 0;
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                auto [lo, hi] = pair_of(d);
                if (!(diagram_of_pair(lo, hi) == d))
                    return "pair lookup fails at m=" + std::to_string(m);
                ++count;
            }
            size_t pairs = 0;
            for (int nx = 0; nx < m; ++nx) pairs += comparable_pairs(nx, m - 1 - nx).size();
            if (count != pairs) return "bijection count at m=" + std::to_string(m);
        }
        return "";
    });
}

// ------------------------------------------------------------ multiplication

void suite_multiplication(Ctx& c) {
    int cap = c.m_cap(5);  // chord count of the glued diagram
    c.run("basis-gluing", cap_str("m", cap), [&]() -> std::string {
        for (auto [nx0, ny0] : gradings_up_to(cap - 1))
            for (const Word& w0 : enumerate_words(nx0, ny0))
                for (auto [nx1, ny1] : gradings_up_to(cap - 1 - nx0 - ny0))
                    for (const Word& w1 : enumerate_words(nx1, ny1)) {
                        Word w01 = w0;
                        for (int k = 0; k < w1.n; ++k) w01 = w01.appended(w1.at(k));
                        if (!(diagram_concat(basis_diagram(w0), basis_diagram(w1)) ==
                              basis_diagram(w01)))
                            return "gluing " + to_string(w0) + " | " + to_string(w1);
                    }
        return "";
    });
    c.run("general-gluing", cap_str("m", cap), [&]() -> std::string {
        for (int m0 = 1; m0 <= cap; ++m0)
            for (int m1 = 1; m0 + m1 - 1 <= cap; ++m1)
                for (const ChordDiagram& d0 : enumerate_diagrams(m0))
                    for (const ChordDiagram& d1 : enumerate_diagrams(m1)) {
                        FockElement got = decompose(diagram_concat(d0, d1));
                        FockElement want = mul(decompose(d0), decompose(d1));
                        if (got != want && got != negate(want))
                            return "gluing of " + describe(decompose(d0)) + " | " +
                                   describe(decompose(d1));
                    }
        return "";
    });
    c.run("product-structure", cap_str("n", c.n_cap(6)), [&]() -> std::string {
        FockElement v = E(parse_word("xy")) - E(parse_word("yx"));
        FockElement sq = mul(v, v);
        FockElement expect = E(parse_word("xyxy")) - E(parse_word("xyyx")) -
                             E(parse_word("yxxy")) + E(parse_word("yxyx"));
        if (sq != expect) return "printed square wrong: " + describe(sq);
        for (auto [nx, ny] : gradings_up_to(std::min(c.n_cap(6), 4)))
            for (const Word& w : enumerate_words(nx, ny)) {
                if (mul(FockElement::vacuum(), E(w)) != E(w) ||
                    mul(E(w), FockElement::vacuum()) != E(w))
                    return "vacuum not an identity at " + to_string(w);
            }
        return "";
    });
}

// ------------------------------------------------------------------ stacking

void suite_stacking(Ctx& c) {
    int cap = c.m_cap(6);
    c.run("pairing-equivalence", cap_str("m", cap), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m) {
            auto ds = enumerate_diagrams(m);
            for (const ChordDiagram& a : ds)
                for (const ChordDiagram& b : ds) {
                    int64_t p = pairing(decompose(a), decompose(b));
                    if (p != 1 && p != -1 && p != 0) return "pairing outside {-1,0,1}";
                    bool st = stackable(a, b);
                    if (st != (p != 0))
                        return "stack/pairing mismatch at m=" + std::to_string(m) + ": " +
                               describe(decompose(a)) + " on " + describe(decompose(b));
                }
        }
        return "";
    });
    c.run("self-stackable", cap_str("m", cap), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m))
                if (!stackable(d, d)) return "diagram not stackable on itself";
        return "";
    });
    c.run("cross-euler-disconnected", cap_str("m", std::min(cap, 5)), [&]() -> std::string {
        for (int m = 1; m <= std::min(cap, 5); ++m) {
            auto ds = enumerate_diagrams(m);
            for (const ChordDiagram& a : ds)
                for (const ChordDiagram& b : ds)
                    if (euler_class(a) != euler_class(b) && stackable(a, b))
                        return "distinct euler classes stack at m=" + std::to_string(m);
        }
        return "";
    });
}

// -------------------------------------------------------------------- bypass

void suite_bypass(Ctx& c) {
    int cap = c.m_cap(6);
    c.run("triple-relation", cap_str("m", cap), [&]() -> std::string {
        for (int m = 2; m <= cap; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement c0 = decompose(d);
                for (const BypassArc& arc : enumerate_bypass_arcs(d)) {
                    ChordDiagram up = bypass_surgery(d, arc, BypassDirection::up);
                    ChordDiagram down = bypass_surgery(d, arc, BypassDirection::down);
                    if (up == d || down == d || up == down)
                        return "surgery results not distinct at m=" + std::to_string(m);
                    FockElement c1 = decompose(up), c2 = decompose(down);
                    bool rel = false;
                    for (int s1 : {1, -1})
                        for (int s2 : {1, -1})
                            if (c0 == scale(c1, s1) + scale(c2, s2)) rel = true;
                    if (!rel)
                        return "triple relation fails: " + describe(c0) + " vs " +
                               describe(c1) + " / " + describe(c2);
                }
            }
        return "";
    });
    c.run("elementary-move-completion", cap_str("n", cap - 1), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(cap - 1))
            for (const Word& w0 : enumerate_words(nx, ny))
                for (const Word& w1 : elementary_moves(w0, MoveDirection::forwards)) {
                    FockElement diff = E(w0) - E(w1);
                    if (!is_suture_element(diff))
                        return "move difference not a suture element: " + describe(diff);
                    auto r = bypass_completion(as_suture(E(w0)), as_suture(E(w1)));
                    if (!r || !(r->element == diff))
                        return "completion fails at " + to_string(w0) + " -> " + to_string(w1);
                }
        return "";
    });
    c.run("moves-are-surgeries", cap_str("n", std::min(cap - 1, 4)), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(std::min(cap - 1, 4)))
            for (const Word& w0 : enumerate_words(nx, ny))
                for (const Word& w1 : elementary_moves(w0, MoveDirection::forwards)) {
                    ChordDiagram g0 = basis_diagram(w0);
                    FockElement diff = E(w0) - E(w1);
                    bool found = false;
                    for (const BypassArc& arc : enumerate_bypass_arcs(g0))
                        for (BypassDirection dir : {BypassDirection::up, BypassDirection::down}) {
                            if (!(bypass_surgery(g0, arc, dir) == basis_diagram(w1))) continue;
                            BypassDirection other = dir == BypassDirection::up
                                                        ? BypassDirection::down
                                                        : BypassDirection::up;
                            FockElement third = decompose(bypass_surgery(g0, arc, other));
                            if (third == diff || third == negate(diff)) found = true;
                        }
                    if (!found)
                        return "no surgery realizes " + to_string(w0) + " -> " + to_string(w1);
                }
        return "";
    });
}

// --------------------------------------------------------- rotation-duality

void suite_rotation_duality(Ctx& c) {
    int cap = c.m_cap(6);
    c.run("rotation-is-h-up-to-sign", cap_str("m", cap), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement img = H_apply(decompose(d));
                FockElement rot = decompose(rotate(d));
                if (img != rot && img != negate(rot))
                    return "H(decompose) not +-decompose(rotate) at " + describe(decompose(d));
            }
        return "";
    });
    c.run("sign-calibration", cap_str("m", cap), [&]() -> std::string {
        // The per-diagram signs t with H(c_Gamma) = t c_{rot Gamma} multiply,
        // over a full period of m rotations, to the sign of H^m on the
        // grading; the anchor at the minimum basis diagram is +1.
        for (int m = 1; m <= cap; ++m) {
            std::map<ChordDiagram, int> t;
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement img = H_apply(decompose(d));
                t[d] = (img == decompose(rotate(d))) ? 1 : -1;
            }
            for (const auto& [d, t0] : t) {
                int prod = 1;
                ChordDiagram cur = d;
                for (int step = 0; step < m; ++step) {
                    prod *= t[cur];
                    cur = rotate(cur);
                }
                if (!(cur == d)) return "rotation period is not m at m=" + std::to_string(m);
                if (prod != H_power_sign(diagram_n_x(d), diagram_n_y(d)))
                    return "full-period sign product wrong at m=" + std::to_string(m);
            }
            for (int nx = 0; nx < m; ++nx) {
                int ny = m - 1 - nx;
                auto ws = enumerate_words(nx, ny);
                ChordDiagram dmin = basis_diagram(ws.front());
                ChordDiagram dmax = basis_diagram(ws.back());
                if (!(rotate(dmin) == dmax))
                    return "rotate(min basis) is not the max basis diagram";
                if (t[dmin] != 1) return "anchor sign at the minimum basis diagram is -1";
            }
        }
        return "";
    });
    c.run("pairing-rotation-identity", cap_str("m", std::min(cap, 5)), [&]() -> std::string {
        for (int m = 1; m <= std::min(cap, 5); ++m) {
            auto ds = enumerate_diagrams(m);
            for (const ChordDiagram& a : ds)
                for (const ChordDiagram& b : ds) {
                    int64_t lhs = pairing(decompose(a), decompose(b));
                    int64_t rhs = pairing(decompose(b), decompose(rotate(a)));
                    if (std::abs(lhs) != std::abs(rhs))
                        return "pairing/rotation magnitude differs at m=" + std::to_string(m);
                }
        }
        return "";
    });
}

// --------------------------------------------------------- suture-structure

void suite_suture_structure(Ctx& c) {
    int cap = c.m_cap(7);
    c.run("decompose-shape", cap_str("m", cap), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement e = decompose(d);
                if (e.terms().front().second != 1) return "leading coefficient not +1";
                int64_t sum = 0;
                for (const auto& [w, co] : e.terms()) {
                    if (co != 1 && co != -1) return "coefficient not +-1: " + describe(e);
                    sum += co;
                    if (!leq(e.terms().front().first, w) || !leq(w, e.terms().back().first))
                        return "support escapes the interval: " + describe(e);
                }
                if (e.terms().size() > 1 && sum != 0)
                    return "non-basis coefficients do not cancel: " + describe(e);
                if (!is_suture_element(e)) return "membership test rejects " + describe(e);
                if (pairing(e, e) != 1) return "<c|c> != 1 for " + describe(e);
                if (pairing(e, H_apply(e)) != 1) return "<c|Hc> != 1 for " + describe(e);
            }
        return "";
    });
    c.run("pairwise-pairings", cap_str("m", cap), [&]() -> std::string {
        for (int m = 1; m <= cap; ++m) {
            std::map<int, std::vector<FockElement>> by_euler;
            for (const ChordDiagram& d : enumerate_diagrams(m))
                by_euler[euler_class(d)].push_back(decompose(d));
            for (const auto& [e, elems] : by_euler)
                for (const FockElement& a : elems)
                    for (const FockElement& b : elems) {
                        int64_t p = pairing(a, b);
                        if (p != -1 && p != 0 && p != 1)
                            return "pairing outside {-1,0,1}: " + describe(a) + " | " + describe(b);
                    }
        }
        return "";
    });
    c.run("support-extreme-characterization", cap_str("m", std::min(cap, 6)), [&]() -> std::string {
        // A support word comparable with every other support word is one of
        // the two extremes.
        for (int m = 1; m <= std::min(cap, 6); ++m)
            for (const ChordDiagram& d : enumerate_diagrams(m)) {
                FockElement e = decompose(d);
                const Word& lo = e.terms().front().first;
                const Word& hi = e.terms().back().first;
                for (const auto& [w, co] : e.terms()) {
                    bool comparable_all = true;
                    for (const auto& [u, cu] : e.terms())
                        if (!leq(w, u) && !leq(u, w)) comparable_all = false;
                    if (comparable_all && !(w == lo) && !(w == hi))
                        return "interior support word " + to_string(w) +
                               " comparable to all of " + describe(e);
                }
            }
        return "";
    });
    c.run("block-product-structure", cap_str("n", std::min(cap - 1, 5)), [&]() -> std::string {
        // The interval element of a comparable pair factors as the product of
        // the interval elements of its blocks, up to overall sign.
        for (auto [nx, ny] : gradings_up_to(std::min(cap - 1, 5)))
            for (auto& [a, b] : comparable_pairs(nx, ny)) {
                FockElement prod = FockElement::vacuum();
                for (const auto& [u, v] : block_decompose(a, b).blocks) {
                    if (u.n == 0) continue;
                    auto [lo, hi] = min_max(u, v);
                    prod = mul(prod, interval_element(lo, hi).element);
                }
                FockElement whole = interval_element(a, b).element;
                if (prod != whole && prod != negate(whole))
                    return "block product differs at (" + to_string(a) + ", " + to_string(b) + ")";
            }
        return "";
    });
}

// --------------------------------------------------------- closure-families

void suite_closure_families(Ctx& c) {
    int cap = c.n_cap(6);
    c.run("families-coincide", cap_str("n", cap), [&]() -> std::string {
        auto c1 = generate_C(cap, GeneratorFamily::C1);
        auto c2 = generate_C(cap, GeneratorFamily::C2);
        auto c3 = generate_C(cap, GeneratorFamily::C3);
        if (!(c1 == c2)) return "C1 != C2";
        if (!(c1 == c3)) return "C1 != C3";
        if (!c1.count(negate(FockElement::vacuum()))) return "-1 not generated";
        for (const FockElement& e : c1)
            if (!is_suture_element(e)) return "non suture element generated: " + describe(e);
        return "";
    });
    c.run("q-inverse-images", cap_str("n", std::min(cap, 5)), [&]() -> std::string {
        // H preserves the closure, and H = Q+ Q-^{-1}, so the two inverse
        // images Q+^{-1} C and Q-^{-1} C coincide (while the forward images
        // Q+ C and Q- C already differ in the smallest mixed grading).
        auto cl = generate_C(std::min(cap, 5), GeneratorFamily::C1);
        std::map<std::pair<int, int>, std::pair<std::set<FockElement>, std::set<FockElement>>> im;
        std::map<std::pair<int, int>, std::pair<std::set<FockElement>, std::set<FockElement>>> fwd;
        for (const FockElement& e : cl) {
            const Word& w = e.terms().front().first;
            auto& [plus, minus] = im[{w.n_x(), w.n_y()}];
            plus.insert(Q_plus_inv(e));
            minus.insert(Q_minus_inv(e));
            auto& [fplus, fminus] = fwd[{w.n_x(), w.n_y()}];
            fplus.insert(Q_plus(e));
            fminus.insert(Q_minus(e));
        }
        for (auto& [g, sets] : im) {
            if (!(sets.first == sets.second))
                return "inverse images differ at (" + std::to_string(g.first) + "," +
                       std::to_string(g.second) + ")";
            size_t want = 2 * comparable_pairs(g.first, g.second).size();
            if (sets.first.size() != want || fwd[g].first.size() != want ||
                fwd[g].second.size() != want)
                return "image size at (" + std::to_string(g.first) + "," +
                       std::to_string(g.second) + ")";
        }
        return "";
    });
    c.run("operator-closure", cap_str("n", std::min(cap, 5)), [&]() -> std::string {
        int n = std::min(cap, 5);
        auto cl = generate_C(n, GeneratorFamily::C1);
        std::mt19937_64 rng(c.o.seed + 11);
        std::vector<FockElement> sample(cl.begin(), cl.end());
        std::shuffle(sample.begin(), sample.end(), rng);
        if (sample.size() > 200) sample.resize(200);
        for (const FockElement& e : sample) {
            const Word& w = e.terms().front().first;
            int nx = w.n_x(), ny = w.n_y();
            std::vector<FockElement> imgs;
            for (char s : {'x', 'y'}) {
                int ns = (s == 'x') ? nx : ny;
                for (int i = 0; i <= ns + 1; ++i) {
                    imgs.push_back(create(s, i, e));
                    imgs.push_back(annihilate(s, i, e));
                }
                for (int i = 0; i <= ns; ++i) {
                    imgs.push_back(T(s, i, e));
                    imgs.push_back(Tstar(s, i, e));
                    if (i < ns) imgs.push_back(U(s, i, e));
                }
            }
            imgs.push_back(negate(e));
            for (const FockElement& img : imgs) {
                if (img.is_zero()) continue;
                if (!is_suture_element(img))
                    return "closure image not a suture element: " + describe(img);
                if (img.terms().front().first.n <= n && !cl.count(img))
                    return "closure misses " + describe(img);
            }
        }
        // products of closure elements remain suture elements
        for (size_t k = 0; k + 1 < std::min<size_t>(sample.size(), 60); k += 2) {
            FockElement p = mul(sample[k], sample[k + 1]);
            if (!p.is_zero() && !is_suture_element(p))
                return "product not a suture element: " + describe(p);
        }
        return "";
    });
    c.run("explicit-minus-one-chains", "fixed", [&]() -> std::string {
        FockElement e = create('x', 0, FockElement::vacuum());
        e = Tstar('y', 0, e);
        e = annihilate('x', 0, e);
        e = annihilate('y', 0, e);
        if (e != negate(FockElement::vacuum())) return "T* chain misses -1";
        FockElement h = E(parse_word("xy"));
        h = H_apply(H_apply(H_apply(h)));
        if (h != negate(E(parse_word("xy")))) return "H^3 chain misses -xy";
        return "";
    });
}

// -------------------------------------------------------------------- chains

std::string validate_chain(const SutureElement& a, const SutureElement& b) {
    auto ch = connecting_chain(a, b);
    if (ch.empty() || !(ch.front().element == a.element) || !(ch.back().element == b.element))
        return "endpoints wrong from " + describe(a.element) + " to " + describe(b.element);
    for (size_t i = 0; i < ch.size(); ++i)
        for (size_t j = i; j < ch.size(); ++j)
            if (pairing(ch[i].element, ch[j].element) != 1)
                return "ordered pairing not 1 inside chain from " + describe(a.element) +
                       " to " + describe(b.element);
    for (size_t i = 1; i < ch.size(); ++i) {
        FockElement diff = ch[i - 1].element - ch[i].element;
        if (!diff.is_zero() && !is_suture_element(diff))
            return "chain step difference not a suture element from " + describe(a.element) +
                   " to " + describe(b.element);
    }
    return "";
}

void suite_chains(Ctx& c) {
    int cap = c.n_cap(5);
    c.run("exhaustive-basis-pairs", cap_str("n", std::min(cap, 4)), [&]() -> std::string {
        for (auto [nx, ny] : gradings_up_to(std::min(cap, 4)))
            for (auto& [a, b] : comparable_pairs(nx, ny)) {
                std::string err = validate_chain(as_suture(E(a)), as_suture(E(b)));
                if (!err.empty()) return err;
            }
        return "";
    });
    c.run("sampled-pairs", cap_str("n", cap), [&]() -> std::string {
        std::mt19937_64 rng(c.o.seed + 23);
        std::vector<std::pair<Word, Word>> pool;
        for (auto [nx, ny] : gradings_up_to(cap))
            if (nx + ny == cap)
                for (auto& p : comparable_pairs(nx, ny)) pool.push_back(p);
        std::shuffle(pool.begin(), pool.end(), rng);
        if (pool.size() > 120) pool.resize(120);
        for (auto& [a, b] : pool) {
            std::string err = validate_chain(as_suture(E(a)), as_suture(E(b)));
            if (!err.empty()) return err;
        }
        return "";
    });
    c.run("stackable-diagram-pairs", cap_str("m", std::min(cap, 4)), [&]() -> std::string {
        for (int m = 1; m <= std::min(cap, 4); ++m) {
            auto ds = enumerate_diagrams(m);
            for (const ChordDiagram& a : ds)
                for (const ChordDiagram& b : ds) {
                    FockElement ca = decompose(a), cb = decompose(b);
                    if (pairing(ca, cb) != 1) continue;
                    std::string err = validate_chain(as_suture(ca), as_suture(cb));
                    if (!err.empty()) return err;
                }
        }
        return "";
    });
}

// ----------------------------------------------------------------- full-rank

constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

uint64_t to_mod(int64_t v) {
    int64_t r = v % static_cast<int64_t>(kPrime);
    if (r < 0) r += static_cast<int64_t>(kPrime);
    return static_cast<uint64_t>(r);
}

int rank_mod_p(std::vector<std::vector<uint64_t>> a) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // modular inverse by Fermat
        uint64_t inv = 1, base = a[rank][col];
        for (uint64_t e = kPrime - 2; e > 0; e >>= 1) {
            if (e & 1) inv = mulmod(inv, base);
            base = mulmod(base, base);
        }
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t f = mulmod(a[r][col], inv);
            for (int k = col; k < cols; ++k) {
                uint64_t sub = mulmod(f, a[rank][k]);
                a[r][k] = (a[r][k] + kPrime - sub) % kPrime;
            }
        }
        ++rank;
    }
    return rank;
}

uint64_t det_mod_p(const IntMatrix& m, int dim) {
    std::vector<std::vector<uint64_t>> a(dim, std::vector<uint64_t>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a[i][j] = to_mod(m.at(i, j));
    uint64_t detv = 1;
    for (int col = 0; col < dim; ++col) {
        int pivot = -1;
        for (int r = col; r < dim; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[col], a[pivot]);
            detv = kPrime - detv;
        }
        detv = mulmod(detv, a[col][col]);
        uint64_t inv = 1, base = a[col][col];
        for (uint64_t e = kPrime - 2; e > 0; e >>= 1) {
            if (e & 1) inv = mulmod(inv, base);
            base = mulmod(base, base);
        }
        for (int r = col + 1; r < dim; ++r) {
            if (a[r][col] == 0) continue;
            uint64_t f = mulmod(a[r][col], inv);
            for (int k = col; k < dim; ++k)
                a[r][k] = (a[r][k] + kPrime - mulmod(f, a[col][k])) % kPrime;
        }
    }
    return detv % kPrime;
}

void suite_full_rank(Ctx& c) {
    int cap = std::min(5, c.o.max_n);
    c.run("construction", cap_str("n", cap), [&]() -> std::string {
        for (int n = 1; n <= cap; ++n) {
            SignedPairingMatrix g = construct_full_rank_pairing(n);
            int dim = static_cast<int>(g.diagrams.size());
            if (dim != catalan(n)) return "dimension wrong at n=" + std::to_string(n);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    int64_t v = g.mat.at(i, j);
                    if (v != -1 && v != 0 && v != 1) return "entry outside {-1,0,1}";
                    bool st = stackable(g.diagrams[i], g.diagrams[j]);
                    if (st != (v != 0))
                        return "support differs from the stack relation at n=" + std::to_string(n);
                }
            if (matrix_rank(g.mat) != dim)
                return "matrix not full rank at n=" + std::to_string(n);
        }
        return "";
    });
    c.run("greedy-never-blocks", cap_str("n", cap), [&]() -> std::string {
        // construct_full_rank_pairing throws if neither diagonal sign keeps the
        // leading minor nonsingular; reaching here without a throw is the check.
        for (int n = 1; n <= cap; ++n) construct_full_rank_pairing(n);
        return "";
    });
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"word-order", suite_word_order},
        {"operator-relations", suite_operator_relations},
        {"pairing-adjoints", suite_pairing_adjoints},
        {"q-formulas", suite_q_formulas},
        {"intertwining", suite_intertwining},
        {"h-routes", suite_h_routes},
        {"periodicity", suite_periodicity},
        {"pawn-cycle", suite_pawn_cycle},
        {"lemma-identities", suite_lemma_identities},
        {"temperley-lieb", suite_temperley_lieb},
        {"counting", suite_counting},
        {"isomorphism", suite_isomorphism},
        {"multiplication", suite_multiplication},
        {"stacking", suite_stacking},
        {"bypass", suite_bypass},
        {"rotation-duality", suite_rotation_duality},
        {"suture-structure", suite_suture_structure},
        {"closure-families", suite_closure_families},
        {"chains", suite_chains},
        {"full-rank", suite_full_rank},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts) {
    for (const auto& [key, fn] : registry())
        if (key == name) {
            Ctx ctx(opts);
            fn(ctx);
            return VerificationReport{name, std::move(ctx.out)};
        }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<VerificationReport> run_all(const VerifyOptions& opts) {
    const auto& reg = registry();
    std::vector<VerificationReport> out(reg.size());
    int jobs = std::max(1, opts.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= reg.size()) break;
            Ctx ctx(opts);
            reg[i].second(ctx);
            out[i] = VerificationReport{reg[i].first, std::move(ctx.out)};
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

int matrix_rank(const IntMatrix& mat) {
    std::vector<std::vector<uint64_t>> a(mat.rows, std::vector<uint64_t>(mat.cols));
    for (int i = 0; i < mat.rows; ++i)
        for (int j = 0; j < mat.cols; ++j) a[i][j] = to_mod(mat.at(i, j));
    return rank_mod_p(std::move(a));
}

SignedPairingMatrix construct_full_rank_pairing(int n) {
    SignedPairingMatrix g;
    g.n = n;
    g.diagrams = enumerate_diagrams(n);
    int dim = static_cast<int>(g.diagrams.size());
    g.mat.rows = g.mat.cols = dim;
    g.mat.a.assign(static_cast<size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j && stackable(g.diagrams[i], g.diagrams[j])) g.mat.at(i, j) = 1;
    for (int i = 0; i < dim; ++i) {
        g.mat.at(i, i) = 1;
        if (det_mod_p(g.mat, i + 1) == 0) {
            g.mat.at(i, i) = -1;
            if (det_mod_p(g.mat, i + 1) == 0)
                throw std::logic_error(
                    "construct_full_rank_pairing: no diagonal sign keeps the leading "
                    "minor nonsingular");
        }
    }
    return g;
}

}  // namespace focksuture
