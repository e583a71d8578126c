#include "focksuture/suture.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "focksuture/duality.hpp"

namespace focksuture {

SutureElement as_suture(const FockElement& elem) {
    if (elem.is_zero()) throw std::invalid_argument("zero is not a suture element");
    SutureElement s;
    s.element = elem;
    s.wminus = elem.terms().front().first;
    s.wplus = elem.terms().back().first;
    s.normalized = elem.terms().front().second == 1;
    return s;
}

SutureElement interval_element(const Word& wminus, const Word& wplus) {
    return as_suture(decompose(diagram_of_pair(wminus, wplus)));
}

namespace {

std::pair<int, int> grading_of(const FockElement& e) {
    const Word& w = e.terms().front().first;
    return {w.n_x(), w.n_y()};
}

std::vector<FockElement> images(const FockElement& e, GeneratorFamily family) {
    auto [nx, ny] = grading_of(e);
    std::vector<FockElement> out;
    switch (family) {
        case GeneratorFamily::C1:
            for (char s : {'x', 'y'}) {
                int ns = (s == 'x') ? nx : ny;
                for (int i = 0; i <= ns + 1; ++i) {
                    out.push_back(create(s, i, e));
                    out.push_back(annihilate(s, i, e));
                }
                for (int i = 0; i <= ns; ++i) out.push_back(Tstar(s, i, e));
            }
            break;
        case GeneratorFamily::C2:
            for (char s : {'x', 'y'}) {
                out.push_back(create(s, 0, e));
                out.push_back(annihilate(s, 0, e));
            }
            out.push_back(H_apply(e));
            break;
        case GeneratorFamily::C3:
            for (char s : {'x', 'y'}) {
                int ns = (s == 'x') ? nx : ny;
                out.push_back(create(s, ns + 1, e));
                out.push_back(annihilate(s, ns + 1, e));
            }
            out.push_back(H_apply(e));
            break;
    }
    return out;
}

}  // namespace

std::set<FockElement> generate_C(int n, GeneratorFamily family, std::size_t cap) {
    int bound = std::max(n + 1, 2);
    std::set<FockElement> seen;
    std::deque<FockElement> frontier;
    FockElement one = FockElement::vacuum();
    seen.insert(one);
    frontier.push_back(one);
    while (!frontier.empty()) {
        FockElement e = std::move(frontier.front());
        frontier.pop_front();
        for (FockElement& img : images(e, family)) {
            if (img.is_zero()) continue;
            if (img.terms().front().first.n > bound) continue;
            if (seen.insert(img).second) {
                if (seen.size() > cap) throw std::length_error("generate_C: cap exceeded");
                frontier.push_back(std::move(img));
            }
        }
    }
    std::set<FockElement> out;
    for (const FockElement& e : seen)
        if (e.terms().front().first.n <= n) out.insert(e);
    return out;
}

bool is_suture_element(const FockElement& elem) {
    if (elem.is_zero()) return false;
    const Word& lo = elem.terms().front().first;
    const Word& hi = elem.terms().back().first;
    if (!leq(lo, hi)) return false;
    FockElement ref;
    try {
        ref = decompose(diagram_of_pair(lo, hi));
    } catch (const std::invalid_argument&) {
        return false;
    }
    return elem == ref || elem == negate(ref);
}

std::optional<SutureElement> bypass_completion(const SutureElement& u, const SutureElement& v) {
    const FockElement* cand[2] = {&u.element, &v.element};
    for (int swap = 0; swap < 2; ++swap) {
        const FockElement& a0 = *cand[swap];
        const FockElement& b0 = *cand[1 - swap];
        for (int sa : {1, -1}) {
            for (int sb : {1, -1}) {
                FockElement a = scale(a0, sa), b = scale(b0, sb);
                FockElement diff = a - b;
                if (pairing(a, b) == 1 && pairing(b, a) == 0 && is_suture_element(diff))
                    return as_suture(diff);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Outermost chords {p, p+1 mod 2m}, listed by their starting point p.
std::vector<int> outermost_chords(const ChordDiagram& d) {
    int N = 2 * d.m;
    std::vector<int> out;
    for (int p = 0; p < N; ++p)
        if (d.match[p] == (p + 1) % N) out.push_back(p);
    return out;
}

bool has_chord(const ChordDiagram& d, int p) { return d.match[p] == (p + 1) % (2 * d.m); }

ChordDiagram strip_pair(const ChordDiagram& d, int p) {
    int N = 2 * d.m;
    ChordDiagram r;
    r.m = d.m - 1;
    r.match.assign(N - 2, -1);
    if (p == N - 1) {
        auto lab = [N](int k) { return k == N - 2 ? 0 : k; };
        for (int k = 1; k <= N - 2; ++k) r.match[lab(k)] = lab(d.match[k]);
    } else {
        auto lab = [p](int k) { return k < p ? k : k - 2; };
        for (int k = 0; k < N; ++k)
            if (k != p && k != p + 1) r.match[lab(k)] = lab(d.match[k]);
    }
    return r;
}

ChordDiagram insert_pair(const ChordDiagram& d, int p) {  // inverse of strip_pair
    int N = 2 * d.m + 2;
    ChordDiagram r;
    r.m = d.m + 1;
    r.match.assign(N, -1);
    if (p == N - 1) {
        auto lab = [N](int k) { return k == 0 ? N - 2 : k; };
        for (int k = 0; k < N - 2; ++k) r.match[lab(k)] = lab(d.match[k]);
        r.match[N - 1] = 0;
        r.match[0] = N - 1;
    } else {
        auto lab = [p](int k) { return k < p ? k : k + 2; };
        for (int k = 0; k < N - 2; ++k) r.match[lab(k)] = lab(d.match[k]);
        r.match[p] = p + 1;
        r.match[p + 1] = p;
    }
    return r;
}

int chord_min(const ChordDiagram& d, int point) { return std::min(point, d.match[point]); }

// One bypass surgery on d producing the outermost chord {p, p+1 mod 2m}.
ChordDiagram create_chord_by_bypass(const ChordDiagram& d, int p) {
    int N = 2 * d.m;
    int pn = (p + 1) % N;
    std::vector<std::vector<int>> regs = regions(d);
    std::vector<int> region_of_arc(N, -1);
    for (size_t r = 0; r < regs.size(); ++r)
        for (int a : regs[r]) region_of_arc[a] = static_cast<int>(r);
    auto chords_of = [&](int r) {
        std::vector<int> cs;
        for (int j : regs[r]) {
            int c = chord_min(d, (j + 1) % N);
            if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
        }
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    int r1 = region_of_arc[p];
    auto attempt = [&](int c1, int c2, BypassDirection dir) -> std::optional<ChordDiagram> {
        int lo = c2, hi = d.match[c2];
        int ra = region_of_arc[lo], rb = region_of_arc[hi];
        int r2 = (ra == r1) ? rb : ra;
        for (int c3 : chords_of(r2)) {
            if (c3 == c1 || c3 == c2) continue;
            BypassArc arc{c1, regs[r1].front(), c2, regs[r2].front(), c3};
            ChordDiagram res = bypass_surgery(d, arc, dir);
            if (has_chord(res, p)) return res;
        }
        return std::nullopt;
    };
    if (auto res = attempt(chord_min(d, p), chord_min(d, pn), BypassDirection::up)) return *res;
    if (auto res = attempt(chord_min(d, pn), chord_min(d, p), BypassDirection::down)) return *res;
    for (const BypassArc& arc : enumerate_bypass_arcs(d))
        for (BypassDirection dir : {BypassDirection::up, BypassDirection::down}) {
            ChordDiagram res = bypass_surgery(d, arc, dir);
            if (has_chord(res, p)) return res;
        }
    throw std::logic_error("connecting_chain: no surgery creates the required chord");
}

std::vector<ChordDiagram> chain_diagrams(const ChordDiagram& D, const ChordDiagram& G) {
    if (D == G) return {D};
    for (int p : outermost_chords(G)) {
        if (!has_chord(D, p)) continue;
        std::vector<ChordDiagram> sub = chain_diagrams(strip_pair(D, p), strip_pair(G, p));
        for (ChordDiagram& s : sub) s = insert_pair(s, p);
        return sub;
    }
    int p = outermost_chords(G).front();
    ChordDiagram D2 = create_chord_by_bypass(D, p);
    std::vector<ChordDiagram> rest = chain_diagrams(D2, G);
    rest.insert(rest.begin(), D);
    return rest;
}

}  // namespace

std::vector<SutureElement> connecting_chain(const SutureElement& u, const SutureElement& v) {
    if (pairing(u.element, v.element) != 1)
        throw std::invalid_argument("connecting_chain: pairing(u, v) must be 1");
    SutureElement su = as_suture(u.element), sv = as_suture(v.element);
    ChordDiagram D = diagram_of_pair(su.wminus, su.wplus);
    ChordDiagram G = diagram_of_pair(sv.wminus, sv.wplus);
    std::vector<ChordDiagram> diagrams = chain_diagrams(D, G);
    std::vector<SutureElement> chain{su};
    FockElement prev = su.element;
    for (size_t i = 1; i < diagrams.size(); ++i) {
        FockElement di = decompose(diagrams[i]);
        int64_t t = pairing(prev, di);
        if (t != 1 && t != -1)
            throw std::logic_error("connecting_chain: consecutive pairing is not +-1");
        FockElement e = scale(di, t);
        chain.push_back(as_suture(e));
        prev = e;
    }
    if (chain.back().element != sv.element)
        throw std::logic_error("connecting_chain: chain does not end at v");
    return chain;
}

}  // namespace focksuture
