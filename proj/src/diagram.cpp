#include "focksuture/diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <cmath>

namespace focksuture {

void validate(const ChordDiagram& d) {
    int N = 2 * d.m;
    if (static_cast<int>(d.match.size()) != N)
        throw std::invalid_argument("diagram: match size is not 2m");
    for (int i = 0; i < N; ++i) {
        int j = d.match[i];
        if (j < 0 || j >= N || j == i || d.match[j] != i)
            throw std::invalid_argument("diagram: match is not a fixed-point-free involution");
        if ((i + j) % 2 == 0)
            throw std::invalid_argument("diagram: chord joins points of equal parity");
    }
    // Non-crossing: with chords as intervals [a, b], a < b, no two interleave.
    for (int a = 0; a < N; ++a) {
        int b = d.match[a];
        if (b < a) continue;
        for (int c = a + 1; c < b; ++c) {
            int e = d.match[c];
            if (e < a || e > b)
                throw std::invalid_argument("diagram: chords cross");
        }
    }
}

namespace {

void enumerate_rec(std::vector<int>& match, int N, int from, std::vector<ChordDiagram>& out) {
    int p = from;
    while (p < N && match[p] >= 0) ++p;
    if (p == N) {
        out.push_back(ChordDiagram{N / 2, match});
        return;
    }
    for (int q = p + 1; q < N; q += 2) {
        // points strictly between p and q must pair among themselves
        bool free_block = true;
        for (int t = p + 1; t < q && free_block; ++t) free_block = match[t] < 0;
        if (!free_block || match[q] >= 0) continue;
        match[p] = q;
        match[q] = p;
        enumerate_rec(match, N, p + 1, out);
        match[p] = match[q] = -1;
    }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(int m) {
    if (m < 1) throw std::invalid_argument("diagram size must be at least 1");
    std::vector<int> match(2 * m, -1);
    std::vector<ChordDiagram> out;
    enumerate_rec(match, 2 * m, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> regions(const ChordDiagram& d) {
    int N = 2 * d.m;
    std::vector<bool> seen(N, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < N; ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit;
        int j = s;
        while (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
            j = d.match[(j + 1) % N];
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int euler_class(const ChordDiagram& d) {
    int e = 0;
    for (const auto& r : regions(d)) e += (r.front() % 2 == 0) ? 1 : -1;
    return e;
}

int diagram_n_x(const ChordDiagram& d) { return (d.m - 1 - euler_class(d)) / 2; }
int diagram_n_y(const ChordDiagram& d) { return (d.m - 1 + euler_class(d)) / 2; }

ChordDiagram vacuum_diagram() { return ChordDiagram{1, {1, 0}}; }

ChordDiagram basis_diagram(const Word& w) {
    ChordDiagram d = vacuum_diagram();
    for (int i = w.n - 1; i >= 0; --i) d = diagram_create(w.at(i), 0, d);
    return d;
}

Word basis_word(const ChordDiagram& d) {
    FockElement e = decompose(d);
    if (e.terms().size() != 1 || e.terms()[0].second != 1)
        throw std::invalid_argument("diagram is not a basis diagram");
    return e.terms()[0].first;
}

ChordDiagram diagram_create(char s, int i, const ChordDiagram& d) {
    bool is_y = (s == 'y' || s == '+');
    if (s != 'x' && s != 'y' && s != '-' && s != '+')
        throw std::invalid_argument("diagram_create: unknown species");
    int N = 2 * d.m;
    int ns = is_y ? diagram_n_y(d) : diagram_n_x(d);
    if (i < 0 || i > ns + 1) throw std::out_of_range("diagram_create: index out of range");
    int p, q;  // insert the new pair after point p; first new point gets label q
    if (is_y) {
        p = ((2 * i - 1) % N + N) % N;
        q = 2 * i;
    } else {
        p = ((N - 2 * i) % N + N) % N;
        q = ((-2 * i - 1) % (N + 2) + (N + 2)) % (N + 2);
    }
    auto new_label = [&](int old) {  // label of an old point
        return (q + 2 + ((old - p - 1 + N) % N)) % (N + 2);
    };
    ChordDiagram r;
    r.m = d.m + 1;
    r.match.assign(N + 2, -1);
    int q2 = (q + 1) % (N + 2);
    r.match[q] = q2;
    r.match[q2] = q;
    for (int a = 0; a < N; ++a) r.match[new_label(a)] = new_label(d.match[a]);
    return r;
}

std::optional<ChordDiagram> diagram_annihilate(char s, int i, const ChordDiagram& d) {
    bool is_y = (s == 'y' || s == '+');
    if (s != 'x' && s != 'y' && s != '-' && s != '+')
        throw std::invalid_argument("diagram_annihilate: unknown species");
    int N = 2 * d.m;
    int ns = is_y ? diagram_n_y(d) : diagram_n_x(d);
    if (i < 0 || i > ns + 1) throw std::out_of_range("diagram_annihilate: index out of range");
    (void)N;
    // Cap off the strands through the suture element: annihilation maps interval
    // elements to interval elements (or to zero when a closed loop appears), so
    // the image diagram is determined by the word-level operator on the two
    // extreme words of the decomposition.
    FockElement e = annihilate(s, i, decompose(d));
    if (e.is_zero()) return std::nullopt;  // a closed contractible loop appears
    return diagram_of_pair(e.terms().front().first, e.terms().back().first);
}

ChordDiagram rotate(const ChordDiagram& d) {
    int N = 2 * d.m;
    ChordDiagram r;
    r.m = d.m;
    r.match.assign(N, -1);
    for (int k = 0; k < N; ++k) r.match[(k - 2 + N) % N] = (d.match[k] - 2 + N) % N;
    return r;
}

namespace {

ChordDiagram strip_front(const ChordDiagram& d) {  // removes the chord (0,1)
    int N = 2 * d.m;
    ChordDiagram r;
    r.m = d.m - 1;
    r.match.assign(N - 2, -1);
    for (int k = 2; k < N; ++k) r.match[k - 2] = d.match[k] - 2;
    return r;
}

ChordDiagram strip_back(const ChordDiagram& d) {  // removes the chord (2m-1, 0)
    int N = 2 * d.m;
    ChordDiagram r;
    r.m = d.m - 1;
    r.match.assign(N - 2, -1);
    auto lab = [N](int k) { return k == N - 2 ? 0 : k; };
    for (int k = 1; k <= N - 2; ++k) r.match[lab(k)] = lab(d.match[k]);
    return r;
}

FockElement decompose_uncached(const ChordDiagram& d);

FockElement decompose_cached(const ChordDiagram& d) {
    static std::map<ChordDiagram, FockElement> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    FockElement e = decompose_uncached(d);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, e);
    return e;
}

FockElement decompose_uncached(const ChordDiagram& d) {
    int N = 2 * d.m;
    if (d.m == 1) return FockElement::vacuum();
    if (d.match[0] == 1) return create('y', 0, decompose_cached(strip_front(d)));
    if (d.match[0] == N - 1) return create('x', 0, decompose_cached(strip_back(d)));
    // Resolve the three chords meeting the points 2m-1, 0, 1 at the basepoint.
    int p = d.match[0], q = d.match[N - 1], r = d.match[1];
    ChordDiagram minus = d, plus = d;
    auto link = [](ChordDiagram& g, int a, int b) { g.match[a] = b; g.match[b] = a; };
    link(minus, N - 1, 0); link(minus, 1, q); link(minus, p, r);
    link(plus, 0, 1); link(plus, N - 1, r); link(plus, p, q);
    validate(minus);
    validate(plus);
    FockElement dm = decompose_cached(minus), dp = decompose_cached(plus);
    int64_t t = checked_add(pairing(dm, dp), pairing(dp, dm));
    if (t != 1 && t != -1) throw std::logic_error("decompose: resolution pairing is not +-1");
    FockElement e = add(dm, scale(dp, -t));
    if (!e.is_zero() && e.terms().front().second < 0) e = negate(e);
    return e;
}

}  // namespace

FockElement decompose(const ChordDiagram& d) { return decompose_cached(d); }

std::pair<Word, Word> pair_of(const ChordDiagram& d) {
    FockElement e = decompose(d);
    if (e.is_zero()) throw std::logic_error("decompose returned zero");
    return {e.terms().front().first, e.terms().back().first};
}

ChordDiagram diagram_of_pair(const Word& wminus, const Word& wplus) {
    if (!leq(wminus, wplus))
        throw std::invalid_argument("diagram_of_pair: words are not comparable");
    int m = wminus.n + 1;
    static std::map<int, std::map<std::pair<Word, Word>, ChordDiagram>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::map<std::pair<Word, Word>, ChordDiagram> table;
        for (const ChordDiagram& d : enumerate_diagrams(m)) table.emplace(pair_of(d), d);
        it = cache.emplace(m, std::move(table)).first;
    }
    auto jt = it->second.find({wminus, wplus});
    if (jt == it->second.end())
        throw std::invalid_argument("diagram_of_pair: no diagram with these extremes");
    return jt->second;
}

namespace {

// The chord id (smallest point) of the chord containing a point.
int chord_id(const ChordDiagram& d, int point) { return std::min(point, d.match[point]); }

struct RegionInfo {
    std::vector<std::vector<int>> arcs;            // per region, sorted arcs
    std::vector<int> region_of_arc;                // arc -> region index
};

RegionInfo region_info(const ChordDiagram& d) {
    RegionInfo info;
    info.arcs = regions(d);
    info.region_of_arc.assign(2 * d.m, -1);
    for (size_t r = 0; r < info.arcs.size(); ++r)
        for (int a : info.arcs[r]) info.region_of_arc[a] = static_cast<int>(r);
    return info;
}

// Oriented traversal (alpha, beta) of the chord c within region r: the
// boundary cycle of r leaves arc j along the chord from j+1 to match[j+1].
std::pair<int, int> traversal(const ChordDiagram& d, const RegionInfo& info, int r, int c) {
    int N = 2 * d.m;
    for (int j : info.arcs[r]) {
        int alpha = (j + 1) % N;
        if (chord_id(d, alpha) == c) return {alpha, d.match[alpha]};
    }
    throw std::logic_error("chord does not border the region");
}

}  // namespace

std::vector<BypassArc> enumerate_bypass_arcs(const ChordDiagram& d) {
    RegionInfo info = region_info(d);
    int R = static_cast<int>(info.arcs.size());
    // chords bordering each region
    std::vector<std::vector<int>> chords_of(R);
    for (int r = 0; r < R; ++r) {
        std::set<int> cs;
        int N = 2 * d.m;
        for (int j : info.arcs[r]) cs.insert(chord_id(d, (j + 1) % N));
        chords_of[r].assign(cs.begin(), cs.end());
    }
    // the region on each side of a chord: side 0 holds the arc starting at the
    // chord's smaller point, side 1 the arc starting at its larger point
    std::vector<BypassArc> out;
    for (int r1 = 0; r1 < R; ++r1) {
        for (int c1 : chords_of[r1]) {
            for (int c2 : chords_of[r1]) {
                if (c2 == c1) continue;
                // r2: the region across c2 from r1
                int low = c2, high = d.match[c2];
                int ra = info.region_of_arc[low], rb = info.region_of_arc[high];
                int r2 = (ra == r1) ? rb : ra;
                if (r2 == r1) continue;
                for (int c3 : chords_of[r2]) {
                    if (c3 == c1 || c3 == c2) continue;
                    out.push_back(BypassArc{c1, static_cast<int>(info.arcs[r1].front()), c2,
                                            static_cast<int>(info.arcs[r2].front()), c3});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ChordDiagram bypass_surgery(const ChordDiagram& d, const BypassArc& arc, BypassDirection dir) {
    RegionInfo info = region_info(d);
    // recover region indices from their naming arcs
    int r1 = info.region_of_arc[arc.r1];
    int r2 = info.region_of_arc[arc.r2];
    auto [a1, b1] = traversal(d, info, r1, arc.c1);
    auto [a2, b2] = traversal(d, info, r1, arc.c2);
    auto [a3, b3] = traversal(d, info, r2, arc.c3);
    int E1a = b1, E1b = a1;
    int E2a = a2, E2b = b2;
    int E3a = a3, E3b = b3;
    ChordDiagram r = d;
    auto link = [&r](int a, int b) { r.match[a] = b; r.match[b] = a; };
    if (dir == BypassDirection::up) {
        link(E1a, E2a); link(E3a, E1b); link(E3b, E2b);
    } else {
        link(E2a, E3a); link(E1a, E3b); link(E2b, E1b);
    }
    validate(r);
    return r;
}

bool stackable(const ChordDiagram& d0, const ChordDiagram& d1) {
    if (d0.m != d1.m) throw std::invalid_argument("stackable: diagrams differ in size");
    int N = 2 * d0.m;
    std::vector<int> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int i = 0; i < N; ++i) {
        unite(i, d0.match[i]);
        unite(i, (d1.match[(i - 1 + N) % N] + 1) % N);
    }
    int root = find(0);
    for (int i = 1; i < N; ++i)
        if (find(i) != root) return false;
    return true;
}

ChordDiagram diagram_concat(const ChordDiagram& d0, const ChordDiagram& d1) {
    int m0 = d0.m, m1 = d1.m;
    int ny0 = diagram_n_y(d0);
    int rho0 = 2 * ny0 + 1;
    int M = 2 * (m0 + m1 - 1);
    // Boundary order of the splice, clockwise from the basepoint: the eastside
    // of d0, then all of d1 (its root becomes the root of the result), then the
    // westside of d0 at the top labels.
    auto lab0 = [&](int k) { return k < rho0 ? k : M - 2 * m0 + k; };
    auto lab1 = [&](int k) { return k + 2 * ny0; };
    ChordDiagram r;
    r.m = m0 + m1 - 1;
    r.match.assign(M, -1);
    for (int k = 0; k < 2 * m0; ++k) {
        if (k == rho0 || d0.match[k] == rho0) continue;
        r.match[lab0(k)] = lab0(d0.match[k]);
    }
    for (int k = 1; k < 2 * m1; ++k) {
        if (d1.match[k] == 0) continue;
        r.match[lab1(k)] = lab1(d1.match[k]);
    }
    int a = lab0(d0.match[rho0]), b = lab1(d1.match[0]);
    r.match[a] = b;
    r.match[b] = a;
    validate(r);
    return r;
}

std::string render_ascii(const ChordDiagram& d) {
    int N = 2 * d.m;
    std::string parens(N, ' '), digits(N, ' ');
    for (int k = 0; k < N; ++k) {
        parens[k] = d.match[k] > k ? '(' : ')';
        digits[k] = static_cast<char>('0' + k % 10);
    }
    return "* " + parens + "\n  " + digits + "\n";
}

std::string render_svg(const ChordDiagram& d) {
    int N = 2 * d.m;
    const double R = 100.0, C = 120.0, pi = 3.14159265358979323846;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"240\" "
           "viewBox=\"0 0 240 240\">\n";
    out << "<circle cx=\"" << C << "\" cy=\"" << C << "\" r=\"" << R
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    auto pt = [&](double idx) {
        // basepoint at angle -pi/2 - half step; points clockwise from the top
        double a = -pi / 2 + 2 * pi * (idx + 0.5) / N;
        return std::pair<double, double>{C + R * std::cos(a), C + R * std::sin(a)};
    };
    auto [bx, by] = pt(-0.5);
    out << "<circle cx=\"" << bx << "\" cy=\"" << by << "\" r=\"4\" fill=\"black\"/>\n";
    for (int k = 0; k < N; ++k) {
        int j = d.match[k];
        auto [x1, y1] = pt(k);
        if (j > k) {
            auto [x2, y2] = pt(j);
            out << "<path d=\"M " << x1 << ' ' << y1 << " Q " << C << ' ' << C << ' ' << x2 << ' '
                << y2 << "\" fill=\"none\" stroke=\"" << (k % 2 == 0 ? "blue" : "red")
                << "\"/>\n";
        }
        out << "<text x=\"" << x1 << "\" y=\"" << y1 << "\" font-size=\"10\">" << k
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace focksuture
