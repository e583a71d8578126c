#include "focksuture/duality.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace focksuture {

std::vector<int> exceptional_set(const Word& w, char s) {
    bool want_y = (s == 'y' || s == '+');
    std::vector<int> out;
    int seen = 0;
    for (int p = 0; p < w.n; ++p) {
        if (w.is_y(p) == want_y) {
            ++seen;
            if (p + 1 < w.n && w.is_y(p + 1) != want_y) out.push_back(seen);
        }
    }
    return out;
}

Word psi(const Word& w, char s, const std::vector<int>& T) {
    bool want_y = (s == 'y' || s == '+');
    Word r = w;
    for (int i : T) {
        int pos = w.position_of(want_y ? 'y' : 'x', i);  // 1-based
        int p = pos - 1;
        if (p + 1 >= w.n || w.is_y(p + 1) == want_y)
            throw std::invalid_argument("psi: index not in the exceptional set");
        // swap letters p and p+1 (they differ)
        uint64_t mask = 3ull << (w.n - 2 - p);
        r.bits ^= mask;
    }
    return r;
}

namespace {

FockElement Q_signed(const FockElement& elem, char s) {
    FockElement out;
    for (const auto& [w, c] : elem.terms()) {
        std::vector<int> E = exceptional_set(w, s);
        int k = static_cast<int>(E.size());
        for (uint32_t m = 0; m < (1u << k); ++m) {
            std::vector<int> T;
            for (int b = 0; b < k; ++b)
                if (m & (1u << b)) T.push_back(E[b]);
            int64_t sign = (T.size() % 2) ? -1 : 1;
            out = add(out, FockElement::single(psi(w, s, T), checked_mul(c, sign)));
        }
    }
    return out;
}

FockElement Q_interval(const FockElement& elem, bool below) {
    FockElement out;
    for (const auto& [w, c] : elem.terms())
        for (const Word& v : enumerate_words(w.n_x(), w.n_y()))
            if (below ? leq(v, w) : leq(w, v)) out = add(out, FockElement::single(v, c));
    return out;
}

}  // namespace

FockElement Q_minus(const FockElement& elem) { return Q_signed(elem, 'x'); }
FockElement Q_plus(const FockElement& elem) { return Q_signed(elem, 'y'); }
FockElement Q_plus_inv(const FockElement& elem) { return Q_interval(elem, true); }
FockElement Q_minus_inv(const FockElement& elem) { return Q_interval(elem, false); }

const GradedMatrix& H_matrix(int n_x, int n_y) {
    static std::map<std::pair<int, int>, GradedMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n_x, n_y});
    if (it != cache.end()) return it->second;

    GradedMatrix g;
    g.words = enumerate_words(n_x, n_y);
    int d = static_cast<int>(g.words.size());
    g.mat.rows = g.mat.cols = d;
    g.mat.a.assign(static_cast<size_t>(d) * d, 0);
    std::map<Word, int> index;
    for (int i = 0; i < d; ++i) index[g.words[i]] = i;
    for (int j = 0; j < d; ++j) {
        FockElement col = Q_plus(Q_minus_inv(FockElement::single(g.words[j], 1)));
        for (const auto& [w, c] : col.terms()) g.mat.at(index.at(w), j) = c;
    }
    return cache.emplace(std::make_pair(n_x, n_y), std::move(g)).first->second;
}

namespace {

FockElement apply_graded(const FockElement& elem, bool inverse) {
    FockElement out;
    // Group by grading and use the cached matrix; the inverse columns are
    // computed from the Q definition directly (the matrices are small).
    for (const auto& [w, c] : elem.terms()) {
        FockElement img;
        if (!inverse) {
            const GradedMatrix& g = H_matrix(w.n_x(), w.n_y());
            auto pos = std::lower_bound(g.words.begin(), g.words.end(), w) - g.words.begin();
            for (size_t i = 0; i < g.words.size(); ++i) {
                int64_t v = g.mat.at(static_cast<int>(i), static_cast<int>(pos));
                if (v != 0) img = add(img, FockElement::single(g.words[i], v));
            }
        } else {
            img = Q_minus(Q_plus_inv(FockElement::single(w, 1)));
        }
        out = add(out, scale(img, c));
    }
    return out;
}

}  // namespace

FockElement H_apply(const FockElement& elem) { return apply_graded(elem, false); }
FockElement H_inv(const FockElement& elem) { return apply_graded(elem, true); }

FockElement H_terms_explicit(const Word& w) {
    WordProfile pw = profile(w);
    FockElement out;
    for (const Word& v : enumerate_words(w.n_x(), w.n_y())) {
        WordProfile pv = profile(v);
        std::vector<int> E = exceptional_set(v, 'x');
        bool ok = true;
        size_t e = 0;
        for (size_t i = 0; i < pv.f_x.size() && ok; ++i) {
            bool exceptional = e < E.size() && E[e] == static_cast<int>(i) + 1;
            if (exceptional) {
                ++e;
                ok = pv.f_x[i] == pw.f_x[i] - 1;
            } else {
                ok = pv.f_x[i] >= pw.f_x[i];
            }
        }
        if (ok) out = add(out, FockElement::single(v, (E.size() % 2) ? -1 : 1));
    }
    return out;
}

namespace {

Word run_word(int b, int a) {  // y^b x^a
    Word r;
    for (int t = 0; t < b; ++t) r = r.appended('y');
    for (int t = 0; t < a; ++t) r = r.appended('x');
    return r;
}

}  // namespace

FockElement H_block_expansion(const Word& w) {
    // Run decomposition w = x^{a_1} y^{b_1} ... x^{a_k} y^{b_k}.
    std::vector<int> a, b;
    int p = 0;
    while (p < w.n) {
        int ra = 0, rb = 0;
        while (p < w.n && !w.is_y(p)) { ++ra; ++p; }
        while (p < w.n && w.is_y(p)) { ++rb; ++p; }
        a.push_back(ra);
        b.push_back(rb);
    }
    int k = static_cast<int>(a.size());
    if (k == 0) return FockElement::vacuum();
    if (k == 1) return FockElement::single(run_word(b[0], a[0]), 1);

    FockElement out;
    // Segmentations: subsets of {1, ..., k-1} as interior cut points, plus k.
    for (uint32_t m = 0; m < (1u << (k - 1)); ++m) {
        std::vector<int> P;
        for (int t = 1; t < k; ++t)
            if (m & (1u << (t - 1))) P.push_back(t);
        P.push_back(k);
        int l = static_cast<int>(P.size());
        Word term;
        int from = 0;  // 0-based run index
        for (int t = 0; t < l; ++t) {
            int to = P[t];  // runs [from, to)
            int A = 0, B = 0;
            for (int r = from; r < to; ++r) { A += a[r]; B += b[r]; }
            if (l >= 2 && t == 0) { --B; ++A; }
            if (l >= 2 && t == l - 1) { ++B; --A; }
            Word seg = run_word(B, A);
            for (int i = 0; i < seg.n; ++i) term = term.appended(seg.at(i));
            from = to;
        }
        out = add(out, FockElement::single(term, (l % 2) ? 1 : -1));
    }
    return out;
}

IntMatrix H_recursive_matrix(int n_x, int n_y) {
    static std::map<std::pair<int, int>, IntMatrix> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto rec = [](auto&& self, int nx, int ny) -> const IntMatrix& {
        auto it = cache.find({nx, ny});
        if (it != cache.end()) return it->second;
        std::vector<Word> words = enumerate_words(nx, ny);
        int d = static_cast<int>(words.size());
        IntMatrix M;
        M.rows = M.cols = d;
        M.a.assign(static_cast<size_t>(d) * d, 0);
        if (nx == 0 || ny == 0) {
            M = IntMatrix::identity(d);
        } else {
            std::vector<Word> sub = enumerate_words(nx, ny - 1);
            std::map<Word, int> sub_index;
            for (size_t i = 0; i < sub.size(); ++i) sub_index[sub[i]] = static_cast<int>(i);
            const IntMatrix& S = self(self, nx, ny - 1);
            for (int cj = 0; cj < d; ++cj) {
                const Word& c = words[cj];
                int j = 0;
                while (j < c.n && !c.is_y(j)) ++j;  // leading x run; c has a y
                // c = x^j y c'
                Word cp;
                for (int t = j + 1; t < c.n; ++t) cp = cp.appended(c.at(t));
                for (int ri = 0; ri < d; ++ri) {
                    const Word& r = words[ri];
                    if (r.is_y(0)) {
                        // entry(y r', x^j y c') = H_{nx, ny-1}(r', x^j c')
                        Word rp;
                        for (int t = 1; t < r.n; ++t) rp = rp.appended(r.at(t));
                        Word col;
                        for (int t = 0; t < j; ++t) col = col.appended('x');
                        for (int t = 0; t < cp.n; ++t) col = col.appended(cp.at(t));
                        M.at(ri, cj) = S.at(sub_index.at(rp), sub_index.at(col));
                    } else {
                        int i = 0;
                        while (i < r.n && !r.is_y(i)) ++i;
                        // r = x^i y r''; nonzero only when i = j+1 and c' = x c''
                        if (i != j + 1 || cp.n == 0 || cp.is_y(0)) continue;
                        Word rpp;
                        for (int t = i + 1; t < r.n; ++t) rpp = rpp.appended(r.at(t));
                        Word cpp;
                        for (int t = 1; t < cp.n; ++t) cpp = cpp.appended(cp.at(t));
                        const IntMatrix& S2 = self(self, nx - j - 1, ny - 1);
                        std::vector<Word> base = enumerate_words(nx - j - 1, ny - 1);
                        auto rr = std::lower_bound(base.begin(), base.end(), rpp) - base.begin();
                        auto cc = std::lower_bound(base.begin(), base.end(), cpp) - base.begin();
                        M.at(ri, cj) = -S2.at(static_cast<int>(rr), static_cast<int>(cc));
                    }
                }
            }
        }
        return cache.emplace(std::make_pair(nx, ny), std::move(M)).first->second;
    };
    return rec(rec, n_x, n_y);
}

FockElement H_commutator_series(const FockElement& elem) {
    auto A = [](const FockElement& v) {
        return create('y', 0, H_apply(annihilate('x', 0, v)));
    };
    int max_i = 0;
    for (const auto& [w, c] : elem.terms()) max_i = std::max(max_i, w.n_x());
    // The series recursion bottoms out at the identity: on words without any y
    // every summand vanishes, while the operator acts as the identity there.
    FockElement out;
    for (const auto& [w, c] : elem.terms())
        if (w.n_y() == 0) out = add(out, FockElement::single(w, c));
    for (int i = 0; i <= max_i; ++i) {
        FockElement u = elem;
        for (int t = 0; t < i; ++t) u = annihilate('x', 0, u);
        u = annihilate('y', 0, u);
        if (u.is_zero()) continue;
        auto B = [i](const FockElement& v) {
            FockElement r = v;
            for (int t = 0; t <= i; ++t) r = create('x', 0, r);
            return r;
        };
        out = add(out, A(B(u)) - B(A(u)));
    }
    return out;
}

int H_order(int n_x, int n_y) {
    if (n_x == 0 || n_y == 0) return 1;
    int n = n_x + n_y;
    return (n_x % 2 == 1 && n_y % 2 == 1) ? 2 * (n + 1) : n + 1;
}

int H_power_sign(int n_x, int n_y) {
    return ((n_x % 2) && (n_y % 2)) ? -1 : 1;
}

std::vector<Word> pawn_cycle(int n_x, int n_y) {
    Word bottom = run_word(n_y, n_x);        // y^{n_y} x^{n_x}
    Word top;                                // x^{n_x} y^{n_y}
    for (int t = 0; t < n_x; ++t) top = top.appended('x');
    for (int t = 0; t < n_y; ++t) top = top.appended('y');
    if (n_x == 0 || n_y == 0) return {top};
    std::vector<Word> cycle{bottom};
    Word cur = bottom;
    while (cur != top) {
        Word next;
        int i = 0;
        while (i < cur.n) {
            if (i + 1 < cur.n && cur.is_y(i) && !cur.is_y(i + 1)) {
                next = next.appended('x').appended('y');
                i += 2;
            } else {
                next = next.appended(cur.at(i));
                ++i;
            }
        }
        cycle.push_back(next);
        cur = next;
        if (static_cast<int>(cycle.size()) > cur.n + 1)
            throw std::logic_error("pawn cycle failed to terminate");
    }
    return cycle;
}

}  // namespace focksuture
