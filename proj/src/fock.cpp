#include "focksuture/fock.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "focksuture/duality.hpp"

namespace focksuture {

FockElement FockElement::single(const Word& w, int64_t coeff) {
    FockElement e;
    if (coeff != 0) e.terms_.push_back({w, coeff});
    return e;
}

int64_t FockElement::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const auto& t, const Word& x) { return t.first < x; });
    if (it != terms_.end() && it->first == w) return it->second;
    return 0;
}

FockElement add(const FockElement& u, const FockElement& v) {
    FockElement r;
    auto a = u.terms_.begin(), ae = u.terms_.end();
    auto b = v.terms_.begin(), be = v.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            int64_t c = checked_add(a->second, b->second);
            if (c != 0) r.terms_.push_back({a->first, c});
            ++a; ++b;
        }
    }
    return r;
}

FockElement negate(const FockElement& u) { return scale(u, -1); }

FockElement scale(const FockElement& u, int64_t k) {
    FockElement r;
    if (k == 0) return r;
    for (const auto& [w, c] : u.terms()) r.terms_.push_back({w, checked_mul(c, k)});
    return r;
}

static Word concat(const Word& a, const Word& b) {
    if (a.n + b.n > kMaxWordLength) throw std::length_error("word length exceeds 62");
    return Word{a.n + b.n, (a.bits << b.n) | b.bits};
}

FockElement mul(const FockElement& u, const FockElement& v) {
    FockElement r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms())
            r = add(r, FockElement::single(concat(wu, wv), checked_mul(cu, cv)));
    return r;
}

int64_t pairing(const FockElement& u, const FockElement& v) {
    int64_t s = 0;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms())
            if (leq(wu, wv)) s = checked_add(s, checked_mul(cu, cv));
    return s;
}

int64_t dot(const FockElement& u, const FockElement& v) {
    int64_t s = 0;
    auto a = u.terms().begin(), ae = u.terms().end();
    auto b = v.terms().begin(), be = v.terms().end();
    while (a != ae && b != be) {
        if (a->first < b->first) ++a;
        else if (b->first < a->first) ++b;
        else { s = checked_add(s, checked_mul(a->second, b->second)); ++a; ++b; }
    }
    return s;
}

FockElement create(char s, int i, const FockElement& elem) {
    FockElement r;
    for (const auto& [w, c] : elem.terms())
        r = add(r, FockElement::single(word_create(s, i, w), c));
    return r;
}

FockElement annihilate(char s, int i, const FockElement& elem) {
    FockElement r;
    for (const auto& [w, c] : elem.terms())
        if (auto v = word_annihilate(s, i, w)) r = add(r, FockElement::single(*v, c));
    return r;
}

FockElement derivative(char s, const FockElement& elem) {
    FockElement r;
    for (const auto& [w, c] : elem.terms()) {
        int ns = (s == 'y' || s == '+') ? w.n_y() : w.n_x();
        for (int i = 1; i <= ns; ++i)
            if (auto v = word_annihilate(s, i, w)) r = add(r, FockElement::single(*v, c));
    }
    return r;
}

FockElement differential(char s, const FockElement& elem) {
    FockElement r;
    for (const auto& [w, c] : elem.terms()) {
        int ns = (s == 'y' || s == '+') ? w.n_y() : w.n_x();
        for (int i = 1; i <= ns; ++i)
            if (auto v = word_annihilate(s, i, w))
                r = add(r, FockElement::single(*v, (i % 2) ? -c : c));
    }
    return r;
}

FockElement T(char s, int i, const FockElement& elem) {
    return annihilate(s, i, elem) - annihilate(s, i + 1, elem);
}

FockElement Tstar(char s, int i, const FockElement& elem) {
    return create(s, i, elem) - create(s, i + 1, elem);
}

FockElement U(char s, int i, const FockElement& elem) {
    return Tstar(s, i, annihilate(s, i + 1, elem));
}

OperatorSpec parse_operator_spec(const std::string& text) {
    OperatorSpec spec;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        OpAtom atom;
        if (tok == "H") {
            atom.kind = OpAtom::H;
        } else if (tok == "H^-1" || tok == "Hinv") {
            atom.kind = OpAtom::Hinv;
        } else if (!tok.empty() && (tok[0] == '-' || tok[0] == '+' || std::isdigit(static_cast<unsigned char>(tok[0])))) {
            size_t pos = 0;
            atom.kind = OpAtom::Scalar;
            atom.k = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad scalar atom: " + tok);
        } else {
            // name(s,i)
            auto open = tok.find('(');
            auto comma = tok.find(',');
            auto close = tok.find(')');
            if (open == std::string::npos || comma == std::string::npos ||
                close == std::string::npos || close + 1 != tok.size() ||
                comma != open + 2)
                throw std::invalid_argument("bad operator atom: " + tok);
            std::string name = tok.substr(0, open);
            char sp = tok[open + 1];
            if (sp != 'x' && sp != 'y' && sp != '-' && sp != '+')
                throw std::invalid_argument("bad species in atom: " + tok);
            atom.species = (sp == '-') ? 'x' : (sp == '+') ? 'y' : sp;
            atom.index = std::stoi(tok.substr(comma + 1, close - comma - 1));
            if (name == "a") atom.kind = OpAtom::Annihilate;
            else if (name == "a*") atom.kind = OpAtom::Create;
            else if (name == "T") atom.kind = OpAtom::TOp;
            else if (name == "T*") atom.kind = OpAtom::TstarOp;
            else if (name == "U") atom.kind = OpAtom::UOp;
            else throw std::invalid_argument("unknown operator: " + name);
        }
        spec.atoms.push_back(atom);
    }
    return spec;
}

std::string to_string(const OperatorSpec& spec) {
    std::string out;
    for (const OpAtom& atom : spec.atoms) {
        if (!out.empty()) out.push_back(' ');
        switch (atom.kind) {
            case OpAtom::H: out += "H"; break;
            case OpAtom::Hinv: out += "H^-1"; break;
            case OpAtom::Scalar: out += std::to_string(atom.k); break;
            default: {
                const char* name =
                    atom.kind == OpAtom::Create ? "a*" :
                    atom.kind == OpAtom::Annihilate ? "a" :
                    atom.kind == OpAtom::TOp ? "T" :
                    atom.kind == OpAtom::TstarOp ? "T*" : "U";
                out += name;
                out += '(';
                out += atom.species;
                out += ',';
                out += std::to_string(atom.index);
                out += ')';
            }
        }
    }
    return out;
}

FockElement apply(const OperatorSpec& spec, const FockElement& elem) {
    FockElement cur = elem;
    for (auto it = spec.atoms.rbegin(); it != spec.atoms.rend(); ++it) {
        switch (it->kind) {
            case OpAtom::Create: cur = create(it->species, it->index, cur); break;
            case OpAtom::Annihilate: cur = annihilate(it->species, it->index, cur); break;
            case OpAtom::TOp: cur = T(it->species, it->index, cur); break;
            case OpAtom::TstarOp: cur = Tstar(it->species, it->index, cur); break;
            case OpAtom::UOp: cur = U(it->species, it->index, cur); break;
            case OpAtom::H: cur = H_apply(cur); break;
            case OpAtom::Hinv: cur = H_inv(cur); break;
            case OpAtom::Scalar: cur = scale(cur, it->k); break;
        }
    }
    return cur;
}

OperatorSpec normal_form(const OperatorSpec& spec) {
    char species = 0;
    // atoms as (is_create, index), kept in application order: last applies first
    std::vector<std::pair<bool, int>> ops;
    for (const OpAtom& atom : spec.atoms) {
        if (atom.kind != OpAtom::Create && atom.kind != OpAtom::Annihilate)
            throw std::invalid_argument("normal_form: only create/annihilate atoms allowed");
        if (species == 0) species = atom.species;
        else if (species != atom.species)
            throw std::invalid_argument("normal_form: mixed species");
        ops.push_back({atom.kind == OpAtom::Create, atom.index});
    }
    // Move annihilations to the right (applied first) past creations:
    //   a_i a*_j -> a*_{j-1} a_i (i < j), identity (i = j or j+1), a*_j a_{i-1} (i > j+1).
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < ops.size(); ++p) {
            auto& L = ops[p];      // applied after R
            auto& R = ops[p + 1];  // applied before L
            if (!L.first && R.first) {  // a_i composed with a*_j
                int i = L.second, j = R.second;
                if (i == j || i == j + 1) {
                    ops.erase(ops.begin() + p, ops.begin() + p + 2);
                } else if (i < j) {
                    L = {true, j - 1};
                    R = {false, i};
                } else {
                    L = {true, j};
                    R = {false, i - 1};
                }
                changed = true;
                break;
            }
        }
    }
    // Sort creations to strictly decreasing indices: a*_i a*_j = a*_{j+1} a*_i (i <= j).
    // Sort annihilations to weakly decreasing: a_i a_j = a_{j-1} a_i (i < j).
    changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < ops.size(); ++p) {
            auto& L = ops[p];
            auto& R = ops[p + 1];
            if (L.first && R.first && L.second <= R.second) {
                int i = L.second, j = R.second;
                L = {true, j + 1};
                R = {true, i};
                changed = true;
            } else if (!L.first && !R.first && L.second < R.second) {
                int i = L.second, j = R.second;
                L = {false, j - 1};
                R = {false, i};
                changed = true;
            }
        }
    }
    OperatorSpec out;
    for (auto [is_create, idx] : ops) {
        OpAtom atom;
        atom.kind = is_create ? OpAtom::Create : OpAtom::Annihilate;
        atom.species = species ? species : 'x';
        atom.index = idx;
        out.atoms.push_back(atom);
    }
    return out;
}

IntMatrix IntMatrix::identity(int d) {
    IntMatrix m;
    m.rows = m.cols = d;
    m.a.assign(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix C;
    C.rows = A.rows;
    C.cols = B.cols;
    C.a.assign(static_cast<size_t>(C.rows) * C.cols, 0);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int64_t v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = checked_add(C.at(i, j), checked_mul(v, B.at(k, j)));
        }
    return C;
}

int64_t det(const IntMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("det: non-square matrix");
    int d = M.rows;
    if (d == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix A = M;
    int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < d; ++k) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < d; ++r)
                if (A.at(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = 0; c < d; ++c) std::swap(A.at(k, c), A.at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j) {
                int64_t v = checked_add(checked_mul(A.at(i, j), A.at(k, k)),
                                        -checked_mul(A.at(i, k), A.at(k, j)));
                A.at(i, j) = v / prev;
            }
        prev = A.at(k, k);
    }
    return sign * A.at(d - 1, d - 1);
}

GramMatrix gram(int n_x, int n_y, GramFlavor flavor) {
    GramMatrix g;
    g.n_x = n_x;
    g.n_y = n_y;
    g.flavor = flavor;
    g.words = enumerate_words(n_x, n_y);
    int d = static_cast<int>(g.words.size());
    g.mat.rows = g.mat.cols = d;
    g.mat.a.assign(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g.mat.at(i, j) = (flavor == GramFlavor::pairing) ? (leq(g.words[i], g.words[j]) ? 1 : 0)
                                                             : (i == j ? 1 : 0);
    return g;
}

namespace {

bool has_adjacent_repeat(const Word& w, bool want_y, int* index_out) {
    // Finds i with the i'th and (i+1)'th occurrence of the letter adjacent.
    int seen = 0;
    for (int p = 0; p + 1 < w.n; ++p) {
        if (w.is_y(p) == want_y) {
            ++seen;
            if (w.is_y(p + 1) == want_y) {
                *index_out = seen;
                return true;
            }
        }
    }
    return false;
}

Word delete_occurrence(const Word& w, bool want_y, int i) {
    auto r = word_annihilate(want_y ? 'y' : 'x', i, w);
    return *r;
}

Word tail(const Word& w) {
    Word r;
    for (int t = 1; t < w.n; ++t) r = r.appended(w.is_y(t) ? 'y' : 'x');
    return r;
}

}  // namespace

int64_t pairing_by_reduction(const Word& w0_in, const Word& w1_in) {
    Word w0 = w0_in, w1 = w1_in;
    if (w0.n != w1.n || w0.n_x() != w1.n_x()) return 0;  // grading orthogonality
    for (;;) {
        if (w0.n == 0) return 1;  // normalization B(1,1) = 1
        int i;
        // Repeated y in w0: w0 = a*_{y,i} w0', so B(w0, w1) = B(w0', a_{y,i} w1).
        if (has_adjacent_repeat(w0, true, &i)) {
            w0 = delete_occurrence(w0, true, i);
            w1 = delete_occurrence(w1, true, i);
            continue;
        }
        // Repeated x in w1: w1 = a*_{x,i} w1', so B(w0, w1) = B(a_{x,i} w0, w1').
        if (has_adjacent_repeat(w1, false, &i)) {
            w0 = delete_occurrence(w0, false, i);
            w1 = delete_occurrence(w1, false, i);
            continue;
        }
        // w1 = x w1' = a*_{x,0} w1': B(w0, w1) = B(a_{x,0} w0, w1'), which is 0
        // unless w0 also starts with x.
        if (!w1.is_y(0)) {
            if (w0.is_y(0)) return 0;
            w0 = tail(w0);
            w1 = tail(w1);
            continue;
        }
        // w0 = y w0' = a*_{y,0} w0': B(w0, w1) = B(w0', a_{y,0} w1), 0 unless w1
        // starts with y.
        if (w0.is_y(0)) {
            w0 = tail(w0);
            w1 = tail(w1);
            continue;
        }
        // Remaining shape: w0 = (xy)^m, w1 = (yx)^m. Appending y to both via
        // the final creation and its adjunction reduces m by one.
        int m = w0.n_x();
        Word e0, e1;
        for (int t = 0; t < m - 1; ++t) {
            e0 = e0.appended('x').appended('y');
            e1 = e1.appended('y').appended('x');
        }
        Word expect0, expect1;
        for (int t = 0; t < m; ++t) {
            expect0 = expect0.appended('x').appended('y');
            expect1 = expect1.appended('y').appended('x');
        }
        if (w0 != expect0 || w1 != expect1)
            throw std::logic_error("pairing reduction reached an unexpected shape");
        w0 = e0;
        w1 = e1;
    }
}

}  // namespace focksuture
