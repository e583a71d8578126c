#include "focksuture/word.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace focksuture {

char Word::at(int i) const {
    if (i < 0 || i >= n) throw std::out_of_range("Word::at: index out of range");
    return is_y(i) ? 'y' : 'x';
}

int Word::n_y() const {
    return static_cast<int>(__builtin_popcountll(bits));
}

int Word::n_x() const {
    return n - n_y();
}

static void check_length(int n) {
    if (n > kMaxWordLength) throw std::length_error("word length exceeds 62");
}

static uint64_t letter_bit(char s) {
    if (s == 'x' || s == '-') return 0;
    if (s == 'y' || s == '+') return 1;
    throw std::invalid_argument(std::string("unknown letter: ") + s);
}

Word Word::appended(char s) const {
    check_length(n + 1);
    return Word{n + 1, (bits << 1) | letter_bit(s)};
}

Word Word::prepended(char s) const {
    check_length(n + 1);
    return Word{n + 1, bits | (letter_bit(s) << n)};
}

int Word::position_of(char s, int i) const {
    bool want_y = letter_bit(s) != 0;
    int seen = 0;
    for (int p = 0; p < n; ++p) {
        if (is_y(p) == want_y && ++seen == i) return p + 1;
    }
    throw std::out_of_range("position_of: fewer occurrences than requested");
}

Word parse_word(const std::string& text) {
    Word w;
    bool saw_xy = false, saw_signs = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        // Accept the UTF-8 minus sign U+2212 (0xE2 0x88 0x92) as '-'.
        if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            c = '-';
            i += 2;
        }
        switch (c) {
            case 'x': case 'y': saw_xy = true; break;
            case '-': case '+': saw_signs = true; break;
            default:
                throw std::invalid_argument("parse_word: invalid character in \"" + text + "\"");
        }
        if (saw_xy && saw_signs)
            throw std::invalid_argument("parse_word: mixed {x,y} and {-,+} alphabets");
        w = w.appended(c == '-' ? 'x' : c == '+' ? 'y' : c);
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.n);
    for (int i = 0; i < w.n; ++i) s.push_back(w.is_y(i) ? 'y' : 'x');
    return s;
}

std::string to_signs(const Word& w) {
    std::string s;
    s.reserve(w.n);
    for (int i = 0; i < w.n; ++i) s.push_back(w.is_y(i) ? '+' : '-');
    return s;
}

WordProfile profile(const Word& w) {
    WordProfile p;
    int cx = 0, cy = 0;
    for (int i = 0; i < w.n; ++i) {
        if (w.is_y(i)) {
            ++cy;
            p.f_y.push_back(cx);
            p.h_y.push_back(i + 1);
        } else {
            ++cx;
            p.f_x.push_back(cy);
            p.h_x.push_back(i + 1);
        }
        p.g_x.push_back(cx);
        p.g_y.push_back(cy);
    }
    return p;
}

bool leq(const Word& w0, const Word& w1) {
    if (w0.n != w1.n) return false;
    // h_x(w0) <= h_x(w1) pointwise is equivalent to g_x(w0) >= g_x(w1) at
    // every prefix, given equal gradings.
    int c0 = 0, c1 = 0;
    for (int i = 0; i < w0.n; ++i) {
        if (!w0.is_y(i)) ++c0;
        if (!w1.is_y(i)) ++c1;
        if (c0 < c1) return false;
    }
    return c0 == c1;  // equal n_x, hence equal grading
}

static void require_same_grading(const Word& w0, const Word& w1) {
    if (w0.n != w1.n || w0.n_x() != w1.n_x())
        throw std::invalid_argument("words lie in different gradings");
}

int word_difference(const Word& w0, const Word& w1) {
    require_same_grading(w0, w1);
    int d = 0;
    for (int i = 0; i < w0.n; ++i) {
        if (!w0.is_y(i)) d -= i + 1;
        if (!w1.is_y(i)) d += i + 1;
    }
    return d;
}

static Word word_from_x_positions(int n, const std::vector<int>& hx) {
    Word w{n, 0};
    uint64_t bits = (n == 64) ? ~0ull : ((1ull << n) - 1);  // all y
    for (int pos : hx) bits &= ~(1ull << (n - pos));
    w.bits = bits;
    return w;
}

std::pair<Word, Word> min_max(const Word& w0, const Word& w1) {
    require_same_grading(w0, w1);
    WordProfile p0 = profile(w0), p1 = profile(w1);
    std::vector<int> lo, hi;
    for (size_t i = 0; i < p0.h_x.size(); ++i) {
        lo.push_back(std::min(p0.h_x[i], p1.h_x[i]));
        hi.push_back(std::max(p0.h_x[i], p1.h_x[i]));
    }
    return {word_from_x_positions(w0.n, lo), word_from_x_positions(w0.n, hi)};
}

static Word subword(const Word& w, int from, int to) {  // letters [from, to)
    Word r;
    for (int i = from; i < to; ++i) r = r.appended(w.is_y(i) ? 'y' : 'x');
    return r;
}

BlockDecomposition block_decompose(const Word& w0, const Word& w1) {
    require_same_grading(w0, w1);
    int n = w0.n;
    // D(i) = g_x(w0)(i) - g_x(w1)(i); D >= 0 on a stretch means w0-part <= w1-part.
    std::vector<int> D(n + 1, 0);
    {
        int c0 = 0, c1 = 0;
        for (int i = 0; i < n; ++i) {
            if (!w0.is_y(i)) ++c0;
            if (!w1.is_y(i)) ++c1;
            D[i + 1] = c0 - c1;
        }
    }
    // Cut at the zero positions separating runs of opposite sign; runs of the
    // same sign separated by zeros stay in one block.
    std::vector<int> cuts{0};
    int prev_sign = 0;
    int pending_zero = -1;
    for (int i = 1; i <= n; ++i) {
        if (D[i] == 0) {
            if (pending_zero < 0) pending_zero = i;
            continue;
        }
        int sign = D[i] > 0 ? 1 : -1;
        if (prev_sign != 0 && sign != prev_sign && pending_zero >= 0) cuts.push_back(pending_zero);
        prev_sign = sign;
        pending_zero = -1;
    }
    cuts.push_back(n);

    BlockDecomposition bd;
    // Determine the direction of the first nonzero run; if it is negative,
    // prepend an empty block so that even blocks satisfy first <= second.
    int first_sign = 0;
    for (int i = 1; i <= n && first_sign == 0; ++i)
        if (D[i] != 0) first_sign = D[i] > 0 ? 1 : -1;
    if (first_sign < 0) bd.blocks.push_back({Word{}, Word{}});
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        if (cuts[k] == cuts[k + 1]) continue;
        bd.blocks.push_back({subword(w0, cuts[k], cuts[k + 1]), subword(w1, cuts[k], cuts[k + 1])});
    }
    if (bd.blocks.empty()) bd.blocks.push_back({w0, w1});  // equal words
    return bd;
}

std::vector<Word> elementary_moves(const Word& w, MoveDirection direction) {
    std::set<Word> out;
    int n = w.n;
    bool fw = direction == MoveDirection::forwards;
    // A forwards move picks a substring x^a y^b (a,b >= 1) and replaces it by
    // y^b x^a; backwards is the mirror image.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // substring letters [i, j]; check the run shape
            int a = 0, b = 0, k = i;
            bool first_is_y = fw ? false : true;
            while (k <= j && w.is_y(k) == first_is_y) { ++a; ++k; }
            while (k <= j && w.is_y(k) != first_is_y) { ++b; ++k; }
            if (k != j + 1 || a == 0 || b == 0) continue;
            Word r;
            for (int t = 0; t < i; ++t) r = r.appended(w.is_y(t) ? 'y' : 'x');
            for (int t = 0; t < b; ++t) r = r.appended(first_is_y ? 'x' : 'y');
            for (int t = 0; t < a; ++t) r = r.appended(first_is_y ? 'y' : 'x');
            for (int t = j + 1; t < n; ++t) r = r.appended(w.is_y(t) ? 'y' : 'x');
            out.insert(r);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Word> enumerate_words(int n_x, int n_y) {
    if (n_x < 0 || n_y < 0) throw std::invalid_argument("negative letter count");
    int n = n_x + n_y;
    check_length(n);
    std::vector<Word> out;
    if (n_y == 0) { out.push_back(Word{n, 0}); return out; }
    // Ascending integer order on the packed bits is lexicographic order; walk
    // the n_y-subsets with Gosper's hack.
    uint64_t v = (1ull << n_y) - 1;
    uint64_t limit = (n == 64) ? ~0ull : (1ull << n);
    while (v < limit) {
        out.push_back(Word{n, v});
        uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
    }
    return out;
}

std::vector<std::pair<Word, Word>> comparable_pairs(int n_x, int n_y) {
    std::vector<Word> words = enumerate_words(n_x, n_y);
    std::vector<std::pair<Word, Word>> out;
    for (const Word& a : words)
        for (const Word& b : words)
            if (leq(a, b)) out.push_back({a, b});
    return out;
}

Word word_create(char s, int i, const Word& w) {
    bool want_y = letter_bit(s) != 0;
    int ns = want_y ? w.n_y() : w.n_x();
    if (i < 0 || i > ns + 1) throw std::out_of_range("creation index out of range");
    if (i == 0) return w.prepended(s);
    if (i == ns + 1) return w.appended(s);
    int pos = w.position_of(want_y ? 'y' : 'x', i);  // 1-based
    Word r;
    for (int t = 0; t < w.n; ++t) {
        r = r.appended(w.is_y(t) ? 'y' : 'x');
        if (t + 1 == pos) r = r.appended(want_y ? 'y' : 'x');
    }
    return r;
}

std::optional<Word> word_annihilate(char s, int i, const Word& w) {
    bool want_y = letter_bit(s) != 0;
    int ns = want_y ? w.n_y() : w.n_x();
    if (i < 0 || i > ns + 1) throw std::out_of_range("annihilation index out of range");
    int pos;  // 1-based position of the letter to delete
    if (i == 0) {
        if (w.n == 0 || w.is_y(0) != want_y) return std::nullopt;
        pos = 1;
    } else if (i == ns + 1) {
        if (w.n == 0 || w.is_y(w.n - 1) != want_y) return std::nullopt;
        pos = w.n;
    } else {
        pos = w.position_of(want_y ? 'y' : 'x', i);
    }
    Word r;
    for (int t = 0; t < w.n; ++t)
        if (t + 1 != pos) r = r.appended(w.is_y(t) ? 'y' : 'x');
    return r;
}

}  // namespace focksuture
