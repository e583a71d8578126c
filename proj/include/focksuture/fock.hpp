/**
 * @file fock.hpp
 * @brief Integer formal sums of words, the two bilinear forms, the operator
 *        algebra (creation/annihilation, derivatives, differentials,
 *        Temperley-Lieb operators), symbolic operator specs with a normal
 *        form, and Gram matrices of the pairing.
 *
 * All coefficient arithmetic is 64-bit with explicit overflow checks; an
 * overflow raises std::overflow_error rather than wrapping.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "focksuture/word.hpp"

namespace focksuture {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

/**
 * A finite integer combination of words, stored as a sorted association list
 * (lexicographic within each length); zero coefficients are never stored.
 */
class FockElement {
  public:
    FockElement() = default;

    static FockElement zero() { return FockElement{}; }
    static FockElement vacuum() { return single(Word{}, 1); }
    static FockElement single(const Word& w, int64_t coeff);

    const std::vector<std::pair<Word, int64_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int64_t coeff(const Word& w) const;

    friend bool operator==(const FockElement&, const FockElement&) = default;
    friend auto operator<=>(const FockElement& a, const FockElement& b) {
        return a.terms_ <=> b.terms_;
    }

  private:
    std::vector<std::pair<Word, int64_t>> terms_;
    friend FockElement add(const FockElement&, const FockElement&);
    friend FockElement scale(const FockElement&, int64_t);
    friend FockElement map_words(const FockElement&,
                                 const std::vector<std::pair<Word, int64_t>>&);
};

FockElement add(const FockElement& u, const FockElement& v);
FockElement negate(const FockElement& u);
FockElement scale(const FockElement& u, int64_t k);
inline FockElement operator+(const FockElement& u, const FockElement& v) { return add(u, v); }
inline FockElement operator-(const FockElement& u, const FockElement& v) { return add(u, negate(v)); }
inline FockElement operator-(const FockElement& u) { return negate(u); }

// Concatenation product, extended bilinearly.
FockElement mul(const FockElement& u, const FockElement& v);

// Bilinear extension of the boolean partial order: on words,
// pairing(w0, w1) = 1 iff w0 <= w1, else 0 (cross-grading pairs give 0).
int64_t pairing(const FockElement& u, const FockElement& v);

// The orthonormal form: sum over shared words of coefficient products.
int64_t dot(const FockElement& u, const FockElement& v);

// Linear extensions of the word-level operators. The index must be valid for
// every word of the element (std::out_of_range otherwise).
FockElement create(char s, int i, const FockElement& elem);
FockElement annihilate(char s, int i, const FockElement& elem);

// a_s = sum_{i=1}^{n_s} a_{s,i} (partial differentiation by the symbol s).
FockElement derivative(char s, const FockElement& elem);

// d_s = sum_{i=1}^{n_s} (-1)^i a_{s,i}; satisfies d_s^2 = 0.
FockElement differential(char s, const FockElement& elem);

// Temperley-Lieb style operators, 0 <= i <= n_s:
//   T_{s,i} = a_{s,i} - a_{s,i+1},  T*_{s,i} = a*_{s,i} - a*_{s,i+1},
//   U_{s,i} = T*_{s,i} a_{s,i+1}.
FockElement T(char s, int i, const FockElement& elem);
FockElement Tstar(char s, int i, const FockElement& elem);
FockElement U(char s, int i, const FockElement& elem);

struct OpAtom {
    enum Kind { Create, Annihilate, TOp, TstarOp, UOp, H, Hinv, Scalar } kind;
    char species = 'x';  // for the indexed operators
    int index = 0;
    int64_t k = 1;       // for Scalar
    friend bool operator==(const OpAtom&, const OpAtom&) = default;
};

/**
 * A symbolic composition of operators; atoms are applied right-to-left, i.e.
 * in the order operator compositions are written.
 */
struct OperatorSpec {
    std::vector<OpAtom> atoms;
    friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

// Text grammar, whitespace separated, applied right-to-left:
//   a(s,i)  a*(s,i)  T(s,i)  T*(s,i)  U(s,i)  H  H^-1  <integer scalar>
// with s one of x,y,-,+.
OperatorSpec parse_operator_spec(const std::string& text);
std::string to_string(const OperatorSpec& spec);

FockElement apply(const OperatorSpec& spec, const FockElement& elem);

// Rewrites a single-species composition of creations/annihilations into the
// equivalent annihilate-then-create form a*_{i_1}..a*_{i_k} a_{j_1}..a_{j_l}
// with i_1 > ... > i_k and j_1 >= ... >= j_l. Throws std::invalid_argument on
// mixed species or non create/annihilate atoms.
OperatorSpec normal_form(const OperatorSpec& spec);

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<int64_t> a;  // row-major

    int64_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int64_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static IntMatrix identity(int d);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);

// Exact determinant (fraction-free elimination).
int64_t det(const IntMatrix& M);

enum class GramFlavor { pairing, dot };

struct GramMatrix {
    int n_x = 0, n_y = 0;
    GramFlavor flavor = GramFlavor::pairing;
    std::vector<Word> words;  // lexicographic basis
    IntMatrix mat;            // mat(i,j) = form(words[i], words[j])
};

GramMatrix gram(int n_x, int n_y, GramFlavor flavor);

// Evaluates the pairing by the symbolic reduction that characterizes it:
// grading orthogonality, the two partial adjunctions, and normalization at
// the vacuum. Every word pair reduces to the vacuum case; used to certify
// that those properties determine the form.
int64_t pairing_by_reduction(const Word& w0, const Word& w1);

}  // namespace focksuture
