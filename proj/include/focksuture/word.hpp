/**
 * @file word.hpp
 * @brief Words over the two-letter alphabet {x,y}, their gradings, combinatorial
 *        profiles, the partial order on words, and related enumeration.
 *
 * A word is stored bit-packed (x = 0, y = 1), most significant bit first, so
 * that for words of equal length the integer order on the bits equals
 * lexicographic order with x before y. Lengths up to 62 are supported.
 *
 * Alongside the Word type this header provides:
 * - profiles f/g/h counting letter positions (WordProfile),
 * - the partial order leq and the difference/min/max operations it induces,
 * - block decomposition of a pair of words into comparable blocks,
 * - elementary moves, word enumeration and comparable-pair enumeration,
 * - single-word creation/annihilation used by the operator algebra.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace focksuture {

constexpr int kMaxWordLength = 62;

struct Word {
    int n = 0;           // length
    uint64_t bits = 0;   // letter i (0-based, from the left) at bit (n-1-i); x=0, y=1

    // Letter access as 'x' or 'y'.
    char at(int i) const;
    bool is_y(int i) const { return ((bits >> (n - 1 - i)) & 1u) != 0; }

    int n_x() const;
    int n_y() const;
    int euler() const { return n_y() - n_x(); }  // e = n_y - n_x

    bool empty() const { return n == 0; }

    Word appended(char s) const;   // w s
    Word prepended(char s) const;  // s w

    // Position (1-based) of the i'th occurrence of s, i in 1..n_s.
    int position_of(char s, int i) const;

    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.bits <=> b.bits;
    }
    friend bool operator==(const Word&, const Word&) = default;
};

// Parses text over {x,y} or {-,+} (ASCII '-' or UTF-8 minus sign); the two
// alphabets must not be mixed. Empty text yields the vacuum (empty word).
// Throws std::invalid_argument on bad input.
Word parse_word(const std::string& text);

// Canonical display over {x,y}.
std::string to_string(const Word& w);
// Display over {-,+} (x as '-', y as '+').
std::string to_signs(const Word& w);

struct WordProfile {
    std::vector<int> f_x, f_y;  // f_s(i): opposite letters strictly left of the i'th s
    std::vector<int> g_x, g_y;  // g_s(i): s's among the first i letters
    std::vector<int> h_x, h_y;  // h_s(i): position of the i'th s
};

WordProfile profile(const Word& w);

// Partial order: true iff w0, w1 share (n_x, n_y) and h_x(w0) <= h_x(w1)
// pointwise. Words in different gradings are incomparable.
bool leq(const Word& w0, const Word& w1);

// d(w0, w1) = sum_i h_x(w1)(i) - h_x(w0)(i). Throws on grading mismatch.
int word_difference(const Word& w0, const Word& w1);

// (w-, w+) with h_x(w-) the pointwise minimum and h_x(w+) the pointwise
// maximum of the two profiles. Throws on grading mismatch.
std::pair<Word, Word> min_max(const Word& w0, const Word& w1);

struct BlockDecomposition {
    // Pairs of sub-words in matching gradings. For even block index
    // first <= second, for odd block index second <= first. Only the
    // outermost blocks may be empty.
    std::vector<std::pair<Word, Word>> blocks;
};

BlockDecomposition block_decompose(const Word& w0, const Word& w1);

enum class MoveDirection { forwards, backwards };

// All words reachable by one elementary move: forwards replaces a substring
// x^a y^b (a,b >= 1) by y^b x^a, backwards the reverse. Deduplicated,
// lexicographically sorted.
std::vector<Word> elementary_moves(const Word& w, MoveDirection direction);

// All binom(n, n_x) words of the grading, lexicographic order (x before y).
std::vector<Word> enumerate_words(int n_x, int n_y);

// All pairs (w-, w+) with w- <= w+ in the grading; the count is the
// Narayana-type number N_n^e obtained by enumeration.
std::vector<std::pair<Word, Word>> comparable_pairs(int n_x, int n_y);

// Word-level creation operator a*_{s,i}, index i in 0..n_s+1:
//   i = 0 prepends s, i = n_s+1 appends s, otherwise the i'th s becomes ss.
// Throws std::out_of_range on a bad index.
Word word_create(char s, int i, const Word& w);

// Word-level annihilation a_{s,i}, index i in 0..n_s+1:
//   i = 0 deletes a leading s (nullopt, i.e. 0, if w does not begin with s),
//   i = n_s+1 symmetric at the end, otherwise deletes the i'th s.
// Throws std::out_of_range on a bad index.
std::optional<Word> word_annihilate(char s, int i, const Word& w);

}  // namespace focksuture
