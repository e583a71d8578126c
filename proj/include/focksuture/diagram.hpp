/**
 * @file diagram.hpp
 * @brief Non-crossing chord diagrams on a marked circle, their Euler class,
 *        creation/annihilation and rotation, decomposition into word sums,
 *        bypass surgeries, stackability, and gluing.
 *
 * A diagram has 2m points labelled 0..2m-1 clockwise with the basepoint just
 * before point 0; every chord joins an even point to an odd one and chords do
 * not cross. The arc j of the circle runs from point j to point j+1 (mod 2m);
 * regions of the complement correspond to the orbits of
 * j -> match[(j+1) mod 2m] on arcs, and all arcs of a region share parity.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "focksuture/fock.hpp"
#include "focksuture/word.hpp"

namespace focksuture {

struct ChordDiagram {
    int m = 0;               // number of chords
    std::vector<int> match;  // match[i] = the point joined to i; size 2m

    int partner(int i) const { return match[i]; }
    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
    friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) {
        if (auto c = a.m <=> b.m; c != 0) return c;
        return a.match <=> b.match;
    }
};

// Throws std::invalid_argument unless match is a fixed-point-free involution
// joining even points to odd ones without crossings.
void validate(const ChordDiagram& d);

// All Catalan(m) non-crossing diagrams with m chords, sorted.
std::vector<ChordDiagram> enumerate_diagrams(int m);

// Arc orbits, one sorted vector of arc indices per region; regions are
// ordered by their smallest arc.
std::vector<std::vector<int>> regions(const ChordDiagram& d);

// Number of positive (even-arc) regions minus number of negative ones.
int euler_class(const ChordDiagram& d);

// The grading carried by a diagram: n_x + n_y = m - 1 and
// n_y - n_x = euler_class.
int diagram_n_x(const ChordDiagram& d);
int diagram_n_y(const ChordDiagram& d);

// The vacuum diagram (one chord) and the basis diagram of a word, obtained
// by applying the initial creation of each letter, last letter first.
ChordDiagram vacuum_diagram();
ChordDiagram basis_diagram(const Word& w);

// Inverse of basis_diagram; throws std::invalid_argument if the diagram does
// not decompose to a single word.
Word basis_word(const ChordDiagram& d);

// Diagram-level creation a*_{s,i} (s in x,y,-,+; i in 0..n_s+1): inserts a
// new chord next to the i'th block of the sign sequence, matching the word
// operator under decomposition.
ChordDiagram diagram_create(char s, int i, const ChordDiagram& d);

// Diagram-level annihilation: caps off the strands addressed by the index so
// that the word operator is matched under decomposition. Returns nullopt when
// the capping closes a contractible loop (the operator gives zero).
std::optional<ChordDiagram> diagram_annihilate(char s, int i, const ChordDiagram& d);

// Rotation by one point pair against the clockwise labelling: k -> k-2
// (mod 2m). Satisfies decompose(rotate(d)) = +-H(decompose(d)).
ChordDiagram rotate(const ChordDiagram& d);

// Decomposition into a signed sum of words by resolving at the basepoint;
// the lexicographically first word always has coefficient +1, and basis
// diagrams decompose to their single word. Cached per diagram size.
FockElement decompose(const ChordDiagram& d);

// Lexicographic extremes (w-, w+) of the support of decompose(d).
std::pair<Word, Word> pair_of(const ChordDiagram& d);

// The unique diagram with the given extremes (w- <= w+ in one grading);
// throws std::invalid_argument if none exists. Cached per diagram size.
ChordDiagram diagram_of_pair(const Word& wminus, const Word& wplus);

/**
 * An attaching arc for bypass surgery: it crosses the distinct chords
 * c1, c2, c3 in order, with the segment c1..c2 in region r1 and the segment
 * c2..c3 in region r2 (the other region of c2). Chords are named by their
 * smallest point, regions by their smallest arc.
 */
struct BypassArc {
    int c1, r1, c2, r2, c3;
    friend bool operator==(const BypassArc&, const BypassArc&) = default;
    friend auto operator<=>(const BypassArc&, const BypassArc&) = default;
};

// All valid attaching arcs of the diagram, sorted.
std::vector<BypassArc> enumerate_bypass_arcs(const ChordDiagram& d);

enum class BypassDirection { up, down };

// The two nontrivial surgeries along the arc. Point labels are unchanged
// (the basepoint never lies inside the surgery hexagon); the result is again
// non-crossing with even-odd chords.
ChordDiagram bypass_surgery(const ChordDiagram& d, const BypassArc& arc, BypassDirection dir);

// Whether the two diagrams glue to a connected sutured surface when d1 is
// stacked on top of d0 (same number of chords required). Not symmetric.
bool stackable(const ChordDiagram& d0, const ChordDiagram& d1);

// Glues the root of d0 (point 2 n_y + 1) to the basepoint of d1; the two
// chords at the gluing merge into one. Under decomposition this realizes
// concatenation of words.
ChordDiagram diagram_concat(const ChordDiagram& d0, const ChordDiagram& d1);

// A one-line text rendering: matching parentheses around the circle cut at
// the basepoint, with the point signs below.
std::string render_ascii(const ChordDiagram& d);

// A standalone SVG drawing of the marked circle and its chords.
std::string render_svg(const ChordDiagram& d);

}  // namespace focksuture
