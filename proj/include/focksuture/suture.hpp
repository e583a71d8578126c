/**
 * @file suture.hpp
 * @brief The distinguished set C of suture elements: interval elements [u,v],
 *        generation as operator closures of the vacuum, membership testing,
 *        bypass completion, and connecting chains.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "focksuture/diagram.hpp"
#include "focksuture/fock.hpp"
#include "focksuture/word.hpp"

namespace focksuture {

struct SutureElement {
    FockElement element;
    Word wminus, wplus;  // lexicographic first and last words of the support
    bool normalized = false;  // wminus carries coefficient +1

    friend bool operator==(const SutureElement&, const SutureElement&) = default;
};

// Wraps a nonzero element, recording its support extremes; does not check
// that the element actually is a suture element.
SutureElement as_suture(const FockElement& elem);

// The normalized element with extremes (w-, w+): the decomposition of the
// unique chord diagram with those extremes. Throws std::invalid_argument on
// an incomparable pair.
SutureElement interval_element(const Word& wminus, const Word& wplus);

enum class GeneratorFamily { C1, C2, C3 };

// Closure of {1} under the generator family, truncated to total degree <= n:
//   C1: all creations, annihilations and T*;
//   C2: initial creations/annihilations and H;
//   C3: final creations/annihilations and H.
// Exploration allows one degree of slack above n (needed to reach -1 and the
// chord-move reductions). Zero images are discarded. Throws std::length_error
// when the closure exceeds cap elements.
std::set<FockElement> generate_C(int n, GeneratorFamily family, std::size_t cap = 1000000);

// True iff elem equals +-interval_element of its own support extremes.
bool is_suture_element(const FockElement& elem);

// If, after an admissible sign change or swap, <u|v> = 1, <v|u> = 0 and
// u - v is a suture element, returns u - v; otherwise nullopt.
std::optional<SutureElement> bypass_completion(const SutureElement& u, const SutureElement& v);

// A sequence u = v_0, ..., v_k = v in which every consecutive difference is
// a suture element and <v_i|v_j> = 1 for i <= j, built by creating the
// outermost chords of v's diagram one bypass surgery at a time (smallest
// available boundary label first). Requires pairing(u, v) = 1.
std::vector<SutureElement> connecting_chain(const SutureElement& u, const SutureElement& v);

}  // namespace focksuture
