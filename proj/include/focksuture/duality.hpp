/**
 * @file duality.hpp
 * @brief The duality operator H relating the pairing and the dot product,
 *        together with the sign-reversal operators Q and several independent
 *        ways of computing H (definition via Q, explicit term criterion,
 *        block expansion, recursive minor assembly, commutator series),
 *        its periodicity, and the pawn cycle of interval elements.
 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "focksuture/fock.hpp"
#include "focksuture/word.hpp"

namespace focksuture {

// Indices i (1-based among the occurrences of s) such that the i'th s is
// immediately followed by the opposite letter.
std::vector<int> exceptional_set(const Word& w, char s);

// Swaps, for each i in T, the i'th s with the opposite letter following it.
// Every i must lie in exceptional_set(w, s); the swapped pairs are disjoint.
Word psi(const Word& w, char s, const std::vector<int>& T);

// Q- w = sum over subsets T of the exceptional x-set of (-1)^|T| psi_T w,
// Q+ w the same with the exceptional y-set; extended linearly.
FockElement Q_minus(const FockElement& elem);
FockElement Q_plus(const FockElement& elem);

// Inverses: Q+^-1 w = sum of all words <= w, Q-^-1 w = sum of all words >= w.
FockElement Q_plus_inv(const FockElement& elem);
FockElement Q_minus_inv(const FockElement& elem);

// H = Q+ Q-^-1 and its inverse Q- Q+^-1. Both satisfy
//   <u|v> = <v|H u> = <H^-1 v|u>   and   u.v = <u|Q+ v> = <Q- u|v>.
// Backed by a per-grading matrix cache (thread safe).
FockElement H_apply(const FockElement& elem);
FockElement H_inv(const FockElement& elem);

// The cached matrix of H on the lexicographic basis of a grading.
struct GradedMatrix {
    std::vector<Word> words;
    IntMatrix mat;  // column j = image of words[j]
};
const GradedMatrix& H_matrix(int n_x, int n_y);

// H(w) computed directly from the term criterion: v appears iff for every
// exceptional x-index i of v, f_v^x(i) = f_w^x(i) - 1, and for every other
// x-index f_v^x(i) >= f_w^x(i); the coefficient is (-1)^(#exceptional).
FockElement H_terms_explicit(const Word& w);

// H(w) from the run decomposition w = x^{a_1} y^{b_1} ... x^{a_k} y^{b_k}
// (a_1 or b_k may vanish): for k = 1 the single monomial y^b x^a, otherwise
// a signed sum of 2^(k-1) words indexed by the segmentations of the runs.
FockElement H_block_expansion(const Word& w);

// The matrix of H assembled recursively from the gradings (n_x, n_y - 1):
// the rows starting with y reproduce columns of the smaller matrix, the rows
// x^{j+1} y ... against columns x^j y x ... contribute a negated smaller
// matrix, and all remaining entries vanish. Independently memoized; bases
// are lexicographic, matching H_matrix.
IntMatrix H_recursive_matrix(int n_x, int n_y);

// H as the finite sum over i >= 0 of
//   [a*_{y,0} H a_{x,0}, (a*_{x,0})^{i+1}] a_{y,0} (a_{x,0})^i.
FockElement H_commutator_series(const FockElement& elem);

// Order of H on the grading: 1 when the grading is one dimensional
// (n_x = 0 or n_y = 0), 2(n+1) when n_x and n_y are both odd (then
// H^{n+1} = -1), and n+1 otherwise, where n = n_x + n_y.
int H_order(int n_x, int n_y);

// Sign of H^{n+1} on the grading: (-1)^(n_x n_y).
int H_power_sign(int n_x, int n_y);

// The cycle w_1 = y^{n_y} x^{n_x}, ..., w_n = x^{n_x} y^{n_y} in which every
// step simultaneously moves each x with a y immediately to its left one
// place left. Returns the n words in step order (a single word if the
// grading is one dimensional).
std::vector<Word> pawn_cycle(int n_x, int n_y);

}  // namespace focksuture
