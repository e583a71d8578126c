/**
 * @file verify.hpp
 * @brief The verification harness: named suites of exhaustive checks over the
 *        whole library, with per-check results and timings, plus the greedy
 *        full-rank alternative-pairing construction.
 *
 * Every suite has an internal size cap chosen so that running all suites at
 * the default max_n finishes quickly; the effective cap of each check is the
 * minimum of the suite cap and VerifyOptions::max_n (diagram suites read the
 * chord count m as max_n + 1). Raising max_n therefore scales every suite up
 * to its designed limit.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "focksuture/diagram.hpp"
#include "focksuture/fock.hpp"

namespace focksuture {

struct VerifyOptions {
    int max_n = 6;       // word-length cap; diagram suites use m <= max_n + 1
    uint64_t seed = 0;   // PRNG seed for the sampled checks
    int jobs = 1;        // worker threads across suites (within-suite is sequential)
};

struct CheckResult {
    std::string name;            // stable identifier of the property checked
    std::string params;          // human-readable caps, e.g. "n <= 6"
    bool pass = false;
    std::string counterexample;  // empty when the check passes
    double millis = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// The registered suite names, in the canonical run order.
std::vector<std::string> suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts = {});

// Runs every suite (opts.jobs of them concurrently).
std::vector<VerificationReport> run_all(const VerifyOptions& opts = {});

/**
 * A {-1,0,1}-matrix indexed by the diagrams with n chords whose support is
 * exactly the stackable pairs and whose rational rank is full. Off-diagonal
 * entries of stackable pairs are +1; the diagonal signs are chosen greedily
 * so that forward elimination never meets a zero pivot.
 */
struct SignedPairingMatrix {
    int n = 0;
    std::vector<ChordDiagram> diagrams;  // sorted enumeration order
    IntMatrix mat;
};

SignedPairingMatrix construct_full_rank_pairing(int n);

// Rank of an integer matrix over the rationals, computed modulo a 61-bit
// prime (valid for entries far below the prime, as here).
int matrix_rank(const IntMatrix& mat);

}  // namespace focksuture
