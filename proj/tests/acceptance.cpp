// Acceptance gate: twelve exact criteria, one pass/fail line each, run at the
// full design caps. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "focksuture/verify.hpp"

using namespace focksuture;

namespace {

struct Criterion {
    const char* label;
    std::vector<std::string> suites;
    int max_n;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 periodicity: H^{n+1} sign and multiplicative order, n <= 9", {"periodicity"}, 9},
        {"2 Q formulas: printed examples and two-sided inverses, n <= 8", {"q-formulas"}, 8},
        {"3 intertwining: dot via Q and duality via H, n <= 7", {"intertwining"}, 7},
        {"4 four-route H agreement, n <= 8", {"h-routes"}, 8},
        {"5 counting: Catalan diagrams, pair bijection, closure sizes, n <= 7", {"counting"}, 7},
        {"6 stacking equals nonzero pairing, m <= 6", {"stacking"}, 9},
        {"7 bypass triples and elementary-move completions, m <= 6", {"bypass"}, 9},
        {"8 suture element structure, m <= 7", {"suture-structure"}, 9},
        {"9 generator families agree and contain -1, n <= 6", {"closure-families"}, 9},
        {"10 rotation realizes duality with calibrated signs, m <= 6", {"rotation-duality"}, 9},
        {"11 Temperley-Lieb and simplicial identities, n <= 7",
         {"temperley-lieb", "operator-relations"}, 7},
        {"12 full-rank signed pairing with stackable support, n <= 5", {"full-rank"}, 9},
    };

    bool all = true;
    for (const Criterion& cr : criteria) {
        VerifyOptions o;
        o.max_n = cr.max_n;
        bool pass = true;
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        for (const std::string& suite : cr.suites) {
            VerificationReport r = run_suite(suite, o);
            for (const CheckResult& c : r.checks)
                if (!c.pass) {
                    pass = false;
                    if (why.empty()) why = suite + "/" + c.name + ": " + c.counterexample;
                }
        }
        auto t1 = std::chrono::steady_clock::now();
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::printf("%s  criterion %s (%ld ms)\n", pass ? "PASS" : "FAIL", cr.label, ms);
        if (!pass) std::printf("      %s\n", why.c_str());
        all = all && pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
    return all ? 0 : 1;
}
