#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "modsplit/splitting.hpp"

namespace modsplit {

// Fundamental double fusion generators at slot level, plus the chiral
// conjugation. VL is V_{f0} and VR is V_{0f} for the first fundamental f;
// conjugate-generator matrices are their transposes.
struct GeneratorSet {
    IntMatrix VL;
    IntMatrix VR;
    std::vector<int> C;            // involutive slot permutation, VR = C VL C
    std::vector<int> slot_entry;   // slot -> ledger entry
    std::vector<int> slot_nality;  // Z_n grade carried by each slot
    int left_gen_slot = -1;        // slot whose algebra element is f_L
    int right_gen_slot = -1;
    int left_conj_slot = -1;       // f_L^*
    int right_conj_slot = -1;
    std::vector<IntMatrix> V_left; // V_{lambda 0} recursion, reused downstream
};

struct ChiralStats {
    int64_t fill_nodes = 0;          // DFS nodes while distributing slot coefficients
    int64_t fillings = 0;            // complete VL candidates
    int64_t recursion_ok = 0;        // VL candidates whose fusion recursion stays non-negative
    int64_t conj_candidates = 0;     // involutions satisfying the exact row/column data
    int64_t commuting = 0;           // ... that also commute left against right
    int64_t validated = 0;           // candidates accepted by the downstream validator
    bool probe_complete = false;     // ambiguity probe exhausted the search space
    int64_t probe_rejects = 0;       // gauge-inequivalent candidates rejected downstream
};

struct ChiralOptions {
    int64_t fill_node_cap = 200000000;
    int probe_extra_validations = 8; // gauge-inequivalent candidates to test after the first hit
    bool probe = true;
};

// Step 2: distribute the matrix-space expansion coefficients over multiplicity
// slots and find the chiral conjugation. Candidates are produced in a fixed
// canonical order (gauge copies suppressed); the first one accepted by
// `validate` wins. A later gauge-inequivalent candidate that also validates is
// a genuine ambiguity and raises.
GeneratorSet solve_generators(const ToricLedger& ledger, const KFamily& kf,
                              const std::function<bool(const GeneratorSet&)>& validate,
                              const ChiralOptions& opts = {}, ChiralStats* stats = nullptr);

// The expanded double fusion family: V_{lambda 0}, V_{0 mu} for every alcove
// weight, and all double toric matrices W_{xy}.
struct DoubleFusionFamily {
    std::vector<IntMatrix> V_left;    // index = weight
    std::vector<IntMatrix> V_right;
    std::vector<IntMatrix> W;         // index = x * d_O + y, each d_I x d_I
    int d_O = 0;

    const IntMatrix& Wxy(int x, int y) const { return W[size_t(x) * d_O + y]; }
};

DoubleFusionFamily expand_family(const FusionRing& ring, const GeneratorSet& gen);

struct DoubleFusionReport {
    bool ok = true;
    std::vector<std::string> failures;
    size_t checks = 0;
};

// Exact checks on the expanded family: W_{00} = M, the slot reindexing
// identity between W_{0z} and W_{z0}, transpose symmetry, the fusion-algebra
// structure of V_{lambda 0}, and the double fusion equation on fundamental
// weight pairs for every (x, y).
DoubleFusionReport verify_double_fusion(const FusionRing& ring, const ToricLedger& ledger,
                                        const GeneratorSet& gen, const DoubleFusionFamily& fam);

} // namespace modsplit
