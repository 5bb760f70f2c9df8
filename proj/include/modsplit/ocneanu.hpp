#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "modsplit/chiral.hpp"

namespace modsplit {

// The quantum symmetry algebra in its defining basis: one matrix O_x per
// z-slot, with O_x O_y = sum_z (O_y)_{xz} O_z (mind the index order; the
// algebra need not be commutative).
struct OcneanuAlgebra {
    std::vector<IntMatrix> O;
    bool commutative = true;
    int left_gen_slot = -1, left_conj_slot = -1;
    int right_gen_slot = -1, right_conj_slot = -1;
};

// Step 3: reconstruct every O_x from the chiral generators. Slots whose toric
// matrix is multiplicity-free are read off the double toric family directly;
// the rest are pinned by multiplying resolved elements with generators and by
// the class sums, with exact consistency checks along the way.
OcneanuAlgebra close_algebra(const FusionRing& ring, const ToricLedger& ledger,
                             const GeneratorSet& gen, const DoubleFusionFamily& fam);

struct CompatReport {
    bool ok = true;
    size_t checks = 0;
    std::vector<std::string> failures;
};

// The compatibility identities: O_x V = V O_x = sum_z V_{xz} O_z for the four
// fundamental double fusion matrices, the reconstruction of every W_{yy'}
// from the O coefficients, and the Z_n grading of generator edges.
CompatReport verify_compatibility(const FusionRing& ring, const ToricLedger& ledger,
                                  const GeneratorSet& gen, const DoubleFusionFamily& fam,
                                  const OcneanuAlgebra& alg);

// Cayley-graph view used for reports and DOT export.
struct OcneanuGraph {
    int d_O = 0;
    std::vector<std::string> generator_names;
    std::vector<std::vector<std::tuple<int, int, int64_t>>> edges;   // per generator
    std::vector<int> chiral;                                         // dashed pairing
    std::vector<int> nality;
    std::vector<int> slot_entry;
};

OcneanuGraph assemble_graph(const GeneratorSet& gen, const FusionRing& ring);

} // namespace modsplit
