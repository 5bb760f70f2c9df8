#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modsplit/fusion.hpp"
#include "modsplit/intmat.hpp"

namespace modsplit {

// One term of a partition-function block specification. A diagonal block
// |chi_a + chi_b + ...|^2 has left == right; an off-diagonal coupling
// (chi...)(chibar...) sets hermitian to add the transposed term as well.
struct BlockTerm {
    std::vector<Weight> left;
    std::vector<Weight> right;
    int64_t multiplicity = 1;
    bool hermitian = false;
};

struct BlockSpec {
    std::vector<BlockTerm> terms;
};

struct ModularInvariant {
    std::shared_ptr<const FusionRing> ring;
    IntMatrix matrix;      // d_I x d_I, non-negative, M_{0,0} = 1
    std::string name;      // builtin id or "custom"

    int64_t d_G() const { return matrix.trace(); }
    int64_t d_O() const { return (matrix * matrix.transpose()).trace(); }
};

ModularInvariant from_blocks(std::shared_ptr<const FusionRing> ring, const BlockSpec& spec);

// Built-in cases: su3-E5, su3-E5-conj, su3-E9, su3-diagonal-<k>, su2-diagonal-<k>.
ModularInvariant builtin_invariant(const std::string& name);
std::vector<std::string> builtin_invariant_names();

// Structural sanity: non-negative entries, M_{0,0} = 1, positive traces.
void check_invariant(const ModularInvariant& m);

} // namespace modsplit
