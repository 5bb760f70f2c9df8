#include "doctest.h"

#include <numeric>

#include "modsplit/ocneanu.hpp"

using namespace modsplit;

namespace {

struct Solved {
    ModularInvariant inv;
    ToricLedger ledger;
    GeneratorSet gen;
    DoubleFusionFamily fam;
    OcneanuAlgebra alg;
    ChiralStats stats;
};

Solved solve_case(const std::string& name) {
    Solved s{builtin_invariant(name), {}, {}, {}, {}, {}};
    KFamily kf(s.inv.ring, s.inv.matrix);
    s.ledger = solve_toric(kf, s.inv.d_O());
    auto validate = [&](const GeneratorSet& gen) {
        try {
            auto fam = expand_family(*s.inv.ring, gen);
            if (!verify_double_fusion(*s.inv.ring, s.ledger, gen, fam).ok) return false;
            auto alg = close_algebra(*s.inv.ring, s.ledger, gen, fam);
            if (!verify_compatibility(*s.inv.ring, s.ledger, gen, fam, alg).ok) return false;
            s.fam = std::move(fam);
            s.alg = std::move(alg);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    s.gen = solve_generators(s.ledger, kf, validate, {}, &s.stats);
    return s;
}

// undirected connected components of the left-generator graph
std::vector<std::vector<int>> components(const IntMatrix& VL) {
    int n = VL.rows();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = int(out.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int z = 0; z < n; ++z) {
                if ((VL.at(x, z) || VL.at(z, x)) && comp[z] < 0) {
                    comp[z] = comp[s];
                    stack.push_back(z);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace

TEST_CASE("E5 chiral generators and quantum symmetries") {
    auto s = solve_case("su3-E5");

    CHECK(s.gen.VL.rows() == 24);
    CHECK(s.gen.VL.is_nonneg());

    // two copies of a 12-vertex graph
    auto comps = components(s.gen.VL);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 12);
    CHECK(comps[1].size() == 12);

    // chiral conjugation is an involution exchanging the generator slots
    for (int z = 0; z < 24; ++z) CHECK(s.gen.C[s.gen.C[z]] == z);
    CHECK(s.gen.C[s.gen.right_gen_slot] == s.gen.left_gen_slot);
    CHECK(s.gen.C[0] == 0);

    // 24 quantum symmetry matrices, commutative case, unit first
    CHECK(int(s.alg.O.size()) == 24);
    CHECK(s.alg.O[0].is_identity());
    CHECK(s.alg.commutative);

    // associativity spot check through the representation property
    for (int x : {1, 3, 7})
        for (int y : {2, 5, 11})
            for (int w : {4, 9, 23})
                CHECK((s.alg.O[x] * s.alg.O[y]) * s.alg.O[w] ==
                      s.alg.O[x] * (s.alg.O[y] * s.alg.O[w]));

    // every V_{lam mu} entry is non-negative
    for (const auto& W : s.fam.W) CHECK(W.is_nonneg());
}

TEST_CASE("perturbed family is caught by the double fusion check") {
    auto s = solve_case("su3-E5");
    auto broken = s.fam;
    std::swap(broken.W[5], broken.W[7]);
    auto rep = verify_double_fusion(*s.inv.ring, s.ledger, s.gen, broken);
    CHECK(!rep.ok);
    CHECK(!rep.failures.empty());
}

TEST_CASE("diagonal case: Ocneanu graph is the alcove graph") {
    auto s = solve_case("su3-diagonal-3");
    const auto& ring = *s.inv.ring;
    const int d = ring.size();
    REQUIRE(s.gen.VL.rows() == d);

    // slot z holds the fusion matrix of some weight; under that relabeling
    // the left generator matrix is exactly the alcove adjacency
    std::vector<int> to_weight(d, -1);
    for (int z = 0; z < d; ++z) {
        const IntMatrix& W = s.ledger.entries[s.gen.slot_entry[z]].W;
        for (int w = 0; w < d; ++w)
            if (ring.N(w) == W) to_weight[z] = w;
        REQUIRE(to_weight[z] >= 0);
    }
    const IntMatrix& adj = ring.alcove_adjacency();
    for (int x = 0; x < d; ++x)
        for (int z = 0; z < d; ++z) CHECK(s.gen.VL.at(x, z) == adj.at(to_weight[x], to_weight[z]));

    CHECK(s.alg.commutative);
    CHECK(components(s.gen.VL).size() == 1);
}

TEST_CASE("su2 diagonal cases run through the chiral stage") {
    for (int k : {1, 2, 5}) {
        auto s = solve_case("su2-diagonal-" + std::to_string(k));
        CHECK(s.alg.commutative);
        CHECK(int(s.alg.O.size()) == k + 1);
    }
}
