#include "doctest.h"

#include "modsplit/invariant.hpp"

using namespace modsplit;

TEST_CASE("builtin dimensions") {
    auto e5 = builtin_invariant("su3-E5");
    CHECK(e5.d_G() == 12);
    CHECK(e5.d_O() == 24);
    int64_t diag_ones = 0;
    for (int i = 0; i < e5.matrix.rows(); ++i) diag_ones += e5.matrix.at(i, i) == 1 ? 1 : 0;
    CHECK(diag_ones == 12);

    auto e5c = builtin_invariant("su3-E5-conj");
    CHECK(e5c.d_G() == 4);
    CHECK(e5c.d_O() == 24);

    auto e9 = builtin_invariant("su3-E9");
    CHECK(e9.d_G() == 12);
    CHECK(e9.d_O() == 72);

    auto d5 = builtin_invariant("su3-diagonal-5");
    CHECK(d5.matrix.is_identity());
    CHECK(d5.d_G() == 21);
    CHECK(d5.d_O() == 21);
}

TEST_CASE("builtins are symmetric under simultaneous conjugation") {
    for (const char* name : {"su3-E5", "su3-E5-conj", "su3-E9"}) {
        auto inv = builtin_invariant(name);
        const auto& ring = *inv.ring;
        for (int i = 0; i < ring.size(); ++i)
            for (int j = 0; j < ring.size(); ++j)
                CHECK(inv.matrix.at(i, j) ==
                      inv.matrix.at(ring.conj_index(i), ring.conj_index(j)));
        CHECK(inv.d_O() >= inv.d_G());
        CHECK(inv.d_G() >= 1);
    }
}

TEST_CASE("E9 block content") {
    auto e9 = builtin_invariant("su3-E9");
    const auto& ring = *e9.ring;
    // coefficient-2 block couples the three weights (2,2), (2,5), (5,2)
    std::vector<Weight> twos = {{2, 2}, {2, 5}, {5, 2}};
    for (const auto& a : twos)
        for (const auto& b : twos) CHECK(e9.matrix.at(ring.index(a), ring.index(b)) == 2);
    CHECK(e9.matrix.at(ring.index({0, 0}), ring.index({4, 4})) == 1);
}

TEST_CASE("from_blocks rejects weights outside the alcove") {
    auto ring = FusionRing::make(Algebra::su3, 2);
    BlockSpec spec;
    spec.terms = {{{{0, 0}, {5, 5}}, {{0, 0}, {5, 5}}, 1, false}};
    CHECK_THROWS_AS(from_blocks(ring, spec), Error);
}

TEST_CASE("unknown name") {
    CHECK_THROWS_AS(builtin_invariant("su7-X"), Error);
}
