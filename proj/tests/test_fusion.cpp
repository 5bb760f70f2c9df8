#include "doctest.h"

#include "modsplit/fusion.hpp"

using namespace modsplit;

TEST_CASE("alcove sizes") {
    CHECK(enumerate_weights(Algebra::su3, 5).size() == 21);
    CHECK(enumerate_weights(Algebra::su3, 9).size() == 55);
    CHECK(enumerate_weights(Algebra::su3, 0) == std::vector<Weight>{{0, 0}});
    CHECK(enumerate_weights(Algebra::su2, 4).size() == 5);
}

TEST_CASE("weight zero is index zero and conjugation is an involution") {
    auto ring = FusionRing::make(Algebra::su3, 5);
    CHECK(ring->weight(0) == Weight{0, 0});
    CHECK(conjugate_weight(Algebra::su3, {2, 1}) == Weight{1, 2});
    CHECK(conjugate_weight(Algebra::su3, {0, 0}) == Weight{0, 0});
    CHECK(conjugate_weight(Algebra::su3, {3, 3}) == Weight{3, 3});
    for (int i = 0; i < ring->size(); ++i) CHECK(ring->conj_index(ring->conj_index(i)) == i);
}

TEST_CASE("fusion unit and adjacency") {
    auto ring = FusionRing::make(Algebra::su3, 5);
    CHECK(ring->N(0).is_identity());

    // N_{(1,0)} is the oriented alcove graph: out-degree at most 3.
    const IntMatrix& adj = ring->N(ring->index({1, 0}));
    for (int i = 0; i < ring->size(); ++i) {
        int64_t row = 0;
        for (int j = 0; j < ring->size(); ++j) {
            CHECK(adj.at(i, j) >= 0);
            row += adj.at(i, j);
        }
        CHECK(row <= 3);
    }
    // arrows advance the Z3 grading by one
    for (int i = 0; i < ring->size(); ++i)
        for (int j = 0; j < ring->size(); ++j)
            if (adj.at(i, j) != 0) CHECK((ring->nality(i) + 1) % 3 == ring->nality(j));
}

TEST_CASE("fusion ring commutes and is rigid for k <= 9") {
    for (int k = 1; k <= 9; ++k) {
        auto ring = FusionRing::make(Algebra::su3, k);
        for (int i = 0; i < ring->size(); ++i) {
            CHECK(ring->N(ring->conj_index(i)) == ring->N(i).transpose());
            for (int j = i + 1; j < ring->size(); ++j)
                CHECK(ring->N(i) * ring->N(j) == ring->N(j) * ring->N(i));
        }
    }
    for (int k = 1; k <= 10; ++k) {
        auto ring = FusionRing::make(Algebra::su2, k);
        for (int i = 0; i < ring->size(); ++i)
            for (int j = i + 1; j < ring->size(); ++j)
                CHECK(ring->N(i) * ring->N(j) == ring->N(j) * ring->N(i));
    }
}

TEST_CASE("Verlinde oracle basics at su3 level 5") {
    auto ring = FusionRing::make(Algebra::su3, 5);
    int f = ring->index({1, 0}), fc = ring->index({0, 1});
    for (int mu = 0; mu < ring->size(); ++mu)
        for (int nu = 0; nu < ring->size(); ++nu)
            CHECK(verlinde_oracle(*ring, 0, mu, nu) == (mu == nu ? 1 : 0));
    CHECK(verlinde_oracle(*ring, f, fc, 0) == 1);
    CHECK(verlinde_oracle(*ring, f, fc, ring->index({1, 1})) == 1);
}

TEST_CASE("fusion matrices equal the Verlinde oracle exhaustively (small levels)") {
    // The full k <= 9 sweep lives in the acceptance suite; spot-check here.
    for (auto alg : {Algebra::su2, Algebra::su3}) {
        for (int k = 1; k <= (alg == Algebra::su2 ? 6 : 4); ++k) {
            auto ring = FusionRing::make(alg, k);
            for (int a = 0; a < ring->size(); ++a)
                for (int b = 0; b < ring->size(); ++b)
                    for (int c = 0; c < ring->size(); ++c)
                        CHECK(ring->fusion_coeff(a, b, c) == verlinde_oracle(*ring, a, b, c));
        }
    }
}

TEST_CASE("seeded recursion rejects a non-module seed") {
    // A plain 3-cycle is not the adjacency of any level-5 module graph.
    IntMatrix cyc(3, 3);
    cyc.at(0, 1) = cyc.at(1, 2) = cyc.at(2, 0) = 1;
    auto fam = seeded_recursion(Algebra::su3, 5, cyc);
    CHECK(!fam.ok());
}
