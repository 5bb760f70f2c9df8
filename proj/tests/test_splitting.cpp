#include "doctest.h"

#include <set>

#include "modsplit/splitting.hpp"

using namespace modsplit;

TEST_CASE("K family basics on E5") {
    auto inv = builtin_invariant("su3-E5");
    KFamily kf(inv.ring, inv.matrix);

    CHECK(kf.K(0, 0) == inv.matrix);                     // N_0 is the identity
    CHECK(kf.squared_norm(0, 0) == 1);                   // vacuum entry of M

    // diagonal invariant: K_{lam mu} = N_lam N_{mu*}
    auto diag = builtin_invariant("su3-diagonal-3");
    KFamily kd(diag.ring, diag.matrix);
    const auto& ring = *diag.ring;
    for (int lam = 0; lam < ring.size(); ++lam)
        for (int mu = 0; mu < ring.size(); ++mu)
            CHECK(kd.K(lam, mu) == ring.N(lam) * ring.N(ring.conj_index(mu)));
}

TEST_CASE("E5 splitting: rank, norms, ledger") {
    auto inv = builtin_invariant("su3-E5");
    KFamily kf(inv.ring, inv.matrix);

    CHECK(inv.d_O() == 24);
    CHECK(kf.rank() == 24);

    auto counts = kf.distinct_count_by_norm();
    CHECK(counts[1] == 21);
    CHECK(counts[2] == 45);

    auto ledger = solve_toric(kf, inv.d_O());
    REQUIRE(ledger.size() == 24);
    for (const auto& e : ledger.entries) {
        CHECK(e.multiplicity == 1);
        CHECK(e.W.is_nonneg());
    }
    CHECK(ledger.entries[0].W == inv.matrix);

    int found_at_norm2 = 0;
    for (const auto& e : ledger.entries) found_at_norm2 += e.discovery_norm == 2 ? 1 : 0;
    CHECK(found_at_norm2 == 3);

    auto rep = verify_modular_splitting(ledger, kf);
    CHECK(rep.ok);
    CHECK(rep.pairs_checked == 441);
}

TEST_CASE("verification catches a corrupted ledger") {
    auto inv = builtin_invariant("su3-E5");
    KFamily kf(inv.ring, inv.matrix);
    auto ledger = solve_toric(kf, inv.d_O());
    ledger.entries[5].W = IntMatrix(21, 21);             // zero out one toric matrix
    auto rep = verify_modular_splitting(ledger, kf);
    CHECK(!rep.ok);
    CHECK(!rep.failures.empty());
}

TEST_CASE("diagonal invariants reproduce the fusion matrices") {
    for (int k = 1; k <= 5; ++k) {
        auto inv = builtin_invariant("su3-diagonal-" + std::to_string(k));
        KFamily kf(inv.ring, inv.matrix);
        auto ledger = solve_toric(kf, inv.d_O());
        REQUIRE(ledger.size() == inv.ring->size());

        std::set<std::vector<int64_t>> ws, ns;
        for (const auto& e : ledger.entries) {
            CHECK(e.multiplicity == 1);
            ws.insert(e.W.flat());
        }
        for (const auto& n : inv.ring->fusion_matrices()) ns.insert(n.flat());
        CHECK(ws == ns);
    }
    for (int k = 1; k <= 6; ++k) {
        auto inv = builtin_invariant("su2-diagonal-" + std::to_string(k));
        KFamily kf(inv.ring, inv.matrix);
        auto ledger = solve_toric(kf, inv.d_O());
        CHECK(ledger.size() == inv.ring->size());
        CHECK(verify_modular_splitting(ledger, kf).ok);
    }
}

TEST_CASE("E5-conj splitting") {
    auto inv = builtin_invariant("su3-E5-conj");
    KFamily kf(inv.ring, inv.matrix);
    CHECK(inv.d_O() == 24);
    CHECK(kf.rank() == 24);
    auto counts = kf.distinct_count_by_norm();
    CHECK(counts[1] == 21);
    CHECK(counts[2] == 45);
    auto ledger = solve_toric(kf, inv.d_O());
    CHECK(ledger.size() == 24);
    CHECK(verify_modular_splitting(ledger, kf).ok);
}

TEST_CASE("E9 splitting: degenerate ledger with multiplicities") {
    auto inv = builtin_invariant("su3-E9");
    KFamily kf(inv.ring, inv.matrix);

    CHECK(inv.d_O() == 72);
    CHECK(kf.rank() == 45);

    auto counts = kf.distinct_count_by_norm();
    CHECK(counts[1] == 27);
    CHECK(counts[2] == 12);
    CHECK(counts[3] == 21);
    CHECK(counts[4] == 24);
    CHECK(counts[6] == 10);

    auto ledger = solve_toric(kf, 72);
    CHECK(ledger.size() == 45);
    auto profile = ledger.multiplicity_profile();
    CHECK(profile[1] == 27);
    CHECK(profile[2] == 9);
    CHECK(profile[3] == 9);

    auto rep = verify_modular_splitting(ledger, kf);
    CHECK(rep.ok);
    CHECK(rep.pairs_checked == 3025);
}
