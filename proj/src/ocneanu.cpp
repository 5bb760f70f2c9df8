#include "modsplit/ocneanu.hpp"

#include <deque>

#include "modsplit/error.hpp"

namespace modsplit {

namespace {

IntMatrix conj_reindex(const FusionRing& ring, const IntMatrix& W) {
    const int d = W.rows();
    IntMatrix X(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) X.at(ring.conj_index(a), ring.conj_index(b)) = W.at(a, b);
    return X;
}

} // namespace

OcneanuAlgebra close_algebra(const FusionRing& ring, const ToricLedger& ledger,
                             const GeneratorSet& gen, const DoubleFusionFamily& fam) {
    const int n = fam.d_O;
    const int r = ledger.size();
    auto slots = ledger.slot_entry();
    std::vector<int> slot_start(r, -1);
    for (int z = 0; z < n; ++z)
        if (slot_start[slots[z]] < 0) slot_start[slots[z]] = z;

    OcneanuAlgebra alg;
    alg.O.assign(n, IntMatrix());
    alg.left_gen_slot = gen.left_gen_slot;
    alg.left_conj_slot = gen.left_conj_slot;
    alg.right_gen_slot = gen.right_gen_slot;
    alg.right_conj_slot = gen.right_conj_slot;

    std::vector<char> resolved(n, 0);
    auto resolve = [&](int z, IntMatrix m, const char* what) {
        for (int w = 0; w < n; ++w)
            if (m.at(0, w) != (w == z ? 1 : 0))
                fail(ErrorKind::Inconsistent,
                     std::string("closure: identity row broken for ") + what);
        if (!m.is_nonneg())
            fail(ErrorKind::Inconsistent, std::string("closure: negative entry in ") + what);
        if (resolved[z]) {
            if (alg.O[z] != m)
                fail(ErrorKind::Inconsistent, std::string("closure: conflict at ") + what);
            return false;
        }
        alg.O[z] = std::move(m);
        resolved[z] = 1;
        return true;
    };

    resolve(0, IntMatrix::identity(n), "the unit");
    resolve(gen.left_gen_slot, gen.VL, "the left generator");
    resolve(gen.left_conj_slot, gen.VL.transpose(), "the conjugate left generator");
    resolve(gen.right_gen_slot, gen.VR, "the right generator");
    resolve(gen.right_conj_slot, gen.VR.transpose(), "the conjugate right generator");

    // Read multiplicity-free slots straight off W_{yy'} = sum_z (O_z)_{yy'} W_{0z};
    // for the others only the class sums are determined here.
    std::vector<std::vector<int64_t>> xrows;
    for (const auto& e : ledger.entries) xrows.push_back(conj_reindex(ring, e.W).flat());
    LinearBasisQ xbasis(xrows);

    std::vector<IntMatrix> class_sum(r, IntMatrix(n, n));
    for (int y = 0; y < n; ++y)
        for (int yp = 0; yp < n; ++yp) {
            auto t = xbasis.decompose_integer(fam.Wxy(y, yp).flat());
            if (!t)
                fail(ErrorKind::Inconsistent,
                     "closure: W_{yy'} has no integral expansion over W_{0z}");
            for (int j = 0; j < r; ++j) {
                if ((*t)[j] < 0)
                    fail(ErrorKind::Inconsistent, "closure: negative W_{yy'} expansion");
                class_sum[j].at(y, yp) = (*t)[j];
            }
        }
    for (int j = 0; j < r; ++j)
        if (ledger.entries[j].multiplicity == 1)
            resolve(slot_start[j], class_sum[j], "a multiplicity-free slot");

    // Pin the rest: products with generators whose expansion has exactly one
    // unresolved term, and classes with exactly one unresolved slot.
    const int gens[4] = {gen.left_gen_slot, gen.left_conj_slot, gen.right_gen_slot,
                         gen.right_conj_slot};
    bool progress = true;
    while (progress) {
        progress = false;
        for (int x = 0; x < n; ++x) {
            if (!resolved[x]) continue;
            for (int gslot : gens) {
                const IntMatrix& Og = alg.O[gslot];
                int open = -1;
                int64_t open_coef = 0;
                bool multiple = false;
                for (int z = 0; z < n; ++z) {
                    if (Og.at(x, z) == 0 || resolved[z]) continue;
                    if (open >= 0) {
                        multiple = true;
                        break;
                    }
                    open = z;
                    open_coef = Og.at(x, z);
                }
                if (open < 0 || multiple) continue;
                IntMatrix T = alg.O[x] * Og;
                for (int z = 0; z < n; ++z) {
                    if (z == open || Og.at(x, z) == 0) continue;
                    T.add_scaled(alg.O[z], -Og.at(x, z));
                }
                auto q = T.try_divide(open_coef);
                if (!q || !q->is_nonneg())
                    fail(ErrorKind::Inconsistent, "closure: residual is not a valid element");
                if (resolve(open, std::move(*q), "a generator product")) progress = true;
            }
        }
        for (int j = 0; j < r; ++j) {
            if (ledger.entries[j].multiplicity == 1) continue;
            int open = -1;
            bool multiple = false;
            for (int64_t m = 0; m < ledger.entries[j].multiplicity; ++m) {
                int z = slot_start[j] + int(m);
                if (resolved[z]) continue;
                if (open >= 0) {
                    multiple = true;
                    break;
                }
                open = z;
            }
            if (open < 0 || multiple) continue;
            IntMatrix T = class_sum[j];
            for (int64_t m = 0; m < ledger.entries[j].multiplicity; ++m) {
                int z = slot_start[j] + int(m);
                if (z != open && resolved[z]) T -= alg.O[z];
            }
            if (!T.is_nonneg())
                fail(ErrorKind::Inconsistent, "closure: class sum leaves a negative element");
            if (resolve(open, std::move(T), "a class-sum residual")) progress = true;
        }
    }

    int open_count = 0;
    for (int z = 0; z < n; ++z) open_count += resolved[z] ? 0 : 1;
    if (open_count)
        fail(ErrorKind::Inconsistent,
             "closure: " + std::to_string(open_count) + " elements stay undetermined");

    // Full multiplication table check, and the commutativity flag.
    alg.commutative = true;
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            IntMatrix xy = alg.O[x] * alg.O[y];
            IntMatrix sum_xy(n, n);
            for (int z = 0; z < n; ++z) {
                int64_t c = alg.O[y].at(x, z);
                if (c) sum_xy.add_scaled(alg.O[z], c);
            }
            if (xy != sum_xy)
                fail(ErrorKind::Inconsistent, "closure: multiplication table is not consistent");
            if (x == y) continue;
            IntMatrix yx = alg.O[y] * alg.O[x];
            IntMatrix sum_yx(n, n);
            for (int z = 0; z < n; ++z) {
                int64_t c = alg.O[x].at(y, z);
                if (c) sum_yx.add_scaled(alg.O[z], c);
            }
            if (yx != sum_yx)
                fail(ErrorKind::Inconsistent, "closure: multiplication table is not consistent");
            if (xy != yx) alg.commutative = false;
        }
    }
    return alg;
}

CompatReport verify_compatibility(const FusionRing& ring, const ToricLedger& ledger,
                                  const GeneratorSet& gen, const DoubleFusionFamily& fam,
                                  const OcneanuAlgebra& alg) {
    CompatReport rep;
    const int n = fam.d_O;
    auto note = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 32) rep.failures.push_back(s);
    };

    const IntMatrix VLt = gen.VL.transpose(), VRt = gen.VR.transpose();
    const IntMatrix* Vs[4] = {&gen.VL, &VLt, &gen.VR, &VRt};
    const char* vnames[4] = {"V_{f0}", "V_{f*0}", "V_{0f}", "V_{0f*}"};
    for (int vi = 0; vi < 4; ++vi) {
        const IntMatrix& V = *Vs[vi];
        for (int x = 0; x < n; ++x) {
            IntMatrix lhs = alg.O[x] * V;
            IntMatrix mid = V * alg.O[x];
            IntMatrix rhs(n, n);
            for (int z = 0; z < n; ++z) {
                int64_t c = V.at(x, z);
                if (c) rhs.add_scaled(alg.O[z], c);
            }
            ++rep.checks;
            if (lhs != rhs || mid != rhs)
                note(std::string("intertwining fails for ") + vnames[vi] + " at x=" +
                     std::to_string(x));
        }
    }

    // W_{yy'} = sum_z (O_z)_{yy'} W_{0z}
    std::vector<IntMatrix> W0;
    auto slots = ledger.slot_entry();
    for (int z = 0; z < n; ++z) W0.push_back(conj_reindex(ring, ledger.entries[slots[z]].W));
    for (int y = 0; y < n; ++y)
        for (int yp = 0; yp < n; ++yp) {
            IntMatrix acc(ring.size(), ring.size());
            for (int z = 0; z < n; ++z) {
                int64_t c = alg.O[z].at(y, yp);
                if (c) acc.add_scaled(W0[z], c);
            }
            ++rep.checks;
            if (acc != fam.Wxy(y, yp))
                note("W reconstruction fails at (y,y')=(" + std::to_string(y) + "," +
                     std::to_string(yp) + ")");
        }

    // generator edges advance the Z_n grade by one
    const int mod = ring.nality_modulus();
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (gen.VL.at(x, z) == 0) continue;
            ++rep.checks;
            if ((gen.slot_nality[x] + 1) % mod != gen.slot_nality[z])
                note("left generator edge breaks the grading at x=" + std::to_string(x));
        }
    return rep;
}

OcneanuGraph assemble_graph(const GeneratorSet& gen, const FusionRing& ring) {
    OcneanuGraph g;
    g.d_O = gen.VL.rows();
    g.chiral = gen.C;
    g.nality = gen.slot_nality;
    g.slot_entry = gen.slot_entry;
    const int f1 = ring.fundamentals()[0];
    const Weight& w = ring.weight(f1);
    std::string fname = ring.algebra() == Algebra::su2
                            ? "(" + std::to_string(w.a) + ")"
                            : "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
    g.generator_names = {"left " + fname, "right " + fname};
    g.edges.resize(2);
    for (int x = 0; x < g.d_O; ++x)
        for (int z = 0; z < g.d_O; ++z) {
            if (gen.VL.at(x, z)) g.edges[0].emplace_back(x, z, gen.VL.at(x, z));
            if (gen.VR.at(x, z)) g.edges[1].emplace_back(x, z, gen.VR.at(x, z));
        }
    return g;
}

} // namespace modsplit
