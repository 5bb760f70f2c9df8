#include "modsplit/chiral.hpp"

#include <algorithm>
#include <sstream>

#include "modsplit/error.hpp"

namespace modsplit {

namespace {

struct Classes {
    int r = 0;
    int d_O = 0;
    std::vector<int64_t> mult;
    std::vector<int> slot_start;    // class -> first slot
    std::vector<int> slot_class;    // slot -> class
    std::vector<int> tr;            // class of the transposed matrix
    std::vector<int> nality;        // Z_n grade per class
};

Classes make_classes(const ToricLedger& ledger, const FusionRing& ring) {
    Classes c;
    c.r = ledger.size();
    c.d_O = int(ledger.d_O);
    int slot = 0;
    for (const auto& e : ledger.entries) {
        c.mult.push_back(e.multiplicity);
        c.slot_start.push_back(slot);
        for (int64_t m = 0; m < e.multiplicity; ++m) c.slot_class.push_back(int(c.mult.size()) - 1);
        slot += int(e.multiplicity);
    }
    if (slot != c.d_O) fail(ErrorKind::Inconsistent, "ledger multiplicities do not add up to d_O");

    for (int j = 0; j < c.r; ++j) {
        IntMatrix t = ledger.entries[j].W.transpose();
        int found = -1;
        for (int i = 0; i < c.r; ++i)
            if (ledger.entries[i].W == t) {
                found = i;
                break;
            }
        if (found < 0)
            fail(ErrorKind::Inconsistent, "toric family is not closed under transposition");
        if (ledger.entries[found].multiplicity != ledger.entries[j].multiplicity)
            fail(ErrorKind::Inconsistent, "transpose pair with mismatched multiplicity");
        c.tr.push_back(found);
    }

    const int n = ring.nality_modulus();
    for (int j = 0; j < c.r; ++j) {
        const IntMatrix& W = ledger.entries[j].W;
        int grade = -1;
        for (int a = 0; a < W.rows(); ++a)
            for (int b = 0; b < W.cols(); ++b) {
                if (W.at(a, b) == 0) continue;
                int g = ((ring.nality(b) - ring.nality(a)) % n + n) % n;
                if (grade == -1) grade = g;
                if (grade != g)
                    fail(ErrorKind::Inconsistent, "toric matrix mixes Z_n grades");
            }
        c.nality.push_back(grade < 0 ? 0 : grade);
    }
    return c;
}

struct StageA {
    // AL[c][j]: class-j coefficient in N_f W_c; AL2 uses the conjugate
    // fundamental and supplies the column sums of each VL block.
    std::vector<std::vector<int64_t>> AL, AL2, AR;
    std::vector<int64_t> vl_row0, vl_col0, vr_row0, vr_col0;   // exact slot data
    int left_gen_slot = -1, left_conj_slot = -1, right_gen_slot = -1, right_conj_slot = -1;
};

int unit_slot_of(const std::vector<int64_t>& v, const char* what) {
    int at = -1;
    for (size_t z = 0; z < v.size(); ++z) {
        if (v[z] == 0) continue;
        if (v[z] != 1 || at >= 0)
            fail(ErrorKind::Inconsistent,
                 std::string("generator row for ") + what + " is not a basis element");
        at = int(z);
    }
    if (at < 0) fail(ErrorKind::Inconsistent, std::string("no generator slot for ") + what);
    return at;
}

StageA stage_a(const ToricLedger& ledger, const KFamily& kf, const Classes& cls) {
    const FusionRing& ring = kf.ring();
    if (ring.fundamentals().empty())
        fail(ErrorKind::BadInput, "chiral stage needs level >= 1");
    const int f1 = ring.fundamentals()[0];
    const int f2 = ring.conj_index(f1);

    std::vector<std::vector<int64_t>> basis_rows;
    for (const auto& e : ledger.entries) basis_rows.push_back(e.W.flat());
    LinearBasisQ basis(basis_rows);

    auto expand = [&](const IntMatrix& T, const char* what) {
        auto c = basis.decompose_integer(T.flat());
        if (!c) fail(ErrorKind::Inconsistent, std::string("no integral expansion for ") + what);
        for (int64_t v : *c)
            if (v < 0)
                fail(ErrorKind::Inconsistent, std::string("negative expansion term for ") + what);
        return *c;
    };

    StageA a;
    for (int c = 0; c < cls.r; ++c) {
        const IntMatrix& W = ledger.entries[c].W;
        a.AL.push_back(expand(ring.N(f1) * W, "N_f W"));
        a.AL2.push_back(expand(ring.N(f2) * W, "N_f* W"));
        a.AR.push_back(expand(W * ring.N(f2), "W N_f^tr"));   // N_f^tr = N_{f*}
    }

    // block totals must be consistent between the row and column readings
    for (int c = 0; c < cls.r; ++c)
        for (int j = 0; j < cls.r; ++j) {
            if (cls.mult[c] * a.AL[c][j] != cls.mult[j] * a.AL2[j][c])
                fail(ErrorKind::Inconsistent, "left expansion sums are inconsistent");
            if (a.AR[c][j] != a.AL[cls.tr[c]][cls.tr[j]])
                fail(ErrorKind::Inconsistent, "right expansion disagrees with transposes");
        }

    for (int z = 0; z < cls.d_O; ++z) {
        const IntMatrix& W = ledger.entries[cls.slot_class[z]].W;
        a.vl_row0.push_back(W.at(f2, 0));
        a.vl_col0.push_back(W.at(f1, 0));
        a.vr_row0.push_back(W.at(0, f2));
        a.vr_col0.push_back(W.at(0, f1));
    }
    a.left_gen_slot = unit_slot_of(a.vl_row0, "V_{f0}");
    a.left_conj_slot = unit_slot_of(a.vl_col0, "V_{f*0}");
    a.right_gen_slot = unit_slot_of(a.vr_row0, "V_{0f}");
    a.right_conj_slot = unit_slot_of(a.vr_col0, "V_{0f*}");

    // the exact slot data must agree with the class-level expansions
    for (int c = 0; c < cls.r; ++c) {
        int z = cls.slot_start[c];
        if (a.AL[c][0] != a.vl_col0[z] || a.AL2[c][0] != a.vl_row0[z])
            fail(ErrorKind::Inconsistent, "slot data disagrees with class expansions");
        if (cls.mult[c] * a.vl_row0[z] != a.AL[0][c])
            fail(ErrorKind::Inconsistent, "identity-row expansion mismatch");
    }
    return a;
}

// Enumerates non-negative nr x nc fillings with every row summing to rs and
// every column to cs.
void enum_block_rec(int nr, int nc, int64_t rs, int64_t cs, std::vector<int64_t>& cells, int pos,
                    std::vector<int64_t>& colacc, int64_t rowacc,
                    const std::function<void(const std::vector<int64_t>&)>& emit) {
    if (pos == nr * nc) {
        emit(cells);
        return;
    }
    const int i = pos / nc, j = pos % nc;
    const int64_t row_left = rs - rowacc;
    const int64_t col_left = cs - colacc[j];
    int64_t hi = std::min(row_left, col_left);
    int64_t cap = 0;
    for (int jj = j + 1; jj < nc; ++jj) cap += cs - colacc[jj];
    for (int64_t v = std::max<int64_t>(0, row_left - cap); v <= hi; ++v) {
        if (j == nc - 1 && row_left != v) continue;
        // a column finishes only when its sum is exact by the last row
        if (i == nr - 1 && colacc[j] + v != cs) continue;
        cells[pos] = v;
        colacc[j] += v;
        enum_block_rec(nr, nc, rs, cs, cells, pos + 1, colacc, j == nc - 1 ? 0 : rowacc + v, emit);
        colacc[j] -= v;
        cells[pos] = 0;
    }
}

// All fillings of one block, sparsest first: the solved cases concentrate a
// multiple edge inside one Cayley component rather than spreading single
// edges across components, so low-support fillings are tried first.
std::vector<std::vector<int64_t>> block_fillings(int nr, int nc, int64_t rs, int64_t cs) {
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> cells(size_t(nr) * nc, 0), colacc(nc, 0);
    enum_block_rec(nr, nc, rs, cs, cells, 0, colacc, 0,
                   [&](const std::vector<int64_t>& f) { out.push_back(f); });
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int na = 0, nb = 0;
        for (auto v : a) na += v != 0;
        for (auto v : b) nb += v != 0;
        return na != nb ? na < nb : a < b;
    });
    return out;
}

// Per-class slot partition used for gauge symmetry breaking: slots of one
// toric matrix are interchangeable until some committed value tells them
// apart. New block fillings must be sorted inside the surviving groups.
struct GaugeGroups {
    std::vector<std::vector<int>> group;   // class -> slotpos -> group id

    explicit GaugeGroups(const Classes& cls) {
        for (int c = 0; c < cls.r; ++c) group.emplace_back(cls.mult[c], 0);
    }

    // pieces[p] = committed signature extension of slot position p; requires
    // non-increasing order inside each group and refines the partition.
    bool apply(int cls_id, const std::vector<std::vector<int64_t>>& pieces) {
        auto& g = group[cls_id];
        const int n = int(g.size());
        for (int p = 0; p + 1 < n; ++p)
            if (g[p] == g[p + 1] && pieces[p] < pieces[p + 1]) return false;
        // refine: new ids by (old id, piece) in slot order
        std::vector<int> fresh(n);
        int next = 0;
        for (int p = 0; p < n; ++p) {
            if (p > 0 && g[p] == g[p - 1] && pieces[p] == pieces[p - 1])
                fresh[p] = fresh[p - 1];
            else
                fresh[p] = next++;
        }
        g = fresh;
        return true;
    }
};

struct FillEnumerator {
    const Classes& cls;
    const StageA& A;
    const FusionRing& ring;
    ChiralStats& stats;
    const ChiralOptions& opts;
    std::function<bool(const IntMatrix&)> on_candidate;   // returns false to stop

    std::vector<std::pair<int, int>> blocks;   // (c, j) with AL[c][j] > 0
    IntMatrix VL;
    bool stop = false;

    FillEnumerator(const Classes& cls_, const StageA& A_, const FusionRing& ring_,
                   ChiralStats& stats_, const ChiralOptions& opts_)
        : cls(cls_), A(A_), ring(ring_), stats(stats_), opts(opts_), VL(cls_.d_O, cls_.d_O) {
        for (int c = 0; c < cls.r; ++c)
            for (int j = 0; j < cls.r; ++j)
                if (A.AL[c][j] > 0) blocks.emplace_back(c, j);
    }

    void run() {
        GaugeGroups groups(cls);
        descend(0, groups);
    }

    void descend(size_t bi, GaugeGroups& groups) {
        if (stop) return;
        if (++stats.fill_nodes > opts.fill_node_cap)
            fail(ErrorKind::Ambiguous, "slot-distribution search exceeded its node budget");
        if (bi == blocks.size()) {
            ++stats.fillings;
            if (!on_candidate(VL)) stop = true;
            return;
        }
        auto [c, j] = blocks[bi];
        const int nr = int(cls.mult[c]), nc = int(cls.mult[j]);
        const int64_t rs = A.AL[c][j], cs = A.AL2[j][c];

        for (const auto& filled : block_fillings(nr, nc, rs, cs)) {
            if (stop) return;
            GaugeGroups next = groups;
            if (c != j) {
                std::vector<std::vector<int64_t>> row_pieces(nr), col_pieces(nc);
                for (int p = 0; p < nr; ++p)
                    row_pieces[p].assign(filled.begin() + size_t(p) * nc,
                                         filled.begin() + size_t(p + 1) * nc);
                for (int q = 0; q < nc; ++q)
                    for (int p = 0; p < nr; ++p) col_pieces[q].push_back(filled[size_t(p) * nc + q]);
                if (!next.apply(c, row_pieces)) return;
                if (!next.apply(j, col_pieces)) return;
            } else {
                if (!diag_canonical(filled, nr, groups.group[c])) return;
                std::vector<std::vector<int64_t>> pieces(nr);
                for (int p = 0; p < nr; ++p) {
                    for (int q = 0; q < nr; ++q) pieces[p].push_back(filled[size_t(p) * nr + q]);
                    for (int q = 0; q < nr; ++q) pieces[p].push_back(filled[size_t(q) * nr + p]);
                }
                // order inside diagonal blocks is fixed by diag_canonical; only refine
                auto& g = next.group[c];
                std::vector<int> fresh(nr);
                int fresh_next = 0;
                for (int p = 0; p < nr; ++p) {
                    if (p > 0 && g[p] == g[p - 1] && pieces[p] == pieces[p - 1])
                        fresh[p] = fresh[p - 1];
                    else
                        fresh[p] = fresh_next++;
                }
                g = fresh;
            }
            for (int p = 0; p < nr; ++p)
                for (int q = 0; q < nc; ++q)
                    VL.at(cls.slot_start[c] + p, cls.slot_start[j] + q) = filled[size_t(p) * nc + q];
            descend(bi + 1, next);
            for (int p = 0; p < nr; ++p)
                for (int q = 0; q < nc; ++q) VL.at(cls.slot_start[c] + p, cls.slot_start[j] + q) = 0;
        });
    }

    // lex-min of the diagonal block under simultaneous row+column permutations
    // that respect the current gauge groups
    bool diag_canonical(const std::vector<int64_t>& cells, int n, const std::vector<int>& group) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = group[perm[i]] == group[i];
            if (!ok) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int64_t permuted = cells[size_t(perm[i]) * n + perm[j]];
                    int64_t base = cells[size_t(i) * n + j];
                    if (permuted != base) {
                        if (permuted < base) return false;   // a smaller representative exists
                        goto next_perm;
                    }
                }
        next_perm:;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    }
};

bool commutes(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

// Enumerate involutions C compatible with the exact slot data; calls sink for
// each survivor, stopping when it returns false.
void enumerate_conjugations(const Classes& cls, const StageA& A, const IntMatrix& VL,
                            ChiralStats& stats,
                            const std::function<bool(const std::vector<int>&)>& sink) {
    const int n = cls.d_O;
    std::vector<std::vector<int>> cand(n);
    for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
            if (cls.tr[cls.slot_class[z]] != cls.slot_class[w]) continue;
            if (A.vl_row0[w] != A.vr_row0[z] || A.vl_col0[w] != A.vr_col0[z]) continue;
            if (A.vl_row0[z] != A.vr_row0[w] || A.vl_col0[z] != A.vr_col0[w]) continue;
            cand[z].push_back(w);
        }

    std::vector<int> C(n, -1);
    bool stop = false;

    std::function<void(int)> place = [&](int z) {
        if (stop) return;
        while (z < n && C[z] >= 0) ++z;
        if (z == n) {
            ++stats.conj_candidates;
            IntMatrix VR(n, n);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) VR.at(x, y) = VL.at(C[x], C[y]);
            if (!commutes(VL, VR)) return;
            IntMatrix VLt = VL.transpose();
            if (!commutes(VLt, VR)) return;
            ++stats.commuting;
            if (!sink(C)) stop = true;
            return;
        }
        for (int w : cand[z]) {
            if (C[w] >= 0 && C[w] != z) continue;
            if (w == z) {
                C[z] = z;
                place(z + 1);
                C[z] = -1;
            } else if (C[w] < 0) {
                C[z] = w;
                C[w] = z;
                place(z + 1);
                C[z] = C[w] = -1;
            }
            if (stop) return;
        }
    };
    C[0] = 0;
    place(1);
}

// Gauge moves permute slots bound to one toric matrix; two generator sets are
// the same answer when such a permutation carries one onto the other.
bool gauge_equivalent(const Classes& cls, const GeneratorSet& a, const GeneratorSet& b) {
    const int n = cls.d_O;
    std::vector<int> pi(n, -1), used(n, 0);
    std::function<bool(int)> place = [&](int x) {
        if (x == n) return true;
        int c = cls.slot_class[x];
        for (int off = 0; off < cls.mult[c]; ++off) {
            int y = cls.slot_start[c] + off;
            if (used[y]) continue;
            bool ok = true;
            for (int z = 0; z <= x && ok; ++z) {
                if (pi[z] < 0) continue;
                ok = b.VL.at(pi[x], pi[z]) == a.VL.at(x, z) &&
                     b.VL.at(pi[z], pi[x]) == a.VL.at(z, x);
            }
            if (ok && a.C[x] <= x && pi[a.C[x]] >= 0) ok = b.C[pi[a.C[x]]] == y;
            if (!ok) continue;
            pi[x] = y;
            used[y] = 1;
            if (place(x + 1)) return true;
            pi[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    return place(0);
}

} // namespace

GeneratorSet solve_generators(const ToricLedger& ledger, const KFamily& kf,
                              const std::function<bool(const GeneratorSet&)>& validate,
                              const ChiralOptions& opts, ChiralStats* stats_out) {
    const FusionRing& ring = kf.ring();
    Classes cls = make_classes(ledger, ring);
    StageA A = stage_a(ledger, kf, cls);

    ChiralStats stats;
    std::optional<GeneratorSet> found;
    int probe_left = opts.probe_extra_validations;
    bool aborted_probe = false;

    auto consider = [&](const IntMatrix& VL) -> bool {
        auto fam = seeded_recursion(ring.algebra(), ring.level(), VL);
        if (!fam.ok()) return true;    // keep searching
        ++stats.recursion_ok;

        bool keep_going = true;
        enumerate_conjugations(cls, A, VL, stats, [&](const std::vector<int>& C) -> bool {
            GeneratorSet gen;
            gen.VL = VL;
            gen.C = C;
            gen.VR = IntMatrix(cls.d_O, cls.d_O);
            for (int x = 0; x < cls.d_O; ++x)
                for (int y = 0; y < cls.d_O; ++y) gen.VR.at(x, y) = VL.at(C[x], C[y]);
            gen.slot_entry.assign(cls.slot_class.begin(), cls.slot_class.end());
            for (int z = 0; z < cls.d_O; ++z)
                gen.slot_nality.push_back(cls.nality[cls.slot_class[z]]);
            gen.left_gen_slot = A.left_gen_slot;
            gen.left_conj_slot = A.left_conj_slot;
            gen.right_gen_slot = A.right_gen_slot;
            gen.right_conj_slot = A.right_conj_slot;

            if (!found) {
                if (validate(gen)) {
                    ++stats.validated;
                    found = std::move(gen);
                    if (!opts.probe) {
                        keep_going = false;
                        return false;
                    }
                }
                return true;
            }
            // probe phase: only gauge-inequivalent candidates are interesting
            if (gauge_equivalent(cls, *found, gen)) return true;
            if (probe_left-- <= 0) {
                aborted_probe = true;
                keep_going = false;
                return false;
            }
            if (validate(gen))
                fail(ErrorKind::Ambiguous,
                     "a second gauge-inequivalent generator set passes every constraint");
            ++stats.probe_rejects;
            return true;
        });
        return keep_going;
    };

    FillEnumerator fills(cls, A, ring, stats, opts);
    fills.on_candidate = consider;
    fills.run();

    if (!found)
        fail(ErrorKind::Inconsistent,
             "no slot distribution satisfies non-negativity, conjugation and commutation");
    stats.probe_complete = opts.probe && !aborted_probe;
    if (stats_out) *stats_out = stats;
    return *found;
}

DoubleFusionFamily expand_family(const FusionRing& ring, const GeneratorSet& gen) {
    DoubleFusionFamily fam;
    fam.d_O = gen.VL.rows();

    auto left = seeded_recursion(ring.algebra(), ring.level(), gen.VL);
    if (!left.ok())
        fail(ErrorKind::Inconsistent, "left fusion recursion left the non-negative cone");
    fam.V_left = std::move(left.mats);

    // V_{0 mu} = C V_{mu 0} C
    fam.V_right.reserve(fam.V_left.size());
    for (const auto& V : fam.V_left) {
        IntMatrix R(fam.d_O, fam.d_O);
        for (int x = 0; x < fam.d_O; ++x)
            for (int y = 0; y < fam.d_O; ++y) R.at(x, y) = V.at(gen.C[x], gen.C[y]);
        fam.V_right.push_back(std::move(R));
    }

    const int d = ring.size();
    fam.W.assign(size_t(fam.d_O) * fam.d_O, IntMatrix(d, d));
    for (int lam = 0; lam < d; ++lam) {
        for (int mu = 0; mu < d; ++mu) {
            IntMatrix V = fam.V_left[lam] * fam.V_right[mu];
            for (int x = 0; x < fam.d_O; ++x)
                for (int y = 0; y < fam.d_O; ++y)
                    fam.W[size_t(x) * fam.d_O + y].at(lam, mu) = V.at(x, y);
        }
    }
    return fam;
}

DoubleFusionReport verify_double_fusion(const FusionRing& ring, const ToricLedger& ledger,
                                        const GeneratorSet& gen, const DoubleFusionFamily& fam) {
    DoubleFusionReport rep;
    const int d = ring.size();
    const int n = fam.d_O;
    auto note = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 32) rep.failures.push_back(s);
    };

    // W_{00} = M and W_{z0} = ledger entries, slot by slot
    auto slots = ledger.slot_entry();
    ++rep.checks;
    if (fam.Wxy(0, 0) != ledger.entries[0].W) note("W_{00} != M");
    for (int z = 0; z < n; ++z) {
        ++rep.checks;
        if (fam.Wxy(z, 0) != ledger.entries[slots[z]].W)
            note("W_{z0} mismatch at z=" + std::to_string(z));
    }

    // (W_{0z})_{lam mu} = (W_{z0})_{lam* mu*}
    for (int z = 0; z < n; ++z) {
        const IntMatrix& W0z = fam.Wxy(0, z);
        const IntMatrix& Wz0 = fam.Wxy(z, 0);
        ++rep.checks;
        for (int lam = 0; lam < d; ++lam)
            for (int mu = 0; mu < d; ++mu)
                if (W0z.at(lam, mu) != Wz0.at(ring.conj_index(lam), ring.conj_index(mu))) {
                    note("W_{0z} reindexing fails at z=" + std::to_string(z));
                    lam = d;
                    break;
                }
    }

    // V_{lam* mu*} = V_{lam mu}^tr, expressed on the W side
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const IntMatrix& A = fam.Wxy(x, y);
            const IntMatrix& B = fam.Wxy(y, x);
            ++rep.checks;
            bool bad = false;
            for (int lam = 0; lam < d && !bad; ++lam)
                for (int mu = 0; mu < d; ++mu)
                    if (A.at(ring.conj_index(lam), ring.conj_index(mu)) != B.at(lam, mu)) {
                        bad = true;
                        break;
                    }
            if (bad)
                note("transpose symmetry fails at (x,y)=(" + std::to_string(x) + "," +
                     std::to_string(y) + ")");
        }

    // V_{lam 0} realizes the fusion algebra
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            IntMatrix lhs = fam.V_left[a] * fam.V_left[b];
            IntMatrix rhs(n, n);
            for (int c = 0; c < d; ++c) {
                int64_t coef = ring.fusion_coeff(a, b, c);
                if (coef) rhs.add_scaled(fam.V_left[c], coef);
            }
            ++rep.checks;
            if (lhs != rhs) {
                note("V_{lam 0} fusion structure fails");
                b = d;
                a = d;
            }
        }

    // left and right families commute
    for (int a = 0; a < d; ++a) {
        ++rep.checks;
        if (!(fam.V_left[a] * fam.V_right[a] == fam.V_right[a] * fam.V_left[a])) {
            note("left and right families do not commute");
            break;
        }
    }

    // the double fusion equation on fundamental pairs, all (x, y)
    std::vector<std::pair<const IntMatrix*, bool>> gens;   // (V, acts_left)
    std::vector<int> gen_weights;
    for (int f : ring.fundamentals()) {
        gens.push_back({&fam.V_left[f], true});
        gen_weights.push_back(f);
        gens.push_back({&fam.V_right[f], false});
        gen_weights.push_back(f);
    }
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const IntMatrix& V = *gens[gi].first;
        const bool left_side = gens[gi].second;
        const IntMatrix& Nf = ring.N(gen_weights[gi]);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                IntMatrix lhs(d, d);
                for (int z = 0; z < n; ++z) {
                    int64_t coef = V.at(x, z);
                    if (coef) lhs.add_scaled(fam.Wxy(z, y), coef);
                }
                IntMatrix rhs = left_side ? Nf * fam.Wxy(x, y) : fam.Wxy(x, y) * Nf.transpose();
                ++rep.checks;
                if (lhs != rhs) {
                    note("double fusion equation fails at (x,y)=(" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
                    if (rep.failures.size() >= 32) return rep;
                }
            }
        }
    }
    (void)gen;
    return rep;
}

} // namespace modsplit
