#include "modsplit/invariant.hpp"

#include "modsplit/error.hpp"

namespace modsplit {

ModularInvariant from_blocks(std::shared_ptr<const FusionRing> ring, const BlockSpec& spec) {
    const int d = ring->size();
    IntMatrix m(d, d);
    for (const auto& term : spec.terms) {
        if (term.multiplicity < 1) fail(ErrorKind::BadInput, "block multiplicity must be positive");
        std::vector<int> li, ri;
        for (const auto& w : term.left) li.push_back(ring->index(w));
        for (const auto& w : term.right) ri.push_back(ring->index(w));
        for (int l : li)
            for (int r : ri) {
                m.at(l, r) = checked_add(m.at(l, r), term.multiplicity);
                if (term.hermitian) m.at(r, l) = checked_add(m.at(r, l), term.multiplicity);
            }
    }
    ModularInvariant inv{std::move(ring), std::move(m), "custom"};
    check_invariant(inv);
    return inv;
}

void check_invariant(const ModularInvariant& m) {
    if (m.matrix.rows() != m.ring->size() || m.matrix.cols() != m.ring->size())
        fail(ErrorKind::BadInput, "invariant size does not match the alcove");
    if (!m.matrix.is_nonneg()) fail(ErrorKind::BadInput, "invariant has a negative entry");
    if (m.matrix.at(0, 0) != 1)
        fail(ErrorKind::BadInput, "invariant must couple the vacuum once (M_{0,0} = 1)");
    if (m.d_G() < 1 || m.d_O() < 1) fail(ErrorKind::BadInput, "invariant traces must be positive");
}

namespace {

BlockTerm diag(std::vector<Weight> ws, int64_t mult = 1) {
    BlockTerm t;
    t.left = ws;
    t.right = std::move(ws);
    t.multiplicity = mult;
    return t;
}

BlockTerm offdiag(std::vector<Weight> l, std::vector<Weight> r) {
    BlockTerm t;
    t.left = std::move(l);
    t.right = std::move(r);
    t.hermitian = true;
    return t;
}

ModularInvariant diagonal_case(Algebra alg, int level, const std::string& name) {
    auto ring = FusionRing::make(alg, level);
    ModularInvariant inv{ring, IntMatrix::identity(ring->size()), name};
    return inv;
}

} // namespace

ModularInvariant builtin_invariant(const std::string& name) {
    if (name == "su3-E5") {
        auto ring = FusionRing::make(Algebra::su3, 5);
        BlockSpec spec;
        spec.terms = {
            diag({{0, 0}, {2, 2}}), diag({{0, 2}, {3, 2}}), diag({{2, 0}, {2, 3}}),
            diag({{2, 1}, {0, 5}}), diag({{3, 0}, {0, 3}}), diag({{1, 2}, {5, 0}}),
        };
        auto inv = from_blocks(ring, spec);
        inv.name = name;
        return inv;
    }
    if (name == "su3-E5-conj") {
        auto ring = FusionRing::make(Algebra::su3, 5);
        BlockSpec spec;
        spec.terms = {
            diag({{0, 0}, {2, 2}}),
            diag({{3, 0}, {0, 3}}),
            offdiag({{0, 2}, {3, 2}}, {{2, 0}, {2, 3}}),
            offdiag({{2, 1}, {0, 5}}, {{1, 2}, {5, 0}}),
        };
        auto inv = from_blocks(ring, spec);
        inv.name = name;
        return inv;
    }
    if (name == "su3-E9") {
        auto ring = FusionRing::make(Algebra::su3, 9);
        BlockSpec spec;
        spec.terms = {
            diag({{0, 0}, {0, 9}, {9, 0}, {1, 4}, {4, 1}, {4, 4}}),
            diag({{2, 2}, {2, 5}, {5, 2}}, 2),
        };
        auto inv = from_blocks(ring, spec);
        inv.name = name;
        return inv;
    }
    for (Algebra alg : {Algebra::su2, Algebra::su3}) {
        std::string prefix = algebra_name(alg) + "-diagonal-";
        if (name.rfind(prefix, 0) == 0) {
            int level;
            try {
                level = std::stoi(name.substr(prefix.size()));
            } catch (...) {
                fail(ErrorKind::BadInput, "bad diagonal level in '" + name + "'");
            }
            return diagonal_case(alg, level, name);
        }
    }
    fail(ErrorKind::BadInput, "unknown builtin invariant '" + name + "'");
}

std::vector<std::string> builtin_invariant_names() {
    return {"su3-E5", "su3-E5-conj", "su3-E9", "su3-diagonal-<k>", "su2-diagonal-<k>"};
}

} // namespace modsplit
