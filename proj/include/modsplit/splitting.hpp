#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modsplit/invariant.hpp"
#include "modsplit/rowspace.hpp"

namespace modsplit {

// K_{lambda mu} = N_lambda M N_mu^tr for every weight pair, with the squared
// norms read off entrywise: ||K_{lambda mu}||^2 = (K_{lambda mu})_{lambda* mu*}.
class KFamily {
public:
    KFamily(std::shared_ptr<const FusionRing> ring, IntMatrix M);

    const FusionRing& ring() const { return *ring_; }
    const IntMatrix& invariant() const { return M_; }

    int dim() const { return d_; }
    const IntMatrix& K(int lam, int mu) const { return K_[size_t(lam) * d_ + mu]; }
    int64_t squared_norm(int lam, int mu) const { return norm_[size_t(lam) * d_ + mu]; }

    // Exact rank of the whole family over the rationals.
    size_t rank() const;

    // Number of distinct K matrices having the given squared norm.
    std::map<int64_t, size_t> distinct_count_by_norm() const;

private:
    std::shared_ptr<const FusionRing> ring_;
    IntMatrix M_;
    int d_;
    std::vector<IntMatrix> K_;
    std::vector<int64_t> norm_;
    mutable size_t rank_ = size_t(-1);
};

// The solved quantum-symmetry ledger: distinct toric matrices in discovery
// order, each with the multiplicity of z-slots bound to it.
struct ToricLedger {
    struct Entry {
        IntMatrix W;
        int64_t multiplicity = 1;
        int64_t discovery_norm = 0;
        int discovery_lam = 0, discovery_mu = 0;
    };

    std::vector<Entry> entries;
    int64_t d_O = 0;

    int size() const { return int(entries.size()); }           // = r, distinct count
    int slots() const { return int(d_O); }

    // slot z -> entry index (entries repeated multiplicity times, in order)
    std::vector<int> slot_entry() const {
        std::vector<int> s;
        for (size_t e = 0; e < entries.size(); ++e)
            for (int64_t m = 0; m < entries[e].multiplicity; ++m) s.push_back(int(e));
        return s;
    }

    std::map<int64_t, int> multiplicity_profile() const {       // multiplicity -> count
        std::map<int64_t, int> p;
        for (const auto& e : entries) p[e.multiplicity]++;
        return p;
    }
};

// Step 1: solve the modular splitting equation. Processes weight pairs by
// ascending squared norm, subtracting the forced contribution of the known
// ledger and admitting one new toric matrix at a time from the residual.
ToricLedger solve_toric(const KFamily& kf, int64_t d_O);

struct SplitVerifyReport {
    bool ok = true;
    size_t pairs_checked = 0;
    std::vector<std::pair<int, int>> failures;    // (lam, mu) with broken reconstruction
};

// Checks sum_z (W_{z0})_{lambda* mu*} W_{z0} = K_{lambda mu} over all z-slots
// for every weight pair, plus the norm identity, exactly.
SplitVerifyReport verify_modular_splitting(const ToricLedger& ledger, const KFamily& kf);

} // namespace modsplit
