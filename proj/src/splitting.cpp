#include "modsplit/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modsplit/error.hpp"

namespace modsplit {

KFamily::KFamily(std::shared_ptr<const FusionRing> ring, IntMatrix M)
    : ring_(std::move(ring)), M_(std::move(M)), d_(ring_->size()) {
    if (M_.rows() != d_ || M_.cols() != d_)
        fail(ErrorKind::BadInput, "invariant dimension does not match the ring");
    K_.reserve(size_t(d_) * d_);
    norm_.resize(size_t(d_) * d_);
    for (int lam = 0; lam < d_; ++lam) {
        IntMatrix NM = ring_->N(lam) * M_;
        for (int mu = 0; mu < d_; ++mu) {
            // N_mu^tr = N_{mu*}
            K_.push_back(NM * ring_->N(ring_->conj_index(mu)));
            const IntMatrix& k = K_.back();
            norm_[size_t(lam) * d_ + mu] = k.at(ring_->conj_index(lam), ring_->conj_index(mu));
        }
    }
}

size_t KFamily::rank() const {
    if (rank_ != size_t(-1)) return rank_;
    // dedupe identical matrices first; duplicates cannot change the rank
    std::map<std::vector<int64_t>, char> seen;
    RowSpaceZ space(size_t(d_) * d_);
    for (const auto& k : K_) {
        auto [it, fresh] = seen.try_emplace(k.flat(), 1);
        if (fresh) space.add_row(k.flat());
    }
    rank_ = space.rank();
    return rank_;
}

std::map<int64_t, size_t> KFamily::distinct_count_by_norm() const {
    std::map<int64_t, std::map<std::vector<int64_t>, char>> groups;
    for (int lam = 0; lam < d_; ++lam)
        for (int mu = 0; mu < d_; ++mu)
            groups[squared_norm(lam, mu)].try_emplace(K(lam, mu).flat(), 1);
    std::map<int64_t, size_t> counts;
    for (const auto& [n, g] : groups) counts[n] = g.size();
    return counts;
}

namespace {

struct Candidate {
    IntMatrix W;
    int64_t multiplicity;
    bool operator<(const Candidate& o) const {
        return multiplicity != o.multiplicity ? multiplicity < o.multiplicity : W < o.W;
    }
    bool operator==(const Candidate& o) const {
        return multiplicity == o.multiplicity && W == o.W;
    }
};

enum class Explain { Explained, NewMatrix, Stuck, Ambiguous, Failed };

struct ExplainResult {
    Explain kind;
    Candidate admit;                  // NewMatrix
    std::vector<Candidate> options;   // Ambiguous
    std::string diag;                 // Failed
};

std::vector<int64_t> divisors_of(int64_t g) {
    std::vector<int64_t> ds;
    for (int64_t a = 1; a * a <= g; ++a) {
        if (g % a) continue;
        ds.push_back(a);
        if (a != g / a) ds.push_back(g / a);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// One attempt at expanding K_{lam mu} over the current ledger. The expansion
// coefficient of a known entry is forced to multiplicity * (W)_{lam* mu*}: the
// z-slots of one matrix all carry the same coefficient, which also realizes
// the minimal-cost splitting of the norm budget. Whatever is left over must be
// a single new matrix a * W_new; the budget fixes its multiplicity.
ExplainResult try_explain(const KFamily& kf, const ToricLedger& ledger, const RowSpaceZ& span,
                          int64_t taken_slots, int lam, int mu) {
    const FusionRing& ring = kf.ring();
    const int li = ring.conj_index(lam), mi = ring.conj_index(mu);
    const int64_t s = kf.squared_norm(lam, mu);

    IntMatrix R = kf.K(lam, mu);
    int64_t used = 0;
    for (const auto& e : ledger.entries) {
        int64_t w = e.W.at(li, mi);
        if (w == 0) continue;
        R.add_scaled(e.W, -checked_mul(w, e.multiplicity));
        used = checked_add(used, checked_mul(e.multiplicity, checked_mul(w, w)));
    }
    const int64_t budget = s - used;

    if (R.is_zero())
        return budget == 0 ? ExplainResult{Explain::Explained, {}, {}, {}}
                           : ExplainResult{Explain::Failed, {}, {}, "zero residual, nonzero budget"};
    if (!R.is_nonneg()) return {Explain::Failed, {}, {}, "negative residual"};
    if (budget <= 0) return {Explain::Failed, {}, {}, "nonzero residual, exhausted budget"};

    const int64_t t = R.at(li, mi);
    if (t != budget) return {Explain::Stuck, {}, {}, {}};   // needs matrices this pass cannot see

    int64_t g = 0;
    for (int64_t v : R.flat()) g = std::gcd(g, v);

    std::vector<Candidate> cands;
    for (int64_t a : divisors_of(g)) {
        const int64_t e = t / a;           // a | g | t
        if (e < 1 || a % e != 0) continue;
        const int64_t mult = a / e;        // budget check a*e == t == budget holds by construction
        if (taken_slots + mult > ledger.d_O) continue;
        auto W = R.try_divide(a);
        bool known = false;
        for (const auto& entry : ledger.entries) known = known || entry.W == *W;
        if (known) continue;               // coefficients of knowns are already forced
        if (span.contains(W->flat())) continue;   // distinct toric matrices stay independent
        cands.push_back({std::move(*W), mult});
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    if (cands.empty()) return {Explain::Stuck, {}, {}, {}};
    if (cands.size() == 1) return {Explain::NewMatrix, std::move(cands[0]), {}, {}};
    return {Explain::Ambiguous, {}, std::move(cands), {}};
}

std::string pair_name(const FusionRing& ring, int lam, int mu) {
    const Weight &a = ring.weight(lam), &b = ring.weight(mu);
    std::ostringstream os;
    if (ring.algebra() == Algebra::su2)
        os << "((" << a.a << "),(" << b.a << "))";
    else
        os << "((" << a.a << "," << a.b << "),(" << b.a << "," << b.b << "))";
    return os.str();
}

} // namespace

ToricLedger solve_toric(const KFamily& kf, int64_t d_O) {
    const int d = kf.dim();
    const FusionRing& ring = kf.ring();

    // pairs in (norm, lam, mu) order
    std::vector<int> order(size_t(d) * d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
        return kf.squared_norm(p / d, p % d) < kf.squared_norm(q / d, q % d);
    });

    ToricLedger ledger;
    ledger.d_O = d_O;
    RowSpaceZ span(size_t(d) * d);
    int64_t taken = 0;

    std::vector<char> explained(size_t(d) * d, 0);
    std::map<int, std::vector<Candidate>> ambiguous;   // pair -> options at last sweep
    std::map<int, std::string> failed;

    bool changed = true;
    while (changed && taken < d_O) {
        changed = false;
        ambiguous.clear();
        failed.clear();
        for (int p : order) {
            if (taken >= d_O) break;
            if (explained[p]) continue;
            const int lam = p / d, mu = p % d;
            auto res = try_explain(kf, ledger, span, taken, lam, mu);
            switch (res.kind) {
                case Explain::Explained:
                    explained[p] = 1;
                    break;
                case Explain::NewMatrix: {
                    if (!span.add_row(res.admit.W.flat()))
                        fail(ErrorKind::Inconsistent,
                             "dependent toric matrix admitted at " + pair_name(ring, lam, mu));
                    ledger.entries.push_back({std::move(res.admit.W), res.admit.multiplicity,
                                              kf.squared_norm(lam, mu), lam, mu});
                    taken += res.admit.multiplicity;
                    explained[p] = 1;
                    changed = true;
                    break;
                }
                case Explain::Ambiguous:
                    ambiguous[p] = std::move(res.options);
                    break;
                case Explain::Failed:
                    failed[p] = res.diag;
                    break;
                case Explain::Stuck:
                    break;
            }
        }
    }

    if (taken != d_O) {
        if (!ambiguous.empty()) {
            std::ostringstream os;
            os << "modular splitting is ambiguous: ";
            for (const auto& [p, opts] : ambiguous)
                os << pair_name(ring, p / d, p % d) << " admits " << opts.size()
                   << " norm-consistent representations; ";
            os << "(" << taken << " of " << d_O << " slots assigned)";
            fail(ErrorKind::Ambiguous, os.str());
        }
        if (!failed.empty()) {
            std::ostringstream os;
            os << "modular splitting has no non-negative integral solution at ";
            for (const auto& [p, why] : failed)
                os << pair_name(ring, p / d, p % d) << " (" << why << "); ";
            fail(ErrorKind::Inconsistent, os.str());
        }
        fail(ErrorKind::Inconsistent,
             "ledger incomplete: " + std::to_string(taken) + " of " + std::to_string(d_O) +
                 " slots assigned after exhausting all K matrices");
    }

    if (ledger.entries.empty() || ledger.entries[0].W != kf.invariant() ||
        ledger.entries[0].multiplicity != 1)
        fail(ErrorKind::Inconsistent, "ledger does not start with the modular invariant");

    auto verify = verify_modular_splitting(ledger, kf);
    if (!verify.ok) {
        std::ostringstream os;
        os << "modular splitting verification failed at " << verify.failures.size() << " pairs,"
           << " first " << pair_name(ring, verify.failures[0].first, verify.failures[0].second);
        fail(ErrorKind::Inconsistent, os.str());
    }
    return ledger;
}

SplitVerifyReport verify_modular_splitting(const ToricLedger& ledger, const KFamily& kf) {
    SplitVerifyReport rep;
    const int d = kf.dim();
    const FusionRing& ring = kf.ring();
    for (int lam = 0; lam < d; ++lam) {
        const int li = ring.conj_index(lam);
        for (int mu = 0; mu < d; ++mu) {
            const int mi = ring.conj_index(mu);
            IntMatrix R = kf.K(lam, mu);
            int64_t norm_acc = 0;
            for (const auto& e : ledger.entries) {
                int64_t w = e.W.at(li, mi);
                if (w == 0) continue;
                R.add_scaled(e.W, -checked_mul(w, e.multiplicity));
                norm_acc = checked_add(norm_acc, checked_mul(e.multiplicity, checked_mul(w, w)));
            }
            ++rep.pairs_checked;
            if (!R.is_zero() || norm_acc != kf.squared_norm(lam, mu)) {
                rep.ok = false;
                rep.failures.emplace_back(lam, mu);
            }
        }
    }
    return rep;
}

} // namespace modsplit
