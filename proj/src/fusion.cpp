#include "modsplit/fusion.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "modsplit/error.hpp"

namespace modsplit {

std::string algebra_name(Algebra a) { return a == Algebra::su2 ? "su2" : "su3"; }

Algebra algebra_from_name(const std::string& s) {
    if (s == "su2") return Algebra::su2;
    if (s == "su3") return Algebra::su3;
    fail(ErrorKind::BadInput, "unsupported algebra '" + s + "' (expected su2 or su3)");
}

Weight conjugate_weight(Algebra alg, const Weight& w) {
    return alg == Algebra::su2 ? w : Weight{w.b, w.a};
}

int weight_nality(Algebra alg, const Weight& w) {
    return alg == Algebra::su2 ? (w.a % 2) : ((w.a + 2 * w.b) % 3);
}

std::vector<Weight> enumerate_weights(Algebra alg, int level) {
    if (level < 0) fail(ErrorKind::BadInput, "level must be non-negative");
    std::vector<Weight> ws;
    if (alg == Algebra::su2) {
        for (int a = 0; a <= level; ++a) ws.push_back({a, 0});
    } else {
        for (int a = 0; a <= level; ++a)
            for (int b = 0; a + b <= level; ++b) ws.push_back({a, b});
    }
    return ws;
}

namespace {

// Arrow lambda -> lambda + (1,0), (-1,1), (0,-1) inside the alcove (su3), or
// lambda -> lambda +- 1 (su2): tensoring with the first fundamental.
IntMatrix alcove_adjacency_matrix(Algebra alg, int level, const std::vector<Weight>& ws,
                                  const std::map<Weight, int>& index) {
    const int d = int(ws.size());
    IntMatrix adj(d, d);
    auto link = [&](const Weight& from, Weight to) {
        auto it = index.find(to);
        if (it != index.end()) adj.at(index.at(from), it->second) = 1;
    };
    for (const auto& w : ws) {
        if (alg == Algebra::su2) {
            link(w, {w.a + 1, 0});
            link(w, {w.a - 1, 0});
        } else {
            link(w, {w.a + 1, w.b});
            link(w, {w.a - 1, w.b + 1});
            link(w, {w.a, w.b - 1});
        }
    }
    return adj;
}

} // namespace

SeededFamily seeded_recursion(Algebra alg, int level, const IntMatrix& seed) {
    auto ws = enumerate_weights(alg, level);
    std::map<Weight, int> index;
    for (size_t i = 0; i < ws.size(); ++i) index[ws[i]] = int(i);

    const int d = seed.rows();
    if (seed.cols() != d) fail(ErrorKind::BadInput, "recursion seed must be square");

    SeededFamily fam;
    fam.mats.assign(ws.size(), IntMatrix());
    std::vector<bool> have(ws.size(), false);

    auto get = [&](int a, int b) -> const IntMatrix& {
        // callers guarantee (a,b) was produced at a lower level
        return fam.mats[index.at(Weight{a, b})];
    };
    auto put = [&](const Weight& w, IntMatrix m) -> bool {
        if (!m.is_nonneg()) {
            fam.failed_at = w;
            return false;
        }
        fam.mats[index.at(w)] = std::move(m);
        have[index.at(w)] = true;
        return true;
    };

    if (!put(Weight{0, 0}, IntMatrix::identity(d))) return fam;
    if (level == 0) return fam;

    if (alg == Algebra::su2) {
        if (!put(Weight{1, 0}, seed)) return fam;
        for (int a = 2; a <= level; ++a) {
            IntMatrix m = seed * get(a - 1, 0) - get(a - 2, 0);
            if (!put(Weight{a, 0}, std::move(m))) return fam;
        }
        return fam;
    }

    if (!put(Weight{1, 0}, seed)) return fam;
    if (!put(Weight{0, 1}, seed.transpose())) return fam;
    for (int lvl = 2; lvl <= level; ++lvl) {
        for (int a = lvl; a >= 1; --a) {
            int b = lvl - a;
            IntMatrix m = seed * get(a - 1, b);
            if (b != 0) {
                if (a >= 1 && b >= 1) m -= get(a - 1, b - 1);
                if (a >= 2) m -= get(a - 2, b + 1);
            } else {
                if (a >= 2) m -= get(a - 2, 1);
            }
            if (!put(Weight{a, b}, std::move(m))) return fam;
        }
        if (!put(Weight{0, lvl}, fam.mats[index.at(Weight{lvl, 0})].transpose())) return fam;
    }
    return fam;
}

std::shared_ptr<const FusionRing> FusionRing::make(Algebra alg, int level) {
    auto ring = std::shared_ptr<FusionRing>(new FusionRing());
    ring->alg_ = alg;
    ring->level_ = level;
    ring->weights_ = enumerate_weights(alg, level);
    for (size_t i = 0; i < ring->weights_.size(); ++i) ring->index_[ring->weights_[i]] = int(i);
    for (const auto& w : ring->weights_) {
        ring->conj_.push_back(ring->index_.at(conjugate_weight(alg, w)));
        ring->nality_.push_back(weight_nality(alg, w));
    }
    if (alg == Algebra::su2) {
        if (level >= 1) ring->fundamentals_ = {ring->index_.at(Weight{1, 0})};
    } else {
        if (level >= 1)
            ring->fundamentals_ = {ring->index_.at(Weight{1, 0}), ring->index_.at(Weight{0, 1})};
    }

    IntMatrix adj = alcove_adjacency_matrix(alg, level, ring->weights_, ring->index_);
    auto fam = seeded_recursion(alg, level, adj);
    if (!fam.ok())
        fail(ErrorKind::Inconsistent, "fusion recursion produced a negative entry at level " +
                                          std::to_string(level));
    ring->N_ = std::move(fam.mats);

    // N_{(0,0)} = identity and N_{lambda*} = N_lambda^tr are construction
    // invariants; a violation here is a recursion bug.
    if (!ring->N_[0].is_identity()) fail(ErrorKind::Inconsistent, "fusion unit is not identity");
    for (int i = 0; i < ring->size(); ++i)
        if (ring->N_[ring->conj_[i]] != ring->N_[i].transpose())
            fail(ErrorKind::Inconsistent, "fusion rigidity violated");
    return ring;
}

int FusionRing::index(const Weight& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) fail(ErrorKind::BadInput, "weight outside the alcove");
    return it->second;
}

bool FusionRing::in_alcove(const Weight& w) const { return index_.count(w) > 0; }

std::vector<std::vector<std::complex<double>>> modular_s_matrix(Algebra alg, int level) {
    using cd = std::complex<double>;
    const double pi = 3.14159265358979323846;
    auto ws = enumerate_weights(alg, level);
    const int d = int(ws.size());
    std::vector<std::vector<cd>> S(d, std::vector<cd>(d));

    if (alg == Algebra::su2) {
        const double kappa = level + 2;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                S[i][j] = std::sqrt(2.0 / kappa) *
                          std::sin(pi * (ws[i].a + 1) * (ws[j].a + 1) / kappa);
        return S;
    }

    // su3: orthogonal coordinates of shifted weights, Weyl group = S3 with signs.
    const double kappa = level + 3;
    auto coords = [](const Weight& w) {
        double a = w.a + 1, b = w.b + 1;
        return std::array<double, 3>{(2 * a + b) / 3.0, (b - a) / 3.0, -(a + 2 * b) / 3.0};
    };
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    static const int sign[6] = {1, 1, 1, -1, -1, -1};
    const cd pref = cd(0, -1) / (std::sqrt(3.0) * kappa);
    for (int i = 0; i < d; ++i) {
        auto u = coords(ws[i]);
        for (int j = 0; j < d; ++j) {
            auto v = coords(ws[j]);
            cd sum = 0;
            for (int p = 0; p < 6; ++p) {
                double dot = u[perm[p][0]] * v[0] + u[perm[p][1]] * v[1] + u[perm[p][2]] * v[2];
                sum += double(sign[p]) * std::exp(cd(0, -2 * pi * dot / kappa));
            }
            S[i][j] = pref * sum;
        }
    }
    return S;
}

int64_t verlinde_oracle(const FusionRing& ring, int lam, int mu, int nu, double tol) {
    static thread_local std::pair<std::pair<Algebra, int>,
                                  std::vector<std::vector<std::complex<double>>>> cache;
    if (cache.second.empty() || cache.first != std::make_pair(ring.algebra(), ring.level()))
        cache = {{ring.algebra(), ring.level()}, modular_s_matrix(ring.algebra(), ring.level())};
    const auto& S = cache.second;

    std::complex<double> acc = 0;
    for (int s = 0; s < ring.size(); ++s) acc += S[lam][s] * S[mu][s] * std::conj(S[nu][s]) / S[0][s];
    double rounded = std::round(acc.real());
    if (std::abs(acc.real() - rounded) > tol || std::abs(acc.imag()) > tol)
        fail(ErrorKind::Inconsistent, "Verlinde oracle residue exceeds tolerance");
    return int64_t(rounded);
}

} // namespace modsplit
