#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modsplit/intmat.hpp"

namespace modsplit {

enum class Algebra { su2, su3 };

std::string algebra_name(Algebra a);
Algebra algebra_from_name(const std::string& s);

// Integrable weight at some level: (a) for su2, (a, b) for su3.
struct Weight {
    int a = 0;
    int b = 0;

    friend bool operator==(const Weight& x, const Weight& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const Weight& x, const Weight& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

// (a,b)* = (b,a) for su3; su2 weights are self-conjugate.
Weight conjugate_weight(Algebra alg, const Weight& w);

// Z_n grading advanced by one along fundamental-generator edges.
int weight_nality(Algebra alg, const Weight& w);

// Canonical lexicographic alcove enumeration; weight 0 sits at index 0.
std::vector<Weight> enumerate_weights(Algebra alg, int level);

// Outcome of running the level-truncated recursion from a seed: the full
// family, or the first weight at which an entry went negative.
struct SeededFamily {
    std::vector<IntMatrix> mats;          // indexed like enumerate_weights
    std::optional<Weight> failed_at;      // set iff the seed is not admissible
    bool ok() const { return !failed_at.has_value(); }
};

// Runs the truncated recursion with F[0] = identity and F[fundamental] = seed
// (su3 additionally seeds the conjugate fundamental with seed^tr). This is the
// single engine behind fusion matrices, annular matrices and the V_{lambda 0}
// families; only the seed differs.
SeededFamily seeded_recursion(Algebra alg, int level, const IntMatrix& seed);

class FusionRing {
public:
    static std::shared_ptr<const FusionRing> make(Algebra alg, int level);

    Algebra algebra() const { return alg_; }
    int level() const { return level_; }
    int size() const { return int(weights_.size()); }

    const std::vector<Weight>& weights() const { return weights_; }
    const Weight& weight(int i) const { return weights_[i]; }
    int index(const Weight& w) const;
    bool in_alcove(const Weight& w) const;

    int conj_index(int i) const { return conj_[i]; }
    int nality(int i) const { return nality_[i]; }
    int nality_modulus() const { return alg_ == Algebra::su2 ? 2 : 3; }

    // Fundamental generators: (1) for su2; (1,0) and (0,1) for su3.
    const std::vector<int>& fundamentals() const { return fundamentals_; }

    const IntMatrix& N(int i) const { return N_[i]; }
    const std::vector<IntMatrix>& fusion_matrices() const { return N_; }
    int64_t fusion_coeff(int lam, int mu, int nu) const { return N_[lam].at(mu, nu); }

    // Adjacency of the alcove graph (multiplication by the first fundamental).
    const IntMatrix& alcove_adjacency() const { return N_[fundamentals_[0]]; }

private:
    FusionRing() = default;

    Algebra alg_ = Algebra::su3;
    int level_ = 0;
    std::vector<Weight> weights_;
    std::map<Weight, int> index_;
    std::vector<int> conj_;
    std::vector<int> nality_;
    std::vector<int> fundamentals_;
    std::vector<IntMatrix> N_;
};

// Independent numeric check on a single fusion coefficient via the modular
// S-matrix. Raises when the value sits further than `tol` from an integer.
int64_t verlinde_oracle(const FusionRing& ring, int lam, int mu, int nu, double tol = 1e-6);

// Numeric S-matrix entries used by the oracle (row/column in alcove order).
std::vector<std::vector<std::complex<double>>> modular_s_matrix(Algebra alg, int level);

} // namespace modsplit
