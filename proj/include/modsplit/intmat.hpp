#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modsplit/error.hpp"

namespace modsplit {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer addition overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer subtraction overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer multiplication overflow");
    return r;
}

// Dense row-major matrix of checked signed 64-bit integers. Every value in the
// pipeline (fusion coefficients, toric matrices, structure constants) lives here;
// overflow is treated as a logic error, not a capacity request.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {
        if (rows < 0 || cols < 0) fail(ErrorKind::BadInput, "negative matrix dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int64_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    int64_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    const std::vector<int64_t>& flat() const { return a_; }
    std::vector<int64_t>& flat() { return a_; }

    bool same_shape(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    IntMatrix& operator+=(const IntMatrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] = checked_add(a_[i], o.a_[i]);
        return *this;
    }

    IntMatrix& operator-=(const IntMatrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] = checked_sub(a_[i], o.a_[i]);
        return *this;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorKind::BadInput, "matrix product dimension mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                int64_t aik = a.at(i, k);
                if (aik == 0) continue;
                const int64_t* brow = &b.a_[size_t(k) * b.cols_];
                int64_t* rrow = &r.a_[size_t(i) * r.cols_];
                for (int j = 0; j < b.cols_; ++j)
                    if (brow[j] != 0) rrow[j] = checked_add(rrow[j], checked_mul(aik, brow[j]));
            }
        }
        return r;
    }

    IntMatrix& scale(int64_t s) {
        for (auto& v : a_) v = checked_mul(v, s);
        return *this;
    }

    // this += s * o
    void add_scaled(const IntMatrix& o, int64_t s) {
        require_same_shape(o);
        if (s == 0) return;
        for (size_t i = 0; i < a_.size(); ++i)
            a_[i] = checked_add(a_[i], checked_mul(s, o.a_[i]));
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    int64_t trace() const {
        int64_t s = 0;
        for (int i = 0; i < rows_ && i < cols_; ++i) s = checked_add(s, at(i, i));
        return s;
    }

    int64_t entry_sum() const {
        int64_t s = 0;
        for (auto v : a_) s = checked_add(s, v);
        return s;
    }

    bool is_zero() const {
        for (auto v : a_)
            if (v != 0) return false;
        return true;
    }

    bool is_nonneg() const {
        for (auto v : a_)
            if (v < 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    // m/d when every entry is divisible by d, nothing otherwise.
    std::optional<IntMatrix> try_divide(int64_t d) const {
        if (d < 1) fail(ErrorKind::BadInput, "try_divide requires a positive divisor");
        IntMatrix q(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) {
            if (a_[i] % d != 0) return std::nullopt;
            q.a_[i] = a_[i] / d;
        }
        return q;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Lexicographic on (rows, cols, entries); the canonical order used for
    // deterministic map keys and gauge tie-breaking.
    friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.a_ < b.a_;
    }

private:
    void require_same_shape(const IntMatrix& o) const {
        if (!same_shape(o)) fail(ErrorKind::BadInput, "matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<int64_t> a_;
};

// Row-major flattening; the bijection used to treat matrices as vectors when
// computing ranks and linear expansions.
inline std::vector<int64_t> flatten(const IntMatrix& m) { return m.flat(); }

inline IntMatrix unflatten(const std::vector<int64_t>& row, int rows, int cols) {
    if (int64_t(row.size()) != int64_t(rows) * cols)
        fail(ErrorKind::BadInput, "unflatten length mismatch");
    IntMatrix m(rows, cols);
    m.flat() = row;
    return m;
}

} // namespace modsplit
