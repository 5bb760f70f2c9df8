#include "modsplit/rowspace.hpp"

#include <algorithm>

#include "modsplit/error.hpp"

namespace modsplit {

namespace {

void normalize(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) return;
    size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead < v.size() && v[lead] < 0) g = -g;
    if (g == 1) return;
    for (auto& x : v) x /= g;
}

std::vector<mpz_class> to_mpz(const std::vector<int64_t>& row) {
    std::vector<mpz_class> v(row.size());
    for (size_t i = 0; i < row.size(); ++i) v[i] = static_cast<long>(row[i]);
    return v;
}

} // namespace

void RowSpaceZ::reduce(std::vector<mpz_class>& v) const {
    mpz_class a, b;
    for (size_t i = 0; i < rows_.size(); ++i) {
        size_t p = pivots_[i];
        if (v[p] == 0) continue;
        // v <- pivot_lead * v - v[p] * pivot_row, then renormalize.
        // The pivot row is zero left of p, but v may not be: scale full width.
        a = rows_[i][p];
        b = v[p];
        for (size_t j = 0; j < p; ++j) v[j] *= a;
        for (size_t j = p; j < width_; ++j) {
            v[j] = a * v[j] - b * rows_[i][j];
        }
        normalize(v);
    }
}

bool RowSpaceZ::add_row(const std::vector<int64_t>& row) {
    if (row.size() != width_) fail(ErrorKind::BadInput, "row width mismatch");
    auto v = to_mpz(row);
    normalize(v);
    reduce(v);
    size_t lead = 0;
    while (lead < width_ && v[lead] == 0) ++lead;
    if (lead == width_) return false;
    // insertion keeps pivots_ ascending so reduction order is deterministic
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

bool RowSpaceZ::contains(const std::vector<int64_t>& row) const {
    if (row.size() != width_) fail(ErrorKind::BadInput, "row width mismatch");
    auto v = to_mpz(row);
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

size_t row_space_rank(const std::vector<std::vector<int64_t>>& rows) {
    if (rows.empty()) return 0;
    RowSpaceZ space(rows[0].size());
    for (const auto& r : rows) space.add_row(r);
    return space.rank();
}

LinearBasisQ::LinearBasisQ(std::vector<std::vector<int64_t>> rows) : rows_(std::move(rows)) {
    const size_t n = rows_.size();
    if (n == 0) return;
    const size_t w = rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != w) fail(ErrorKind::BadInput, "basis rows must share a width");

    // Gaussian elimination over Q on a working copy, recording one pivot
    // column per row. Column choice is first-nonzero, row order as given.
    std::vector<std::vector<mpq_class>> work(n, std::vector<mpq_class>(w));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < w; ++j) work[i][j] = static_cast<long>(rows_[i][j]);

    std::vector<bool> used(n, false);
    pivot_cols_.assign(n, 0);
    for (size_t step = 0; step < n; ++step) {
        size_t pr = n, pc = w;
        for (size_t j = 0; j < w && pr == n; ++j) {
            for (size_t i = 0; i < n; ++i) {
                if (!used[i] && work[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr == n) fail(ErrorKind::BadInput, "basis rows are linearly dependent");
        used[pr] = true;
        pivot_cols_[pr] = pc;
        mpq_class inv = 1 / work[pr][pc];
        for (size_t j = 0; j < w; ++j) work[pr][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == pr || work[i][pc] == 0) continue;
            mpq_class f = work[i][pc];
            for (size_t j = 0; j < w; ++j) work[i][j] -= f * work[pr][j];
        }
    }

    // Invert the n x n submatrix rows_[:, pivot_cols_]; decomposition then
    // costs O(n^2) instead of O(n * width) per query.
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(rows_[i][pivot_cols_[j]]);
        m[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && m[pr][col] == 0) ++pr;
        if (pr == n) fail(ErrorKind::BadInput, "pivot submatrix is singular");
        std::swap(m[pr], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            mpq_class f = m[i][col];
            for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    inv_.assign(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv_[i][j] = m[i][n + j];
    // inv_ * rows_[:, pivot_cols_] = I with rows_[:, pivot_cols_][i][j] = rows_[i][pivot_cols_[j]],
    // i.e. coefficients c = t[pivot_cols_] * inv_ (row vector convention below).
}

std::optional<std::vector<mpq_class>> LinearBasisQ::decompose(const std::vector<int64_t>& t) const {
    const size_t n = rows_.size();
    if (n == 0) {
        for (auto v : t)
            if (v != 0) return std::nullopt;
        return std::vector<mpq_class>{};
    }
    if (t.size() != rows_[0].size()) fail(ErrorKind::BadInput, "decompose width mismatch");

    // c_j = sum_i t[pivot_cols_[i]] * inv_[i][j]; with c fixed, verify the full row.
    std::vector<mpq_class> c(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (t[pivot_cols_[i]] == 0) continue;
        mpq_class ti = static_cast<long>(t[pivot_cols_[i]]);
        for (size_t j = 0; j < n; ++j) c[j] += ti * inv_[i][j];
    }
    // exact verification over the whole width
    for (size_t col = 0; col < t.size(); ++col) {
        mpq_class s = 0;
        for (size_t j = 0; j < n; ++j) {
            if (rows_[j][col] == 0 || c[j] == 0) continue;
            s += c[j] * static_cast<long>(rows_[j][col]);
        }
        if (s != static_cast<long>(t[col])) return std::nullopt;
    }
    return c;
}

std::optional<std::vector<int64_t>> LinearBasisQ::decompose_integer(
    const std::vector<int64_t>& t) const {
    const size_t n = rows_.size();
    if (n == 0) {
        for (auto v : t)
            if (v != 0) return std::nullopt;
        return std::vector<int64_t>{};
    }
    if (t.size() != rows_[0].size()) fail(ErrorKind::BadInput, "decompose width mismatch");

    std::vector<mpq_class> c(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (t[pivot_cols_[i]] == 0) continue;
        mpq_class ti = static_cast<long>(t[pivot_cols_[i]]);
        for (size_t j = 0; j < n; ++j) c[j] += ti * inv_[i][j];
    }
    std::vector<int64_t> ci(n);
    for (size_t j = 0; j < n; ++j) {
        if (c[j].get_den() != 1) return std::nullopt;
        if (!c[j].get_num().fits_slong_p())
            fail(ErrorKind::Overflow, "expansion coefficient overflow");
        ci[j] = c[j].get_num().get_si();
    }
    // full-width verification in fast integer arithmetic
    for (size_t col = 0; col < t.size(); ++col) {
        int64_t s = 0;
        for (size_t j = 0; j < n; ++j)
            if (ci[j] != 0 && rows_[j][col] != 0)
                s = checked_add(s, checked_mul(ci[j], rows_[j][col]));
        if (s != t[col]) return std::nullopt;
    }
    return ci;
}

} // namespace modsplit
