#include "doctest.h"

#include <algorithm>
#include <random>

#include "modsplit/rowspace.hpp"

using namespace modsplit;

namespace {

// Independent oracle: dense fraction-free (Bareiss) elimination.
size_t bareiss_rank(std::vector<std::vector<int64_t>> rows) {
    if (rows.empty()) return 0;
    size_t n = rows.size(), w = rows[0].size();
    std::vector<std::vector<long double>> a(n, std::vector<long double>(w));
    // Bareiss on exact integers; long double is enough for the tiny fuzz sizes,
    // but keep it integral by using __int128 instead.
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(w));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < w; ++j) m[i][j] = rows[i][j];
    __int128 prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < w && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        for (size_t i = rank + 1; i < n; ++i) {
            for (size_t j = col + 1; j < w; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    (void)a;
    return rank;
}

} // namespace

TEST_CASE("rank of standard basis vectors") {
    std::vector<std::vector<int64_t>> rows;
    for (int i = 0; i < 5; ++i) {
        std::vector<int64_t> r(7, 0);
        r[i] = 1;
        rows.push_back(r);
    }
    CHECK(row_space_rank(rows) == 5);
    rows.push_back(rows[2]);                       // duplicate adds nothing
    CHECK(row_space_rank(rows) == 5);
}

TEST_CASE("rank is permutation invariant and bounded") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int64_t> dist(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 2 + rng() % 8, w = 2 + rng() % 8;
        std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(w));
        for (auto& r : rows)
            for (auto& v : r) v = dist(rng);
        size_t rk = row_space_rank(rows);
        CHECK(rk <= std::min(n, w));
        auto shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(row_space_rank(shuffled) == rk);
    }
}

TEST_CASE("incremental rank matches Bareiss elimination on fuzzed matrices") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int64_t> dist(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng() % 12, w = 1 + rng() % 12;
        std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(w));
        for (auto& r : rows)
            for (auto& v : r) v = dist(rng);
        // plant some dependencies
        if (n >= 3 && trial % 3 == 0) {
            for (size_t j = 0; j < w; ++j) rows[n - 1][j] = rows[0][j] + 2 * rows[1][j];
        }
        CHECK(row_space_rank(rows) == bareiss_rank(rows));
    }
}

TEST_CASE("LinearBasisQ decomposes exactly") {
    std::vector<std::vector<int64_t>> basis = {
        {1, 0, 2, 0}, {0, 1, 1, 0}, {0, 0, 0, 3}};
    LinearBasisQ lb(basis);

    auto c = lb.decompose_integer({2, 3, 7, 6});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<int64_t>{2, 3, 2});

    CHECK(!lb.decompose_integer({0, 0, 1, 0}).has_value());   // outside the span

    auto q = lb.decompose({0, 0, 0, 1});                       // rational coefficients
    REQUIRE(q.has_value());
    CHECK((*q)[2] == mpq_class(1, 3));
}

TEST_CASE("LinearBasisQ rejects dependent rows") {
    std::vector<std::vector<int64_t>> dep = {{1, 2}, {2, 4}};
    CHECK_THROWS_AS(LinearBasisQ{dep}, Error);
}
