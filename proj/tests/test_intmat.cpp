#include "doctest.h"

#include <random>

#include "modsplit/intmat.hpp"

using namespace modsplit;

TEST_CASE("flatten is the row-major bijection") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 3; m.at(1, 1) = 4;
    CHECK(flatten(m) == std::vector<int64_t>{1, 2, 3, 4});
    CHECK(unflatten(flatten(m), 2, 2) == m);

    CHECK(flatten(IntMatrix(3, 2)) == std::vector<int64_t>(6, 0));
    CHECK(flatten(IntMatrix::identity(2)) == std::vector<int64_t>{1, 0, 0, 1});
}

TEST_CASE("try_divide divides exactly or reports failure") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(1, 1) = 6;
    auto q = m.try_divide(2);
    REQUIRE(q.has_value());
    CHECK(q->at(0, 0) == 1);
    CHECK(q->at(0, 1) == 2);
    CHECK(q->at(1, 0) == 0);
    CHECK(q->at(1, 1) == 3);

    IntMatrix n(1, 2);
    n.at(0, 0) = 2; n.at(0, 1) = 3;
    CHECK(!n.try_divide(2).has_value());
}

TEST_CASE("is_nonneg") {
    CHECK(IntMatrix(3, 3).is_nonneg());
    IntMatrix m(1, 2);
    m.at(0, 0) = 1; m.at(0, 1) = -1;
    CHECK(!m.is_nonneg());
}

TEST_CASE("overflow raises instead of wrapping") {
    IntMatrix m(1, 1);
    m.at(0, 0) = INT64_MAX;
    IntMatrix one(1, 1);
    one.at(0, 0) = 1;
    CHECK_THROWS_AS(m + one, Error);
    CHECK_THROWS_AS(m * m, Error);
}

TEST_CASE("product associates and distributes on random small matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int64_t> dist(-4, 4);
    auto rand_mat = [&](int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
        return m;
    };
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 5);
        IntMatrix a = rand_mat(n), b = rand_mat(n), c = rand_mat(n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}
