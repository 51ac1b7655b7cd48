#include "flagmono/exact_rank.hpp"

#include <random>

#include "doctest.h"
#include "flagmono/chains.hpp"
#include "flagmono/sr.hpp"
#include "oracles.hpp"

using namespace flagmono;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("exact rank on small fixed matrices") {
    CHECK(exact_rank(from_rows({{1, 1, 1}})) == 1);
    CHECK(exact_rank(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(exact_rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(exact_rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(exact_rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    CHECK(exact_rank(IntMat(0, 5)) == 0);
    CHECK(exact_rank(IntMat(5, 0)) == 0);
}

TEST_CASE("relation-matrix rank of U(3,4) in degree {1,2} is 9") {
    RelationMatrix rel = theta_relations(flat_lattice(Matroid::uniform(3, 4)), 0b11);
    CHECK(rel.mat.rows == 10);
    CHECK(rel.mat.cols == 12);
    CHECK(exact_rank(rel.mat) == 9);
    CHECK(oracle::rational_rank(rel.mat) == 9);
}

TEST_CASE("random matrices agree with rational elimination") {
    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<int> dims(1, 9);
    std::uniform_int_distribution<long long> small(-1, 1);
    std::uniform_int_distribution<long long> mid(-50, 50);
    for (int trial = 0; trial < 400; ++trial) {
        IntMat m(dims(rng), dims(rng));
        for (long long& v : m.a) v = trial % 2 == 0 ? small(rng) : mid(rng);
        CHECK(exact_rank(m) == oracle::rational_rank(m));
    }
}

TEST_CASE("overflow falls back to arbitrary precision") {
    const long long big = 3037000500LL;  // big * big > 2^63 - 1
    IntMat m = from_rows({{big, 1}, {1, big}});
    CHECK(exact_rank(m) == 2);
    CHECK(oracle::rational_rank(m) == 2);

    IntMat r1 = from_rows({{big, big}, {big, big}});
    CHECK(exact_rank(r1) == 1);

    // entries whose 3x3 minors overflow while the rank stays deficient
    IntMat m3 = from_rows({{big, big + 1, 1}, {big + 1, big, 1}, {2 * big + 1, 2 * big + 1, 2}});
    CHECK(exact_rank(m3) == oracle::rational_rank(m3));
}

TEST_CASE("kernel basis") {
    auto k = kernel_basis(from_rows({{1, 1, 1}}));
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        BigInt sum = 0;
        for (const BigInt& x : v) sum += x;
        CHECK(sum == 0);
    }

    CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());
    CHECK(kernel_basis(IntMat(2, 3)).size() == 3);  // zero matrix

    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<int> dims(1, 7);
    std::uniform_int_distribution<long long> val(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        IntMat m(dims(rng), dims(rng));
        for (long long& v : m.a) v = val(rng);
        auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == m.cols - exact_rank(m));
        for (const auto& vec : basis) {
            bool nonzero = false;
            for (const BigInt& x : vec) nonzero = nonzero || x != 0;
            CHECK(nonzero);
            for (int i = 0; i < m.rows; ++i) {
                BigInt acc = 0;
                for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * vec[j];
                CHECK(acc == 0);
            }
        }
        // stacked kernel vectors are independent: convert only when they fit
        bool fits = true;
        for (const auto& vec : basis)
            for (const BigInt& x : vec)
                if (abs(x) > 1000000) fits = false;
        if (fits && !basis.empty()) {
            IntMat stacked(static_cast<int>(basis.size()), m.cols);
            for (int i = 0; i < stacked.rows; ++i)
                for (int j = 0; j < m.cols; ++j)
                    stacked.at(i, j) = basis[i][j].convert_to<long long>();
            CHECK(exact_rank(stacked) == stacked.rows);
        }
    }
}
