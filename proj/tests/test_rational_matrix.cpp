#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include <wmat/rational_matrix.hpp>

#include "oracles.hpp"

using namespace wmat;

namespace
{

RationalMatrix from_dense(const std::vector<std::vector<Scalar>> &d, std::size_t cols)
{
    RationalMatrix m(d.size(), cols);
    for (std::size_t r = 0; r < d.size(); ++r) {
        SparseVector row;
        for (std::size_t c = 0; c < cols; ++c) {
            if (d[r][c] != 0) {
                row.emplace_back(c, d[r][c]);
            }
        }
        m.set_row(r, row);
    }
    return m;
}

bool in_kernel(const RationalMatrix &m, const SparseVector &x)
{
    const auto y = multiply(m, x);
    return std::all_of(y.begin(), y.end(), [](const Scalar &v) { return v == 0; });
}

} // namespace

TEST_CASE("rank and kernel of small matrices", "[matrix]")
{
    // [1 2 3; 2 4 6] has rank 1 and kernel spanned by (-2,1,0), (-3,0,1).
    const RationalMatrix m = from_dense({{1, 2, 3}, {2, 4, 6}}, 3);
    CHECK(rank(m) == 1);
    const auto k = nullspace(m);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == SparseVector{{0, Scalar(1)}, {2, Scalar(-1, 3)}});
    CHECK(k[1] == SparseVector{{1, Scalar(1)}, {2, Scalar(-2, 3)}});
    for (const auto &v : k) {
        CHECK(in_kernel(m, v));
    }

    const RationalMatrix empty(0, 2);
    CHECK(rank(empty) == 0);
    CHECK(nullspace(empty) == std::vector<SparseVector>{{{0, Scalar(1)}}, {{1, Scalar(1)}}});

    const RationalMatrix id = from_dense({{1, 0}, {0, 1}}, 2);
    CHECK(nullspace(id).empty());
}

TEST_CASE("echelon form is reduced", "[matrix]")
{
    const RationalMatrix m = from_dense({{0, 2, 4, 1}, {3, 0, 3, 0}, {3, 2, 7, 1}}, 4);
    const EchelonForm ef = reduced_row_echelon(m);
    REQUIRE(ef.pivot_columns == std::vector<std::size_t>{0, 1});
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
        CHECK(ef.rows[i].front() == std::pair<std::size_t, Scalar>{ef.pivot_columns[i], Scalar(1)});
        for (std::size_t j = 0; j < ef.rows.size(); ++j) {
            if (i != j) {
                for (const auto &[c, v] : ef.rows[j]) {
                    CHECK(c != ef.pivot_columns[i]);
                }
            }
        }
    }
}

TEST_CASE("set_row validates entries", "[matrix]")
{
    RationalMatrix m(1, 3);
    CHECK_THROWS_AS(m.set_row(0, {{3, Scalar(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(m.set_row(0, {{1, Scalar(1)}, {0, Scalar(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(m.set_row(0, {{1, Scalar(1)}, {1, Scalar(2)}}), std::invalid_argument);
    m.set_row(0, {{0, Scalar(0)}, {2, Scalar(5)}});
    CHECK(m.nonzeros() == 1);
    CHECK(m.entry(0, 2) == 5);
    CHECK(m.entry(0, 1) == 0);
}

TEST_CASE("rank agrees with dense elimination on random matrices", "[matrix][property]")
{
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> value(-3, 3);
    std::uniform_int_distribution<int> dim(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = dim(rng);
        const std::size_t cols = dim(rng);
        std::vector<std::vector<Scalar>> d(rows, std::vector<Scalar>(cols));
        for (auto &row : d) {
            for (auto &x : row) {
                // Mostly zeros, as in the coproduct matrices.
                x = (value(rng) % 2 == 0) ? Scalar(value(rng), 1 + (trial % 3)) : Scalar(0);
            }
        }
        const RationalMatrix m = from_dense(d, cols);
        const std::size_t r = rank(m);
        REQUIRE(r == oracle::dense_rank(d));
        const auto k = nullspace(m);
        REQUIRE(r + k.size() == cols);
        for (const auto &v : k) {
            REQUIRE(in_kernel(m, v));
        }
        // Kernel vectors are independent.
        std::vector<std::vector<Scalar>> kd(k.size(), std::vector<Scalar>(cols));
        for (std::size_t i = 0; i < k.size(); ++i) {
            for (const auto &[c, x] : k[i]) {
                kd[i][c] = x;
            }
        }
        REQUIRE(oracle::dense_rank(kd) == k.size());
    }
}

TEST_CASE("kernel basis does not depend on row order", "[matrix][property]")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> value(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Scalar>> d(6, std::vector<Scalar>(7));
        for (auto &row : d) {
            for (auto &x : row) {
                x = value(rng);
            }
        }
        const auto base = nullspace(from_dense(d, 7));
        std::shuffle(d.begin(), d.end(), rng);
        d.push_back(d.front());
        REQUIRE(nullspace(from_dense(d, 7)) == base);
    }
}

TEST_CASE("canonical span ignores the spanning set", "[matrix]")
{
    const std::vector<SparseVector> a{{{0, Scalar(1)}, {1, Scalar(-1)}}, {{1, Scalar(2)}, {2, Scalar(2)}}};
    const std::vector<SparseVector> b{{{0, Scalar(3)}, {2, Scalar(3)}}, {{0, Scalar(1)}, {1, Scalar(-1)}},
                                      {{0, Scalar(2)}, {1, Scalar(1)}, {2, Scalar(3)}}};
    CHECK(canonical_span(a) == canonical_span(b));
}
