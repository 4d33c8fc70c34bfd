#include <catch2/catch_amalgamated.hpp>

#include <wmat/algebra.hpp>
#include <wmat/enumeration.hpp>

#include "oracles.hpp"

using namespace wmat;

namespace
{

std::vector<PackedWord> packed_up_to(std::size_t max_len)
{
    std::vector<PackedWord> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        for (const Word &w : oracle::all_packed_words(n)) {
            out.push_back(PackedWord(w));
        }
    }
    return out;
}

} // namespace

TEST_CASE("shifted concatenation", "[algebra]")
{
    CHECK(shifted_concat({1, 1}, {1}) == PackedWord{1, 1, 2});
    const PackedWord u{2, 0, 1};
    CHECK(shifted_concat(u, {}) == u);
    CHECK(shifted_concat({}, u) == u);
    CHECK(shifted_concat({1}, {0, 1}) == PackedWord{1, 0, 2});
    CHECK(shifted_concat({1}, {0, 1}).word() == oracle::shifted_concat(Word{1}, Word{0, 1}));
    CHECK(shifted_concat({1}, {1, 1}) != shifted_concat({1, 1}, {1}));
}

TEST_CASE("linear product", "[algebra]")
{
    const LinComb a(PackedWord{1}, 2);
    const LinComb b(PackedWord{1}, 3);
    CHECK(product(a, b) == LinComb(PackedWord{1, 2}, 6));
    CHECK(product(a, LinComb{}).is_zero());
    const LinComb sum = LinComb(PackedWord{1}) + LinComb(PackedWord{0});
    CHECK(sum * LinComb(PackedWord{1}) == LinComb(PackedWord{1, 2}) + LinComb(PackedWord{0, 1}));
}

TEST_CASE("shifted concatenation is an associative graded product with unit", "[algebra][property]")
{
    const auto words = packed_up_to(3);
    for (const PackedWord &u : words) {
        for (const PackedWord &v : words) {
            const PackedWord uv = shifted_concat(u, v);
            REQUIRE(is_packed(uv));
            REQUIRE(uv.size() == u.size() + v.size());
            REQUIRE(uv.sup() == u.sup() + v.sup());
            REQUIRE(uv.word() == oracle::shifted_concat(u, v));
            for (const PackedWord &w : words) {
                REQUIRE(shifted_concat(uv, w) == shifted_concat(u, shifted_concat(v, w)));
            }
        }
    }
    for (const PackedWord &u : packed_up_to(5)) {
        REQUIRE(shifted_concat(u, {}) == u);
        REQUIRE(shifted_concat({}, u) == u);
    }
}

TEST_CASE("pack of a sub-word of a product splits", "[algebra][property]")
{
    // pack((u*v)[I+J]) = pack(u[I]) * pack(v[J'])
    const auto words = packed_up_to(3);
    for (const PackedWord &u : words) {
        for (const PackedWord &v : words) {
            const PackedWord uv = shifted_concat(u, v);
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << u.size()); ++a) {
                for (std::uint64_t b = 0; b < (std::uint64_t{1} << v.size()); ++b) {
                    const IndexSet i_set = IndexSet::from_mask(a, u.size());
                    const IndexSet j_shifted = IndexSet::from_mask(b, v.size());
                    std::vector<std::size_t> j_pos;
                    for (std::size_t p : j_shifted) {
                        j_pos.push_back(p + u.size());
                    }
                    const IndexSet j_set(j_pos);
                    REQUIRE(j_set.shifted_down(u.size()) == j_shifted);
                    REQUIRE(pack(subword(uv, i_set + j_set))
                            == shifted_concat(pack(subword(u, i_set)), pack(subword(v, j_shifted))));
                }
            }
        }
    }
}

TEST_CASE("admissible cuts", "[algebra][factor]")
{
    CHECK(admissible_cuts({1, 1, 2}) == IndexSet{2});
    CHECK(admissible_cuts({1, 2, 1}).empty());
    CHECK(admissible_cuts({0, 0}) == IndexSet{1});
    CHECK(oracle::cuts_by_search(Word{1, 1, 2}) == std::vector<std::size_t>{2});
    CHECK(oracle::cuts_by_search(Word{1, 2, 1}).empty());
    CHECK(oracle::cuts_by_search(Word{0, 0}) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(admissible_cuts({}), domain_error);
}

TEST_CASE("admissible cuts match exhaustive search", "[algebra][factor][property]")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const Word &w : oracle::all_packed_words(n)) {
            REQUIRE(admissible_cuts(PackedWord(w)).positions() == oracle::cuts_by_search(w));
        }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Word &w : oracle::all_packed_words(n)) {
            std::vector<std::size_t> cuts;
            for (std::size_t i = 1; i < n; ++i) {
                if (oracle::splits_at(w, i)) {
                    cuts.push_back(i);
                }
            }
            REQUIRE(admissible_cuts(PackedWord(w)).positions() == cuts);
        }
    }
}

TEST_CASE("irreducibility", "[algebra][factor]")
{
    CHECK(is_irreducible({1, 1, 1}));
    CHECK_FALSE(is_irreducible({1, 1, 2}));
    CHECK(is_irreducible({1, 0, 1, 0, 1}));
    CHECK(is_irreducible({1, 0, 0, 1, 0, 0, 1}));
    CHECK(is_irreducible({0}));
    CHECK(is_irreducible({1}));
    CHECK_FALSE(is_irreducible({0, 1}));
    CHECK_THROWS_AS(is_irreducible({}), domain_error);
}

TEST_CASE("factorization into irreducibles", "[algebra][factor]")
{
    CHECK(factor_irreducible({1, 1, 2}) == std::vector<PackedWord>{{1, 1}, {1}});
    CHECK(factor_irreducible({1, 1, 1}) == std::vector<PackedWord>{{1, 1, 1}});
    CHECK(factor_irreducible({0, 1}) == std::vector<PackedWord>{{0}, {1}});
    CHECK(factor_irreducible({2, 1, 0, 3, 0}) == std::vector<PackedWord>{{2, 1}, {0}, {1}, {0}});
    CHECK_THROWS_AS(factor_irreducible({}), domain_error);

    const auto found = oracle::irreducible_factorizations(Word{0, 1});
    REQUIRE(found.size() == 1);
    CHECK(found.front() == std::vector<Word>{Word{0}, Word{1}});
}

TEST_CASE("factorization round trip", "[algebra][factor][property]")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const PackedWord &w : enumerate_packed(n)) {
            const std::vector<PackedWord> f = factor_irreducible(w);
            REQUIRE(shifted_concat_all(f) == w);
            for (const PackedWord &v : f) {
                REQUIRE_FALSE(v.empty());
                REQUIRE(oracle::is_irreducible(v));
            }
        }
    }
}

TEST_CASE("factorization is unique", "[algebra][factor][property]")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Word &w : oracle::all_packed_words(n)) {
            const auto all = oracle::irreducible_factorizations(w);
            REQUIRE(all.size() == 1);
            std::vector<Word> ours;
            for (const PackedWord &v : factor_irreducible(PackedWord(w))) {
                ours.push_back(v.word());
            }
            REQUIRE(all.front() == ours);
        }
    }
}

TEST_CASE("packed words are products of irreducibles along compositions", "[algebra][property]")
{
    // Every packed word of length n arises once from a composition of n and a
    // choice of irreducible words of those lengths.
    for (std::size_t n = 1; n <= 5; ++n) {
        std::map<PackedWord, int> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            std::vector<std::size_t> parts;
            std::size_t run = 0;
            for (std::size_t i = 0; i < n; ++i) {
                ++run;
                if (i + 1 == n || ((mask >> i) & 1u)) {
                    parts.push_back(run);
                    run = 0;
                }
            }
            std::vector<PackedWord> partial{PackedWord{}};
            for (std::size_t len : parts) {
                std::vector<PackedWord> next;
                for (const PackedWord &p : partial) {
                    for (const PackedWord &v : enumerate_irreducible(len)) {
                        next.push_back(shifted_concat(p, v));
                    }
                }
                partial = std::move(next);
            }
            for (const PackedWord &w : partial) {
                ++seen[w];
            }
        }
        REQUIRE(seen.size() == oracle::all_packed_words(n).size());
        for (const auto &[w, count] : seen) {
            REQUIRE(count == 1);
        }
    }
}
