#ifndef WMAT_ALGEBRA_HPP
#define WMAT_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <wmat/error.hpp>
#include <wmat/formal_sum.hpp>
#include <wmat/word.hpp>

namespace wmat
{

// u*v = u T_{sup(u)}(v)
inline PackedWord shifted_concat(const PackedWord &u, const PackedWord &v)
{
    return PackedWord::unchecked(concatenate(u, shift(u.sup(), v)));
}

// v_1 * v_2 * ... * v_n; the unit word for an empty sequence.
inline PackedWord shifted_concat_all(std::span<const PackedWord> factors)
{
    std::vector<Index> out;
    Index offset = 0;
    for (const PackedWord &f : factors) {
        for (Index i : f.letters()) {
            out.push_back(i == 0 ? 0 : i + offset);
        }
        offset += f.sup();
    }
    return PackedWord::unchecked(Word(std::move(out)));
}

inline LinComb product(const LinComb &a, const LinComb &b)
{
    LinComb out;
    for (const auto &[u, cu] : a) {
        for (const auto &[v, cv] : b) {
            out.add(shifted_concat(u, v), cu * cv);
        }
    }
    return out;
}

inline LinComb operator*(const LinComb &a, const LinComb &b)
{
    return product(a, b);
}

// Positions i in [1..|w|-1] where w = w[1..i] * (down-shifted w[i+1..|w|]):
// sup of the prefix plus one is the least nonzero index of the suffix, or the
// suffix is all x_0. Nonzero indices are what the infimum ranges over.
inline IndexSet admissible_cuts(const PackedWord &w)
{
    if (w.empty()) {
        throw domain_error("admissible cuts are undefined on the unit word");
    }
    const std::size_t n = w.size();
    // suffix_min[i]: least nonzero index among 0-based positions i..n-1, 0 if none.
    std::vector<Index> suffix_min(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        const Index x = w[i];
        const Index m = suffix_min[i + 1];
        suffix_min[i] = (x != 0 && (m == 0 || x < m)) ? x : m;
    }
    std::vector<std::size_t> cuts;
    Index prefix_sup = 0;
    for (std::size_t i = 1; i < n; ++i) {
        prefix_sup = std::max(prefix_sup, w[i - 1]);
        const Index m = suffix_min[i];
        if (m == 0 || m == prefix_sup + 1) {
            cuts.push_back(i);
        }
    }
    return IndexSet(std::move(cuts));
}

inline bool is_irreducible(const PackedWord &w)
{
    if (w.empty()) {
        throw domain_error("the unit word is neither irreducible nor reducible");
    }
    return admissible_cuts(w).empty();
}

// Unique factorization into irreducible words, splitting at the leftmost
// admissible cut each time.
inline std::vector<PackedWord> factor_irreducible(const PackedWord &w)
{
    if (w.empty()) {
        throw domain_error("cannot factor the unit word");
    }
    std::vector<PackedWord> factors;
    const std::vector<std::size_t> cuts = admissible_cuts(w).positions();
    std::size_t start = 0;
    Index offset = 0;
    auto emit = [&](std::size_t end) {
        std::vector<Index> letters;
        Index local_sup = 0;
        for (std::size_t i = start; i < end; ++i) {
            const Index x = w[i];
            letters.push_back(x == 0 ? 0 : x - offset);
            local_sup = std::max(local_sup, letters.back());
        }
        factors.push_back(PackedWord::unchecked(Word(std::move(letters))));
        offset += local_sup;
        start = end;
    };
    // Every admissible cut of w is a factor boundary, so the leftmost-cut
    // greedy pass visits them in order.
    for (std::size_t c : cuts) {
        emit(c);
    }
    emit(w.size());
    return factors;
}

} // namespace wmat

#endif
