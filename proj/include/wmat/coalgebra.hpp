#ifndef WMAT_COALGEBRA_HPP
#define WMAT_COALGEBRA_HPP

// Selection/quotient coproduct, counit, reduced coproduct and antipode, plus
// exact checkers for the Hopf algebra axioms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <wmat/algebra.hpp>
#include <wmat/error.hpp>
#include <wmat/formal_sum.hpp>
#include <wmat/word.hpp>

namespace wmat
{

namespace detail
{

inline constexpr std::size_t max_split_length = 63;

// Calls f(mask, pack(w[I]), pack(w[J]/w[I])) for every subset I of positions,
// encoded as a bit mask over 0-based positions, in increasing mask order.
// J is the complement of I.
template <typename F>
void for_each_split(const Word &w, F &&f)
{
    const std::size_t n = w.size();
    if (n > max_split_length) {
        throw resource_error("word of length " + std::to_string(n) + " is too long to enumerate its splits");
    }
    const Index top = w.sup();
    std::vector<char> killed(static_cast<std::size_t>(top) + 1, 0);
    std::vector<Index> selected;
    std::vector<Index> rest;
    selected.reserve(n);
    rest.reserve(n);
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        selected.clear();
        rest.clear();
        std::fill(killed.begin(), killed.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) {
                selected.push_back(w[i]);
                killed[w[i]] = 1;
            } else {
                rest.push_back(w[i]);
            }
        }
        for (Index &x : rest) {
            if (killed[x]) {
                x = 0;
            }
        }
        f(mask, pack(Word(selected)), pack(Word(rest)));
    }
}

} // namespace detail

// Delta(w) = sum over I + J = [1..|w|] of pack(w[I]) (x) pack(w[J]/w[I]).
inline Tensor2 coproduct(const PackedWord &w)
{
    Tensor2 out;
    detail::for_each_split(w, [&](std::uint64_t, PackedWord left, PackedWord right) {
        out.add(WordPair{std::move(left), std::move(right)}, 1);
    });
    return out;
}

inline Tensor2 coproduct(const LinComb &a)
{
    Tensor2 out;
    for (const auto &[w, c] : a) {
        for (const auto &[pair, d] : coproduct(w)) {
            out.add(pair, c * d);
        }
    }
    return out;
}

inline Scalar counit(const LinComb &a)
{
    return a.coefficient(PackedWord{});
}

inline Scalar counit(const PackedWord &w)
{
    return w.empty() ? Scalar(1) : Scalar(0);
}

// Delta(h) - 1 (x) h - h (x) 1; zero on the unit word.
inline Tensor2 reduced_coproduct(const LinComb &a)
{
    Tensor2 out;
    for (const auto &[w, c] : a) {
        if (w.empty()) {
            continue;
        }
        for (const auto &[pair, d] : coproduct(w)) {
            if (!pair.first.empty() && !pair.second.empty()) {
                out.add(pair, c * d);
            }
        }
    }
    return out;
}

inline Tensor2 reduced_coproduct(const PackedWord &w)
{
    return reduced_coproduct(LinComb(w));
}

// Componentwise shifted concatenation on both slots.
inline Tensor2 tensor_product(const Tensor2 &a, const Tensor2 &b)
{
    Tensor2 out;
    for (const auto &[p, c] : a) {
        for (const auto &[q, d] : b) {
            out.add(WordPair{shifted_concat(p.first, q.first), shifted_concat(p.second, q.second)}, c * d);
        }
    }
    return out;
}

inline Tensor2 swap_slots(const Tensor2 &t)
{
    Tensor2 out;
    for (const auto &[p, c] : t) {
        out.add(WordPair{p.second, p.first}, c);
    }
    return out;
}

// (Delta (x) Id)(t)
inline Tensor3 coproduct_left(const Tensor2 &t)
{
    Tensor3 out;
    for (const auto &[p, c] : t) {
        for (const auto &[q, d] : coproduct(p.first)) {
            out.add(WordTriple{q.first, q.second, p.second}, c * d);
        }
    }
    return out;
}

// (Id (x) Delta)(t)
inline Tensor3 coproduct_right(const Tensor2 &t)
{
    Tensor3 out;
    for (const auto &[p, c] : t) {
        for (const auto &[q, d] : coproduct(p.second)) {
            out.add(WordTriple{p.first, q.first, q.second}, c * d);
        }
    }
    return out;
}

// Recursive antipode with a per-instance memo table. Not shareable across
// threads; create one evaluator per computation.
class AntipodeEvaluator
{
public:
    const LinComb &operator()(const PackedWord &w)
    {
        if (auto it = m_memo.find(w); it != m_memo.end()) {
            return it->second;
        }
        LinComb result;
        if (w.empty()) {
            result = unit();
        } else {
            result.add(w, -1);
            const std::uint64_t full = (std::uint64_t{1} << w.size()) - 1;
            // Collect first the nontrivial splits, then recurse, so the
            // split enumeration does not interleave with memo insertions.
            std::vector<std::pair<PackedWord, PackedWord>> splits;
            detail::for_each_split(w, [&](std::uint64_t mask, PackedWord left, PackedWord right) {
                if (mask != 0 && mask != full) {
                    splits.emplace_back(std::move(left), std::move(right));
                }
            });
            for (const auto &[left, right] : splits) {
                const LinComb &s_left = (*this)(left);
                for (const auto &[u, c] : s_left) {
                    result.add(shifted_concat(u, right), -c);
                }
            }
        }
        return m_memo.emplace(w, std::move(result)).first->second;
    }

    LinComb operator()(const LinComb &a)
    {
        LinComb out;
        for (const auto &[w, c] : a) {
            for (const auto &[u, d] : (*this)(w)) {
                out.add(u, c * d);
            }
        }
        return out;
    }

    std::size_t cached() const noexcept
    {
        return m_memo.size();
    }

private:
    std::map<PackedWord, LinComb> m_memo;
};

inline LinComb antipode(const PackedWord &w)
{
    AntipodeEvaluator s;
    return s(w);
}

inline LinComb antipode(const LinComb &a)
{
    AntipodeEvaluator s;
    return s(a);
}

inline bool verify_coassociativity(const PackedWord &w)
{
    const Tensor2 d = coproduct(w);
    return coproduct_left(d) == coproduct_right(d);
}

inline bool verify_bialgebra(const PackedWord &u, const PackedWord &v)
{
    return coproduct(shifted_concat(u, v)) == tensor_product(coproduct(u), coproduct(v));
}

// (eps (x) Id) Delta(w) = w = (Id (x) eps) Delta(w)
inline bool verify_counit(const PackedWord &w)
{
    LinComb left;
    LinComb right;
    for (const auto &[p, c] : coproduct(w)) {
        if (p.first.empty()) {
            left.add(p.second, c);
        }
        if (p.second.empty()) {
            right.add(p.first, c);
        }
    }
    const LinComb expected(w);
    return left == expected && right == expected;
}

// mu (S (x) Id) Delta = eta eps = mu (Id (x) S) Delta, evaluated at w.
inline bool verify_antipode(const PackedWord &w, AntipodeEvaluator &s)
{
    LinComb left;
    LinComb right;
    for (const auto &[p, c] : coproduct(w)) {
        for (const auto &[u, d] : s(p.first)) {
            left.add(shifted_concat(u, p.second), c * d);
        }
        for (const auto &[u, d] : s(p.second)) {
            right.add(shifted_concat(p.first, u), c * d);
        }
    }
    LinComb expected;
    expected.add(PackedWord{}, counit(w));
    return left == expected && right == expected;
}

inline bool verify_antipode(const PackedWord &w)
{
    AntipodeEvaluator s;
    return verify_antipode(w, s);
}

} // namespace wmat

#endif
