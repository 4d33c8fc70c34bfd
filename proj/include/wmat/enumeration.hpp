#ifndef WMAT_ENUMERATION_HPP
#define WMAT_ENUMERATION_HPP

// Counting and generating packed words by length and supremum.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <wmat/algebra.hpp>
#include <wmat/error.hpp>
#include <wmat/formal_sum.hpp>
#include <wmat/series.hpp>
#include <wmat/word.hpp>

namespace wmat
{

// Stirling numbers of the second kind and the derived packed-word counts,
// tabulated for all n up to a fixed bound. Read-only after construction.
class CountTriangle
{
public:
    explicit CountTriangle(std::size_t max_n) : m_max_n(max_n)
    {
        // S(n,k) is needed up to n = max_n + 1 for d(n,k) = S(n+1,k+1) k!.
        const std::size_t rows = max_n + 2;
        m_stirling.resize(rows);
        for (std::size_t n = 0; n < rows; ++n) {
            m_stirling[n].assign(n + 1, 0);
            m_stirling[n][n] = 1;
            for (std::size_t k = 1; k < n; ++k) {
                // S(n,k) = S(n-1,k-1) + k S(n-1,k)
                m_stirling[n][k] = m_stirling[n - 1][k - 1] + BigCount(static_cast<unsigned long>(k)) * m_stirling[n - 1][k];
            }
        }
        m_factorial.assign(rows + 1, 1);
        for (std::size_t k = 1; k <= rows; ++k) {
            m_factorial[k] = m_factorial[k - 1] * static_cast<unsigned long>(k);
        }
        m_total.assign(max_n + 1, 0);
        for (std::size_t n = 0; n <= max_n; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                m_total[n] += packed(n, k);
            }
        }
        // (1 + D) I = D with D(x) = sum_{n>=1} d_n x^n.
        m_irreducible.assign(max_n + 1, 0);
        m_irreducible[0] = 1;
        for (std::size_t n = 1; n <= max_n; ++n) {
            BigCount acc = m_total[n];
            for (std::size_t j = 1; j < n; ++j) {
                acc -= m_total[j] * m_irreducible[n - j];
            }
            m_irreducible[n] = acc;
        }
    }

    std::size_t max_n() const noexcept
    {
        return m_max_n;
    }

    BigCount stirling2(std::size_t n, std::size_t k) const
    {
        check(n, m_max_n + 1);
        return k > n ? BigCount(0) : m_stirling[n][k];
    }

    // Packed words of length n, supremum k, without x_0: S(n,k) k!.
    BigCount packed_pure(std::size_t n, std::size_t k) const
    {
        check(n, m_max_n);
        return k > n ? BigCount(0) : BigCount(m_stirling[n][k] * m_factorial[k]);
    }

    // Packed words of length n, supremum k, containing x_0: S(n,k+1) (k+1)!.
    BigCount packed_with_zero(std::size_t n, std::size_t k) const
    {
        check(n, m_max_n);
        return k + 1 > n ? BigCount(0) : BigCount(m_stirling[n][k + 1] * m_factorial[k + 1]);
    }

    // d(n,k) = S(n+1,k+1) k!
    BigCount packed(std::size_t n, std::size_t k) const
    {
        check(n, m_max_n);
        return k > n ? BigCount(0) : BigCount(m_stirling[n + 1][k + 1] * m_factorial[k]);
    }

    // d_n
    BigCount packed_total(std::size_t n) const
    {
        check(n, m_max_n);
        return m_total[n];
    }

    // i_n by series inversion; i_0 = 1 is the empty-product convention.
    BigCount irreducible(std::size_t n) const
    {
        check(n, m_max_n);
        return m_irreducible[n];
    }

private:
    static void check(std::size_t n, std::size_t bound)
    {
        if (n > bound) {
            throw std::out_of_range("count table built only up to n = " + std::to_string(bound));
        }
    }

    std::size_t m_max_n;
    std::vector<std::vector<BigCount>> m_stirling;
    std::vector<BigCount> m_factorial;
    std::vector<BigCount> m_total;
    std::vector<BigCount> m_irreducible;
};

inline BigCount stirling2(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    return CountTriangle(n == 0 ? 0 : n - 1).stirling2(n, k);
}

inline BigCount count_packed(std::size_t n, std::size_t k)
{
    return CountTriangle(n).packed(n, k);
}

inline BigCount count_packed_pure(std::size_t n, std::size_t k)
{
    return CountTriangle(n).packed_pure(n, k);
}

inline BigCount count_packed_with_zero(std::size_t n, std::size_t k)
{
    return CountTriangle(n).packed_with_zero(n, k);
}

inline BigCount count_packed_total(std::size_t n)
{
    return CountTriangle(n).packed_total(n);
}

inline BigCount count_irreducible(std::size_t n)
{
    return CountTriangle(n).irreducible(n);
}

// i_n = sum over compositions (j_1..j_k) of n of (-1)^{k+1} d_{j_1}...d_{j_k},
// enumerating all 2^{n-1} compositions explicitly.
inline BigCount count_irreducible_by_compositions(std::size_t n)
{
    if (n == 0) {
        return 1;
    }
    if (n > 40) {
        throw resource_error("composition enumeration limited to n <= 40");
    }
    const CountTriangle table(n);
    BigCount sum = 0;
    // Bit i of the mask set means a part boundary after position i+1.
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        BigCount term = 1;
        std::size_t parts = 0;
        std::size_t run = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ++run;
            if (i + 1 == n || ((mask >> i) & 1u)) {
                term *= table.packed_total(run);
                ++parts;
                run = 0;
            }
        }
        if (parts % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

// Streams every packed word of length n in canonical (lexicographic) order.
// With sup given, only words of that supremum are produced. Letters are
// assigned position by position; a branch is cut as soon as the positions
// left cannot cover every positive index still missing from {1..sup}.
inline void for_each_packed(std::size_t n, std::optional<Index> sup,
                            const std::function<void(const PackedWord &)> &visit)
{
    std::vector<Index> letters(n, 0);
    // seen[i] for i in 1..n; distinct positive indices placed so far.
    std::vector<int> seen(n + 2, 0);
    std::size_t distinct = 0;
    Index high = 0;

    std::function<void(std::size_t)> place = [&](std::size_t pos) {
        if (pos == n) {
            if (distinct == high && (!sup || *sup == high)) {
                visit(PackedWord::unchecked(Word(letters)));
            }
            return;
        }
        const std::size_t remaining = n - pos - 1;
        const Index limit = sup ? *sup : static_cast<Index>(n);
        for (Index x = 0; x <= limit; ++x) {
            const Index new_high = std::max(high, x);
            const std::size_t new_distinct = distinct + ((x != 0 && seen[x] == 0) ? 1 : 0);
            // Indices below new_high still missing must fit in what is left,
            // and with a fixed sup, indices above new_high must too.
            std::size_t missing = new_high - new_distinct;
            if (sup) {
                missing += *sup - new_high;
            }
            if (missing > remaining) {
                continue;
            }
            letters[pos] = x;
            if (x != 0) {
                ++seen[x];
            }
            const Index saved_high = high;
            const std::size_t saved_distinct = distinct;
            high = new_high;
            distinct = new_distinct;
            place(pos + 1);
            high = saved_high;
            distinct = saved_distinct;
            if (x != 0) {
                --seen[x];
            }
        }
    };
    if (sup && *sup > n) {
        return;
    }
    place(0);
}

inline std::vector<PackedWord> enumerate_packed(std::size_t n, std::optional<Index> sup = std::nullopt)
{
    std::vector<PackedWord> out;
    for_each_packed(n, sup, [&](const PackedWord &w) { out.push_back(w); });
    return out;
}

inline std::vector<PackedWord> enumerate_irreducible(std::size_t n)
{
    if (n == 0) {
        throw domain_error("irreducible words have length >= 1");
    }
    std::vector<PackedWord> out;
    for_each_packed(n, std::nullopt, [&](const PackedWord &w) {
        if (is_irreducible(w)) {
            out.push_back(w);
        }
    });
    return out;
}

struct EgfCheckRow {
    std::size_t n = 0;
    // n! times the x^n coefficient of e^x / (2 - e^x).
    Scalar scaled_coefficient;
    BigCount expected;
    bool matches = false;
};

inline std::vector<EgfCheckRow> egf_check(std::size_t max_n)
{
    if (max_n < 1) {
        throw domain_error("egf check needs truncation order >= 1");
    }
    const RationalSeries ex = RationalSeries::exp(max_n);
    const RationalSeries egf = ex * (RationalSeries::constant(max_n, 2) - ex).reciprocal();
    const CountTriangle table(max_n);
    std::vector<EgfCheckRow> rows;
    BigCount factorial = 1;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n > 0) {
            factorial *= static_cast<unsigned long>(n);
        }
        EgfCheckRow row;
        row.n = n;
        row.scaled_coefficient = egf[n] * Scalar(factorial);
        row.expected = table.packed_total(n);
        row.matches = row.scaled_coefficient == Scalar(row.expected);
        rows.push_back(std::move(row));
    }
    return rows;
}

// d/dx 1/(2 - e^x) == e^x/(2 - e^x)^2 through order max_n - 1. The
// derivative is the shifted ordered Bell sequence, not d_n: it differs from
// e^x/(2 - e^x) from x^1 on.
inline bool egf_derivative_identity(std::size_t max_n)
{
    if (max_n < 1) {
        throw domain_error("derivative identity needs truncation order >= 1");
    }
    const RationalSeries ex = RationalSeries::exp(max_n);
    const RationalSeries inv = (RationalSeries::constant(max_n, 2) - ex).reciprocal();
    return inv.derivative() == (ex * inv * inv).truncated(max_n - 1);
}

} // namespace wmat

#endif
