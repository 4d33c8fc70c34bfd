#ifndef WMAT_RATIONAL_MATRIX_HPP
#define WMAT_RATIONAL_MATRIX_HPP

// Sparse exact rational matrices: reduced row echelon form, rank and
// nullspace. There is no floating point anywhere, hence no tolerances.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <wmat/formal_sum.hpp>

namespace wmat
{

// (column, value) entries sorted by column, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

namespace detail
{

// a + factor * b
inline SparseVector axpy(const SparseVector &a, const Scalar &factor, const SparseVector &b)
{
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, factor * ib->second);
            ++ib;
        } else {
            Scalar v = ia->second + factor * ib->second;
            if (v != 0) {
                out.emplace_back(ia->first, std::move(v));
            }
            ++ia;
            ++ib;
        }
    }
    return out;
}

inline void normalize_leading(SparseVector &v)
{
    const Scalar inv = 1 / v.front().second;
    for (auto &[c, x] : v) {
        x *= inv;
    }
}

} // namespace detail

class RationalMatrix
{
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : m_cols(cols), m_rows(rows) {}

    std::size_t rows() const noexcept
    {
        return m_rows.size();
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }

    const SparseVector &row(std::size_t r) const
    {
        return m_rows.at(r);
    }
    std::span<const SparseVector> row_data() const noexcept
    {
        return m_rows;
    }

    // Replaces row r; entries must be column-sorted, distinct, in range.
    void set_row(std::size_t r, SparseVector entries)
    {
        entries.erase(std::remove_if(entries.begin(), entries.end(), [](const auto &e) { return e.second == 0; }),
                      entries.end());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].first >= m_cols || (i > 0 && entries[i - 1].first >= entries[i].first)) {
                throw std::invalid_argument("sparse row entries must be sorted and within the column range");
            }
        }
        m_rows.at(r) = std::move(entries);
    }

    Scalar entry(std::size_t r, std::size_t c) const
    {
        const SparseVector &row = m_rows.at(r);
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto &e, std::size_t col) {
            return e.first < col;
        });
        return (it != row.end() && it->first == c) ? it->second : Scalar(0);
    }

    std::size_t nonzeros() const noexcept
    {
        std::size_t n = 0;
        for (const auto &r : m_rows) {
            n += r.size();
        }
        return n;
    }

private:
    std::size_t m_cols = 0;
    std::vector<SparseVector> m_rows;
};

// Reduced row echelon form of the row space: one row per pivot, leading
// coefficient 1, zero in every other pivot column, ordered by pivot column.
struct EchelonForm {
    std::vector<std::size_t> pivot_columns;
    std::vector<SparseVector> rows;
};

// Rows are reduced one at a time against the pivots found so far, taking the
// first nonzero entry of a row as its pivot; a back-substitution pass then
// clears the entries above every pivot.
inline EchelonForm reduced_row_echelon(std::span<const SparseVector> input)
{
    std::map<std::size_t, SparseVector> pivots;
    for (const SparseVector &source : input) {
        SparseVector r = source;
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                detail::normalize_leading(r);
                pivots.emplace(r.front().first, std::move(r));
                break;
            }
            r = detail::axpy(r, -r.front().second, it->second);
        }
    }
    // Back substitution from the last pivot upwards.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        SparseVector &r = it->second;
        std::size_t i = 1;
        while (i < r.size()) {
            auto p = pivots.find(r[i].first);
            if (p == pivots.end() || p->first == it->first) {
                ++i;
                continue;
            }
            const std::size_t col = r[i].first;
            r = detail::axpy(r, -r[i].second, p->second);
            // Entries before col are unchanged; resume there.
            i = static_cast<std::size_t>(std::lower_bound(r.begin(), r.end(), col, [](const auto &e, std::size_t c) {
                                             return e.first < c;
                                         })
                                         - r.begin());
        }
    }
    EchelonForm out;
    for (auto &[c, r] : pivots) {
        out.pivot_columns.push_back(c);
        out.rows.push_back(std::move(r));
    }
    return out;
}

inline EchelonForm reduced_row_echelon(const RationalMatrix &m)
{
    return reduced_row_echelon(m.row_data());
}

inline std::size_t rank(const RationalMatrix &m)
{
    return reduced_row_echelon(m).rows.size();
}

// Basis of {x : m x = 0}, itself in reduced row echelon form (leading
// coefficient 1, ordered by leading column), so the output depends only on
// the kernel and the column order.
inline std::vector<SparseVector> nullspace(const RationalMatrix &m)
{
    const EchelonForm ef = reduced_row_echelon(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : ef.pivot_columns) {
        is_pivot[c] = 1;
    }
    std::map<std::size_t, SparseVector> by_free;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) {
            by_free[c].emplace_back(c, Scalar(1));
        }
    }
    for (std::size_t k = 0; k < ef.rows.size(); ++k) {
        const std::size_t pc = ef.pivot_columns[k];
        for (const auto &[c, v] : ef.rows[k]) {
            if (c != pc) {
                by_free[c].emplace_back(pc, -v);
            }
        }
    }
    std::vector<SparseVector> kernel;
    kernel.reserve(by_free.size());
    for (auto &[f, v] : by_free) {
        std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        kernel.push_back(std::move(v));
    }
    return reduced_row_echelon(kernel).rows;
}

// Canonical basis of the span of the given vectors.
inline std::vector<SparseVector> canonical_span(std::span<const SparseVector> vectors)
{
    return reduced_row_echelon(vectors).rows;
}

// Product m * x for a sparse column vector x.
inline std::vector<Scalar> multiply(const RationalMatrix &m, const SparseVector &x)
{
    std::vector<Scalar> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const SparseVector &row = m.row(r);
        auto ia = row.begin();
        auto ib = x.begin();
        while (ia != row.end() && ib != x.end()) {
            if (ia->first < ib->first) {
                ++ia;
            } else if (ib->first < ia->first) {
                ++ib;
            } else {
                out[r] += ia->second * ib->second;
                ++ia;
                ++ib;
            }
        }
    }
    return out;
}

} // namespace wmat

#endif
