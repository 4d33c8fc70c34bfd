#ifndef WMAT_SERIES_HPP
#define WMAT_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <wmat/error.hpp>
#include <wmat/formal_sum.hpp>

namespace wmat
{

// Power series truncated after x^order, with exact rational coefficients.
class RationalSeries
{
public:
    explicit RationalSeries(std::size_t order) : m_coeffs(order + 1) {}
    RationalSeries(std::size_t order, std::vector<Scalar> coeffs) : m_coeffs(std::move(coeffs))
    {
        m_coeffs.resize(order + 1);
    }

    static RationalSeries constant(std::size_t order, const Scalar &c)
    {
        RationalSeries s(order);
        s.m_coeffs[0] = c;
        return s;
    }

    // e^x = sum x^n / n!
    static RationalSeries exp(std::size_t order)
    {
        RationalSeries s(order);
        Scalar term = 1;
        for (std::size_t n = 0; n <= order; ++n) {
            if (n > 0) {
                term /= static_cast<unsigned long>(n);
            }
            s.m_coeffs[n] = term;
        }
        return s;
    }

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    const Scalar &operator[](std::size_t n) const
    {
        return m_coeffs.at(n);
    }
    const std::vector<Scalar> &coefficients() const noexcept
    {
        return m_coeffs;
    }

    friend RationalSeries operator+(const RationalSeries &a, const RationalSeries &b)
    {
        RationalSeries out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            out.m_coeffs[n] = a.m_coeffs[n] + b.m_coeffs[n];
        }
        return out;
    }
    friend RationalSeries operator-(const RationalSeries &a, const RationalSeries &b)
    {
        RationalSeries out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            out.m_coeffs[n] = a.m_coeffs[n] - b.m_coeffs[n];
        }
        return out;
    }
    // Cauchy product truncated at the smaller order.
    friend RationalSeries operator*(const RationalSeries &a, const RationalSeries &b)
    {
        RationalSeries out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            Scalar acc = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                acc += a.m_coeffs[j] * b.m_coeffs[n - j];
            }
            out.m_coeffs[n] = acc;
        }
        return out;
    }

    // 1/a; requires a nonzero constant term.
    RationalSeries reciprocal() const
    {
        if (m_coeffs[0] == 0) {
            throw domain_error("series with zero constant term has no reciprocal");
        }
        RationalSeries out(order());
        const Scalar inv0 = 1 / m_coeffs[0];
        out.m_coeffs[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            Scalar acc = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                acc += m_coeffs[j] * out.m_coeffs[n - j];
            }
            out.m_coeffs[n] = -acc * inv0;
        }
        return out;
    }

    // Termwise derivative; the result has order one less.
    RationalSeries derivative() const
    {
        if (order() == 0) {
            return RationalSeries(0);
        }
        RationalSeries out(order() - 1);
        for (std::size_t n = 1; n <= order(); ++n) {
            out.m_coeffs[n - 1] = m_coeffs[n] * static_cast<unsigned long>(n);
        }
        return out;
    }

    RationalSeries truncated(std::size_t order) const
    {
        return RationalSeries(order, std::vector<Scalar>(m_coeffs.begin(),
                                                         m_coeffs.begin() + static_cast<std::ptrdiff_t>(
                                                             std::min(order, this->order()) + 1)));
    }

    friend bool operator==(const RationalSeries &, const RationalSeries &) = default;

private:
    std::vector<Scalar> m_coeffs;
};

} // namespace wmat

#endif
