#ifndef WMAT_FORMAL_SUM_HPP
#define WMAT_FORMAL_SUM_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include <wmat/word.hpp>

namespace wmat
{

// Exact rationals, always canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
// Arbitrary-precision integers for counting.
using BigCount = mpz_class;

// Finite formal sum of keys with Scalar coefficients. No stored coefficient
// is zero; the empty sum is the zero element. Terms iterate in ascending
// key order.
template <typename Key>
class FormalSum
{
public:
    using key_type = Key;
    using container_type = std::map<Key, Scalar>;

    FormalSum() = default;
    explicit FormalSum(Key k, Scalar c = 1)
    {
        add(std::move(k), c);
    }

    void add(const Key &k, const Scalar &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    Scalar coefficient(const Key &k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? Scalar(0) : it->second;
    }

    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    auto begin() const noexcept
    {
        return m_terms.begin();
    }
    auto end() const noexcept
    {
        return m_terms.end();
    }
    auto rbegin() const noexcept
    {
        return m_terms.rbegin();
    }
    auto rend() const noexcept
    {
        return m_terms.rend();
    }
    const container_type &terms() const noexcept
    {
        return m_terms;
    }

    FormalSum &operator+=(const FormalSum &other)
    {
        for (const auto &[k, c] : other.m_terms) {
            add(k, c);
        }
        return *this;
    }
    FormalSum &operator-=(const FormalSum &other)
    {
        for (const auto &[k, c] : other.m_terms) {
            add(k, -c);
        }
        return *this;
    }
    FormalSum &operator*=(const Scalar &s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto &[k, c] : m_terms) {
            c *= s;
        }
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum &b)
    {
        return a += b;
    }
    friend FormalSum operator-(FormalSum a, const FormalSum &b)
    {
        return a -= b;
    }
    friend FormalSum operator-(FormalSum a)
    {
        return a *= Scalar(-1);
    }
    friend FormalSum operator*(const Scalar &s, FormalSum a)
    {
        return a *= s;
    }

    friend bool operator==(const FormalSum &a, const FormalSum &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    container_type m_terms;
};

using LinComb = FormalSum<PackedWord>;
using WordPair = std::pair<PackedWord, PackedWord>;
using WordTriple = std::array<PackedWord, 3>;
using Tensor2 = FormalSum<WordPair>;
using Tensor3 = FormalSum<WordTriple>;

inline LinComb unit()
{
    return LinComb(PackedWord{});
}

inline std::string to_string(const Scalar &c)
{
    return c.get_str();
}

inline Scalar parse_scalar(const std::string &text)
{
    Scalar c;
    if (text.empty() || c.set_str(text, 10) != 0 || c.get_den() == 0) {
        throw parse_error("invalid rational \"" + text + "\"");
    }
    c.canonicalize();
    return c;
}

namespace detail
{

inline std::string render_key(const PackedWord &w)
{
    return to_string(w);
}
inline std::string render_key(const WordPair &p)
{
    return to_string(p.first) + " (x) " + to_string(p.second);
}
inline std::string render_key(const WordTriple &t)
{
    return to_string(t[0]) + " (x) " + to_string(t[1]) + " (x) " + to_string(t[2]);
}

} // namespace detail

// "c1*k1 + c2*k2 + ..." with terms from the greatest key down; "0" for zero.
template <typename Key>
std::string to_string(const FormalSum<Key> &s)
{
    if (s.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(it->second);
        out += '*';
        out += detail::render_key(it->first);
    }
    return out;
}

} // namespace wmat

#endif
