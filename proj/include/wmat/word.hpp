#ifndef WMAT_WORD_HPP
#define WMAT_WORD_HPP

// Words over the indexed alphabet {x_0, x_1, ...}, the pack operator,
// substitutions, shifts, sub-words and quotients.
//
// Positions in a word are 1-based wherever they appear in the public
// interface (IndexSet, admissible cuts). Letter indices are plain
// nonnegative integers; index 0 is the special letter x_0, which is never
// renamed by packing or shifting.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <wmat/error.hpp>

namespace wmat
{

using Index = std::uint32_t;

struct Letter {
    Index index = 0;

    friend auto operator<=>(const Letter &, const Letter &) = default;
};

class Word
{
public:
    Word() = default;
    explicit Word(std::vector<Index> letters) : m_letters(std::move(letters)) {}
    Word(std::initializer_list<Index> letters) : m_letters(letters) {}

    std::size_t size() const noexcept
    {
        return m_letters.size();
    }
    bool empty() const noexcept
    {
        return m_letters.empty();
    }
    // 0-based raw access.
    Index operator[](std::size_t i) const noexcept
    {
        return m_letters[i];
    }
    // 1-based access, matching positions [1..|w|].
    Letter letter(std::size_t pos) const
    {
        if (pos == 0 || pos > m_letters.size()) {
            throw position_range_error("position " + std::to_string(pos) + " outside [1.." + std::to_string(size())
                                       + "]");
        }
        return Letter{m_letters[pos - 1]};
    }
    std::span<const Index> letters() const noexcept
    {
        return m_letters;
    }

    // |w|_{x_i}
    std::size_t count(Letter x) const noexcept
    {
        return static_cast<std::size_t>(std::count(m_letters.begin(), m_letters.end(), x.index));
    }

    // IAlph(w), sorted ascending.
    std::vector<Index> index_alphabet() const
    {
        std::vector<Index> out(m_letters);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Alph(w)
    std::set<Letter> alphabet() const
    {
        std::set<Letter> out;
        for (Index i : m_letters) {
            out.insert(Letter{i});
        }
        return out;
    }

    // Largest index occurring; 0 for the unit word and all-x_0 words.
    Index sup() const noexcept
    {
        Index s = 0;
        for (Index i : m_letters) {
            s = std::max(s, i);
        }
        return s;
    }

    // Least nonzero index occurring, if any.
    std::optional<Index> inf_nonzero() const noexcept
    {
        std::optional<Index> best;
        for (Index i : m_letters) {
            if (i != 0 && (!best || i < *best)) {
                best = i;
            }
        }
        return best;
    }

    friend bool operator==(const Word &, const Word &) = default;

    // Canonical order: by length, then lexicographic on indices.
    friend std::strong_ordering operator<=>(const Word &a, const Word &b) noexcept
    {
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.m_letters.begin(), a.m_letters.end(), b.m_letters.begin(),
                                                      b.m_letters.end());
    }

private:
    std::vector<Index> m_letters;
};

inline Word concatenate(const Word &u, const Word &v)
{
    std::vector<Index> out(u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
}

// A word equal to its own packing: IAlph(w) \ {0} = {1..k}.
class PackedWord
{
public:
    PackedWord() = default;

    // Throws not_packed_error unless w is packed.
    explicit PackedWord(Word w);
    PackedWord(std::initializer_list<Index> letters) : PackedWord(Word(letters)) {}

    // Skips validation; callers guarantee the invariant.
    static PackedWord unchecked(Word w) noexcept
    {
        PackedWord p;
        p.m_word = std::move(w);
        return p;
    }

    const Word &word() const noexcept
    {
        return m_word;
    }
    operator const Word &() const noexcept
    {
        return m_word;
    }
    std::size_t size() const noexcept
    {
        return m_word.size();
    }
    bool empty() const noexcept
    {
        return m_word.empty();
    }
    Index operator[](std::size_t i) const noexcept
    {
        return m_word[i];
    }
    std::span<const Index> letters() const noexcept
    {
        return m_word.letters();
    }
    Index sup() const noexcept
    {
        return m_word.sup();
    }

    friend bool operator==(const PackedWord &, const PackedWord &) = default;
    friend std::strong_ordering operator<=>(const PackedWord &a, const PackedWord &b) noexcept
    {
        return a.m_word <=> b.m_word;
    }

private:
    Word m_word;
};

// Map on letter indices with a declared finite domain. 0 always maps to 0.
class Substitution
{
public:
    Substitution()
    {
        m_map.emplace(0, 0);
    }
    Substitution(std::initializer_list<std::pair<const Index, Index>> entries) : Substitution()
    {
        for (const auto &[from, to] : entries) {
            set(from, to);
        }
    }
    explicit Substitution(const std::map<Index, Index> &entries) : Substitution()
    {
        for (const auto &[from, to] : entries) {
            set(from, to);
        }
    }

    static Substitution identity_on(std::span<const Index> domain)
    {
        Substitution s;
        for (Index i : domain) {
            s.set(i, i);
        }
        return s;
    }

    void set(Index from, Index to)
    {
        if (from == 0 && to != 0) {
            throw std::invalid_argument("substitution must fix index 0");
        }
        m_map[from] = to;
    }

    bool defined_at(Index i) const noexcept
    {
        return m_map.contains(i);
    }

    Index operator()(Index i) const
    {
        auto it = m_map.find(i);
        if (it == m_map.end()) {
            throw undefined_index_error("substitution undefined at index " + std::to_string(i));
        }
        return it->second;
    }

    const std::map<Index, Index> &entries() const noexcept
    {
        return m_map;
    }

private:
    std::map<Index, Index> m_map;
};

// Set of 1-based positions.
class IndexSet
{
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> positions) : m_positions(std::move(positions))
    {
        std::sort(m_positions.begin(), m_positions.end());
        m_positions.erase(std::unique(m_positions.begin(), m_positions.end()), m_positions.end());
        if (!m_positions.empty() && m_positions.front() == 0) {
            throw position_range_error("positions are 1-based");
        }
    }
    IndexSet(std::initializer_list<std::size_t> positions) : IndexSet(std::vector<std::size_t>(positions)) {}

    // Positions of the set bits of mask, for a word of length n.
    static IndexSet from_mask(std::uint64_t mask, std::size_t n)
    {
        IndexSet s;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) {
                s.m_positions.push_back(i + 1);
            }
        }
        return s;
    }

    std::size_t size() const noexcept
    {
        return m_positions.size();
    }
    bool empty() const noexcept
    {
        return m_positions.empty();
    }
    bool contains(std::size_t pos) const noexcept
    {
        return std::binary_search(m_positions.begin(), m_positions.end(), pos);
    }
    auto begin() const noexcept
    {
        return m_positions.begin();
    }
    auto end() const noexcept
    {
        return m_positions.end();
    }
    const std::vector<std::size_t> &positions() const noexcept
    {
        return m_positions;
    }

    // {i - offset : i in this}; every position must exceed offset.
    IndexSet shifted_down(std::size_t offset) const
    {
        std::vector<std::size_t> out;
        out.reserve(m_positions.size());
        for (std::size_t p : m_positions) {
            if (p <= offset) {
                throw position_range_error("cannot shift position " + std::to_string(p) + " down by "
                                           + std::to_string(offset));
            }
            out.push_back(p - offset);
        }
        return IndexSet(std::move(out));
    }

    friend IndexSet operator+(const IndexSet &a, const IndexSet &b)
    {
        std::vector<std::size_t> out(a.m_positions);
        out.insert(out.end(), b.m_positions.begin(), b.m_positions.end());
        return IndexSet(std::move(out));
    }

    friend bool operator==(const IndexSet &, const IndexSet &) = default;

private:
    std::vector<std::size_t> m_positions;
};

inline Word substitute(const Substitution &phi, const Word &w)
{
    std::vector<Index> out;
    out.reserve(w.size());
    for (Index i : w.letters()) {
        out.push_back(phi(i));
    }
    return Word(std::move(out));
}

// T_t: nonzero indices move up by t, x_0 stays.
inline Word shift(Index t, const Word &w)
{
    std::vector<Index> out(w.letters().begin(), w.letters().end());
    for (Index &i : out) {
        if (i != 0) {
            i += t;
        }
    }
    return Word(std::move(out));
}

// phi_w: m-th smallest nonzero index of w goes to m, 0 to 0.
inline Substitution packing_map(const Word &w)
{
    Substitution phi;
    Index m = 0;
    for (Index i : w.index_alphabet()) {
        if (i != 0) {
            phi.set(i, ++m);
        }
    }
    return phi;
}

inline PackedWord pack(const Word &w)
{
    const std::vector<Index> alph = w.index_alphabet();
    // Rank among nonzero indices; alph[0] may be 0, in which case 0 maps to 0.
    const std::size_t zero_offset = (!alph.empty() && alph.front() == 0) ? 1 : 0;
    std::vector<Index> out;
    out.reserve(w.size());
    for (Index i : w.letters()) {
        if (i == 0) {
            out.push_back(0);
        } else {
            auto it = std::lower_bound(alph.begin(), alph.end(), i);
            out.push_back(static_cast<Index>(it - alph.begin() - static_cast<std::ptrdiff_t>(zero_offset) + 1));
        }
    }
    return PackedWord::unchecked(Word(std::move(out)));
}

inline bool is_packed(const Word &w)
{
    const std::vector<Index> alph = w.index_alphabet();
    Index expected = 1;
    for (Index i : alph) {
        if (i == 0) {
            continue;
        }
        if (i != expected) {
            return false;
        }
        ++expected;
    }
    return true;
}

inline PackedWord::PackedWord(Word w) : m_word(std::move(w))
{
    if (!is_packed(m_word)) {
        throw not_packed_error("word is not packed");
    }
}

// w[I]: letters at the positions of I, in increasing position order.
inline Word subword(const Word &w, const IndexSet &positions)
{
    std::vector<Index> out;
    out.reserve(positions.size());
    for (std::size_t p : positions) {
        if (p > w.size()) {
            throw position_range_error("position " + std::to_string(p) + " outside [1.." + std::to_string(w.size())
                                       + "]");
        }
        out.push_back(w[p - 1]);
    }
    return Word(std::move(out));
}

// w/A: letters of A become x_0.
inline Word quotient(const Word &w, const std::set<Letter> &killed)
{
    std::vector<Index> out(w.letters().begin(), w.letters().end());
    for (Index &i : out) {
        if (killed.contains(Letter{i})) {
            i = 0;
        }
    }
    return Word(std::move(out));
}

// w/u = w/Alph(u)
inline Word quotient(const Word &w, const Word &u)
{
    return quotient(w, u.alphabet());
}

// Text format: "e" for the unit word, otherwise comma-separated decimal indices.
inline Word parse_word(std::string_view text)
{
    if (text == "e") {
        return Word{};
    }
    if (text.empty()) {
        throw parse_error("empty word text (use \"e\" for the unit word)");
    }
    std::vector<Index> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw parse_error("invalid letter index \"" + std::string(token) + "\" in word \"" + std::string(text)
                              + "\"");
        }
        Index value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw parse_error("letter index out of range: \"" + std::string(token) + "\"");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return Word(std::move(out));
}

inline PackedWord parse_packed_word(std::string_view text)
{
    Word w = parse_word(text);
    if (!is_packed(w)) {
        throw parse_error("word \"" + std::string(text) + "\" is not packed");
    }
    return PackedWord::unchecked(std::move(w));
}

inline std::string to_string(const Word &w)
{
    if (w.empty()) {
        return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(w[i]);
    }
    return out;
}

inline std::string to_string(const PackedWord &w)
{
    return to_string(w.word());
}

} // namespace wmat

#endif
