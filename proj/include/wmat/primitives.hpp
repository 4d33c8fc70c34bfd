#ifndef WMAT_PRIMITIVES_HPP
#define WMAT_PRIMITIVES_HPP

// Graded primitive spaces, computed as exact kernels of the reduced
// coproduct restricted to one word length.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <wmat/algebra.hpp>
#include <wmat/coalgebra.hpp>
#include <wmat/detail/parallel.hpp>
#include <wmat/enumeration.hpp>
#include <wmat/error.hpp>
#include <wmat/formal_sum.hpp>
#include <wmat/rational_matrix.hpp>

namespace wmat
{

struct GradedBasis {
    std::size_t grade = 0;
    std::vector<PackedWord> words;
};

inline GradedBasis graded_basis(std::size_t grade)
{
    return GradedBasis{grade, enumerate_packed(grade)};
}

// Matrix of the reduced coproduct on one grade. Column c is the basis word
// columns[c]; row r is the word pair rows[r]. Only pairs that occur in some
// column are present.
struct DeltaPlusMatrix {
    std::size_t grade = 0;
    std::vector<WordPair> row_labels;
    std::vector<PackedWord> column_labels;
    RationalMatrix matrix;
};

inline DeltaPlusMatrix delta_plus_matrix(std::size_t grade, std::size_t threads = 1)
{
    if (grade < 1) {
        throw domain_error("primitive spaces are indexed by grade >= 1");
    }
    DeltaPlusMatrix out;
    out.grade = grade;
    out.column_labels = enumerate_packed(grade);
    const std::size_t cols = out.column_labels.size();

    std::vector<Tensor2> images(cols);
    detail::parallel_for(cols, threads, [&](std::size_t c) { images[c] = reduced_coproduct(out.column_labels[c]); });

    std::map<WordPair, std::size_t> row_index;
    for (const Tensor2 &t : images) {
        for (const auto &[pair, coeff] : t) {
            row_index.emplace(pair, 0);
        }
    }
    std::size_t r = 0;
    for (auto &[pair, idx] : row_index) {
        idx = r++;
        out.row_labels.push_back(pair);
    }
    std::vector<SparseVector> rows(row_index.size());
    for (std::size_t c = 0; c < cols; ++c) {
        for (const auto &[pair, coeff] : images[c]) {
            rows[row_index.at(pair)].emplace_back(c, coeff);
        }
    }
    out.matrix = RationalMatrix(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.matrix.set_row(i, std::move(rows[i]));
    }
    return out;
}

struct PrimitiveBasis {
    std::size_t grade = 0;
    std::size_t dimension = 0;
    std::vector<LinComb> vectors;
    // Rank of the reduced-coproduct matrix and its number of occupied rows.
    std::size_t rank = 0;
    std::size_t equations = 0;
};

struct PrimitiveOptions {
    std::size_t max_grade = 6;
    std::size_t threads = 1;
};

inline LinComb to_lincomb(const SparseVector &v, const std::vector<PackedWord> &labels)
{
    LinComb out;
    for (const auto &[c, x] : v) {
        out.add(labels.at(c), x);
    }
    return out;
}

inline PrimitiveBasis primitive_space(std::size_t grade, const PrimitiveOptions &options = {})
{
    if (grade < 1) {
        throw domain_error("primitive spaces are indexed by grade >= 1");
    }
    if (grade > options.max_grade) {
        throw resource_error("grade " + std::to_string(grade) + " exceeds the configured cap of "
                             + std::to_string(options.max_grade));
    }
    const DeltaPlusMatrix dm = delta_plus_matrix(grade, options.threads);
    const std::vector<SparseVector> kernel = nullspace(dm.matrix);
    PrimitiveBasis out;
    out.grade = grade;
    out.dimension = kernel.size();
    out.rank = dm.matrix.cols() - kernel.size();
    out.equations = dm.matrix.rows();
    for (const SparseVector &v : kernel) {
        out.vectors.push_back(to_lincomb(v, dm.column_labels));
    }
    return out;
}

// Delta(z) == z (x) 1 + 1 (x) z, evaluated with the full coproduct.
inline bool is_primitive(const LinComb &z)
{
    Tensor2 expected;
    for (const auto &[w, c] : z) {
        expected.add(WordPair{w, PackedWord{}}, c);
        expected.add(WordPair{PackedWord{}, w}, c);
    }
    return coproduct(z) == expected;
}

inline LinComb lie_bracket(const LinComb &a, const LinComb &b)
{
    return product(a, b) - product(b, a);
}

inline std::string to_string(const PrimitiveBasis &basis)
{
    std::string out = "grade=" + std::to_string(basis.grade) + " dim=" + std::to_string(basis.dimension) + "\n";
    for (const LinComb &v : basis.vectors) {
        out += to_string(v);
        out += '\n';
    }
    return out;
}

} // namespace wmat

#endif
