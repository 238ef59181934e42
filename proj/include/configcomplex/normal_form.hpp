#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "configcomplex/int_matrix.hpp"

namespace configcomplex {

// Row-style Hermite normal form: upper echelon, pivots positive, entries above
// each pivot reduced into [0, pivot). Zero rows are dropped, so the result is
// a basis of the row lattice and is unique for that lattice.
IntMatrix hnf(const IntMatrix& m);

struct HermiteDecomposition {
    IntMatrix h;  // same shape as the input, zero rows last
    IntMatrix u;  // unimodular, u * m == h
    std::size_t rank = 0;
};

HermiteDecomposition hnf_with_transform(const IntMatrix& m);

// Basis (as rows, in Hermite form) of {y : y * m == 0}.
IntMatrix left_kernel(const IntMatrix& m);

struct SmithDecomposition {
    IntMatrix s;  // diagonal, d_1 | d_2 | ... with trailing zeros
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols
};

// s == u * m * v.
SmithDecomposition snf(const IntMatrix& m);

// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<std::int64_t> smith_diagonal(const IntMatrix& m);

// Sparse integer matrix for boundary operators: row -> (column -> value).
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::map<std::size_t, std::int64_t>> entries;

    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}
};

struct SmithSummary {
    std::size_t rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors >= 2, divisibility order
};

// Rank and non-unit invariant factors. Eliminates on unit pivots sparsely,
// then finishes the residual block with the dense Smith reduction.
SmithSummary smith_summary(SparseIntMatrix m);

}  // namespace configcomplex
