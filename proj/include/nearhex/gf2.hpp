#pragma once

#include <cstdint>
#include <vector>

namespace nearhex::gf2 {

// Vectors over GF(2) are uint64 bit masks; bit i is coordinate i. Everything
// downstream (point sets, hyperplane codes, serialized masks) inherits that
// little-endian-by-index convention.

struct Matrix {
    int cols = 0;
    std::vector<std::uint64_t> rows;
};

// Basis in reduced row-echelon form: rows nonzero, pivots (lowest set bit)
// strictly increasing, each pivot column has a single 1 across the basis.
// Two equal subspaces always compare equal.
struct Subspace {
    int cols = 0;
    std::vector<std::uint64_t> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    bool operator==(const Subspace&) const = default;
};

int rank(const Matrix& m);

// {v : <r,v> = 0 for every row r}, dim == cols - rank.
Subspace nullspace(const Matrix& m);

// All 2^dim - 1 nonzero vectors of the subspace, strictly increasing as
// integers. Throws std::length_error when dim > 24.
std::vector<std::uint64_t> enumerate_nonzero(const Subspace& s);

int span_dimension(const std::vector<std::uint64_t>& vectors, int cols);

}  // namespace nearhex::gf2
