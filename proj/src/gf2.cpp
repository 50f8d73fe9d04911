#include "nearhex/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace nearhex::gf2 {

namespace {

void require_fits(const std::vector<std::uint64_t>& rows, int cols, const char* what) {
    if (cols < 0 || cols > 64)
        throw std::invalid_argument(std::string(what) + ": cols must be in 0..64");
    const std::uint64_t extra = cols == 64 ? 0 : ~((std::uint64_t{1} << cols) - 1);
    for (std::uint64_t r : rows)
        if (r & extra)
            throw std::invalid_argument(std::string(what) + ": row has bits beyond cols");
}

// Reduced row echelon form, rows returned by ascending pivot.
std::vector<std::uint64_t> rref(const std::vector<std::uint64_t>& rows) {
    std::array<std::uint64_t, 64> piv{};
    std::array<bool, 64> present{};
    for (std::uint64_t v : rows) {
        while (v != 0) {
            const int c = std::countr_zero(v);
            if (present[c]) {
                v ^= piv[c];
            } else {
                piv[c] = v;
                present[c] = true;
                break;
            }
        }
    }
    for (int c = 0; c < 64; ++c) {
        if (!present[c]) continue;
        for (int d = 0; d < 64; ++d)
            if (present[d] && d != c && ((piv[d] >> c) & 1u))
                piv[d] ^= piv[c];
    }
    std::vector<std::uint64_t> out;
    for (int c = 0; c < 64; ++c)
        if (present[c]) out.push_back(piv[c]);
    return out;
}

}  // namespace

int rank(const Matrix& m) {
    require_fits(m.rows, m.cols, "rank");
    return static_cast<int>(rref(m.rows).size());
}

Subspace nullspace(const Matrix& m) {
    require_fits(m.rows, m.cols, "nullspace");
    const std::vector<std::uint64_t> basis = rref(m.rows);
    std::array<bool, 64> is_pivot{};
    for (std::uint64_t b : basis) is_pivot[std::countr_zero(b)] = true;

    // One kernel vector per free column f: coordinate f plus, at each pivot
    // column p, the entry of the pivot row at f.
    std::vector<std::uint64_t> kernel;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::uint64_t v = std::uint64_t{1} << f;
        for (std::uint64_t b : basis)
            if ((b >> f) & 1u) v |= std::uint64_t{1} << std::countr_zero(b);
        kernel.push_back(v);
    }

    Subspace s;
    s.cols = m.cols;
    s.basis = rref(kernel);
    if (s.dim() != m.cols - static_cast<int>(basis.size()))
        throw std::logic_error("nullspace: rank-nullity violated");
    return s;
}

std::vector<std::uint64_t> enumerate_nonzero(const Subspace& s) {
    const int d = s.dim();
    if (d > 24)
        throw std::length_error("enumerate_nonzero: dimension " + std::to_string(d) +
                                " exceeds enumeration capacity 24");
    std::vector<std::uint64_t> out;
    out.reserve((std::size_t{1} << d) - 1);
    for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << d); ++sel) {
        std::uint64_t v = 0;
        for (int j = 0; j < d; ++j)
            if ((sel >> j) & 1u) v ^= s.basis[j];
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] >= out[i])
            throw std::logic_error("enumerate_nonzero: basis was not independent");
    return out;
}

int span_dimension(const std::vector<std::uint64_t>& vectors, int cols) {
    require_fits(vectors, cols, "span_dimension");
    return static_cast<int>(rref(vectors).size());
}

}  // namespace nearhex::gf2
