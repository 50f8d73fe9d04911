#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nearhex/gf2.hpp"

using namespace nearhex::gf2;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    Matrix m;
    m.cols = cols;
    const std::uint64_t keep = cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
    for (int r = 0; r < rows; ++r) m.rows.push_back(rng() & keep);
    return m;
}

}  // namespace

TEST_CASE("identity matrix has full rank and trivial nullspace") {
    for (int n : {1, 5, 17, 64}) {
        Matrix m;
        m.cols = n;
        for (int i = 0; i < n; ++i) m.rows.push_back(std::uint64_t{1} << i);
        CHECK(rank(m) == n);
        CHECK(nullspace(m).dim() == 0);
    }
}

TEST_CASE("zero matrix nullspace is the full space") {
    Matrix m;
    m.cols = 6;
    m.rows.assign(3, 0);
    const Subspace s = nullspace(m);
    CHECK(s.dim() == 6);
    CHECK(enumerate_nonzero(s).size() == 63);
}

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937_64 rng(20240416);
    for (int cols : {1, 3, 8, 23, 45, 64}) {
        for (int rows : {1, 4, 20, 70}) {
            const Matrix m = random_matrix(rng, rows, cols);
            CHECK(rank(m) + nullspace(m).dim() == cols);
        }
    }
}

TEST_CASE("nullspace vectors are orthogonal to every row") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, 12, 30);
        const Subspace s = nullspace(m);
        for (std::uint64_t v : s.basis)
            for (std::uint64_t r : m.rows) CHECK(std::popcount(r & v) % 2 == 0);
    }
}

TEST_CASE("reduced basis is canonical across generating sets") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(rng, 9, 21);
        Matrix b = a;
        // Same row space: shuffle, duplicate a row, add one row into another.
        std::shuffle(b.rows.begin(), b.rows.end(), rng);
        b.rows.push_back(b.rows[0]);
        b.rows[1] ^= b.rows[2];
        CHECK(nullspace(a) == nullspace(b));
    }
}

TEST_CASE("reduced basis has strictly increasing pivots with cleared pivot columns") {
    std::mt19937_64 rng(31337);
    const Matrix m = random_matrix(rng, 7, 40);
    const Subspace s = nullspace(m);
    for (std::size_t i = 0; i + 1 < s.basis.size(); ++i)
        CHECK(std::countr_zero(s.basis[i]) < std::countr_zero(s.basis[i + 1]));
    for (std::uint64_t row : s.basis) {
        const std::uint64_t pivot = row & (~row + 1);
        int hits = 0;
        for (std::uint64_t other : s.basis)
            if (other & pivot) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("enumerate_nonzero lists the nonzero span in increasing order") {
    Subspace s;
    s.cols = 3;
    s.basis = {0b001, 0b010, 0b100};
    CHECK(enumerate_nonzero(s) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});

    std::mt19937_64 rng(8);
    const Matrix m = random_matrix(rng, 30, 20);
    const std::vector<std::uint64_t> all = enumerate_nonzero(nullspace(m));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("enumerate_nonzero refuses dimensions beyond 24") {
    Subspace s;
    s.cols = 30;
    for (int i = 0; i < 25; ++i) s.basis.push_back(std::uint64_t{1} << i);
    CHECK_THROWS_AS(enumerate_nonzero(s), std::length_error);
}

TEST_CASE("span_dimension") {
    CHECK(span_dimension({}, 10) == 0);
    CHECK(span_dimension({0b101, 0b101}, 3) == 1);
    CHECK(span_dimension({0b001, 0b010, 0b011}, 3) == 2);
}

TEST_CASE("bits beyond the declared columns are rejected") {
    Matrix m;
    m.cols = 4;
    m.rows = {0b10000};
    CHECK_THROWS_AS(rank(m), std::invalid_argument);
}
