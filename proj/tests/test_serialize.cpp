#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nearhex/serialize.hpp"

using namespace nearhex;

TEST_CASE("mask hex layout is little-endian bytes, bit 0 first") {
    CHECK(mask_to_hex(PointSet{0}, 45) == "000000000000");
    CHECK(mask_to_hex(PointSet::of({0}), 45) == "010000000000");
    CHECK(mask_to_hex(PointSet::of({8}), 45) == "000100000000");
    CHECK(mask_to_hex(PointSet::of({44}), 45) == "000000000010");
    CHECK(mask_to_hex(PointSet::of({0, 1, 2}), 3) == "07");
    CHECK(mask_to_hex(full_set(15), 15) == "ff7f");
}

TEST_CASE("mask hex length is exactly two characters per byte") {
    CHECK(mask_to_hex(PointSet{0}, 1).size() == 2);
    CHECK(mask_to_hex(PointSet{0}, 8).size() == 2);
    CHECK(mask_to_hex(PointSet{0}, 9).size() == 4);
    CHECK(mask_to_hex(PointSet{0}, 64).size() == 16);
}

TEST_CASE("mask hex round-trips") {
    std::mt19937_64 rng(4242);
    for (int n : {3, 9, 15, 27, 45, 64}) {
        const std::uint64_t keep = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        for (int trial = 0; trial < 50; ++trial) {
            const PointSet s{rng() & keep};
            CHECK(mask_from_hex(mask_to_hex(s, n), n) == s);
        }
    }
}

TEST_CASE("mask parsing rejects malformed text") {
    CHECK_THROWS_AS(mask_from_hex("01", 45), std::invalid_argument);        // too short
    CHECK_THROWS_AS(mask_from_hex("0100000000000", 45), std::invalid_argument);
    CHECK_THROWS_AS(mask_from_hex("0g0000000000", 45), std::invalid_argument);
    CHECK_THROWS_AS(mask_from_hex("0A0000000000", 45), std::invalid_argument);  // lowercase only
    CHECK_THROWS_AS(mask_from_hex("ffff", 15), std::invalid_argument);  // bit 15 out of range
    CHECK_THROWS_AS(mask_to_hex(PointSet::of({15}), 15), std::invalid_argument);
    CHECK_THROWS_AS(mask_to_hex(PointSet{0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(mask_from_hex("00", 0), std::invalid_argument);
}
