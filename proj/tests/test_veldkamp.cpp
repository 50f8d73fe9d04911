#include <array>
#include <stdexcept>

#include "doctest.h"
#include "nearhex/tables.hpp"
#include "nearhex/veldkamp.hpp"

using namespace nearhex;

TEST_CASE("three-point-line Veldkamp space is a single line") {
    const IncidenceStructure g = make_line3();
    const std::vector<Hyperplane> hs = enumerate_code(g);
    const VeldkampSpace vs = build_veldkamp(g, hs);
    CHECK(vs.dim == 2);
    REQUIRE(vs.lines.size() == 1);
    CHECK(vs.lines[0].ids == std::array<int, 3>{0, 1, 2});
    CHECK(vs.lines[0].core.empty());
    verify_veldkamp(vs, hs);
}

TEST_CASE("grid Veldkamp space has 35 lines") {
    const IncidenceStructure g = make_grid();
    const std::vector<Hyperplane> hs = enumerate_code(g);
    const VeldkampSpace vs = build_veldkamp(g, hs);
    CHECK(vs.dim == 4);
    CHECK(vs.lines.size() == 35);
    verify_veldkamp(vs, hs);
}

TEST_CASE("closing a pair always lands back in the hyperplane list") {
    const IncidenceStructure g = make_grid();
    const std::vector<Hyperplane> hs = enumerate_code(g);
    const VeldkampSpace vs = build_veldkamp(g, hs);
    for (const VeldkampLine& l : vs.lines)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const Hyperplane third =
                    third_hyperplane(g, hs[static_cast<std::size_t>(l.ids[a])],
                                     hs[static_cast<std::size_t>(l.ids[b])]);
                const int other = l.ids[3 - a - b];
                CHECK(third.points == hs[static_cast<std::size_t>(other)].points);
            }
}

TEST_CASE("doily Veldkamp space: 155 lines in the five reference types") {
    const Doily d = make_doily();
    const std::vector<Hyperplane> hs = enumerate_code(d.geom);
    const VeldkampSpace vs = build_veldkamp(d.geom, hs);
    CHECK(vs.dim == 5);
    REQUIRE(vs.lines.size() == 155);
    verify_veldkamp(vs, hs);

    std::array<tables::VeldkampLineCensusRow, 5> rows{};
    std::array<int, 6> core_sizes{};
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].type = static_cast<int>(i) + 1;
    for (const VeldkampLine& l : vs.lines) {
        const VeldkampLineClass c = classify_veldkamp_line(d, hs, l);
        rows[static_cast<std::size_t>(c.type - 1)].composition = c.composition;
        ++rows[static_cast<std::size_t>(c.type - 1)].count;
        core_sizes[static_cast<std::size_t>(c.type)] = l.core.count();
    }
    CHECK(rows[0].count == 45);
    CHECK(rows[1].count == 15);
    CHECK(rows[2].count == 20);
    CHECK(rows[3].count == 60);
    CHECK(rows[4].count == 15);
    CHECK(tables::compare_veldkamp_lines(rows, tables::builtin_tables()).empty());
    CHECK(core_sizes == std::array<int, 6>{0, 5, 3, 3, 3, 1});
}

TEST_CASE("third_hyperplane needs two distinct hyperplanes") {
    const IncidenceStructure g = make_line3();
    const std::vector<Hyperplane> hs = enumerate_code(g);
    CHECK_THROWS_AS(third_hyperplane(g, hs[0], hs[0]), std::invalid_argument);
}

TEST_CASE("build_veldkamp validates the input list") {
    const IncidenceStructure g = make_grid();
    std::vector<Hyperplane> hs = enumerate_code(g);
    std::vector<Hyperplane> short_list(hs.begin(), hs.end() - 1);
    CHECK_THROWS_AS(build_veldkamp(g, short_list), std::invalid_argument);
    std::vector<Hyperplane> swapped = hs;
    std::swap(swapped[0], swapped[1]);
    CHECK_THROWS_AS(build_veldkamp(g, swapped), std::invalid_argument);
}

TEST_CASE("verify_veldkamp rejects a corrupted space") {
    const IncidenceStructure g = make_grid();
    const std::vector<Hyperplane> hs = enumerate_code(g);
    VeldkampSpace vs = build_veldkamp(g, hs);
    vs.lines.pop_back();
    CHECK_THROWS_AS(verify_veldkamp(vs, hs), std::logic_error);
}

TEST_CASE("line lists are identical for any thread count") {
    const Doily d = make_doily();
    const std::vector<Hyperplane> hs = enumerate_code(d.geom);
    const VeldkampSpace one = build_veldkamp(d.geom, hs, 1);
    for (int threads : {2, 3, 8}) {
        const VeldkampSpace many = build_veldkamp(d.geom, hs, threads);
        REQUIRE(many.lines.size() == one.lines.size());
        for (std::size_t i = 0; i < one.lines.size(); ++i) {
            CHECK(many.lines[i].ids == one.lines[i].ids);
            CHECK(many.lines[i].core == one.lines[i].core);
        }
    }
}
