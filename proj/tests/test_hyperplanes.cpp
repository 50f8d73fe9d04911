#include <algorithm>
#include <map>
#include <stdexcept>

#include "doctest.h"
#include "nearhex/hyperplanes.hpp"
#include "nearhex/tables.hpp"
#include "nearhex/veldkamp.hpp"

using namespace nearhex;

namespace {

std::vector<PointSet> brute_force(const IncidenceStructure& g) {
    std::vector<PointSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.num_points); ++mask)
        if (is_hyperplane(g, PointSet{mask})) out.push_back(PointSet{mask});
    return out;
}

std::vector<PointSet> masks_of(const std::vector<Hyperplane>& hs) {
    std::vector<PointSet> out;
    for (const Hyperplane& h : hs) out.push_back(h.points);
    return out;
}

}  // namespace

TEST_CASE("both routes agree with brute force on every small geometry") {
    for (const IncidenceStructure& g :
         {make_line3(), make_grid(), make_doily().geom}) {
        const std::vector<PointSet> expect = brute_force(g);
        CHECK(masks_of(enumerate_code(g)) == expect);
        CHECK(masks_of(enumerate_search(g)) == expect);
    }
}

TEST_CASE("hyperplane counts are 3, 15, 31") {
    CHECK(enumerate_code(make_line3()).size() == 3);
    CHECK(enumerate_code(make_grid()).size() == 15);
    CHECK(enumerate_code(make_doily().geom).size() == 31);
}

TEST_CASE("is_hyperplane rejects improper and crooked sets") {
    const IncidenceStructure g = make_grid();
    CHECK_FALSE(is_hyperplane(g, PointSet{0}));
    CHECK_FALSE(is_hyperplane(g, full_set(9)));
    CHECK_FALSE(is_hyperplane(g, PointSet::of({0, 1})));  // meets the top row twice
    CHECK(is_hyperplane(g, PointSet::of({0, 4, 8})));     // a transversal
    CHECK_THROWS_AS(is_hyperplane(g, PointSet::of({9})), std::invalid_argument);
    CHECK_THROWS_AS(make_hyperplane(g, PointSet::of({0, 1})), std::invalid_argument);
}

TEST_CASE("enumeration guards") {
    const IncidenceStructure digons =
        make_incidence(4, {PointSet::of({0, 1}), PointSet::of({1, 2}), PointSet::of({2, 3}),
                           PointSet::of({3, 0})});
    CHECK_THROWS_AS(enumerate_code(digons), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_search(digons), std::invalid_argument);

    std::vector<PointSet> sparse{PointSet::of({0, 1, 2})};
    CHECK_THROWS_AS(enumerate_search(make_incidence(46, sparse)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_code(make_incidence(46, sparse)), std::invalid_argument);
}

TEST_CASE("hexagon: both routes return the same 1023 hyperplanes") {
    const Hexagon hx = make_hexagon();
    const std::vector<Hyperplane> code = enumerate_code(hx.geom);
    const std::vector<Hyperplane> search = enumerate_search(hx.geom);
    REQUIRE(code.size() == 1023);
    CHECK(masks_of(code) == masks_of(search));
}

TEST_CASE("singular hyperplane: radius-2 ball with the centre perp deep") {
    const Hexagon hx = make_hexagon();
    const Hyperplane h = singular_hyperplane(hx.geom, 0);
    CHECK(h.pt == 29);
    CHECK(h.ln == 28);
    CHECK(h.orders == std::array<int, 5>{0, 0, 12, 8, 9});
    CHECK(h.deep_points == perp(hx.geom, 0));
    for (int y = 0; y < 45; ++y)
        CHECK(h.points.test(y) == (hx.geom.dist[0][static_cast<std::size_t>(y)] <= 2));

    const HexClass c = classify_hexagon_hyperplane(hx, h);
    CHECK(c.type == 2);
    CHECK(c.family == 1);
    CHECK_THROWS_AS(singular_hyperplane(hx.geom, 45), std::invalid_argument);
}

TEST_CASE("signature of a singular hyperplane matches the reference H2 row") {
    const Hexagon hx = make_hexagon();
    const Signature s = signature(hx, singular_hyperplane(hx.geom, 17));
    CHECK(s.grid_profile == std::array<int, 3>{3, 12, 0});
    CHECK(s.doily_profile == std::array<int, 4>{1, 2, 0, 0});
}

TEST_CASE("quad relations: exactly one kind, with a checked singular witness") {
    const Hexagon hx = make_hexagon();
    const Hyperplane h = singular_hyperplane(hx.geom, 0);
    int deep = 0, singular = 0, ovoidal = 0, sub = 0;
    for (int q = 0; q < 18; ++q) {
        const QuadRelation r = quad_relation(hx, h, q);
        switch (r.kind) {
            case QuadRelationKind::deep: ++deep; break;
            case QuadRelationKind::singular: ++singular; break;
            case QuadRelationKind::ovoidal: ++ovoidal; break;
            case QuadRelationKind::subquadrangular: ++sub; break;
        }
        if (r.kind == QuadRelationKind::singular) {
            REQUIRE(r.witness >= 0);
            const PointSet quad = hx.quads[static_cast<std::size_t>(q)].points;
            CHECK((perp(hx.geom, r.witness) & quad) == (h.points & quad));
        }
    }
    CHECK(deep == 3 + 1);      // 3 grid quads and the centre fiber
    CHECK(singular == 12 + 2); // 12 grid quads and the two far fibers
    CHECK(ovoidal == 0);
    CHECK(sub == 0);
    CHECK_THROWS_AS(quad_relation(hx, h, 18), std::invalid_argument);
}

TEST_CASE("hexagon type census reproduces the reference table") {
    const Hexagon hx = make_hexagon();
    const std::vector<Hyperplane> hs = enumerate_code(hx.geom);
    const std::vector<TypeCensusRow> census = hexagon_type_census(hx, hs);
    CHECK(tables::compare_hex_types(census, tables::builtin_tables()).empty());
    CHECK(hexagon_type_census(hx, hs, 4) == census);

    int total = 0;
    for (const TypeCensusRow& r : census) total += r.count;
    CHECK(total == 1023);
}

TEST_CASE("doily hyperplane kinds by structure") {
    const Doily d = make_doily();
    CHECK(classify_doily_hyperplane(d, perp(d.geom, 3)) == DoilyHyperplaneKind::perp);
    CHECK(classify_doily_hyperplane(d, doily_grids(d)[4]) == DoilyHyperplaneKind::grid);
    CHECK(classify_doily_hyperplane(d, doily_ovoids(d)[5]) == DoilyHyperplaneKind::ovoid);
    CHECK_THROWS_AS(classify_doily_hyperplane(d, PointSet::of({0, 1})), std::invalid_argument);
}

TEST_CASE("two ovoids close onto the perp of their shared duad") {
    const Doily d = make_doily();
    const std::vector<PointSet> ovoids = doily_ovoids(d);  // per symbol 1..6
    const Hyperplane a = make_hyperplane(d.geom, ovoids[0]);
    const Hyperplane b = make_hyperplane(d.geom, ovoids[1]);
    const Hyperplane third = third_hyperplane(d.geom, a, b);

    PointSet expect;  // duad {1,2} and every duad disjoint from it
    for (int p = 0; p < 15; ++p) {
        const auto& duad = d.model.duads[static_cast<std::size_t>(p)];
        const bool has1 = duad[0] == 1 || duad[1] == 1;
        const bool has2 = duad[0] == 2 || duad[1] == 2;
        if (has1 == has2) expect.set(p);
    }
    CHECK(third.points == expect);
    CHECK(third.points == perp(d.geom, 0));  // point 0 is the duad {1,2}
    CHECK(classify_doily_hyperplane(d, third.points) == DoilyHyperplaneKind::perp);
}

TEST_CASE("fiber traces of every hexagon hyperplane are full or doily hyperplanes") {
    const Hexagon hx = make_hexagon();
    const Doily base = make_doily();
    const PointSet full_fiber = full_set(15);
    for (const Hyperplane& h : enumerate_code(hx.geom)) {
        const std::array<PointSet, 3> traces = doily_traces(hx, h);
        for (const PointSet& t : traces)
            CHECK((t == full_fiber || is_hyperplane(base.geom, t)));
    }
}

TEST_CASE("type-1 complements split into matched dual grids") {
    const Hexagon hx = make_hexagon();
    int seen = 0;
    for (const Hyperplane& h : enumerate_code(hx.geom)) {
        if (classify_hexagon_hyperplane(hx, h).type != 1) continue;
        const H1ComplementReport rep = h1_complement_check(hx, h);
        CHECK(rep.ok);
        ++seen;
    }
    CHECK(seen == 30);
}

TEST_CASE("complements span the whole binary code") {
    const Doily d = make_doily();
    CHECK(complement_span_dimension(d.geom, enumerate_code(d.geom)) == 5);
    const IncidenceStructure g = make_grid();
    CHECK(complement_span_dimension(g, enumerate_code(g)) == 4);
}

TEST_CASE("sub-hexagon hyperplanes: 255 in the five known shapes") {
    const Hexagon hx = make_hexagon();
    const SubHexagon sh = make_sub_hexagon(hx, 7);
    const std::vector<Hyperplane> code = enumerate_code(sh.geom);
    const std::vector<Hyperplane> search = enumerate_search(sh.geom);
    REQUIRE(code.size() == 255);
    CHECK(masks_of(code) == masks_of(search));

    std::map<std::pair<int, int>, int> census;
    for (const Hyperplane& h : code) ++census[{h.pt, h.ln}];
    const std::map<std::pair<int, int>, int> expect{
        {{9, 0}, 12}, {{11, 3}, 54}, {{13, 6}, 108}, {{15, 9}, 54}, {{19, 15}, 27}};
    CHECK(census == expect);
}
