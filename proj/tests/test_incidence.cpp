#include <stdexcept>

#include "doctest.h"
#include "nearhex/geometries.hpp"
#include "nearhex/incidence.hpp"

using namespace nearhex;

namespace {

IncidenceStructure triangle_of_digons() {
    return make_incidence(3, {PointSet::of({0, 1}), PointSet::of({1, 2}), PointSet::of({0, 2})});
}

}  // namespace

TEST_CASE("make_incidence rejects out-of-range input") {
    CHECK_THROWS_AS(make_incidence(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_incidence(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_incidence(3, {PointSet::of({0})}), std::invalid_argument);
    CHECK_THROWS_AS(make_incidence(3, {PointSet::of({0, 3})}), std::invalid_argument);
    CHECK_THROWS_AS(make_incidence(3, {PointSet::of({0, 1})}, {"a", "b"}),
                    std::invalid_argument);
}

TEST_CASE("caches: lines sorted by mask, adjacency, distances") {
    const IncidenceStructure g = triangle_of_digons();
    REQUIRE(g.num_lines() == 3);
    CHECK(g.lines[0].mask == 0b011);
    CHECK(g.lines[1].mask == 0b101);
    CHECK(g.lines[2].mask == 0b110);
    CHECK(g.lines_through[0] == std::vector<int>{0, 1});
    CHECK(g.adj[0] == PointSet::of({1, 2}));
    CHECK(g.dist[0][0] == 0);
    CHECK(g.dist[0][2] == 1);
    CHECK(g.connected);
    CHECK(g.diameter == 1);
    CHECK(g.line_id(PointSet::of({0, 2})) == 1);
    CHECK(g.line_id(PointSet::of({0, 1, 2})) == -1);
}

TEST_CASE("disconnected structures keep -1 distances") {
    const IncidenceStructure g =
        make_incidence(4, {PointSet::of({0, 1}), PointSet::of({2, 3})});
    CHECK_FALSE(g.connected);
    CHECK(g.dist[0][2] == -1);
    CHECK(g.dist[0][1] == 1);
}

TEST_CASE("partial linear space validation flags repeated point pairs") {
    CHECK(validate_partial_linear_space(triangle_of_digons()).ok);
    const IncidenceStructure dup =
        make_incidence(4, {PointSet::of({0, 1, 2}), PointSet::of({0, 1, 3})});
    CHECK_FALSE(validate_partial_linear_space(dup).ok);
    const IncidenceStructure repeated =
        make_incidence(3, {PointSet::of({0, 1, 2}), PointSet::of({0, 1, 2})});
    CHECK_FALSE(validate_partial_linear_space(repeated).ok);
}

TEST_CASE("grid passes exactly the (2,1) quadrangle validation") {
    const IncidenceStructure g = make_grid();
    CHECK(validate_gq(g, 2, 1).ok);
    CHECK_FALSE(validate_gq(g, 2, 2).ok);
    CHECK_FALSE(validate_gq(g, 1, 2).ok);

    std::vector<PointSet> lines(g.lines.begin(), g.lines.end() - 1);
    CHECK_FALSE(validate_gq(make_incidence(9, lines), 2, 1).ok);
}

TEST_CASE("near polygon validation") {
    const NearPolygonReport line = validate_near_polygon(make_line3());
    CHECK(line.ok);
    CHECK(line.diameter == 1);
    CHECK(line.dense);
    CHECK(line.slim);

    const NearPolygonReport grid = validate_near_polygon(make_grid());
    CHECK(grid.ok);
    CHECK(grid.diameter == 2);
    CHECK(grid.dense);
    CHECK(grid.slim);

    // Two nearest points for a point facing an opposite 2-point line.
    CHECK_FALSE(validate_near_polygon(triangle_of_digons()).ok);
    CHECK_FALSE(validate_near_polygon(triangle_of_digons()).slim);
}

TEST_CASE("perp of a grid point is its row and column") {
    CHECK(perp(make_grid(), 0) == PointSet::of({0, 1, 2, 3, 6}));
    CHECK(perp(make_grid(), 4) == PointSet::of({3, 4, 5, 1, 7}));
}

TEST_CASE("product of two 3-point lines is the grid") {
    const IncidenceStructure p = direct_product(make_line3(), make_line3());
    const IncidenceStructure g = make_grid();
    REQUIRE(p.num_points == 9);
    CHECK(p.lines == g.lines);  // same sorted masks under (x,y) -> 3x+y
    CHECK(isomorphic(p, g));
    CHECK(p.labels[5] == "1:2");
}

TEST_CASE("product factors commute up to isomorphism") {
    const IncidenceStructure a = direct_product(make_line3(), make_grid());
    const IncidenceStructure b = direct_product(make_grid(), make_line3());
    CHECK(a.num_points == 27);
    CHECK(isomorphic(a, b));
}

TEST_CASE("product guards") {
    CHECK_THROWS_AS(direct_product(make_line3(), make_incidence(1, {})),
                    std::invalid_argument);
    const IncidenceStructure split =
        make_incidence(4, {PointSet::of({0, 1}), PointSet::of({2, 3})});
    CHECK_THROWS_AS(direct_product(make_line3(), split), std::invalid_argument);
    CHECK_THROWS_AS(direct_product(make_grid(), make_grid()), std::invalid_argument);  // 81 points
}

TEST_CASE("induced substructure keeps only inside lines and consistent maps") {
    const IncidenceStructure g = make_grid();
    const Induced ind = induced_substructure(g, PointSet::of({0, 1, 2, 3}));
    CHECK(ind.geom.num_points == 4);
    CHECK(ind.geom.num_lines() == 1);  // the row; no column fits
    CHECK(ind.to_parent.size() == 4);
    for (int p = 0; p < 4; ++p) CHECK(ind.from_parent[ind.to_parent[p]] == p);
    CHECK(ind.from_parent[8] == -1);
}

TEST_CASE("geodetic closure completes lines and geodesics") {
    const IncidenceStructure g = make_grid();
    CHECK(geodetic_closure(g, PointSet::of({0, 1})) == PointSet::of({0, 1, 2}));
    // Opposite corners pull in both geodesics, then the whole grid.
    CHECK(geodetic_closure(g, PointSet::of({0, 4})) == full_set(9));
    CHECK(geodetic_closure(g, PointSet::of({7})) == PointSet::of({7}));

    const IncidenceStructure split =
        make_incidence(4, {PointSet::of({0, 1}), PointSet::of({2, 3})});
    CHECK_THROWS_AS(geodetic_closure(split, PointSet::of({0})), std::invalid_argument);
}

TEST_CASE("automorphism counts of the small geometries") {
    CHECK(automorphism_count(make_line3()) == 6);
    // Row permutations times column permutations times the transpose flip.
    CHECK(automorphism_count(make_grid()) == 6 * 6 * 2);
    CHECK(isomorphic(make_line3(), make_line3()));
    CHECK_FALSE(isomorphic(make_line3(), make_grid()));
}

TEST_CASE("dot output is deterministic and names both node kinds") {
    const IncidenceStructure g = make_grid();
    const std::string a = to_dot_collinearity(g);
    CHECK(a == to_dot_collinearity(g));
    CHECK(a.find("p0") != std::string::npos);
    CHECK(a.find("--") != std::string::npos);
    const std::string b = to_dot_bipartite(g);
    CHECK(b.find("l0") != std::string::npos);
    CHECK(b.find("p8") != std::string::npos);
}
