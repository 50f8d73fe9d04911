#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "nearhex/geometries.hpp"

using namespace nearhex;

TEST_CASE("doily model: lex duads, partitioning synthemes, collinear iff disjoint") {
    const Doily d = make_doily();
    CHECK(d.model.duads[0] == std::array<int, 2>{1, 2});
    CHECK(d.model.duads[4] == std::array<int, 2>{1, 6});
    CHECK(d.model.duads[14] == std::array<int, 2>{5, 6});
    for (std::size_t i = 0; i + 1 < d.model.duads.size(); ++i)
        CHECK(d.model.duads[i] < d.model.duads[i + 1]);

    for (int li = 0; li < 15; ++li) {
        PointSet from_model;
        int symbols = 0;
        for (int duad : d.model.synthemes[static_cast<std::size_t>(li)]) {
            from_model.set(duad);
            for (int s : d.model.duads[static_cast<std::size_t>(duad)]) symbols |= 1 << s;
        }
        CHECK(from_model == d.geom.lines[static_cast<std::size_t>(li)]);
        CHECK(symbols == 0b1111110);  // the three duads partition {1..6}
    }

    auto share_symbol = [&](int a, int b) {
        const auto& x = d.model.duads[static_cast<std::size_t>(a)];
        const auto& y = d.model.duads[static_cast<std::size_t>(b)];
        return x[0] == y[0] || x[0] == y[1] || x[1] == y[0] || x[1] == y[1];
    };
    for (int a = 0; a < 15; ++a)
        for (int b = 0; b < 15; ++b)
            if (a != b) CHECK(d.geom.adj[static_cast<std::size_t>(a)].test(b) == !share_symbol(a, b));
}

TEST_CASE("doily is the generalized quadrangle of order two") {
    const Doily d = make_doily();
    CHECK(validate_gq(d.geom, 2, 2).ok);
    CHECK(d.geom.diameter == 2);
    CHECK(validate_near_polygon(d.geom).ok);
}

TEST_CASE("doily automorphisms are exactly the symbol permutations") {
    const Doily d = make_doily();
    // Constructive lower bound: every permutation of {1..6} permutes duads
    // and maps synthemes to synthemes.
    std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
    auto duad_id = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (int i = 0; i < 15; ++i)
            if (d.model.duads[static_cast<std::size_t>(i)] == std::array<int, 2>{a, b}) return i;
        return -1;
    };
    int valid = 0;
    do {
        bool lines_preserved = true;
        for (const PointSet& l : d.geom.lines) {
            PointSet image;
            for (int p : l.points()) {
                const auto& duad = d.model.duads[static_cast<std::size_t>(p)];
                image.set(duad_id(perm[static_cast<std::size_t>(duad[0] - 1)],
                                  perm[static_cast<std::size_t>(duad[1] - 1)]));
            }
            lines_preserved = lines_preserved && d.geom.line_id(image) >= 0;
        }
        valid += lines_preserved ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid == 720);
    // And the search finds no more than that.
    CHECK(automorphism_count(d.geom) == 720);
}

TEST_CASE("hexagon lines match the from-scratch product construction") {
    const Hexagon hx = make_hexagon();
    REQUIRE(hx.geom.num_points == 45);
    REQUIRE(hx.geom.num_lines() == 60);
    CHECK(hx.geom.labels[0] == "0:12");
    CHECK(hx.geom.labels[44] == "2:56");

    std::vector<PointSet> expect;
    for (int duad = 0; duad < 15; ++duad)
        expect.push_back(PointSet::of({duad, duad + 15, duad + 30}));
    const Doily base = make_doily();
    for (int fiber = 0; fiber < 3; ++fiber)
        for (const PointSet& l : base.geom.lines)
            expect.push_back(PointSet{l.mask << (15 * fiber)});
    std::sort(expect.begin(), expect.end());
    CHECK(hx.geom.lines == expect);

    int type_one = 0;
    for (int li = 0; li < 60; ++li) {
        const PointSet l = hx.geom.lines[static_cast<std::size_t>(li)];
        bool crosses = false;
        for (int p : l.points())
            crosses = crosses || p / 15 != l.lowest() / 15;
        CHECK((hx.line_type[static_cast<std::size_t>(li)] == LineType::type_one) == crosses);
        type_one += crosses ? 1 : 0;
    }
    CHECK(type_one == 15);
}

TEST_CASE("hexagon distances: distance 3 pairs are cross-fiber sharing a symbol") {
    const Hexagon hx = make_hexagon();
    const Doily base = make_doily();
    for (int x = 0; x < 45; ++x)
        for (int y = 0; y < 45; ++y) {
            const int dx = x % 15, dy = y % 15;
            const bool cross = x / 15 != y / 15;
            const bool far = cross && dx != dy && !base.geom.adj[static_cast<std::size_t>(dx)].test(dy);
            CHECK((hx.geom.dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == 3) ==
                  far);
        }
}

TEST_CASE("hexagon quads: 15 grid quads over doily lines, 3 fiber doily quads") {
    const Hexagon hx = make_hexagon();
    REQUIRE(hx.quads.size() == 18);
    for (int i = 0; i < 15; ++i) {
        const Quad& q = hx.quads[static_cast<std::size_t>(i)];
        CHECK(q.kind == QuadKind::grid);
        CHECK(q.anchor == i);
        const std::uint64_t base = hx.base.geom.lines[static_cast<std::size_t>(i)].mask;
        CHECK(q.points.mask == (base | base << 15 | base << 30));
        CHECK(hx.quad_lines[static_cast<std::size_t>(i)].size() == 6);
        const Induced ind = induced_substructure(hx.geom, q.points);
        CHECK(validate_gq(ind.geom, 2, 1).ok);
    }
    for (int k = 0; k < 3; ++k) {
        const Quad& q = hx.quads[static_cast<std::size_t>(15 + k)];
        CHECK(q.kind == QuadKind::doily);
        CHECK(q.anchor == k);
        CHECK(q.points.mask == std::uint64_t{0x7fff} << (15 * k));
        CHECK(hx.quad_lines[static_cast<std::size_t>(15 + k)].size() == 15);
        const Induced ind = induced_substructure(hx.geom, q.points);
        CHECK(validate_gq(ind.geom, 2, 2).ok);
    }
}

TEST_CASE("quad discovery: all 18 in the hexagon, none in its factors") {
    const Hexagon hx = make_hexagon();
    const std::vector<Quad> found = discover_quads(hx.geom);
    REQUIRE(found.size() == 18);
    std::vector<PointSet> found_sets, built_sets;
    for (const Quad& q : found) found_sets.push_back(q.points);
    for (const Quad& q : hx.quads) built_sets.push_back(q.points);
    std::sort(built_sets.begin(), built_sets.end());
    CHECK(found_sets == built_sets);
    for (const Quad& q : found) CHECK(q.anchor == -1);

    CHECK(discover_quads(make_doily().geom).empty());  // every closure is the whole space
    CHECK(discover_quads(make_grid()).empty());
    CHECK(discover_quads(make_line3()).empty());  // no distance-2 pairs at all
}

TEST_CASE("doily triads split 60 unicentric and 20 tricentric") {
    const Doily d = make_doily();
    const std::vector<Triad> triads = classify_triads(d);
    int uni = 0, tri = 0, listed = 0;
    for (const Triad& t : triads) {
        PointSet centers = d.geom.adj[static_cast<std::size_t>(t.points[0])] &
                           d.geom.adj[static_cast<std::size_t>(t.points[1])] &
                           d.geom.adj[static_cast<std::size_t>(t.points[2])];
        CHECK(centers == t.centers);
        (t.kind == TriadKind::unicentric ? uni : tri) += 1;
        ++listed;
    }
    CHECK(uni == 60);
    CHECK(tri == 20);

    int expected = 0;  // independent count of pairwise non-collinear triples
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b)
            for (int c = b + 1; c < 15; ++c) {
                const bool apart = !d.geom.adj[static_cast<std::size_t>(a)].test(b) &&
                                   !d.geom.adj[static_cast<std::size_t>(a)].test(c) &&
                                   !d.geom.adj[static_cast<std::size_t>(b)].test(c);
                expected += apart ? 1 : 0;
            }
    CHECK(listed == expected);
}

TEST_CASE("the ten grids cover each doily point six times") {
    const Doily d = make_doily();
    const std::vector<PointSet> grids = doily_grids(d);
    REQUIRE(grids.size() == 10);
    for (const PointSet& g : grids) {
        CHECK(g.count() == 9);
        CHECK(validate_gq(induced_substructure(d.geom, g).geom, 2, 1).ok);
    }
    for (int p = 0; p < 15; ++p) {
        int covered = 0;
        for (const PointSet& g : grids) covered += g.test(p) ? 1 : 0;
        CHECK(covered == 6);
    }
    CHECK(std::adjacent_find(grids.begin(), grids.end()) == grids.end());
}

TEST_CASE("the six ovoids pair points with symbols") {
    const Doily d = make_doily();
    const std::vector<PointSet> ovoids = doily_ovoids(d);
    REQUIRE(ovoids.size() == 6);
    for (const PointSet& o : ovoids) {
        CHECK(o.count() == 5);
        for (int a : o.points())
            for (int b : o.points())
                if (a != b) CHECK_FALSE(d.geom.adj[static_cast<std::size_t>(a)].test(b));
    }
    for (int p = 0; p < 15; ++p) {
        int covered = 0;
        for (const PointSet& o : ovoids) covered += o.test(p) ? 1 : 0;
        CHECK(covered == 2);  // the duad's two symbols
    }
}

TEST_CASE("sub-hexagons are 27-point near hexagons inside the hexagon") {
    const Hexagon hx = make_hexagon();
    const SubHexagon sh = make_sub_hexagon(hx, 0);
    REQUIRE(sh.geom.num_points == 27);
    CHECK(sh.geom.num_lines() == 27);
    const NearPolygonReport rep = validate_near_polygon(sh.geom);
    CHECK(rep.ok);
    CHECK(rep.diameter == 3);
    CHECK(rep.slim);
    CHECK(sh.hexagon_points.count() == 27);
    for (int p = 0; p < 27; ++p) CHECK(sh.from_hexagon[static_cast<std::size_t>(sh.to_hexagon[static_cast<std::size_t>(p)])] == p);

    // Same geometry as the direct product with the grid itself.
    const Doily base = make_doily();
    const Induced grid0 = induced_substructure(base.geom, doily_grids(base)[0]);
    CHECK(isomorphic(sh.geom, direct_product(make_line3(), grid0.geom)));

    CHECK_THROWS_AS(make_sub_hexagon(hx, 10), std::invalid_argument);
    CHECK_THROWS_AS(make_sub_hexagon(hx, -1), std::invalid_argument);
    CHECK_THROWS_AS(make_sub_hexagon(hx, PointSet::of({0, 1, 2})), std::invalid_argument);
}
