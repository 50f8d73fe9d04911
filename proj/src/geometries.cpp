#include "nearhex/geometries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nearhex {

IncidenceStructure make_line3() {
    return make_incidence(3, {PointSet::of({0, 1, 2})}, {"0", "1", "2"});
}

IncidenceStructure make_grid() {
    std::vector<PointSet> lines;
    for (int r = 0; r < 3; ++r)
        lines.push_back(PointSet::of({3 * r, 3 * r + 1, 3 * r + 2}));
    for (int c = 0; c < 3; ++c) lines.push_back(PointSet::of({c, c + 3, c + 6}));
    std::vector<std::string> labels;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) labels.push_back(std::to_string(r) + std::to_string(c));
    return make_incidence(9, std::move(lines), std::move(labels));
}

Doily make_doily() {
    Doily d;
    int n = 0;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) d.model.duads[n++] = {a, b};

    auto disjoint = [&](int i, int j) {
        const auto& u = d.model.duads[i];
        const auto& v = d.model.duads[j];
        return u[0] != v[0] && u[0] != v[1] && u[1] != v[0] && u[1] != v[1];
    };

    std::vector<PointSet> lines;
    std::vector<std::string> labels;
    for (int i = 0; i < 15; ++i)
        labels.push_back(std::to_string(d.model.duads[i][0]) +
                         std::to_string(d.model.duads[i][1]));
    for (int i = 0; i < 15; ++i)
        for (int j = i + 1; j < 15; ++j) {
            if (!disjoint(i, j)) continue;
            for (int k = j + 1; k < 15; ++k)
                if (disjoint(i, k) && disjoint(j, k))
                    lines.push_back(PointSet::of({i, j, k}));
        }
    d.geom = make_incidence(15, std::move(lines), std::move(labels));
    if (d.geom.num_lines() != 15) throw std::logic_error("make_doily: expected 15 synthemes");
    for (int li = 0; li < 15; ++li) {
        const std::vector<int> pts = d.geom.lines[li].points();
        d.model.synthemes[li] = {pts[0], pts[1], pts[2]};
    }
    const ValidationReport gq = validate_gq(d.geom, 2, 2);
    if (!gq.ok) throw std::logic_error("make_doily: " + gq.detail);
    return d;
}

Hexagon make_hexagon() {
    Hexagon hx;
    hx.base = make_doily();
    hx.geom = direct_product(make_line3(), hx.base.geom);
    if (hx.geom.num_points != 45 || hx.geom.num_lines() != 60)
        throw std::logic_error("make_hexagon: wrong point or line count");

    for (int li = 0; li < 15; ++li) {
        Quad q;
        q.kind = QuadKind::grid;
        q.anchor = li;
        for (int k = 0; k < 3; ++k) q.points.mask |= hx.base.geom.lines[li].mask << (15 * k);
        hx.quads.push_back(q);
    }
    for (int k = 0; k < 3; ++k) {
        Quad q;
        q.kind = QuadKind::doily;
        q.anchor = k;
        q.points = PointSet{std::uint64_t{0x7fff} << (15 * k)};
        hx.quads.push_back(q);
    }

    hx.quad_lines.resize(hx.quads.size());
    for (std::size_t qi = 0; qi < hx.quads.size(); ++qi)
        for (int li = 0; li < hx.geom.num_lines(); ++li)
            if (hx.quads[qi].points.contains(hx.geom.lines[li]))
                hx.quad_lines[qi].push_back(li);

    int type_one = 0;
    for (int li = 0; li < hx.geom.num_lines(); ++li) {
        const std::vector<int> pts = hx.geom.lines[li].points();
        const bool cross = pts[0] / 15 != pts[1] / 15;
        hx.line_type.push_back(cross ? LineType::type_one : LineType::type_two);
        if (cross) ++type_one;
    }
    if (type_one != 15) throw std::logic_error("make_hexagon: expected 15 cross-fiber lines");

    const NearPolygonReport near = validate_near_polygon(hx.geom);
    if (!near.ok || near.diameter != 3 || !near.dense || !near.slim)
        throw std::logic_error("make_hexagon: not a dense slim near hexagon: " + near.detail);
    return hx;
}

std::vector<Quad> discover_quads(const IncidenceStructure& g) {
    const NearPolygonReport near = validate_near_polygon(g);
    if (!near.ok || !near.dense)
        throw std::invalid_argument("discover_quads: need a dense near polygon: " + near.detail);

    const PointSet full = full_set(g.num_points);
    std::vector<Quad> quads;
    std::vector<PointSet> seen;
    for (int x = 0; x < g.num_points; ++x)
        for (int y = x + 1; y < g.num_points; ++y) {
            if (g.dist[x][y] != 2) continue;
            const PointSet closure = geodetic_closure(g, PointSet::of({x, y}));
            if (closure == full) continue;
            if (std::find(seen.begin(), seen.end(), closure) != seen.end()) continue;
            seen.push_back(closure);
            const Induced sub = induced_substructure(g, closure);
            Quad q;
            q.points = closure;
            if (validate_gq(sub.geom, 2, 1).ok) {
                q.kind = QuadKind::grid;
            } else if (validate_gq(sub.geom, 2, 2).ok) {
                q.kind = QuadKind::doily;
            } else if (validate_gq(sub.geom, 2, 4).ok) {
                throw std::logic_error("discover_quads: GQ(2,4) quads are out of scope");
            } else {
                throw std::logic_error("discover_quads: closure is not a nondegenerate GQ");
            }
            quads.push_back(q);
        }
    std::sort(quads.begin(), quads.end(),
              [](const Quad& a, const Quad& b) { return a.points < b.points; });
    return quads;
}

std::vector<Triad> classify_triads(const Doily& d) {
    std::vector<Triad> out;
    const IncidenceStructure& g = d.geom;
    for (int i = 0; i < 15; ++i)
        for (int j = i + 1; j < 15; ++j) {
            if (g.adj[i].test(j)) continue;
            for (int k = j + 1; k < 15; ++k) {
                if (g.adj[i].test(k) || g.adj[j].test(k)) continue;
                Triad t;
                t.points = {i, j, k};
                t.centers = g.adj[i] & g.adj[j] & g.adj[k];
                const int c = t.centers.count();
                if (c == 1)
                    t.kind = TriadKind::unicentric;
                else if (c == 3)
                    t.kind = TriadKind::tricentric;
                else
                    throw std::logic_error("classify_triads: triad with " + std::to_string(c) +
                                           " centers");
                out.push_back(t);
            }
        }
    return out;
}

std::vector<PointSet> doily_grids(const Doily& d) {
    std::vector<PointSet> out;
    for (int a = 2; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            // Split half {1,a,b}; the grid is the duads meeting it once.
            PointSet grid;
            for (int i = 0; i < 15; ++i) {
                const auto& duad = d.model.duads[i];
                int inside = 0;
                for (int s : {1, a, b})
                    if (duad[0] == s || duad[1] == s) ++inside;
                if (inside == 1) grid.set(i);
            }
            out.push_back(grid);
        }
    if (out.size() != 10) throw std::logic_error("doily_grids: expected 10 splits");
    for (const PointSet& grid : out)
        if (!validate_gq(induced_substructure(d.geom, grid).geom, 2, 1).ok)
            throw std::logic_error("doily_grids: split does not induce GQ(2,1)");
    return out;
}

std::vector<PointSet> doily_ovoids(const Doily& d) {
    std::vector<PointSet> out;
    for (int s = 1; s <= 6; ++s) {
        PointSet ovoid;
        for (int i = 0; i < 15; ++i)
            if (d.model.duads[i][0] == s || d.model.duads[i][1] == s) ovoid.set(i);
        out.push_back(ovoid);
    }
    for (const PointSet& ovoid : out)
        for (const PointSet& l : d.geom.lines)
            if ((l & ovoid).count() != 1)
                throw std::logic_error("doily_ovoids: set is not a transversal");
    return out;
}

SubHexagon make_sub_hexagon(const Hexagon& hx, PointSet grid_pts) {
    const std::vector<PointSet> grids = doily_grids(hx.base);
    if (std::find(grids.begin(), grids.end(), grid_pts) == grids.end())
        throw std::invalid_argument("make_sub_hexagon: point set is not a doily grid");

    SubHexagon sh;
    for (int k = 0; k < 3; ++k) sh.hexagon_points.mask |= grid_pts.mask << (15 * k);
    Induced ind = induced_substructure(hx.geom, sh.hexagon_points);
    sh.geom = std::move(ind.geom);
    sh.to_hexagon = std::move(ind.to_parent);
    sh.from_hexagon = std::move(ind.from_parent);

    if (sh.geom.num_points != 27 || sh.geom.num_lines() != 27)
        throw std::logic_error("make_sub_hexagon: wrong point or line count");
    const NearPolygonReport near = validate_near_polygon(sh.geom);
    if (!near.ok || near.diameter != 3 || !near.dense || !near.slim)
        throw std::logic_error("make_sub_hexagon: not a dense slim near hexagon: " + near.detail);
    return sh;
}

SubHexagon make_sub_hexagon(const Hexagon& hx, int grid_index) {
    const std::vector<PointSet> grids = doily_grids(hx.base);
    if (grid_index < 0 || grid_index >= static_cast<int>(grids.size()))
        throw std::invalid_argument("make_sub_hexagon: grid index must be in 0..9");
    return make_sub_hexagon(hx, grids[static_cast<std::size_t>(grid_index)]);
}

}  // namespace nearhex
