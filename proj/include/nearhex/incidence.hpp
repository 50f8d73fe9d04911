#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nearhex {

// Set of point indices 0..63 packed into one word, bit i = point i.
struct PointSet {
    std::uint64_t mask = 0;

    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t m) : mask(m) {}

    static PointSet of(std::initializer_list<int> pts) {
        PointSet s;
        for (int p : pts) s.set(p);
        return s;
    }

    bool test(int i) const { return (mask >> i) & 1u; }
    void set(int i) { mask |= std::uint64_t{1} << i; }
    void reset(int i) { mask &= ~(std::uint64_t{1} << i); }
    int count() const { return std::popcount(mask); }
    bool empty() const { return mask == 0; }
    bool contains(PointSet s) const { return (s.mask & ~mask) == 0; }
    int lowest() const { return std::countr_zero(mask); }

    std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = mask; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    friend PointSet operator&(PointSet a, PointSet b) { return PointSet{a.mask & b.mask}; }
    friend PointSet operator|(PointSet a, PointSet b) { return PointSet{a.mask | b.mask}; }
    friend PointSet operator^(PointSet a, PointSet b) { return PointSet{a.mask ^ b.mask}; }
    auto operator<=>(const PointSet&) const = default;
};

PointSet full_set(int num_points);

// Point-line incidence structure on at most 64 points. Lines are stored
// sorted by mask and line ids index that order. dist[x][y] == -1 when y is
// unreachable from x.
struct IncidenceStructure {
    int num_points = 0;
    std::vector<PointSet> lines;
    std::vector<std::string> labels;              // empty, or one per point
    std::vector<std::vector<int>> lines_through;  // per point, ascending line ids
    std::vector<PointSet> adj;                    // collinear neighbours, self excluded
    std::vector<std::vector<int>> dist;
    bool connected = false;
    int diameter = 0;

    int num_lines() const { return static_cast<int>(lines.size()); }
    int line_id(PointSet line) const;  // -1 if absent
};

// Validates ranges (1..64 points, every line inside range with >= 2 points)
// and computes the caches. Duplicate or overlapping lines are allowed here;
// validate_partial_linear_space reports them.
IncidenceStructure make_incidence(int num_points, std::vector<PointSet> lines,
                                  std::vector<std::string> labels = {});

struct ValidationReport {
    bool ok = true;
    std::string detail;  // first offence when !ok
};

// Every pair of distinct points on at most one common line.
ValidationReport validate_partial_linear_space(const IncidenceStructure& g);

// Generalized quadrangle of order (s,t): lines of s+1 points, t+1 lines per
// point, and for x not on L exactly one point of L collinear with x. Also
// checks |P| == (s+1)(st+1) and |B| == (t+1)(st+1).
ValidationReport validate_gq(const IncidenceStructure& g, int s, int t);

struct NearPolygonReport {
    bool ok = false;
    std::string detail;
    int diameter = 0;
    bool dense = false;  // lines >= 3 points and distance-2 pairs have >= 2 common neighbours
    bool slim = false;   // every line exactly 3 points
};

// Near polygon: connected partial linear space where every (point, line)
// pair has a unique nearest point on the line.
NearPolygonReport validate_near_polygon(const IncidenceStructure& g);

// x together with all points collinear with x.
PointSet perp(const IncidenceStructure& g, int x);

// Points P1 x P2 indexed (x,y) -> x*|P2|+y; lines are {x} x M and L x {y}.
// Factors must be connected, carry at least one line, and the product must
// fit in 64 points.
IncidenceStructure direct_product(const IncidenceStructure& a, const IncidenceStructure& b);

struct Induced {
    IncidenceStructure geom;
    std::vector<int> to_parent;    // new point -> parent point
    std::vector<int> from_parent;  // parent point -> new point, -1 outside
};

// Keeps exactly the lines fully inside pts.
Induced induced_substructure(const IncidenceStructure& g, PointSet pts);

// Smallest superset of seed closed under line completion (two points of a
// line force the whole line) and geodesics (all shortest paths between
// members). Requires a connected structure.
PointSet geodetic_closure(const IncidenceStructure& g, PointSet seed);

std::int64_t automorphism_count(const IncidenceStructure& g);
bool isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

std::string to_dot_collinearity(const IncidenceStructure& g);
std::string to_dot_bipartite(const IncidenceStructure& g);

}  // namespace nearhex
