#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "nearhex/geometries.hpp"

namespace nearhex {

// Geometric hyperplane (proper subspace meeting every line) with cached
// statistics. orders[k] counts member points on exactly k full lines; deep
// points have all their lines full.
struct Hyperplane {
    PointSet points;
    int pt = 0;  // member count
    int ln = 0;  // full line count
    std::array<int, 5> orders{};
    PointSet deep_points;
};

// Proper nonempty set meeting every line in exactly 1 point or fully.
bool is_hyperplane(const IncidenceStructure& g, PointSet pts);

Hyperplane make_hyperplane(const IncidenceStructure& g, PointSet pts);

// Two independent enumeration routes for slim connected structures; both
// return the complete list sorted by mask. The code route reads hyperplane
// complements off the GF(2) nullspace of the line incidence matrix; the
// search route backtracks over point statuses with per-line propagation.
std::vector<Hyperplane> enumerate_code(const IncidenceStructure& g);
std::vector<Hyperplane> enumerate_search(const IncidenceStructure& g);

// {y : d(x,y) <= 2}.
Hyperplane singular_hyperplane(const IncidenceStructure& g, int x);

enum class QuadRelationKind { deep, singular, subquadrangular, ovoidal };

struct QuadRelation {
    QuadRelationKind kind;
    int witness = -1;  // singular only: the point x with H ∩ Q = x⊥ ∩ Q
};

// Exactly one relation holds for every (hyperplane, quad) pair; anything
// else is a hard error.
QuadRelation quad_relation(const Hexagon& hx, const Hyperplane& h, int quad_index);

// Quad profiles are [deep, singular, ovoidal] for grid quads (the
// subquadrangular case cannot occur there) and [deep, singular, ovoidal,
// subquadrangular] for doily quads.
struct Signature {
    int pt = 0;
    int ln = 0;
    std::array<int, 5> orders{};
    std::array<int, 3> grid_profile{};
    std::array<int, 4> doily_profile{};
    auto operator<=>(const Signature&) const = default;
};

Signature signature(const Hexagon& hx, const Hyperplane& h);

struct HexClass {
    int type = 0;    // 1..8, matching the built-in reference rows
    int family = 0;  // 1: some deep doily quad; 2: none
};

// Matches the derived signature against the built-in reference rows; a
// signature outside the 8 known rows is a hard error.
HexClass classify_hexagon_hyperplane(const Hexagon& hx, const Hyperplane& h);
HexClass classify_signature(const Signature& sig);

struct TypeCensusRow {
    int type = 0;
    int family = 0;
    Signature sig;
    int count = 0;
    bool operator==(const TypeCensusRow&) const = default;
};

// Groups the hyperplanes by derived signature and binds each group to a
// reference row; rows come back ordered by type, including empty ones.
std::vector<TypeCensusRow> hexagon_type_census(const Hexagon& hx,
                                               const std::vector<Hyperplane>& hs,
                                               int threads = 1);

enum class DoilyHyperplaneKind { perp, grid, ovoid };

// Structural classification; exactly one kind must apply.
DoilyHyperplaneKind classify_doily_hyperplane(const Doily& d, PointSet pts);

// Per-fiber intersections as 15-bit doily masks; each must be the full doily
// or one of its hyperplanes.
std::array<PointSet, 3> doily_traces(const Hexagon& hx, const Hyperplane& h);

struct H1ComplementReport {
    bool ok = false;
    std::string detail;
};

// The 12-point complement of a type-1 hyperplane splits 6+6 over the two
// non-deep fibers; each half induces K3,3 (a dual grid) and the halves are
// joined by the perfect matching of cross-fiber lines at equal base points.
H1ComplementReport h1_complement_check(const Hexagon& hx, const Hyperplane& h);

// GF(2) span dimension of the complement masks.
int complement_span_dimension(const IncidenceStructure& g, const std::vector<Hyperplane>& hs);

}  // namespace nearhex
