#pragma once

#include <array>
#include <vector>

#include "nearhex/incidence.hpp"

namespace nearhex {

// GQ(2,2) on the 15 duads (2-subsets) of {1..6}; lines are the 15 synthemes
// (partitions into three duads), so two points are collinear exactly when
// their duads are disjoint. synthemes[i] lists the duad ids of line i in the
// incidence line order.
struct DoilyModel {
    std::array<std::array<int, 2>, 15> duads;
    std::array<std::array<int, 3>, 15> synthemes;
};

struct Doily {
    IncidenceStructure geom;
    DoilyModel model;
};

IncidenceStructure make_line3();
IncidenceStructure make_grid();
Doily make_doily();

enum class QuadKind { grid, doily };

struct Quad {
    PointSet points;
    QuadKind kind;
    int anchor = -1;  // grid quad: base doily line id; doily quad: fiber; -1 discovered
};

enum class LineType { type_one, type_two };

struct Hexagon {
    IncidenceStructure geom;  // 45 points, point = 15*fiber + duad id
    Doily base;
    std::vector<Quad> quads;                   // 15 grid quads then 3 doily quads
    std::vector<std::vector<int>> quad_lines;  // per quad, hexagon line ids inside it
    std::vector<LineType> line_type;           // per hexagon line id
};

// Direct product of the 3-point line with the doily, with the derived quad
// and line-type data. type_one lines run across fibers, type_two lines are
// the fiber copies of doily lines.
Hexagon make_hexagon();

// All quads (geodetically closed nondegenerate sub-GQs) as closures of
// distance-2 point pairs, deduplicated and sorted by point set.
std::vector<Quad> discover_quads(const IncidenceStructure& g);

enum class TriadKind { unicentric, tricentric };

struct Triad {
    std::array<int, 3> points;
    PointSet centers;
    TriadKind kind;
};

// All triads (pairwise non-collinear triples) of the doily with their
// centers. Center counts other than 1 or 3 are a hard error.
std::vector<Triad> classify_triads(const Doily& d);

// The 10 grid hyperplanes, one per 3+3 split of the symbols, ordered by the
// split half containing symbol 1 (lex). Each consists of the duads meeting
// the split half in exactly one symbol.
std::vector<PointSet> doily_grids(const Doily& d);

// The 6 ovoids, one per symbol: all duads containing it.
std::vector<PointSet> doily_ovoids(const Doily& d);

struct SubHexagon {
    IncidenceStructure geom;  // 27 points
    PointSet hexagon_points;  // embedding into the 45-point hexagon
    std::vector<int> to_hexagon;
    std::vector<int> from_hexagon;
};

// Product of the 3-point line with one of the doily's grids, realized as the
// induced substructure of the hexagon on the grid's fibers.
SubHexagon make_sub_hexagon(const Hexagon& hx, int grid_index);
SubHexagon make_sub_hexagon(const Hexagon& hx, PointSet grid_pts);

}  // namespace nearhex
