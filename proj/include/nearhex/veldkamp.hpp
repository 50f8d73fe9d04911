#pragma once

#include <array>
#include <vector>

#include "nearhex/hyperplanes.hpp"

namespace nearhex {

struct VeldkampLine {
    std::array<int, 3> ids;  // ascending indices into the hyperplane list
    PointSet core;           // common intersection of the three hyperplanes
};

struct VeldkampSpace {
    int geometry_points = 0;
    int dim = 0;  // hyperplane count == 2^dim - 1
    std::vector<VeldkampLine> lines;  // sorted by ids
};

// The complement of the symmetric difference; always a hyperplane again.
Hyperplane third_hyperplane(const IncidenceStructure& g, const Hyperplane& a,
                            const Hyperplane& b);

// Veldkamp space over a complete hyperplane list (sorted by mask, size
// 2^dim - 1). Every unordered pair closes to a third list member; each line
// is stored once. Output is independent of the thread count.
VeldkampSpace build_veldkamp(const IncidenceStructure& g, const std::vector<Hyperplane>& hs,
                             int threads = 1);

// Asserts the three pairwise intersections of every line coincide with its
// core and that the line count matches (2^dim - 1)(2^(dim-1) - 1)/3.
void verify_veldkamp(const VeldkampSpace& vs, const std::vector<Hyperplane>& hs);

struct VeldkampLineClass {
    int type = 0;  // 1..5
    std::array<int, 3> composition{};  // perps, ovoids, grids
};

// Classifies a doily Veldkamp line by its core (pentad, line, tricentric or
// unicentric triad, single point), recomputing triad centers from the line
// incidences, and validates the member-kind composition against the
// reference rows.
VeldkampLineClass classify_veldkamp_line(const Doily& d, const std::vector<Hyperplane>& hs,
                                         const VeldkampLine& line);

}  // namespace nearhex
