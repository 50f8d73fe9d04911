#pragma once

#include <array>
#include <string>
#include <vector>

#include "nearhex/hyperplanes.hpp"

namespace nearhex::tables {

// Reference census data the engine's output is compared against. The engine
// derives everything; these rows only name the results and pin the expected
// numbers for the check layer.

struct HexTypeRow {
    std::string label;  // "H1".."H8"
    int family = 0;
    Signature sig;
    int count = 0;
};

struct DoilyKindRow {
    std::string label;  // "perp", "grid", "ovoid"
    int size = 0;
    int count = 0;
};

struct VeldkampLineRow {
    std::string label;  // "I".."V"
    std::string core;
    int perps = 0, ovoids = 0, grids = 0;  // hyperplane kinds on the line
    int count = 0;
};

struct ExpectedTables {
    std::array<HexTypeRow, 8> hex_types;
    std::array<DoilyKindRow, 3> doily_kinds;
    std::array<VeldkampLineRow, 5> veldkamp_lines;
    int hexagon_hyperplanes = 0;
    int hexagon_veldkamp_lines = 0;
    int doily_hyperplanes = 0;
    int doily_veldkamp_lines = 0;
    int sub_hexagon_hyperplanes = 0;
    int sub_hexagon_veldkamp_lines = 0;
    int family1_total = 0;
    int family2_total = 0;
};

const ExpectedTables& builtin_tables();

std::string tables_to_json(const ExpectedTables& t);
ExpectedTables tables_from_json(const std::string& text);

struct CellMismatch {
    std::string cell;  // e.g. "H4.Cd", "I.Perps", "ovoid.Count"
    std::string expected;
    std::string computed;
};

// Cell-for-cell comparison of a derived type census against expected rows.
std::vector<CellMismatch> compare_hex_types(const std::vector<TypeCensusRow>& computed,
                                            const ExpectedTables& expected);

// Doily census comparison; computed entries are (size, count) per kind in
// perp/grid/ovoid order.
std::vector<CellMismatch> compare_doily_kinds(const std::array<std::pair<int, int>, 3>& computed,
                                              const ExpectedTables& expected);

struct VeldkampLineCensusRow {
    int type = 0;  // 1..5
    std::array<int, 3> composition{};  // perps, ovoids, grids
    int count = 0;
};

std::vector<CellMismatch> compare_veldkamp_lines(
    const std::array<VeldkampLineCensusRow, 5>& computed, const ExpectedTables& expected);

}  // namespace nearhex::tables
