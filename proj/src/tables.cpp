#include "nearhex/tables.hpp"

#include <stdexcept>

#include "json.hpp"

namespace nearhex::tables {

namespace {

ExpectedTables make_builtin() {
    ExpectedTables t;
    auto row = [](const char* label, int family, int pt, int ln, std::array<int, 5> orders,
                  std::array<int, 3> grid, std::array<int, 4> doily, int count) {
        HexTypeRow r;
        r.label = label;
        r.family = family;
        r.sig.pt = pt;
        r.sig.ln = ln;
        r.sig.orders = orders;
        r.sig.grid_profile = grid;
        r.sig.doily_profile = doily;
        r.count = count;
        return r;
    };
    t.hex_types = {
        row("H1", 1, 33, 36, {0, 0, 0, 24, 9}, {6, 9, 0}, {1, 0, 0, 2}, 30),
        row("H2", 1, 29, 28, {0, 0, 12, 8, 9}, {3, 12, 0}, {1, 2, 0, 0}, 45),
        row("H3", 1, 25, 20, {0, 10, 0, 10, 5}, {0, 15, 0}, {1, 0, 2, 0}, 18),
        row("H4", 2, 25, 20, {0, 2, 12, 10, 1}, {2, 9, 4}, {0, 1, 0, 2}, 270),
        row("H5", 2, 21, 12, {0, 12, 6, 0, 3}, {1, 6, 8}, {0, 3, 0, 0}, 90),
        row("H6", 2, 21, 12, {0, 9, 9, 3, 0}, {0, 9, 6}, {0, 3, 0, 0}, 120),
        row("H7", 2, 21, 12, {2, 6, 9, 4, 0}, {0, 9, 6}, {0, 1, 1, 1}, 360),
        row("H8", 2, 17, 4, {8, 8, 0, 0, 1}, {0, 3, 12}, {0, 1, 2, 0}, 90),
    };
    t.doily_kinds = {
        DoilyKindRow{"perp", 7, 15},
        DoilyKindRow{"grid", 9, 10},
        DoilyKindRow{"ovoid", 5, 6},
    };
    t.veldkamp_lines = {
        VeldkampLineRow{"I", "Pentad", 1, 0, 2, 45},
        VeldkampLineRow{"II", "Collinear Triple", 3, 0, 0, 15},
        VeldkampLineRow{"III", "Tricentric Triad", 3, 0, 0, 20},
        VeldkampLineRow{"IV", "Unicentric Triad", 1, 1, 1, 60},
        VeldkampLineRow{"V", "Single Point", 1, 2, 0, 15},
    };
    t.hexagon_hyperplanes = 1023;
    t.hexagon_veldkamp_lines = 174251;
    t.doily_hyperplanes = 31;
    t.doily_veldkamp_lines = 155;
    t.sub_hexagon_hyperplanes = 255;
    t.sub_hexagon_veldkamp_lines = 10795;
    t.family1_total = 93;
    t.family2_total = 930;
    return t;
}

}  // namespace

const ExpectedTables& builtin_tables() {
    static const ExpectedTables t = make_builtin();
    return t;
}

std::string tables_to_json(const ExpectedTables& t) {
    nlohmann::ordered_json j;
    j["hex_types"] = nlohmann::ordered_json::array();
    for (const HexTypeRow& r : t.hex_types) {
        nlohmann::ordered_json row;
        row["label"] = r.label;
        row["family"] = r.family;
        row["pt"] = r.sig.pt;
        row["ln"] = r.sig.ln;
        row["orders"] = r.sig.orders;
        row["grid_profile"] = r.sig.grid_profile;
        row["doily_profile"] = r.sig.doily_profile;
        row["count"] = r.count;
        j["hex_types"].push_back(row);
    }
    j["doily_kinds"] = nlohmann::ordered_json::array();
    for (const DoilyKindRow& r : t.doily_kinds)
        j["doily_kinds"].push_back({{"label", r.label}, {"size", r.size}, {"count", r.count}});
    j["veldkamp_lines"] = nlohmann::ordered_json::array();
    for (const VeldkampLineRow& r : t.veldkamp_lines)
        j["veldkamp_lines"].push_back({{"label", r.label},
                                       {"core", r.core},
                                       {"perps", r.perps},
                                       {"ovoids", r.ovoids},
                                       {"grids", r.grids},
                                       {"count", r.count}});
    j["hexagon_hyperplanes"] = t.hexagon_hyperplanes;
    j["hexagon_veldkamp_lines"] = t.hexagon_veldkamp_lines;
    j["doily_hyperplanes"] = t.doily_hyperplanes;
    j["doily_veldkamp_lines"] = t.doily_veldkamp_lines;
    j["sub_hexagon_hyperplanes"] = t.sub_hexagon_hyperplanes;
    j["sub_hexagon_veldkamp_lines"] = t.sub_hexagon_veldkamp_lines;
    j["family1_total"] = t.family1_total;
    j["family2_total"] = t.family2_total;
    return j.dump(2) + "\n";
}

ExpectedTables tables_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("tables_from_json: ") + e.what());
    }
    try {
        ExpectedTables t;
        const auto& ht = j.at("hex_types");
        if (ht.size() != t.hex_types.size())
            throw std::invalid_argument("tables_from_json: want 8 hex_types rows");
        for (std::size_t i = 0; i < t.hex_types.size(); ++i) {
            HexTypeRow& r = t.hex_types[i];
            r.label = ht[i].at("label").get<std::string>();
            r.family = ht[i].at("family").get<int>();
            r.sig.pt = ht[i].at("pt").get<int>();
            r.sig.ln = ht[i].at("ln").get<int>();
            r.sig.orders = ht[i].at("orders").get<std::array<int, 5>>();
            r.sig.grid_profile = ht[i].at("grid_profile").get<std::array<int, 3>>();
            r.sig.doily_profile = ht[i].at("doily_profile").get<std::array<int, 4>>();
            r.count = ht[i].at("count").get<int>();
        }
        const auto& dk = j.at("doily_kinds");
        if (dk.size() != t.doily_kinds.size())
            throw std::invalid_argument("tables_from_json: want 3 doily_kinds rows");
        for (std::size_t i = 0; i < t.doily_kinds.size(); ++i) {
            t.doily_kinds[i].label = dk[i].at("label").get<std::string>();
            t.doily_kinds[i].size = dk[i].at("size").get<int>();
            t.doily_kinds[i].count = dk[i].at("count").get<int>();
        }
        const auto& vl = j.at("veldkamp_lines");
        if (vl.size() != t.veldkamp_lines.size())
            throw std::invalid_argument("tables_from_json: want 5 veldkamp_lines rows");
        for (std::size_t i = 0; i < t.veldkamp_lines.size(); ++i) {
            VeldkampLineRow& r = t.veldkamp_lines[i];
            r.label = vl[i].at("label").get<std::string>();
            r.core = vl[i].at("core").get<std::string>();
            r.perps = vl[i].at("perps").get<int>();
            r.ovoids = vl[i].at("ovoids").get<int>();
            r.grids = vl[i].at("grids").get<int>();
            r.count = vl[i].at("count").get<int>();
        }
        t.hexagon_hyperplanes = j.at("hexagon_hyperplanes").get<int>();
        t.hexagon_veldkamp_lines = j.at("hexagon_veldkamp_lines").get<int>();
        t.doily_hyperplanes = j.at("doily_hyperplanes").get<int>();
        t.doily_veldkamp_lines = j.at("doily_veldkamp_lines").get<int>();
        t.sub_hexagon_hyperplanes = j.at("sub_hexagon_hyperplanes").get<int>();
        t.sub_hexagon_veldkamp_lines = j.at("sub_hexagon_veldkamp_lines").get<int>();
        t.family1_total = j.at("family1_total").get<int>();
        t.family2_total = j.at("family2_total").get<int>();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("tables_from_json: ") + e.what());
    }
}

namespace {

void cell(std::vector<CellMismatch>& out, const std::string& name, long expected,
          long computed) {
    if (expected != computed)
        out.push_back({name, std::to_string(expected), std::to_string(computed)});
}

}  // namespace

std::vector<CellMismatch> compare_hex_types(const std::vector<TypeCensusRow>& computed,
                                            const ExpectedTables& expected) {
    std::vector<CellMismatch> out;
    if (computed.size() != expected.hex_types.size()) {
        out.push_back({"hex_types.rows", std::to_string(expected.hex_types.size()),
                       std::to_string(computed.size())});
        return out;
    }
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const HexTypeRow& e = expected.hex_types[i];
        const TypeCensusRow& c = computed[i];
        const std::string p = e.label + ".";
        cell(out, p + "Family", e.family, c.family);
        cell(out, p + "Pt", e.sig.pt, c.sig.pt);
        cell(out, p + "Ln", e.sig.ln, c.sig.ln);
        for (std::size_t k = 0; k < e.sig.orders.size(); ++k)
            cell(out, p + "O" + std::to_string(k), e.sig.orders[k], c.sig.orders[k]);
        const char* grid_cols[] = {"GridDp", "GridSg", "GridOv"};
        for (std::size_t k = 0; k < e.sig.grid_profile.size(); ++k)
            cell(out, p + grid_cols[k], e.sig.grid_profile[k], c.sig.grid_profile[k]);
        const char* doily_cols[] = {"DoilyDp", "DoilySg", "DoilyOv", "DoilySq"};
        for (std::size_t k = 0; k < e.sig.doily_profile.size(); ++k)
            cell(out, p + doily_cols[k], e.sig.doily_profile[k], c.sig.doily_profile[k]);
        cell(out, p + "Cd", e.count, c.count);
    }
    return out;
}

std::vector<CellMismatch> compare_doily_kinds(const std::array<std::pair<int, int>, 3>& computed,
                                              const ExpectedTables& expected) {
    std::vector<CellMismatch> out;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const DoilyKindRow& e = expected.doily_kinds[i];
        cell(out, e.label + ".Size", e.size, computed[i].first);
        cell(out, e.label + ".Count", e.count, computed[i].second);
    }
    return out;
}

std::vector<CellMismatch> compare_veldkamp_lines(
    const std::array<VeldkampLineCensusRow, 5>& computed, const ExpectedTables& expected) {
    std::vector<CellMismatch> out;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        const VeldkampLineRow& e = expected.veldkamp_lines[i];
        const std::string p = e.label + ".";
        cell(out, p + "Type", static_cast<long>(i) + 1, computed[i].type);
        cell(out, p + "Perps", e.perps, computed[i].composition[0]);
        cell(out, p + "Ovoids", e.ovoids, computed[i].composition[1]);
        cell(out, p + "Grids", e.grids, computed[i].composition[2]);
        cell(out, p + "Count", e.count, computed[i].count);
    }
    return out;
}

}  // namespace nearhex::tables
