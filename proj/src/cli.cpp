#include "nearhex/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nearhex/checks.hpp"
#include "nearhex/serialize.hpp"
#include "nearhex/veldkamp.hpp"
#include "nearhex/version.hpp"

namespace nearhex::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kGeometries{"line3", "grid", "doily", "hexagon", "subhex"};
const std::vector<std::string> kFormats{"md", "csv", "json"};
const std::vector<std::string> kMethods{"code", "search", "both"};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeometryBundle {
    std::string name;
    IncidenceStructure geom;
    std::optional<Hexagon> hexagon;      // set for hexagon and subhex
    std::optional<Doily> doily;          // set for doily
    std::optional<SubHexagon> subhex;    // set for subhex
    int grid_index = -1;
};

GeometryBundle make_geometry(const RunConfig& cfg) {
    if (std::find(kGeometries.begin(), kGeometries.end(), cfg.geometry) == kGeometries.end())
        throw UsageError("unknown geometry '" + cfg.geometry + "'");
    if (cfg.grid_set && cfg.geometry != "subhex")
        throw UsageError("--grid applies to the subhex geometry only");

    GeometryBundle b;
    b.name = cfg.geometry;
    if (cfg.geometry == "line3") {
        b.geom = make_line3();
    } else if (cfg.geometry == "grid") {
        b.geom = make_grid();
    } else if (cfg.geometry == "doily") {
        b.doily = make_doily();
        b.geom = b.doily->geom;
    } else if (cfg.geometry == "hexagon") {
        b.hexagon = make_hexagon();
        b.geom = b.hexagon->geom;
    } else {
        if (cfg.grid_index < 0 || cfg.grid_index > 9)
            throw UsageError("--grid must be in 0..9");
        b.hexagon = make_hexagon();
        b.subhex = make_sub_hexagon(*b.hexagon, cfg.grid_index);
        b.geom = b.subhex->geom;
        b.grid_index = cfg.grid_index;
    }
    return b;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_md() const {
        std::ostringstream os;
        auto row_line = [&os](const std::vector<std::string>& cells) {
            os << "|";
            for (const std::string& c : cells) os << " " << c << " |";
            os << "\n";
        };
        row_line(header);
        os << "|";
        for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
        os << "\n";
        for (const auto& r : rows) row_line(r);
        return os.str();
    }

    std::string to_csv() const {
        std::ostringstream os;
        auto quote = [](const std::string& s) {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char c : s) {
                if (c == '"') q += '"';
                q += c;
            }
            return q + "\"";
        };
        auto row_line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                os << (i ? "," : "") << quote(cells[i]);
            os << "\n";
        };
        row_line(header);
        for (const auto& r : rows) row_line(r);
        return os.str();
    }
};

std::string meta_md(const std::string& command, const GeometryBundle* b) {
    std::ostringstream os;
    os << "# " << command;
    if (b) os << ": " << b->name;
    os << "\n\ntool: " << kToolName << " " << kToolVersion << "\n";
    if (b && b->grid_index >= 0) os << "host grid: " << b->grid_index << "\n";
    return os.str();
}

ordered_json meta_json(const std::string& command, const GeometryBundle* b) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    if (b) {
        j["geometry"] = b->name;
        if (b->grid_index >= 0) j["grid"] = b->grid_index;
    }
    return j;
}

int orders_width(const IncidenceStructure& g) {
    std::size_t width = 0;
    for (int p = 0; p < g.num_points; ++p)
        width = std::max(width, g.lines_through[static_cast<std::size_t>(p)].size());
    return static_cast<int>(width) + 1;
}

std::vector<int> trimmed_orders(const Hyperplane& h, int width) {
    std::vector<int> out;
    for (int k = 0; k < width; ++k) out.push_back(h.orders[static_cast<std::size_t>(k)]);
    return out;
}

// Per-hyperplane extras that only exist for some geometries.
struct RecordExtras {
    std::vector<Signature> sigs;            // hexagon
    std::vector<HexClass> classes;          // hexagon
    std::vector<DoilyHyperplaneKind> kinds; // doily
};

const char* kind_name(DoilyHyperplaneKind k) {
    switch (k) {
        case DoilyHyperplaneKind::perp: return "perp";
        case DoilyHyperplaneKind::grid: return "grid";
        case DoilyHyperplaneKind::ovoid: return "ovoid";
    }
    return "?";
}

RecordExtras compute_extras(const GeometryBundle& b, const std::vector<Hyperplane>& hs) {
    RecordExtras e;
    if (b.name == "hexagon") {
        for (const Hyperplane& h : hs) {
            e.sigs.push_back(signature(*b.hexagon, h));
            e.classes.push_back(classify_signature(e.sigs.back()));
        }
    } else if (b.name == "doily") {
        for (const Hyperplane& h : hs)
            e.kinds.push_back(classify_doily_hyperplane(*b.doily, h.points));
    }
    return e;
}

Table records_table(const GeometryBundle& b, const std::vector<Hyperplane>& hs,
                    const RecordExtras& extras) {
    const int width = orders_width(b.geom);
    Table t;
    t.header = {"mask", "pt", "ln"};
    for (int k = 0; k < width; ++k) t.header.push_back("o" + std::to_string(k));
    if (b.name == "hexagon") {
        for (const char* c : {"grid_dp", "grid_sg", "grid_ov", "doily_dp", "doily_sg",
                              "doily_ov", "doily_sq", "type", "family"})
            t.header.push_back(c);
    } else if (b.name == "doily") {
        t.header.push_back("kind");
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const Hyperplane& h = hs[i];
        std::vector<std::string> row{mask_to_hex(h.points, b.geom.num_points),
                                     std::to_string(h.pt), std::to_string(h.ln)};
        for (int v : trimmed_orders(h, width)) row.push_back(std::to_string(v));
        if (b.name == "hexagon") {
            const Signature& s = extras.sigs[i];
            for (int v : s.grid_profile) row.push_back(std::to_string(v));
            for (int v : s.doily_profile) row.push_back(std::to_string(v));
            row.push_back("H" + std::to_string(extras.classes[i].type));
            row.push_back(std::to_string(extras.classes[i].family));
        } else if (b.name == "doily") {
            row.push_back(kind_name(extras.kinds[i]));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table census_table(const GeometryBundle& b, const std::vector<Hyperplane>& hs,
                   const RecordExtras& extras) {
    Table t;
    if (b.name == "hexagon") {
        t.header = {"type", "count"};
        std::array<int, 8> counts{};
        for (const HexClass& c : extras.classes) ++counts[static_cast<std::size_t>(c.type - 1)];
        for (std::size_t i = 0; i < counts.size(); ++i)
            t.rows.push_back({"H" + std::to_string(i + 1), std::to_string(counts[i])});
    } else if (b.name == "doily") {
        t.header = {"kind", "count"};
        std::array<int, 3> counts{};
        for (DoilyHyperplaneKind k : extras.kinds) ++counts[static_cast<std::size_t>(k)];
        const char* names[] = {"perp", "grid", "ovoid"};
        for (std::size_t i = 0; i < 3; ++i)
            t.rows.push_back({names[i], std::to_string(counts[i])});
    } else {
        t.header = {"pt", "ln", "count"};
        std::map<std::pair<int, int>, int> groups;
        for (const Hyperplane& h : hs) ++groups[{h.pt, h.ln}];
        for (const auto& [key, count] : groups)
            t.rows.push_back({std::to_string(key.first), std::to_string(key.second),
                              std::to_string(count)});
    }
    return t;
}

ordered_json record_json(const GeometryBundle& b, const Hyperplane& h,
                         const RecordExtras& extras, std::size_t i, int width) {
    ordered_json r;
    r["mask"] = mask_to_hex(h.points, b.geom.num_points);
    r["pt"] = h.pt;
    r["ln"] = h.ln;
    r["orders"] = trimmed_orders(h, width);
    if (b.name == "hexagon") {
        const Signature& s = extras.sigs[i];
        r["grid_profile"] = s.grid_profile;
        r["doily_profile"] = s.doily_profile;
        r["type"] = "H" + std::to_string(extras.classes[i].type);
        r["family"] = extras.classes[i].family;
    } else if (b.name == "doily") {
        r["kind"] = kind_name(extras.kinds[i]);
    }
    return r;
}

int emit(const RunConfig& cfg, std::ostream& data_out, std::ostream& err,
         const std::string& payload) {
    if (cfg.out_path.empty()) {
        data_out << payload;
        return 0;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open '" << cfg.out_path << "' for writing\n";
        return 2;
    }
    f << payload;
    return 0;
}

// ---- build ----

int cmd_build(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    const GeometryBundle b = make_geometry(cfg);
    const ValidationReport pls = validate_partial_linear_space(b.geom);
    const NearPolygonReport near = validate_near_polygon(b.geom);

    std::vector<std::pair<std::string, std::string>> props;
    props.emplace_back("points", std::to_string(b.geom.num_points));
    props.emplace_back("lines", std::to_string(b.geom.num_lines()));
    props.emplace_back("connected", b.geom.connected ? "true" : "false");
    props.emplace_back("diameter", std::to_string(b.geom.diameter));
    props.emplace_back("partial_linear_space", pls.ok ? "true" : "false");
    props.emplace_back("near_polygon", near.ok ? "true" : "false");
    props.emplace_back("dense", near.dense ? "true" : "false");
    props.emplace_back("slim", near.slim ? "true" : "false");
    if (b.name == "grid")
        props.emplace_back("gq_2_1", validate_gq(b.geom, 2, 1).ok ? "true" : "false");
    if (b.name == "doily")
        props.emplace_back("gq_2_2", validate_gq(b.geom, 2, 2).ok ? "true" : "false");
    if (b.name == "hexagon") {
        int t1 = 0;
        for (LineType t : b.hexagon->line_type)
            if (t == LineType::type_one) ++t1;
        props.emplace_back("type_one_lines", std::to_string(t1));
        props.emplace_back("type_two_lines", std::to_string(b.geom.num_lines() - t1));
        int gq = 0, dq = 0;
        for (const Quad& q : b.hexagon->quads) (q.kind == QuadKind::grid ? gq : dq) += 1;
        props.emplace_back("grid_quads", std::to_string(gq));
        props.emplace_back("doily_quads", std::to_string(dq));
    }

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j = meta_json("build", &b);
        for (const auto& [k, v] : props) {
            if (v == "true" || v == "false")
                j[k] = v == "true";
            else
                j[k] = std::stol(v);
        }
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        Table t;
        t.header = {"property", "value"};
        for (const auto& [k, v] : props) t.rows.push_back({k, v});
        payload = t.to_csv();
    } else {
        Table t;
        t.header = {"property", "value"};
        for (const auto& [k, v] : props) t.rows.push_back({k, v});
        payload = meta_md("build", &b) + "\n" + t.to_md();
    }
    return emit(cfg, data_out, err, payload);
}

// ---- hyperplanes ----

int cmd_hyperplanes(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    const GeometryBundle b = make_geometry(cfg);
    std::vector<Hyperplane> hs;
    if (cfg.method == "code") {
        hs = enumerate_code(b.geom);
    } else if (cfg.method == "search") {
        hs = enumerate_search(b.geom);
    } else {
        hs = enumerate_code(b.geom);
        const std::vector<Hyperplane> other = enumerate_search(b.geom);
        bool same = hs.size() == other.size();
        for (std::size_t i = 0; same && i < hs.size(); ++i)
            same = hs[i].points == other[i].points;
        if (!same) {
            err << "error: code and search enumeration routes disagree\n";
            return 1;
        }
    }
    const RecordExtras extras = compute_extras(b, hs);
    const Table census = census_table(b, hs, extras);
    const Table records = records_table(b, hs, extras);

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j = meta_json("hyperplanes", &b);
        j["method"] = cfg.method;
        j["count"] = hs.size();
        j["census"] = ordered_json::array();
        for (const auto& row : census.rows) {
            ordered_json r;
            for (std::size_t c = 0; c < census.header.size(); ++c) {
                const std::string& v = row[c];
                if (census.header[c] == "type" || census.header[c] == "kind")
                    r[census.header[c]] = v;
                else
                    r[census.header[c]] = std::stol(v);
            }
            j["census"].push_back(r);
        }
        j["hyperplanes"] = ordered_json::array();
        const int width = orders_width(b.geom);
        for (std::size_t i = 0; i < hs.size(); ++i)
            j["hyperplanes"].push_back(record_json(b, hs[i], extras, i, width));
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        payload = records.to_csv();
    } else {
        std::ostringstream os;
        os << meta_md("hyperplanes", &b) << "method: " << cfg.method << "\n"
           << "count: " << hs.size() << "\n\n## census\n\n"
           << census.to_md() << "\n## hyperplanes\n\n"
           << records.to_md();
        payload = os.str();
    }
    return emit(cfg, data_out, err, payload);
}

// ---- classify ----

int cmd_classify(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    const GeometryBundle b = make_geometry(cfg);
    const std::vector<Hyperplane> hs = enumerate_code(b.geom);
    const tables::ExpectedTables& expected = tables::builtin_tables();

    Table t;
    std::vector<tables::CellMismatch> mismatches;

    if (b.name == "hexagon") {
        const std::vector<TypeCensusRow> census =
            hexagon_type_census(*b.hexagon, hs, cfg.threads);
        t.header = {"type", "family", "pt", "ln", "o0", "o1", "o2", "o3", "o4",
                    "grid_dp", "grid_sg", "grid_ov", "doily_dp", "doily_sg", "doily_ov",
                    "doily_sq", "count"};
        for (const TypeCensusRow& r : census) {
            std::vector<std::string> row{"H" + std::to_string(r.type),
                                         std::to_string(r.family), std::to_string(r.sig.pt),
                                         std::to_string(r.sig.ln)};
            for (int v : r.sig.orders) row.push_back(std::to_string(v));
            for (int v : r.sig.grid_profile) row.push_back(std::to_string(v));
            for (int v : r.sig.doily_profile) row.push_back(std::to_string(v));
            row.push_back(std::to_string(r.count));
            t.rows.push_back(std::move(row));
        }
        mismatches = tables::compare_hex_types(census, expected);
        int fam1 = 0, fam2 = 0;
        for (const TypeCensusRow& r : census) (r.family == 1 ? fam1 : fam2) += r.count;
        if (fam1 != expected.family1_total)
            mismatches.push_back({"Family1.Total", std::to_string(expected.family1_total),
                                  std::to_string(fam1)});
        if (fam2 != expected.family2_total)
            mismatches.push_back({"Family2.Total", std::to_string(expected.family2_total),
                                  std::to_string(fam2)});
    } else if (b.name == "doily") {
        const RecordExtras extras = compute_extras(b, hs);
        std::array<std::pair<int, int>, 3> kinds{};
        kinds[0].first = 7;
        kinds[1].first = 9;
        kinds[2].first = 5;
        for (DoilyHyperplaneKind k : extras.kinds) ++kinds[static_cast<std::size_t>(k)].second;
        t.header = {"kind", "size", "count"};
        const char* names[] = {"perp", "grid", "ovoid"};
        for (std::size_t i = 0; i < 3; ++i)
            t.rows.push_back({names[i], std::to_string(kinds[i].first),
                              std::to_string(kinds[i].second)});
        mismatches = tables::compare_doily_kinds(kinds, expected);
    } else {
        t.header = {"pt", "ln", "count"};
        std::map<std::pair<int, int>, int> groups;
        for (const Hyperplane& h : hs) ++groups[{h.pt, h.ln}];
        for (const auto& [key, count] : groups)
            t.rows.push_back({std::to_string(key.first), std::to_string(key.second),
                              std::to_string(count)});
        if (b.name == "subhex" &&
            static_cast<int>(hs.size()) != expected.sub_hexagon_hyperplanes)
            mismatches.push_back({"subhex.Count",
                                  std::to_string(expected.sub_hexagon_hyperplanes),
                                  std::to_string(hs.size())});
    }

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j = meta_json("classify", &b);
        j["count"] = hs.size();
        j["rows"] = ordered_json::array();
        for (const auto& row : t.rows) {
            ordered_json r;
            for (std::size_t c = 0; c < t.header.size(); ++c) {
                const std::string& v = row[c];
                if (t.header[c] == "type" || t.header[c] == "kind")
                    r[t.header[c]] = v;
                else
                    r[t.header[c]] = std::stol(v);
            }
            j["rows"].push_back(r);
        }
        ordered_json cmp;
        cmp["ok"] = mismatches.empty();
        cmp["mismatches"] = ordered_json::array();
        for (const tables::CellMismatch& m : mismatches)
            cmp["mismatches"].push_back(
                {{"cell", m.cell}, {"expected", m.expected}, {"computed", m.computed}});
        j["comparison"] = cmp;
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        payload = t.to_csv();
    } else {
        std::ostringstream os;
        os << meta_md("classify", &b) << "count: " << hs.size() << "\n\n" << t.to_md() << "\n";
        if (mismatches.empty()) {
            os << "comparison: OK\n";
        } else {
            os << "comparison: FAILED\n\n";
            for (const tables::CellMismatch& m : mismatches)
                os << "- " << m.cell << ": expected " << m.expected << ", computed "
                   << m.computed << "\n";
        }
        payload = os.str();
    }
    const int rc = emit(cfg, data_out, err, payload);
    if (rc != 0) return rc;
    if (!mismatches.empty()) {
        err << "error: " << mismatches.size() << " census cells differ from the reference\n";
        return 1;
    }
    return 0;
}

// ---- veldkamp ----

int cmd_veldkamp(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    const GeometryBundle b = make_geometry(cfg);
    const std::vector<Hyperplane> hs = enumerate_code(b.geom);
    const VeldkampSpace vs = build_veldkamp(b.geom, hs, cfg.threads);
    verify_veldkamp(vs, hs);
    const tables::ExpectedTables& expected = tables::builtin_tables();

    std::vector<tables::CellMismatch> mismatches;
    std::array<tables::VeldkampLineCensusRow, 5> doily_rows{};
    std::vector<int> line_types;  // doily only, per line
    if (b.name == "doily") {
        for (std::size_t i = 0; i < doily_rows.size(); ++i)
            doily_rows[i].type = static_cast<int>(i) + 1;
        for (const VeldkampLine& l : vs.lines) {
            const VeldkampLineClass c = classify_veldkamp_line(*b.doily, hs, l);
            line_types.push_back(c.type);
            auto& row = doily_rows[static_cast<std::size_t>(c.type - 1)];
            row.composition = c.composition;
            ++row.count;
        }
        mismatches = tables::compare_veldkamp_lines(doily_rows, expected);
        if (static_cast<int>(vs.lines.size()) != expected.doily_veldkamp_lines)
            mismatches.push_back({"doily.VeldkampLines",
                                  std::to_string(expected.doily_veldkamp_lines),
                                  std::to_string(vs.lines.size())});
    } else if (b.name == "hexagon") {
        if (static_cast<int>(vs.lines.size()) != expected.hexagon_veldkamp_lines)
            mismatches.push_back({"hexagon.VeldkampLines",
                                  std::to_string(expected.hexagon_veldkamp_lines),
                                  std::to_string(vs.lines.size())});
    } else if (b.name == "subhex") {
        if (static_cast<int>(vs.lines.size()) != expected.sub_hexagon_veldkamp_lines)
            mismatches.push_back({"subhex.VeldkampLines",
                                  std::to_string(expected.sub_hexagon_veldkamp_lines),
                                  std::to_string(vs.lines.size())});
    }

    auto line_row = [&](std::size_t i) {
        const VeldkampLine& l = vs.lines[i];
        std::vector<std::string> row{std::to_string(l.ids[0]), std::to_string(l.ids[1]),
                                     std::to_string(l.ids[2]),
                                     mask_to_hex(l.core, b.geom.num_points)};
        if (!line_types.empty()) {
            const tables::VeldkampLineRow& ref =
                expected.veldkamp_lines[static_cast<std::size_t>(line_types[i] - 1)];
            row.push_back(ref.label);
        }
        return row;
    };

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j = meta_json("veldkamp", &b);
        j["points"] = hs.size();
        j["lines"] = vs.lines.size();
        j["dim"] = vs.dim;
        if (b.name == "doily") {
            ordered_json types;
            for (std::size_t i = 0; i < doily_rows.size(); ++i)
                types[expected.veldkamp_lines[i].label] = doily_rows[i].count;
            j["line_types"] = types;
        }
        const std::size_t limit = cfg.lines ? vs.lines.size() : std::min<std::size_t>(10, vs.lines.size());
        ordered_json sample = ordered_json::array();
        for (std::size_t i = 0; i < limit; ++i) {
            const VeldkampLine& l = vs.lines[i];
            ordered_json r;
            r["ids"] = l.ids;
            r["core"] = mask_to_hex(l.core, b.geom.num_points);
            if (!line_types.empty())
                r["type"] = expected.veldkamp_lines[static_cast<std::size_t>(line_types[i] - 1)].label;
            sample.push_back(r);
        }
        j[cfg.lines ? "lines_list" : "lines_sample"] = sample;
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        if (b.name == "doily" && !cfg.lines) {
            Table t;
            t.header = {"Type", "Core", "Perps", "Ovoids", "Grids", "Count"};
            for (std::size_t i = 0; i < doily_rows.size(); ++i) {
                const tables::VeldkampLineRow& ref = expected.veldkamp_lines[i];
                t.rows.push_back({ref.label, ref.core,
                                  std::to_string(doily_rows[i].composition[0]),
                                  std::to_string(doily_rows[i].composition[1]),
                                  std::to_string(doily_rows[i].composition[2]),
                                  std::to_string(doily_rows[i].count)});
            }
            payload = t.to_csv();
        } else if (cfg.lines) {
            Table t;
            t.header = {"id1", "id2", "id3", "core"};
            if (!line_types.empty()) t.header.push_back("type");
            for (std::size_t i = 0; i < vs.lines.size(); ++i) t.rows.push_back(line_row(i));
            payload = t.to_csv();
        } else {
            Table t;
            t.header = {"property", "value"};
            t.rows.push_back({"points", std::to_string(hs.size())});
            t.rows.push_back({"lines", std::to_string(vs.lines.size())});
            t.rows.push_back({"dim", std::to_string(vs.dim)});
            payload = t.to_csv();
        }
    } else {
        std::ostringstream os;
        os << meta_md("veldkamp", &b) << "points: " << hs.size()
           << "\nlines: " << vs.lines.size() << "\ndim: " << vs.dim << "\n";
        if (b.name == "doily") {
            Table t;
            t.header = {"Type", "Core", "Perps", "Ovoids", "Grids", "Count"};
            for (std::size_t i = 0; i < doily_rows.size(); ++i) {
                const tables::VeldkampLineRow& ref = expected.veldkamp_lines[i];
                t.rows.push_back({ref.label, ref.core,
                                  std::to_string(doily_rows[i].composition[0]),
                                  std::to_string(doily_rows[i].composition[1]),
                                  std::to_string(doily_rows[i].composition[2]),
                                  std::to_string(doily_rows[i].count)});
            }
            os << "\n" << t.to_md();
        }
        if (cfg.lines) {
            Table t;
            t.header = {"id1", "id2", "id3", "core"};
            if (!line_types.empty()) t.header.push_back("type");
            for (std::size_t i = 0; i < vs.lines.size(); ++i) t.rows.push_back(line_row(i));
            os << "\n## lines\n\n" << t.to_md();
        }
        os << "\ncomparison: " << (mismatches.empty() ? "OK" : "FAILED") << "\n";
        for (const tables::CellMismatch& m : mismatches)
            os << "- " << m.cell << ": expected " << m.expected << ", computed " << m.computed
               << "\n";
        payload = os.str();
    }
    const int rc = emit(cfg, data_out, err, payload);
    if (rc != 0) return rc;
    if (!mismatches.empty()) {
        err << "error: " << mismatches.size() << " cells differ from the reference\n";
        return 1;
    }
    return 0;
}

// ---- dot ----

int cmd_dot(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    const GeometryBundle b = make_geometry(cfg);
    const std::string payload =
        cfg.bipartite ? to_dot_bipartite(b.geom) : to_dot_collinearity(b.geom);
    return emit(cfg, data_out, err, payload);
}

// ---- check ----

int cmd_check(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    CheckOptions opt;
    opt.quick = cfg.quick;
    opt.threads = cfg.threads;
    if (!cfg.expect_path.empty()) {
        std::ifstream f(cfg.expect_path, std::ios::binary);
        if (!f) {
            err << "error: cannot read '" << cfg.expect_path << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        try {
            opt.expected = tables::tables_from_json(buf.str());
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }

    const std::vector<CheckResult> results = run_checks(opt);
    const bool ok = checks_passed(results);

    std::string payload;
    if (cfg.format == "json") {
        ordered_json j = meta_json("check", nullptr);
        j["quick"] = cfg.quick;
        j["checks"] = ordered_json::array();
        for (const CheckResult& r : results)
            j["checks"].push_back({{"name", r.name},
                                   {"status", r.skipped ? "skip" : (r.pass ? "pass" : "fail")},
                                   {"detail", r.detail}});
        j["all_pass"] = ok;
        payload = j.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        Table t;
        t.header = {"check", "status", "detail"};
        for (const CheckResult& r : results)
            t.rows.push_back({r.name, r.skipped ? "skip" : (r.pass ? "pass" : "fail"), r.detail});
        payload = t.to_csv();
    } else {
        std::ostringstream os;
        os << meta_md("check", nullptr) << "\n";
        for (const CheckResult& r : results)
            os << (r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL")) << " " << r.name << ": "
               << r.detail << "\n";
        int passed = 0, failed = 0, skipped = 0;
        for (const CheckResult& r : results)
            (r.skipped ? skipped : (r.pass ? passed : failed)) += 1;
        os << "\nresult: " << passed << " passed, " << failed << " failed, " << skipped
           << " skipped\n";
        payload = os.str();
    }
    const int rc = emit(cfg, data_out, err, payload);
    if (rc != 0) return rc;
    return ok ? 0 : 1;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& data_out, std::ostream& err) {
    try {
        if (std::find(kFormats.begin(), kFormats.end(), cfg.format) == kFormats.end()) {
            err << "error: unknown format '" << cfg.format << "'\n";
            return 2;
        }
        if (cfg.threads < 1) {
            err << "error: --threads must be at least 1\n";
            return 2;
        }
        if (cfg.command == "build") return cmd_build(cfg, data_out, err);
        if (cfg.command == "hyperplanes") {
            if (std::find(kMethods.begin(), kMethods.end(), cfg.method) == kMethods.end()) {
                err << "error: unknown method '" << cfg.method << "'\n";
                return 2;
            }
            return cmd_hyperplanes(cfg, data_out, err);
        }
        if (cfg.command == "classify") return cmd_classify(cfg, data_out, err);
        if (cfg.command == "veldkamp") return cmd_veldkamp(cfg, data_out, err);
        if (cfg.command == "dot") return cmd_dot(cfg, data_out, err);
        if (cfg.command == "check") return cmd_check(cfg, data_out, err);
        err << "error: unknown command '" << cfg.command << "'\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"near-hexagon hyperplane and Veldkamp space toolkit"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    struct SubSpec {
        const char* name;
        CLI::App* sub = nullptr;
        bool geometry = false;
    };
    std::array<SubSpec, 6> specs{{{"build", nullptr, true},
                                  {"hyperplanes", nullptr, true},
                                  {"classify", nullptr, true},
                                  {"veldkamp", nullptr, true},
                                  {"dot", nullptr, true},
                                  {"check", nullptr, false}}};
    const char* descriptions[] = {
        "construct a geometry and report its validation",
        "enumerate geometric hyperplanes",
        "census the hyperplanes by type",
        "build and classify the Veldkamp space",
        "emit a Graphviz graph",
        "run the named verification battery"};

    for (std::size_t i = 0; i < specs.size(); ++i) {
        SubSpec& s = specs[i];
        s.sub = app.add_subcommand(s.name, descriptions[i]);
        if (s.geometry) {
            s.sub->add_option("geometry", cfg.geometry, "line3|grid|doily|hexagon|subhex")
                ->required();
            s.sub->add_option("--grid", cfg.grid_index, "sub-hexagon host grid (subhex only)")
                ->check(CLI::Range(0, 9));
        }
        s.sub->add_option("--out", cfg.out_path, "write the payload to this file");
        if (std::string(s.name) != "dot")
            s.sub->add_option("--format", cfg.format, "md|csv|json")
                ->check(CLI::IsMember(kFormats));
        if (std::string(s.name) != "build" && std::string(s.name) != "dot")
            s.sub->add_option("--threads", cfg.threads, "worker threads")
                ->check(CLI::Range(1, 1024));
    }
    specs[1].sub->add_option("--method", cfg.method, "code|search|both")
        ->check(CLI::IsMember(kMethods));
    specs[3].sub->add_flag("--lines", cfg.lines, "emit the full Veldkamp line list");
    specs[4].sub->add_flag("--bipartite", cfg.bipartite, "point-line incidence graph");
    specs[5].sub->add_flag("--quick", cfg.quick,
                           "skip the hexagon Veldkamp build and automorphism counts");
    specs[5].sub->add_option("--expect", cfg.expect_path, "expected-table JSON to check against");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    for (const SubSpec& s : specs)
        if (app.got_subcommand(s.sub)) {
            cfg.command = s.name;
            if (s.geometry) cfg.grid_set = s.sub->count("--grid") > 0;
        }

    const auto t0 = std::chrono::steady_clock::now();
    const int rc = execute(cfg, std::cout, std::cerr);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cerr << "[time] " << cfg.command << ": " << ms << " ms\n";
    return rc;
}

}  // namespace nearhex::cli
