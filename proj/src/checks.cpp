#include "nearhex/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nearhex/gf2.hpp"
#include "nearhex/veldkamp.hpp"

namespace nearhex {

namespace {

struct Ctx {
    const CheckOptions& opt;
    Hexagon hx;
    std::vector<Hyperplane> hex_hyps;    // code route, sorted by mask
    std::vector<Hyperplane> doily_hyps;  // code route, sorted by mask
    std::vector<Signature> sigs;         // per hexagon hyperplane
    std::vector<HexClass> classes;       // per hexagon hyperplane
    std::vector<TypeCensusRow> census;
    VeldkampSpace doily_vs;

    explicit Ctx(const CheckOptions& o)
        : opt(o),
          hx(make_hexagon()),
          hex_hyps(enumerate_code(hx.geom)),
          doily_hyps(enumerate_code(hx.base.geom)) {
        sigs.reserve(hex_hyps.size());
        classes.reserve(hex_hyps.size());
        for (const Hyperplane& h : hex_hyps) {
            sigs.push_back(signature(hx, h));
            classes.push_back(classify_signature(sigs.back()));
        }
        census = hexagon_type_census(hx, hex_hyps, opt.threads);
        doily_vs = build_veldkamp(hx.base.geom, doily_hyps, opt.threads);
    }
};

CheckResult pass(const std::string& name, const std::string& detail) {
    return {name, true, false, detail};
}

CheckResult fail(const std::string& name, const std::string& detail) {
    return {name, false, false, detail};
}

std::string cells_to_string(const std::vector<tables::CellMismatch>& cells) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << "; ";
        os << cells[i].cell << ": expected " << cells[i].expected << ", computed "
           << cells[i].computed;
    }
    return os.str();
}

CheckResult c01_hexagon_construction(const Ctx& ctx) {
    const std::string name = "01_hexagon_construction";
    const Hexagon& hx = ctx.hx;
    if (hx.geom.num_points != 45 || hx.geom.num_lines() != 60)
        return fail(name, "expected 45 points and 60 lines, computed " +
                              std::to_string(hx.geom.num_points) + " and " +
                              std::to_string(hx.geom.num_lines()));
    for (int p = 0; p < 45; ++p)
        if (hx.geom.lines_through[static_cast<std::size_t>(p)].size() != 4)
            return fail(name, "point " + std::to_string(p) + " is not on 4 lines");
    const NearPolygonReport near = validate_near_polygon(hx.geom);
    if (!near.ok || near.diameter != 3 || !near.dense || !near.slim)
        return fail(name, "not a dense slim near hexagon: " + near.detail);

    int type_one = 0;
    for (int li = 0; li < 60; ++li)
        if (hx.line_type[static_cast<std::size_t>(li)] == LineType::type_one) {
            ++type_one;
            const std::vector<int> pts = hx.geom.lines[static_cast<std::size_t>(li)].points();
            if (pts[1] != pts[0] + 15 || pts[2] != pts[0] + 30)
                return fail(name, "cross-fiber line is not {p, p+15, p+30}");
        }
    if (type_one != 15)
        return fail(name, "expected 15 cross-fiber lines, computed " + std::to_string(type_one));

    int grid_quads = 0, doily_quads = 0;
    for (const Quad& q : hx.quads) {
        const Induced sub = induced_substructure(hx.geom, q.points);
        if (q.kind == QuadKind::grid) {
            ++grid_quads;
            if (!validate_gq(sub.geom, 2, 1).ok)
                return fail(name, "grid quad does not induce GQ(2,1)");
        } else {
            ++doily_quads;
            if (!validate_gq(sub.geom, 2, 2).ok)
                return fail(name, "fiber quad does not induce GQ(2,2)");
        }
    }
    if (grid_quads != 15 || doily_quads != 3)
        return fail(name, "expected 15 grid and 3 fiber quads");

    std::set<PointSet> constructive;
    for (const Quad& q : hx.quads) constructive.insert(q.points);
    std::set<PointSet> discovered;
    for (const Quad& q : discover_quads(hx.geom)) discovered.insert(q.points);
    if (constructive != discovered)
        return fail(name, "discovered quads differ from the constructive 18");

    return pass(name, "45 points, 60 lines, diameter 3, 15+45 line split, 18 quads rediscovered");
}

CheckResult c02_doily_hyperplane_census(const Ctx& ctx) {
    const std::string name = "02_doily_hyperplane_census";
    const Doily& d = ctx.hx.base;
    const std::vector<Hyperplane> search = enumerate_search(d.geom);
    if (search.size() != ctx.doily_hyps.size())
        return fail(name, "code and search route sizes differ");
    for (std::size_t i = 0; i < search.size(); ++i)
        if (search[i].points != ctx.doily_hyps[i].points)
            return fail(name, "code and search routes disagree at index " + std::to_string(i));
    if (static_cast<int>(ctx.doily_hyps.size()) != ctx.opt.expected.doily_hyperplanes)
        return fail(name, "expected " + std::to_string(ctx.opt.expected.doily_hyperplanes) +
                              " hyperplanes, computed " + std::to_string(ctx.doily_hyps.size()));

    std::array<std::pair<int, int>, 3> kinds{};  // (size, count) for perp/grid/ovoid
    kinds[0].first = 7;
    kinds[1].first = 9;
    kinds[2].first = 5;
    for (const Hyperplane& h : ctx.doily_hyps) {
        std::size_t k = 0;
        switch (classify_doily_hyperplane(d, h.points)) {
            case DoilyHyperplaneKind::perp: k = 0; break;
            case DoilyHyperplaneKind::grid: k = 1; break;
            case DoilyHyperplaneKind::ovoid: k = 2; break;
        }
        if (h.pt != kinds[k].first)
            return fail(name, "kind with unexpected size " + std::to_string(h.pt));
        ++kinds[k].second;
    }
    const std::vector<tables::CellMismatch> cells =
        tables::compare_doily_kinds(kinds, ctx.opt.expected);
    if (!cells.empty()) return fail(name, cells_to_string(cells));
    return pass(name,
                "31 hyperplanes: 15 perps (7 pts), 10 grids (9 pts), 6 ovoids (5 pts); "
                "ovoid census is six, not five (15+10+6 = 31 = 2^5-1)");
}

CheckResult c03_doily_veldkamp_table(const Ctx& ctx) {
    const std::string name = "03_doily_veldkamp_table";
    const Doily& d = ctx.hx.base;
    verify_veldkamp(ctx.doily_vs, ctx.doily_hyps);
    if (static_cast<int>(ctx.doily_vs.lines.size()) != ctx.opt.expected.doily_veldkamp_lines)
        return fail(name,
                    "expected " + std::to_string(ctx.opt.expected.doily_veldkamp_lines) +
                        " lines, computed " + std::to_string(ctx.doily_vs.lines.size()));
    std::array<tables::VeldkampLineCensusRow, 5> rows{};
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].type = static_cast<int>(i) + 1;
    for (const VeldkampLine& l : ctx.doily_vs.lines) {
        const VeldkampLineClass c = classify_veldkamp_line(d, ctx.doily_hyps, l);
        auto& row = rows[static_cast<std::size_t>(c.type - 1)];
        row.composition = c.composition;
        ++row.count;
    }
    const std::vector<tables::CellMismatch> cells =
        tables::compare_veldkamp_lines(rows, ctx.opt.expected);
    if (!cells.empty()) return fail(name, cells_to_string(cells));
    return pass(name, "155 lines classified 45/15/20/60/15 with matching compositions");
}

CheckResult c04_hexagon_two_route(const Ctx& ctx) {
    const std::string name = "04_hexagon_two_route_enumeration";
    const std::vector<Hyperplane> search = enumerate_search(ctx.hx.geom);
    if (search.size() != ctx.hex_hyps.size())
        return fail(name, "code route found " + std::to_string(ctx.hex_hyps.size()) +
                              ", search route " + std::to_string(search.size()));
    for (std::size_t i = 0; i < search.size(); ++i)
        if (search[i].points != ctx.hex_hyps[i].points)
            return fail(name, "routes disagree at index " + std::to_string(i));
    if (static_cast<int>(ctx.hex_hyps.size()) != ctx.opt.expected.hexagon_hyperplanes)
        return fail(name, "expected " + std::to_string(ctx.opt.expected.hexagon_hyperplanes) +
                              " hyperplanes, computed " + std::to_string(ctx.hex_hyps.size()));
    return pass(name, "both routes return the same 1023 hyperplanes");
}

CheckResult c05_hexagon_type_table(const Ctx& ctx) {
    const std::string name = "05_hexagon_type_table";
    std::vector<tables::CellMismatch> cells =
        tables::compare_hex_types(ctx.census, ctx.opt.expected);
    int fam1 = 0, fam2 = 0;
    for (const TypeCensusRow& r : ctx.census) (r.family == 1 ? fam1 : fam2) += r.count;
    if (fam1 != ctx.opt.expected.family1_total)
        cells.push_back({"Family1.Total", std::to_string(ctx.opt.expected.family1_total),
                         std::to_string(fam1)});
    if (fam2 != ctx.opt.expected.family2_total)
        cells.push_back({"Family2.Total", std::to_string(ctx.opt.expected.family2_total),
                         std::to_string(fam2)});
    if (!cells.empty()) return fail(name, cells_to_string(cells));
    return pass(name, "all 8 type rows reproduced cell for cell; families split 93 + 930");
}

CheckResult c06_arithmetic_and_quad_invariants(const Ctx& ctx) {
    const std::string name = "06_arithmetic_and_quad_invariants";
    for (std::size_t i = 0; i < ctx.hex_hyps.size(); ++i) {
        const Hyperplane& h = ctx.hex_hyps[i];
        const Signature& s = ctx.sigs[i];
        if (h.ln != 2 * h.pt - 30)
            return fail(name, "Ln != 2*Pt - 30 at index " + std::to_string(i));
        int weighted = 0, total = 0;
        for (std::size_t k = 0; k < s.orders.size(); ++k) {
            weighted += static_cast<int>(k) * s.orders[k];
            total += s.orders[k];
        }
        if (weighted != 3 * h.ln)
            return fail(name, "sum k*orders[k] != 3*Ln at index " + std::to_string(i));
        if (total != h.pt)
            return fail(name, "order histogram does not sum to Pt at index " + std::to_string(i));
        if (h.pt % 4 != 1)
            return fail(name, "Pt % 4 != 1 at index " + std::to_string(i));
        if (s.grid_profile[1] < 1)
            return fail(name, "no singular grid quad at index " + std::to_string(i));
        if (s.doily_profile[0] == 0 && s.doily_profile[1] < 1)
            return fail(name, "deep-fiber-free hyperplane without singular fiber quad at index " +
                                  std::to_string(i));
    }
    return pass(name,
                "Ln = 2*Pt - 30, sum k*orders = 3*Ln, Pt = 1 mod 4; singular grid quad always; "
                "singular fiber quad whenever no fiber is deep");
}

CheckResult c07_singular_hyperplanes(const Ctx& ctx) {
    const std::string name = "07_singular_hyperplanes";
    std::set<PointSet> singular;
    for (int x = 0; x < 45; ++x) {
        const Hyperplane h = singular_hyperplane(ctx.hx.geom, x);
        if (h.deep_points != perp(ctx.hx.geom, x))
            return fail(name, "deep points differ from the perp of the centre " +
                                  std::to_string(x));
        const HexClass hc = classify_hexagon_hyperplane(ctx.hx, h);
        if (hc.type != 2)
            return fail(name, "singular hyperplane at " + std::to_string(x) + " has type H" +
                                  std::to_string(hc.type) + ", expected H2");
        singular.insert(h.points);
    }
    if (singular.size() != 45)
        return fail(name, "expected 45 distinct singular hyperplanes, computed " +
                              std::to_string(singular.size()));
    std::set<PointSet> type2;
    for (std::size_t i = 0; i < ctx.hex_hyps.size(); ++i)
        if (ctx.classes[i].type == 2) type2.insert(ctx.hex_hyps[i].points);
    if (type2 != singular)
        return fail(name, "type H2 census does not equal the singular hyperplane set");
    return pass(name, "45 distinct singular hyperplanes exhaust type H2; deep set = centre perp");
}

CheckResult c08_code_dimensions_and_spans(const Ctx& ctx) {
    const std::string name = "08_code_dimensions_and_spans";
    auto code_dim = [](const IncidenceStructure& g) {
        gf2::Matrix m;
        m.cols = g.num_points;
        for (const PointSet& l : g.lines) m.rows.push_back(l.mask);
        return gf2::nullspace(m).dim();
    };
    const SubHexagon sub0 = make_sub_hexagon(ctx.hx, 0);
    const int d_doily = code_dim(ctx.hx.base.geom);
    const int d_hex = code_dim(ctx.hx.geom);
    const int d_grid = code_dim(make_grid());
    const int d_sub = code_dim(sub0.geom);
    if (d_doily != 5 || d_hex != 10 || d_grid != 4 || d_sub != 8) {
        std::ostringstream os;
        os << "expected dims doily 5, hexagon 10, grid 4, sub-hexagon 8; computed " << d_doily
           << ", " << d_hex << ", " << d_grid << ", " << d_sub;
        return fail(name, os.str());
    }
    std::vector<Hyperplane> family;
    for (std::size_t i = 0; i < ctx.hex_hyps.size(); ++i)
        if (ctx.classes[i].type == 2 || ctx.classes[i].type == 5 || ctx.classes[i].type == 6)
            family.push_back(ctx.hex_hyps[i]);
    const int span = complement_span_dimension(ctx.hx.geom, family);
    if (span != 8)
        return fail(name, "H2|H5|H6 complement span expected 8, computed " +
                              std::to_string(span));
    return pass(name, "code dims 5/10/4/8; H2|H5|H6 complements span dimension 8");
}

CheckResult c09_sub_hexagon_structure(const Ctx& ctx) {
    const std::string name = "09_sub_hexagon_structure";
    const SubHexagon sub0 = make_sub_hexagon(ctx.hx, 0);
    const std::vector<Hyperplane> code = enumerate_code(sub0.geom);
    const std::vector<Hyperplane> search = enumerate_search(sub0.geom);
    if (code.size() != search.size())
        return fail(name, "sub-hexagon routes disagree in size");
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code[i].points != search[i].points)
            return fail(name, "sub-hexagon routes disagree at index " + std::to_string(i));
    if (static_cast<int>(code.size()) != ctx.opt.expected.sub_hexagon_hyperplanes)
        return fail(name,
                    "expected " + std::to_string(ctx.opt.expected.sub_hexagon_hyperplanes) +
                        " hyperplanes, computed " + std::to_string(code.size()));

    // Frozen signature classes: (pt, ln, orders) -> count.
    using SubSig = std::tuple<int, int, std::array<int, 5>>;
    const std::map<SubSig, int> expected_classes{
        {{9, 0, {9, 0, 0, 0, 0}}, 12},   {{11, 3, {4, 6, 0, 1, 0}}, 54},
        {{13, 6, {1, 6, 6, 0, 0}}, 108}, {{15, 9, {0, 6, 6, 3, 0}}, 54},
        {{19, 15, {0, 0, 12, 7, 0}}, 27},
    };
    std::map<SubSig, int> classes;
    for (const Hyperplane& h : code) ++classes[{h.pt, h.ln, h.orders}];
    if (classes != expected_classes) {
        std::ostringstream os;
        os << "expected 5 signature classes with counts 12/54/108/54/27; computed "
           << classes.size() << " classes:";
        for (const auto& [key, count] : classes)
            os << " (" << std::get<0>(key) << "," << std::get<1>(key) << ")x" << count;
        return fail(name, os.str());
    }

    // Every sub-hexagon hyperplane is the trace of an H2, H5 or H6.
    std::set<PointSet> from_traces;
    for (std::size_t i = 0; i < ctx.hex_hyps.size(); ++i) {
        const int type = ctx.classes[i].type;
        if (type != 2 && type != 5 && type != 6) continue;
        PointSet trace;
        for (std::size_t s = 0; s < sub0.to_hexagon.size(); ++s)
            if (ctx.hex_hyps[i].points.test(sub0.to_hexagon[s])) trace.set(static_cast<int>(s));
        if (is_hyperplane(sub0.geom, trace)) from_traces.insert(trace);
    }
    if (from_traces.size() != code.size())
        return fail(name, "H2|H5|H6 traces cover " + std::to_string(from_traces.size()) +
                              " of the " + std::to_string(code.size()) + " hyperplanes");

    const VeldkampSpace vs = build_veldkamp(sub0.geom, code, ctx.opt.threads);
    verify_veldkamp(vs, code);
    if (static_cast<int>(vs.lines.size()) != ctx.opt.expected.sub_hexagon_veldkamp_lines)
        return fail(name,
                    "expected " + std::to_string(ctx.opt.expected.sub_hexagon_veldkamp_lines) +
                        " Veldkamp lines, computed " + std::to_string(vs.lines.size()));

    // Any two sub-hexagons over grids of the same doily share exactly two
    // grid quads, and those quads meet in a hexagon line.
    std::vector<PointSet> sub_masks;
    for (int gi = 0; gi < 10; ++gi)
        sub_masks.push_back(make_sub_hexagon(ctx.hx, gi).hexagon_points);
    for (std::size_t a = 0; a < sub_masks.size(); ++a)
        for (std::size_t b = a + 1; b < sub_masks.size(); ++b) {
            std::vector<PointSet> shared;
            for (const Quad& q : ctx.hx.quads)
                if (q.kind == QuadKind::grid && sub_masks[a].contains(q.points) &&
                    sub_masks[b].contains(q.points))
                    shared.push_back(q.points);
            if (shared.size() != 2)
                return fail(name, "sub-hexagon pair shares " + std::to_string(shared.size()) +
                                      " grid quads, expected 2");
            if (ctx.hx.geom.line_id(shared[0] & shared[1]) < 0)
                return fail(name, "shared grid quads do not meet in a hexagon line");
        }

    return pass(name,
                "27 points, 27 lines; 255 hyperplanes in the 5 frozen classes, all arising as "
                "H2|H5|H6 traces; 10795 Veldkamp lines; every sub-hexagon pair shares 2 grid "
                "quads meeting in a line");
}

CheckResult c10_h1_complements(const Ctx& ctx) {
    const std::string name = "10_h1_complements";
    int checked = 0;
    for (std::size_t i = 0; i < ctx.hex_hyps.size(); ++i) {
        if (ctx.classes[i].type != 1) continue;
        ++checked;
        const H1ComplementReport r = h1_complement_check(ctx.hx, ctx.hex_hyps[i]);
        if (!r.ok)
            return fail(name, "index " + std::to_string(i) + ": " + r.detail);
    }
    if (checked != 30)
        return fail(name, "expected 30 type H1 hyperplanes, computed " + std::to_string(checked));
    return pass(name,
                "all 30 complements split 6+6 over the non-deep fibers, each half a K3,3 dual "
                "grid, joined by the base-point matching");
}

CheckResult c11_trace_pairing(const Ctx& ctx) {
    const std::string name = "11_trace_pairing";
    const Doily& d = ctx.hx.base;
    const PointSet full15 = full_set(15);
    std::map<std::uint64_t, int> doily_id;
    for (std::size_t i = 0; i < ctx.doily_hyps.size(); ++i)
        doily_id[ctx.doily_hyps[i].points.mask] = static_cast<int>(i);
    std::set<std::array<int, 3>> doily_lines_set;
    for (const VeldkampLine& l : ctx.doily_vs.lines) doily_lines_set.insert(l.ids);

    std::map<std::array<int, 3>, int> per_line;
    for (std::size_t i = 0; i < ctx.hex_hyps.size(); ++i) {
        const std::array<PointSet, 3> traces = doily_traces(ctx.hx, ctx.hex_hyps[i]);
        const int type = ctx.classes[i].type;
        if (ctx.classes[i].family == 1) {
            int full_count = 0;
            std::vector<PointSet> proper;
            for (const PointSet& t : traces)
                if (t == full15)
                    ++full_count;
                else
                    proper.push_back(t);
            if (full_count != 1 || proper.size() != 2 || proper[0] != proper[1])
                return fail(name, "family-1 traces are not one full fiber plus two equal "
                                  "hyperplanes at index " + std::to_string(i));
            const DoilyHyperplaneKind kind = classify_doily_hyperplane(d, proper[0]);
            const bool match = (type == 1 && kind == DoilyHyperplaneKind::grid) ||
                               (type == 2 && kind == DoilyHyperplaneKind::perp) ||
                               (type == 3 && kind == DoilyHyperplaneKind::ovoid);
            if (!match)
                return fail(name, "family-1 trace kind does not match type H" +
                                      std::to_string(type));
            continue;
        }

        std::array<int, 3> ids{};
        for (std::size_t k = 0; k < 3; ++k) {
            const auto it = doily_id.find(traces[k].mask);
            if (it == doily_id.end())
                return fail(name, "family-2 trace is not a doily hyperplane at index " +
                                      std::to_string(i));
            ids[k] = it->second;
        }
        std::sort(ids.begin(), ids.end());
        if (ids[0] == ids[1] || ids[1] == ids[2])
            return fail(name, "family-2 traces are not three distinct hyperplanes at index " +
                                  std::to_string(i));
        if (doily_lines_set.find(ids) == doily_lines_set.end())
            return fail(name, "family-2 traces do not form a Veldkamp line at index " +
                                  std::to_string(i));
        VeldkampLine line;
        line.ids = ids;
        line.core = traces[0] & traces[1] & traces[2];
        const VeldkampLineClass c = classify_veldkamp_line(d, ctx.doily_hyps, line);
        if (c.type != type - 3)
            return fail(name, "type H" + std::to_string(type) +
                                  " paired with Veldkamp line type " + std::to_string(c.type) +
                                  ", expected " + std::to_string(type - 3));
        ++per_line[ids];

        if (type == 5) {
            // The three perp traces must have collinear centres.
            PointSet centres;
            for (const PointSet& t : traces)
                for (int x = 0; x < 15; ++x)
                    if (perp(d.geom, x) == t) centres.set(x);
            if (centres.count() != 3 || d.geom.line_id(centres) < 0)
                return fail(name, "H5 perp-trace centres are not a doily line at index " +
                                      std::to_string(i));
        }
    }
    if (per_line.size() != ctx.doily_vs.lines.size())
        return fail(name, "family-2 traces hit " + std::to_string(per_line.size()) +
                              " of the 155 Veldkamp lines");
    for (const auto& [ids, count] : per_line)
        if (count != 6)
            return fail(name, "a Veldkamp line is hit " + std::to_string(count) +
                              " times, expected 6");
    return pass(name,
                "pairing H4-I, H5-II, H6-III, H7-IV, H8-V holds; 6 hyperplanes per line "
                "(930 = 6*155); family-1 traces are one full fiber plus two equal traces of "
                "the matched kind; H5 perp centres are collinear");
}

CheckResult c12_hexagon_veldkamp(const Ctx& ctx) {
    const std::string name = "12_hexagon_veldkamp_count";
    if (ctx.opt.quick) return {name, true, true, "skipped (--quick)"};
    const VeldkampSpace vs = build_veldkamp(ctx.hx.geom, ctx.hex_hyps, ctx.opt.threads);
    verify_veldkamp(vs, ctx.hex_hyps);
    if (static_cast<int>(vs.lines.size()) != ctx.opt.expected.hexagon_veldkamp_lines)
        return fail(name,
                    "expected " + std::to_string(ctx.opt.expected.hexagon_veldkamp_lines) +
                        " lines, computed " + std::to_string(vs.lines.size()));
    return pass(name, "174251 Veldkamp lines, matching the projective identity for dim 10");
}

CheckResult c13_automorphism_counts(const Ctx& ctx) {
    const std::string name = "13_automorphism_counts";
    if (ctx.opt.quick) return {name, true, true, "skipped (--quick)"};
    const std::int64_t a_line3 = automorphism_count(make_line3());
    const std::int64_t a_grid = automorphism_count(make_grid());
    const std::int64_t a_doily = automorphism_count(ctx.hx.base.geom);
    const std::int64_t a_hex = automorphism_count(ctx.hx.geom);
    if (a_line3 != 6 || a_grid != 72 || a_doily != 720 || a_hex != 4320) {
        std::ostringstream os;
        os << "expected 6/72/720/4320; computed " << a_line3 << "/" << a_grid << "/" << a_doily
           << "/" << a_hex;
        return fail(name, os.str());
    }
    return pass(name, "automorphism counts 6, 72, 720, 4320");
}

CheckResult c14_negative_control(const Ctx& ctx) {
    const std::string name = "14_negative_control";
    tables::ExpectedTables corrupted = tables::builtin_tables();
    corrupted.hex_types[3].count += 1;  // H4.Cd off by one
    const std::vector<tables::CellMismatch> cells =
        tables::compare_hex_types(ctx.census, corrupted);
    if (cells.size() != 1 || cells[0].cell != "H4.Cd")
        return fail(name, "corrupting H4.Cd produced " + std::to_string(cells.size()) +
                              " mismatches" +
                              (cells.empty() ? "" : ", first at " + cells[0].cell));
    return pass(name, "one corrupted cell is reported as exactly H4.Cd");
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& opt) {
    std::vector<CheckResult> out;
    Ctx ctx(opt);
    const std::vector<std::pair<std::string, std::function<CheckResult(const Ctx&)>>> checks = {
        {"01_hexagon_construction", c01_hexagon_construction},
        {"02_doily_hyperplane_census", c02_doily_hyperplane_census},
        {"03_doily_veldkamp_table", c03_doily_veldkamp_table},
        {"04_hexagon_two_route_enumeration", c04_hexagon_two_route},
        {"05_hexagon_type_table", c05_hexagon_type_table},
        {"06_arithmetic_and_quad_invariants", c06_arithmetic_and_quad_invariants},
        {"07_singular_hyperplanes", c07_singular_hyperplanes},
        {"08_code_dimensions_and_spans", c08_code_dimensions_and_spans},
        {"09_sub_hexagon_structure", c09_sub_hexagon_structure},
        {"10_h1_complements", c10_h1_complements},
        {"11_trace_pairing", c11_trace_pairing},
        {"12_hexagon_veldkamp_count", c12_hexagon_veldkamp},
        {"13_automorphism_counts", c13_automorphism_counts},
        {"14_negative_control", c14_negative_control},
    };
    for (const auto& [name, check] : checks) {
        try {
            out.push_back(check(ctx));
        } catch (const std::exception& e) {
            out.push_back({name, false, false, std::string("hard error: ") + e.what()});
        }
    }
    return out;
}

bool checks_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.skipped && !r.pass) return false;
    return true;
}

}  // namespace nearhex
