#include "nearhex/veldkamp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "nearhex/tables.hpp"

namespace nearhex {

Hyperplane third_hyperplane(const IncidenceStructure& g, const Hyperplane& a,
                            const Hyperplane& b) {
    if (a.points == b.points)
        throw std::invalid_argument("third_hyperplane: hyperplanes must be distinct");
    const PointSet full = full_set(g.num_points);
    return make_hyperplane(g, full ^ (a.points ^ b.points));
}

VeldkampSpace build_veldkamp(const IncidenceStructure& g, const std::vector<Hyperplane>& hs,
                             int threads) {
    const int n = static_cast<int>(hs.size());
    const int dim = std::bit_width(static_cast<unsigned>(n) + 1u) - 1;
    if (n == 0 || (1 << dim) - 1 != n)
        throw std::invalid_argument("build_veldkamp: list size must be 2^dim - 1");
    if (dim > 24) throw std::length_error("build_veldkamp: dimension exceeds capacity 24");
    for (int i = 1; i < n; ++i)
        if (!(hs[static_cast<std::size_t>(i - 1)].points < hs[static_cast<std::size_t>(i)].points))
            throw std::invalid_argument("build_veldkamp: list must be sorted by mask");

    std::unordered_map<std::uint64_t, int> id;
    id.reserve(static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n; ++i) id.emplace(hs[static_cast<std::size_t>(i)].points.mask, i);

    const std::uint64_t full = full_set(g.num_points).mask;
    threads = std::max(1, std::min(threads, n));
    std::vector<std::vector<std::uint64_t>> packed(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    std::vector<std::string> errors(static_cast<std::size_t>(threads));
    auto work = [&](int t) {
        auto& out = packed[static_cast<std::size_t>(t)];
        for (int i = t; i < n; i += threads) {
            const std::uint64_t mi = hs[static_cast<std::size_t>(i)].points.mask;
            for (int j = 0; j < i; ++j) {
                const std::uint64_t mj = hs[static_cast<std::size_t>(j)].points.mask;
                const auto it = id.find(full ^ (mi ^ mj));
                if (it == id.end()) {
                    errors[static_cast<std::size_t>(t)] =
                        "build_veldkamp: pair does not close inside the list";
                    return;
                }
                std::array<int, 3> ids{j, i, it->second};
                std::sort(ids.begin(), ids.end());
                out.push_back((static_cast<std::uint64_t>(ids[0]) << 40) |
                              (static_cast<std::uint64_t>(ids[1]) << 20) |
                              static_cast<std::uint64_t>(ids[2]));
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (std::thread& th : pool) th.join();
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw std::logic_error(e);

    std::vector<std::uint64_t> all;
    std::size_t total = 0;
    for (const auto& v : packed) total += v.size();
    all.reserve(total);
    for (const auto& v : packed) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    VeldkampSpace vs;
    vs.geometry_points = g.num_points;
    vs.dim = dim;
    vs.lines.reserve(all.size());
    for (std::uint64_t p : all) {
        VeldkampLine line;
        line.ids = {static_cast<int>(p >> 40), static_cast<int>((p >> 20) & 0xfffff),
                    static_cast<int>(p & 0xfffff)};
        line.core = hs[static_cast<std::size_t>(line.ids[0])].points &
                    hs[static_cast<std::size_t>(line.ids[1])].points &
                    hs[static_cast<std::size_t>(line.ids[2])].points;
        vs.lines.push_back(line);
    }

    const long expected_lines =
        static_cast<long>((1 << dim) - 1) * ((1 << (dim - 1)) - 1) / 3;
    if (static_cast<long>(vs.lines.size()) != expected_lines)
        throw std::logic_error("build_veldkamp: line count misses the projective identity");
    return vs;
}

void verify_veldkamp(const VeldkampSpace& vs, const std::vector<Hyperplane>& hs) {
    const long n = static_cast<long>(hs.size());
    if (n != (1L << vs.dim) - 1)
        throw std::logic_error("verify_veldkamp: point count is not 2^dim - 1");
    const long expected_lines = n * ((1L << (vs.dim - 1)) - 1) / 3;
    if (static_cast<long>(vs.lines.size()) != expected_lines)
        throw std::logic_error("verify_veldkamp: line count misses the projective identity");
    for (const VeldkampLine& l : vs.lines) {
        const PointSet a = hs[static_cast<std::size_t>(l.ids[0])].points;
        const PointSet b = hs[static_cast<std::size_t>(l.ids[1])].points;
        const PointSet c = hs[static_cast<std::size_t>(l.ids[2])].points;
        if ((a & b) != l.core || (a & c) != l.core || (b & c) != l.core)
            throw std::logic_error("verify_veldkamp: pairwise intersections differ");
    }
}

VeldkampLineClass classify_veldkamp_line(const Doily& d, const std::vector<Hyperplane>& hs,
                                         const VeldkampLine& line) {
    VeldkampLineClass out;
    for (int idx : line.ids) {
        if (idx < 0 || idx >= static_cast<int>(hs.size()))
            throw std::invalid_argument("classify_veldkamp_line: id out of range");
        switch (classify_doily_hyperplane(d, hs[static_cast<std::size_t>(idx)].points)) {
            case DoilyHyperplaneKind::perp: ++out.composition[0]; break;
            case DoilyHyperplaneKind::ovoid: ++out.composition[1]; break;
            case DoilyHyperplaneKind::grid: ++out.composition[2]; break;
        }
    }

    const std::vector<int> core_pts = line.core.points();
    auto collinear = [&](int x, int y) {
        for (int li : d.geom.lines_through[x])
            if (d.geom.lines[li].test(y)) return true;
        return false;
    };
    switch (core_pts.size()) {
        case 5:
            out.type = 1;
            break;
        case 3: {
            if (d.geom.line_id(line.core) >= 0) {
                out.type = 2;
            } else {
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = i + 1; j < 3; ++j)
                        if (collinear(core_pts[i], core_pts[j]))
                            throw std::logic_error(
                                "classify_veldkamp_line: 3-point core is neither line nor triad");
                int centers = 0;
                for (int z = 0; z < d.geom.num_points; ++z)
                    if (collinear(z, core_pts[0]) && collinear(z, core_pts[1]) &&
                        collinear(z, core_pts[2]))
                        ++centers;
                if (centers == 3)
                    out.type = 3;
                else if (centers == 1)
                    out.type = 4;
                else
                    throw std::logic_error("classify_veldkamp_line: triad with " +
                                           std::to_string(centers) + " centers");
            }
            break;
        }
        case 1:
            out.type = 5;
            break;
        default:
            throw std::logic_error("classify_veldkamp_line: core of size " +
                                   std::to_string(core_pts.size()));
    }

    const tables::VeldkampLineRow& row =
        tables::builtin_tables().veldkamp_lines[static_cast<std::size_t>(out.type - 1)];
    if (out.composition[0] != row.perps || out.composition[1] != row.ovoids ||
        out.composition[2] != row.grids)
        throw std::logic_error("classify_veldkamp_line: composition clashes with core type");
    return out;
}

}  // namespace nearhex
