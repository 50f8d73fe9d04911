#include "nearhex/hyperplanes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nearhex/gf2.hpp"
#include "nearhex/tables.hpp"

namespace nearhex {

namespace {

void require_slim(const IncidenceStructure& g, const char* what) {
    for (const PointSet& l : g.lines)
        if (l.count() != 3)
            throw std::invalid_argument(std::string(what) + ": structure is not slim");
}

void parallel_chunks(int n, int threads, const std::function<void(int, int)>& work) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1 || n == 0) {
        work(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const int step = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * step, hi = std::min(n, lo + step);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace

bool is_hyperplane(const IncidenceStructure& g, PointSet pts) {
    const PointSet full = full_set(g.num_points);
    if (!full.contains(pts)) throw std::invalid_argument("is_hyperplane: points out of range");
    if (pts.empty() || pts == full) return false;
    for (const PointSet& l : g.lines) {
        const int met = (l & pts).count();
        if (met != 1 && met != l.count()) return false;
    }
    return true;
}

Hyperplane make_hyperplane(const IncidenceStructure& g, PointSet pts) {
    if (!is_hyperplane(g, pts))
        throw std::invalid_argument("make_hyperplane: set is not a geometric hyperplane");
    Hyperplane h;
    h.points = pts;
    h.pt = pts.count();
    for (const PointSet& l : g.lines)
        if (pts.contains(l)) ++h.ln;
    for (int p : pts.points()) {
        int order = 0;
        for (int li : g.lines_through[p])
            if (pts.contains(g.lines[li])) ++order;
        if (order >= static_cast<int>(h.orders.size()))
            throw std::logic_error("make_hyperplane: point order exceeds cache width");
        ++h.orders[static_cast<std::size_t>(order)];
        if (order == static_cast<int>(g.lines_through[p].size())) h.deep_points.set(p);
    }
    return h;
}

std::vector<Hyperplane> enumerate_code(const IncidenceStructure& g) {
    require_slim(g, "enumerate_code");
    if (!g.connected) throw std::invalid_argument("enumerate_code: structure disconnected");

    gf2::Matrix m;
    m.cols = g.num_points;
    for (const PointSet& l : g.lines) m.rows.push_back(l.mask);
    const gf2::Subspace code = gf2::nullspace(m);

    const PointSet full = full_set(g.num_points);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t c : gf2::enumerate_nonzero(code)) masks.push_back(full.mask ^ c);
    std::sort(masks.begin(), masks.end());

    std::vector<Hyperplane> out;
    out.reserve(masks.size());
    for (std::uint64_t mask : masks) {
        if (!is_hyperplane(g, PointSet{mask}))
            throw std::logic_error("enumerate_code: code vector without the hyperplane property");
        out.push_back(make_hyperplane(g, PointSet{mask}));
    }
    return out;
}

namespace {

// Backtracking over point statuses with per-line propagation. Lines must end
// with 1 or 3 member points; the rules below are the full case split for a
// 3-point line with in/out/undecided counts.
struct HyperplaneSearch {
    const IncidenceStructure& g;
    std::vector<std::array<int, 3>> line_pts;
    std::array<std::int8_t, 64> status{};  // 0 undecided, 1 in, 2 out
    std::vector<std::int8_t> line_in, line_out;
    std::vector<int> trail;
    std::vector<std::uint64_t> found;
    long nodes = 0;

    explicit HyperplaneSearch(const IncidenceStructure& gg) : g(gg) {
        for (const PointSet& l : g.lines) {
            const std::vector<int> pts = l.points();
            line_pts.push_back({pts[0], pts[1], pts[2]});
        }
        line_in.assign(g.lines.size(), 0);
        line_out.assign(g.lines.size(), 0);
    }

    bool place(int p, std::int8_t val) {
        if (status[static_cast<std::size_t>(p)] != 0)
            return status[static_cast<std::size_t>(p)] == val;
        status[static_cast<std::size_t>(p)] = val;
        trail.push_back(p);
        // Count the point on all its lines before any early return: undo()
        // decrements every line through a trail point, so a partial pass
        // must never escape this function.
        for (int li : g.lines_through[p])
            ++(val == 1 ? line_in[static_cast<std::size_t>(li)]
                        : line_out[static_cast<std::size_t>(li)]);
        for (int li : g.lines_through[p]) {
            const int in = line_in[static_cast<std::size_t>(li)];
            const int out = line_out[static_cast<std::size_t>(li)];
            const int undecided = 3 - in - out;
            if (undecided == 0) {
                if (in != 1 && in != 3) return false;
                continue;
            }
            std::int8_t force = 0;
            if (in == 2)
                force = 1;  // (2,0,1): only 3 full members remain possible
            else if (in == 1 && out == 1)
                force = 2;  // (1,1,1): a second member would strand the line at 2
            else if (out == 2)
                force = 1;  // (0,2,1): the line still needs its one member
            if (force != 0) {
                int q = -1;
                for (int cand : line_pts[static_cast<std::size_t>(li)])
                    if (status[static_cast<std::size_t>(cand)] == 0) q = cand;
                assert(q >= 0);  // counters match statuses between placements
                if (!place(q, force)) return false;
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            const int p = trail.back();
            trail.pop_back();
            const std::int8_t val = status[static_cast<std::size_t>(p)];
            status[static_cast<std::size_t>(p)] = 0;
            for (int li : g.lines_through[p])
                --(val == 1 ? line_in[static_cast<std::size_t>(li)]
                            : line_out[static_cast<std::size_t>(li)]);
        }
    }

    int pick_line() const {
        int best = -1, best_decided = -1;
        for (int li = 0; li < g.num_lines(); ++li) {
            const int decided =
                line_in[static_cast<std::size_t>(li)] + line_out[static_cast<std::size_t>(li)];
            if (decided < 3 && decided > best_decided) {
                best_decided = decided;
                best = li;
            }
        }
        return best;
    }

    void dfs() {
        if (++nodes > 50'000'000)
            throw std::length_error("enumerate_search: search-space guard exceeded");
        const int li = pick_line();
        if (li < 0) {
            std::uint64_t mask = 0;
            for (int p = 0; p < g.num_points; ++p)
                if (status[static_cast<std::size_t>(p)] == 1) mask |= std::uint64_t{1} << p;
            found.push_back(mask);
            return;
        }
        int p = -1;
        for (int cand : line_pts[static_cast<std::size_t>(li)])
            if (status[static_cast<std::size_t>(cand)] == 0 && p < 0) p = cand;
        assert(p >= 0);
        for (std::int8_t val : {std::int8_t{1}, std::int8_t{2}}) {
            const std::size_t mark = trail.size();
            if (place(p, val)) dfs();
            undo(mark);
        }
    }
};

}  // namespace

std::vector<Hyperplane> enumerate_search(const IncidenceStructure& g) {
    require_slim(g, "enumerate_search");
    if (g.num_points > 45)
        throw std::invalid_argument("enumerate_search: more than 45 points");

    HyperplaneSearch search(g);
    search.dfs();
    std::vector<std::uint64_t> masks = std::move(search.found);
    std::sort(masks.begin(), masks.end());

    const PointSet full = full_set(g.num_points);
    std::vector<Hyperplane> out;
    for (std::uint64_t mask : masks) {
        if (mask == full.mask) continue;  // the all-member assignment is not proper
        out.push_back(make_hyperplane(g, PointSet{mask}));
    }
    return out;
}

Hyperplane singular_hyperplane(const IncidenceStructure& g, int x) {
    if (x < 0 || x >= g.num_points)
        throw std::invalid_argument("singular_hyperplane: point out of range");
    PointSet pts;
    for (int y = 0; y < g.num_points; ++y)
        if (g.dist[x][y] >= 0 && g.dist[x][y] <= 2) pts.set(y);
    return make_hyperplane(g, pts);
}

QuadRelation quad_relation(const Hexagon& hx, const Hyperplane& h, int quad_index) {
    if (quad_index < 0 || quad_index >= static_cast<int>(hx.quads.size()))
        throw std::invalid_argument("quad_relation: quad index out of range");
    const Quad& q = hx.quads[static_cast<std::size_t>(quad_index)];
    const PointSet x = h.points & q.points;

    const bool deep = x == q.points;

    bool singular = false;
    int witness = -1;
    for (int p : q.points.points())
        if ((perp(hx.geom, p) & q.points) == x) {
            singular = true;
            witness = p;
            break;
        }

    bool ovoidal = true;
    for (int li : hx.quad_lines[static_cast<std::size_t>(quad_index)])
        if ((hx.geom.lines[li] & x).count() != 1) {
            ovoidal = false;
            break;
        }

    // Proper sub-quadrangle only: a deep quad is not its own sub-GQ(2,1).
    const bool subquadrangular =
        x != q.points && x.count() == 9 &&
        validate_gq(induced_substructure(hx.geom, x).geom, 2, 1).ok;

    const int matches = static_cast<int>(deep) + static_cast<int>(singular) +
                        static_cast<int>(ovoidal) + static_cast<int>(subquadrangular);
    if (matches != 1) {
        std::ostringstream os;
        os << "quad_relation: quad " << quad_index << " matches " << matches
           << " relations for hyperplane mask " << std::hex << h.points.mask;
        throw std::logic_error(os.str());
    }
    if (deep) return {QuadRelationKind::deep, -1};
    if (singular) return {QuadRelationKind::singular, witness};
    if (subquadrangular) return {QuadRelationKind::subquadrangular, -1};
    return {QuadRelationKind::ovoidal, -1};
}

Signature signature(const Hexagon& hx, const Hyperplane& h) {
    Signature sig;
    sig.pt = h.pt;
    sig.ln = h.ln;
    sig.orders = h.orders;
    for (int qi = 0; qi < static_cast<int>(hx.quads.size()); ++qi) {
        const QuadRelation rel = quad_relation(hx, h, qi);
        if (hx.quads[static_cast<std::size_t>(qi)].kind == QuadKind::grid) {
            switch (rel.kind) {
                case QuadRelationKind::deep: ++sig.grid_profile[0]; break;
                case QuadRelationKind::singular: ++sig.grid_profile[1]; break;
                case QuadRelationKind::ovoidal: ++sig.grid_profile[2]; break;
                case QuadRelationKind::subquadrangular:
                    throw std::logic_error("signature: subquadrangular grid quad");
            }
        } else {
            switch (rel.kind) {
                case QuadRelationKind::deep: ++sig.doily_profile[0]; break;
                case QuadRelationKind::singular: ++sig.doily_profile[1]; break;
                case QuadRelationKind::ovoidal: ++sig.doily_profile[2]; break;
                case QuadRelationKind::subquadrangular: ++sig.doily_profile[3]; break;
            }
        }
    }
    return sig;
}

namespace {

std::string format_signature(const Signature& s) {
    std::ostringstream os;
    os << "pt=" << s.pt << " ln=" << s.ln << " orders=[";
    for (std::size_t i = 0; i < s.orders.size(); ++i) os << (i ? "," : "") << s.orders[i];
    os << "] grid=[";
    for (std::size_t i = 0; i < s.grid_profile.size(); ++i)
        os << (i ? "," : "") << s.grid_profile[i];
    os << "] doily=[";
    for (std::size_t i = 0; i < s.doily_profile.size(); ++i)
        os << (i ? "," : "") << s.doily_profile[i];
    os << "]";
    return os.str();
}

}  // namespace

HexClass classify_signature(const Signature& sig) {
    const auto& rows = tables::builtin_tables().hex_types;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].sig == sig) {
            const int derived_family = sig.doily_profile[0] > 0 ? 1 : 2;
            if (derived_family != rows[i].family)
                throw std::logic_error("classify_signature: family mismatch in reference row");
            return {static_cast<int>(i) + 1, rows[i].family};
        }
    throw std::logic_error("classify_signature: unknown signature: " + format_signature(sig));
}

HexClass classify_hexagon_hyperplane(const Hexagon& hx, const Hyperplane& h) {
    return classify_signature(signature(hx, h));
}

std::vector<TypeCensusRow> hexagon_type_census(const Hexagon& hx,
                                               const std::vector<Hyperplane>& hs, int threads) {
    std::vector<Signature> sigs(hs.size());
    parallel_chunks(static_cast<int>(hs.size()), threads, [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            sigs[static_cast<std::size_t>(i)] = signature(hx, hs[static_cast<std::size_t>(i)]);
    });

    std::map<Signature, int> groups;
    for (const Signature& s : sigs) ++groups[s];

    const auto& rows = tables::builtin_tables().hex_types;
    std::vector<TypeCensusRow> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        out[i] = {static_cast<int>(i) + 1, rows[i].family, rows[i].sig, 0};
    for (const auto& [sig, count] : groups) {
        const HexClass hc = classify_signature(sig);
        out[static_cast<std::size_t>(hc.type - 1)].count += count;
    }
    return out;
}

DoilyHyperplaneKind classify_doily_hyperplane(const Doily& d, PointSet pts) {
    if (!is_hyperplane(d.geom, pts))
        throw std::invalid_argument("classify_doily_hyperplane: not a hyperplane");

    bool is_perp = false;
    for (int x = 0; x < d.geom.num_points && !is_perp; ++x)
        if (perp(d.geom, x) == pts) is_perp = true;

    const bool is_grid =
        pts.count() == 9 && validate_gq(induced_substructure(d.geom, pts).geom, 2, 1).ok;

    bool is_ovoid = true;
    for (const PointSet& l : d.geom.lines)
        if ((l & pts).count() != 1) {
            is_ovoid = false;
            break;
        }

    const int kinds = static_cast<int>(is_perp) + static_cast<int>(is_grid) +
                      static_cast<int>(is_ovoid);
    if (kinds != 1)
        throw std::logic_error("classify_doily_hyperplane: " + std::to_string(kinds) +
                               " kinds matched");
    if (is_perp) return DoilyHyperplaneKind::perp;
    if (is_grid) return DoilyHyperplaneKind::grid;
    return DoilyHyperplaneKind::ovoid;
}

std::array<PointSet, 3> doily_traces(const Hexagon& hx, const Hyperplane& h) {
    const PointSet full15 = full_set(15);
    std::array<PointSet, 3> traces;
    for (int k = 0; k < 3; ++k) {
        traces[static_cast<std::size_t>(k)] = PointSet{(h.points.mask >> (15 * k)) & 0x7fffu};
        const PointSet t = traces[static_cast<std::size_t>(k)];
        if (t != full15 && !is_hyperplane(hx.base.geom, t))
            throw std::logic_error("doily_traces: fiber trace is neither full nor a hyperplane");
    }
    return traces;
}

H1ComplementReport h1_complement_check(const Hexagon& hx, const Hyperplane& h) {
    H1ComplementReport r;
    const PointSet comp = full_set(hx.geom.num_points) ^ h.points;
    if (comp.count() != 12) {
        r.detail = "complement has " + std::to_string(comp.count()) + " points, want 12";
        return r;
    }

    std::array<PointSet, 3> halves;
    std::vector<int> deep_fibers, side_fibers;
    for (int k = 0; k < 3; ++k) {
        halves[static_cast<std::size_t>(k)] =
            comp & PointSet{std::uint64_t{0x7fff} << (15 * k)};
        const int c = halves[static_cast<std::size_t>(k)].count();
        if (c == 0)
            deep_fibers.push_back(k);
        else if (c == 6)
            side_fibers.push_back(k);
    }
    if (deep_fibers.size() != 1 || side_fibers.size() != 2) {
        r.detail = "complement does not split 0+6+6 over the fibers";
        return r;
    }
    if (quad_relation(hx, h, 15 + deep_fibers[0]).kind != QuadRelationKind::deep) {
        r.detail = "empty-complement fiber is not the deep quad";
        return r;
    }

    auto is_k33 = [&](PointSet half) {
        const int v = half.lowest();
        const PointSet other = hx.geom.adj[v] & half;
        const PointSet own = half ^ other;
        if (own.count() != 3 || other.count() != 3) return false;
        for (int p : own.points())
            if ((hx.geom.adj[p] & half) != other) return false;
        for (int p : other.points())
            if ((hx.geom.adj[p] & half) != own) return false;
        return true;
    };
    for (int k : side_fibers) {
        if (quad_relation(hx, h, 15 + k).kind != QuadRelationKind::subquadrangular) {
            r.detail = "side fiber is not subquadrangular";
            return r;
        }
        if (!is_k33(halves[static_cast<std::size_t>(k)])) {
            r.detail = "fiber half does not induce K3,3";
            return r;
        }
    }

    const PointSet a = halves[static_cast<std::size_t>(side_fibers[0])];
    const PointSet b = halves[static_cast<std::size_t>(side_fibers[1])];
    for (int p : a.points()) {
        const PointSet partners = hx.geom.adj[p] & b;
        if (partners.count() != 1 || partners.lowest() % 15 != p % 15) {
            r.detail = "cross-fiber adjacency is not the base-point matching";
            return r;
        }
    }
    for (int p : b.points())
        if ((hx.geom.adj[p] & a).count() != 1) {
            r.detail = "cross-fiber adjacency is not the base-point matching";
            return r;
        }

    r.ok = true;
    r.detail = "two K3,3 dual-grid halves joined by the 6-line base-point matching";
    return r;
}

int complement_span_dimension(const IncidenceStructure& g, const std::vector<Hyperplane>& hs) {
    const PointSet full = full_set(g.num_points);
    std::vector<std::uint64_t> vectors;
    vectors.reserve(hs.size());
    for (const Hyperplane& h : hs) vectors.push_back(full.mask ^ h.points.mask);
    return gf2::span_dimension(vectors, g.num_points);
}

}  // namespace nearhex
