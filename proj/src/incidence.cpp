#include "nearhex/incidence.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace nearhex {

PointSet full_set(int num_points) {
    if (num_points < 0 || num_points > 64)
        throw std::invalid_argument("full_set: num_points must be in 0..64");
    if (num_points == 64) return PointSet{~std::uint64_t{0}};
    return PointSet{(std::uint64_t{1} << num_points) - 1};
}

int IncidenceStructure::line_id(PointSet line) const {
    const auto it = std::lower_bound(lines.begin(), lines.end(), line);
    if (it == lines.end() || *it != line) return -1;
    return static_cast<int>(it - lines.begin());
}

IncidenceStructure make_incidence(int num_points, std::vector<PointSet> lines,
                                  std::vector<std::string> labels) {
    if (num_points < 1 || num_points > 64)
        throw std::invalid_argument("make_incidence: num_points must be in 1..64");
    const PointSet full = full_set(num_points);
    for (const PointSet& l : lines) {
        if (!full.contains(l))
            throw std::invalid_argument("make_incidence: line has points outside range");
        if (l.count() < 2)
            throw std::invalid_argument("make_incidence: line with fewer than 2 points");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != num_points)
        throw std::invalid_argument("make_incidence: labels must be empty or one per point");

    std::sort(lines.begin(), lines.end());

    IncidenceStructure g;
    g.num_points = num_points;
    g.lines = std::move(lines);
    g.labels = std::move(labels);
    g.lines_through.resize(num_points);
    g.adj.assign(num_points, PointSet{});
    for (int li = 0; li < g.num_lines(); ++li) {
        const PointSet l = g.lines[li];
        for (int p : l.points()) {
            g.lines_through[p].push_back(li);
            g.adj[p] = g.adj[p] | l;
            g.adj[p].reset(p);
        }
    }

    g.dist.assign(num_points, std::vector<int>(num_points, -1));
    g.connected = true;
    g.diameter = 0;
    for (int s = 0; s < num_points; ++s) {
        auto& d = g.dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.adj[u].points())
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < num_points; ++v) {
            if (d[v] < 0)
                g.connected = false;
            else
                g.diameter = std::max(g.diameter, d[v]);
        }
    }
    return g;
}

ValidationReport validate_partial_linear_space(const IncidenceStructure& g) {
    for (int i = 0; i < g.num_lines(); ++i)
        for (int j = i + 1; j < g.num_lines(); ++j) {
            const PointSet common = g.lines[i] & g.lines[j];
            if (common.count() >= 2) {
                std::ostringstream os;
                os << "lines " << i << " and " << j << " share " << common.count()
                   << " points";
                return {false, os.str()};
            }
        }
    return {};
}

ValidationReport validate_gq(const IncidenceStructure& g, int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("validate_gq: order must be positive");
    const ValidationReport pls = validate_partial_linear_space(g);
    if (!pls.ok) return {false, "not a partial linear space: " + pls.detail};
    if (g.num_points != (s + 1) * (s * t + 1))
        return {false, "point count " + std::to_string(g.num_points) + " != (s+1)(st+1)"};
    if (g.num_lines() != (t + 1) * (s * t + 1))
        return {false, "line count " + std::to_string(g.num_lines()) + " != (t+1)(st+1)"};
    for (const PointSet& l : g.lines)
        if (l.count() != s + 1)
            return {false, "line with " + std::to_string(l.count()) + " points, want s+1"};
    for (int p = 0; p < g.num_points; ++p)
        if (static_cast<int>(g.lines_through[p].size()) != t + 1)
            return {false, "point " + std::to_string(p) + " on " +
                               std::to_string(g.lines_through[p].size()) + " lines, want t+1"};
    for (int x = 0; x < g.num_points; ++x)
        for (int li = 0; li < g.num_lines(); ++li) {
            const PointSet l = g.lines[li];
            if (l.test(x)) continue;
            if ((g.adj[x] & l).count() != 1) {
                std::ostringstream os;
                os << "point " << x << " sees " << (g.adj[x] & l).count()
                   << " points of line " << li << ", want exactly 1";
                return {false, os.str()};
            }
        }
    return {};
}

NearPolygonReport validate_near_polygon(const IncidenceStructure& g) {
    NearPolygonReport r;
    r.diameter = g.diameter;
    if (!g.connected) {
        r.detail = "structure is disconnected";
        return r;
    }
    const ValidationReport pls = validate_partial_linear_space(g);
    if (!pls.ok) {
        r.detail = "not a partial linear space: " + pls.detail;
        return r;
    }
    for (int x = 0; x < g.num_points; ++x)
        for (int li = 0; li < g.num_lines(); ++li) {
            int best = g.num_points, best_count = 0;
            for (int y : g.lines[li].points()) {
                const int d = g.dist[x][y];
                if (d < best) {
                    best = d;
                    best_count = 1;
                } else if (d == best) {
                    ++best_count;
                }
            }
            if (best_count != 1) {
                std::ostringstream os;
                os << "point " << x << " has " << best_count
                   << " nearest points on line " << li;
                r.detail = os.str();
                return r;
            }
        }
    r.ok = true;
    r.slim = true;
    r.dense = true;
    for (const PointSet& l : g.lines) {
        if (l.count() != 3) r.slim = false;
        if (l.count() < 3) r.dense = false;
    }
    if (r.dense)
        for (int x = 0; x < g.num_points && r.dense; ++x)
            for (int y = x + 1; y < g.num_points; ++y)
                if (g.dist[x][y] == 2 && (g.adj[x] & g.adj[y]).count() < 2) {
                    r.dense = false;
                    break;
                }
    return r;
}

PointSet perp(const IncidenceStructure& g, int x) {
    if (x < 0 || x >= g.num_points) throw std::invalid_argument("perp: point out of range");
    PointSet s = g.adj[x];
    s.set(x);
    return s;
}

IncidenceStructure direct_product(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (!a.connected || !b.connected)
        throw std::invalid_argument("direct_product: factors must be connected");
    if (a.num_lines() == 0 || b.num_lines() == 0)
        throw std::invalid_argument("direct_product: factor without lines is degenerate");
    if (a.num_points * b.num_points > 64)
        throw std::invalid_argument("direct_product: product exceeds 64 points");

    const int nb = b.num_points;
    std::vector<PointSet> lines;
    lines.reserve(static_cast<std::size_t>(a.num_points) * b.num_lines() +
                  static_cast<std::size_t>(a.num_lines()) * nb);
    for (int x = 0; x < a.num_points; ++x)
        for (const PointSet& m : b.lines)
            lines.push_back(PointSet{m.mask << (x * nb)});
    for (const PointSet& l : a.lines)
        for (int y = 0; y < nb; ++y) {
            PointSet pl;
            for (int x : l.points()) pl.set(x * nb + y);
            lines.push_back(pl);
        }

    std::vector<std::string> labels;
    if (!a.labels.empty() && !b.labels.empty()) {
        labels.reserve(static_cast<std::size_t>(a.num_points) * nb);
        for (int x = 0; x < a.num_points; ++x)
            for (int y = 0; y < nb; ++y) labels.push_back(a.labels[x] + ":" + b.labels[y]);
    }

    IncidenceStructure g =
        make_incidence(a.num_points * nb, std::move(lines), std::move(labels));
    const ValidationReport pls = validate_partial_linear_space(g);
    if (!pls.ok) throw std::logic_error("direct_product: " + pls.detail);
    return g;
}

Induced induced_substructure(const IncidenceStructure& g, PointSet pts) {
    if (!full_set(g.num_points).contains(pts))
        throw std::invalid_argument("induced_substructure: points out of range");
    if (pts.empty()) throw std::invalid_argument("induced_substructure: empty point set");

    Induced ind;
    ind.to_parent = pts.points();
    ind.from_parent.assign(g.num_points, -1);
    for (int i = 0; i < static_cast<int>(ind.to_parent.size()); ++i)
        ind.from_parent[ind.to_parent[i]] = i;

    std::vector<PointSet> lines;
    for (const PointSet& l : g.lines) {
        if (!pts.contains(l)) continue;
        PointSet nl;
        for (int p : l.points()) nl.set(ind.from_parent[p]);
        lines.push_back(nl);
    }
    std::vector<std::string> labels;
    if (!g.labels.empty())
        for (int p : ind.to_parent) labels.push_back(g.labels[p]);
    ind.geom = make_incidence(pts.count(), std::move(lines), std::move(labels));
    return ind;
}

PointSet geodetic_closure(const IncidenceStructure& g, PointSet seed) {
    if (!g.connected) throw std::invalid_argument("geodetic_closure: structure disconnected");
    if (!full_set(g.num_points).contains(seed))
        throw std::invalid_argument("geodetic_closure: seed out of range");
    PointSet x = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const PointSet& l : g.lines)
            if ((l & x).count() >= 2 && !x.contains(l)) {
                x = x | l;
                changed = true;
            }
        const std::vector<int> members = x.points();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const int a = members[i], b = members[j], d = g.dist[a][b];
                for (int z = 0; z < g.num_points; ++z)
                    if (!x.test(z) && g.dist[a][z] + g.dist[z][b] == d) {
                        x.set(z);
                        changed = true;
                    }
            }
    }
    return x;
}

namespace {

// Jointly canonical colors for several structures: invariants are content
// based (degrees, line sizes, distance histograms, then iterated neighbour
// color multisets over a shared alphabet), so equal colors mean equal
// invariants even across structures.
std::vector<std::vector<int>> joint_colors(const std::vector<const IncidenceStructure*>& gs) {
    std::vector<std::vector<std::vector<int>>> keys(gs.size());
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        const IncidenceStructure& g = *gs[gi];
        keys[gi].resize(g.num_points);
        for (int p = 0; p < g.num_points; ++p) {
            std::vector<int>& k = keys[gi][p];
            k.push_back(static_cast<int>(g.lines_through[p].size()));
            std::vector<int> sizes;
            for (int li : g.lines_through[p]) sizes.push_back(g.lines[li].count());
            std::sort(sizes.begin(), sizes.end());
            k.insert(k.end(), sizes.begin(), sizes.end());
            std::vector<int> hist(static_cast<std::size_t>(g.diameter) + 2, 0);
            for (int q = 0; q < g.num_points; ++q) {
                const int d = g.dist[p][q];
                ++hist[d < 0 ? hist.size() - 1 : static_cast<std::size_t>(d)];
            }
            k.insert(k.end(), hist.begin(), hist.end());
        }
    }

    std::vector<std::vector<int>> colors(gs.size());
    auto assign_colors = [&]() {
        std::vector<std::vector<int>> alphabet;
        for (const auto& gk : keys)
            for (const auto& k : gk) alphabet.push_back(k);
        std::sort(alphabet.begin(), alphabet.end());
        alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            colors[gi].resize(keys[gi].size());
            for (std::size_t p = 0; p < keys[gi].size(); ++p)
                colors[gi][p] = static_cast<int>(
                    std::lower_bound(alphabet.begin(), alphabet.end(), keys[gi][p]) -
                    alphabet.begin());
        }
        return alphabet.size();
    };

    std::size_t num_colors = assign_colors();
    while (true) {
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            const IncidenceStructure& g = *gs[gi];
            for (int p = 0; p < g.num_points; ++p) {
                std::vector<int> k{colors[gi][p]};
                std::vector<int> nb;
                for (int q : g.adj[p].points()) nb.push_back(colors[gi][q]);
                std::sort(nb.begin(), nb.end());
                k.insert(k.end(), nb.begin(), nb.end());
                keys[gi][p] = std::move(k);
            }
        }
        const std::size_t next = assign_colors();
        if (next == num_colors) break;
        num_colors = next;
    }
    return colors;
}

// Counts (or just detects, when count_all is false) point bijections a -> b
// that respect the precomputed colors and map lines onto lines.
std::int64_t count_maps(const IncidenceStructure& a, const IncidenceStructure& b,
                        const std::vector<int>& col_a, const std::vector<int>& col_b,
                        bool count_all) {
    const int n = a.num_points;
    int max_color = 0;
    for (int c : col_a) max_color = std::max(max_color, c + 1);
    for (int c : col_b) max_color = std::max(max_color, c + 1);
    std::vector<std::uint64_t> color_mask(static_cast<std::size_t>(max_color), 0);
    for (int p = 0; p < n; ++p) color_mask[static_cast<std::size_t>(col_b[p])] |= std::uint64_t{1} << p;

    std::vector<std::uint64_t> b_line_masks;
    b_line_masks.reserve(b.lines.size());
    for (const PointSet& l : b.lines) b_line_masks.push_back(l.mask);

    // Lines of a become fully mapped exactly when their highest point does.
    std::vector<std::vector<int>> lines_final_at(static_cast<std::size_t>(n));
    for (int li = 0; li < a.num_lines(); ++li) {
        const std::vector<int> pts = a.lines[li].points();
        lines_final_at[static_cast<std::size_t>(pts.back())].push_back(li);
    }

    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::int64_t found = 0;

    auto dfs = [&](auto&& self, int i, std::uint64_t used) -> bool {
        if (i == n) {
            ++found;
            return !count_all;
        }
        std::uint64_t mapped = 0, want_adj = 0;
        for (int u : a.adj[i].points())
            if (u < i) want_adj |= std::uint64_t{1} << perm[u];
        for (int u = 0; u < i; ++u) mapped |= std::uint64_t{1} << perm[u];
        std::uint64_t cands = color_mask[static_cast<std::size_t>(col_a[i])] & ~used;
        for (; cands != 0; cands &= cands - 1) {
            const int w = std::countr_zero(cands);
            if ((b.adj[w].mask & mapped) != want_adj) continue;
            perm[static_cast<std::size_t>(i)] = w;
            bool lines_ok = true;
            for (int li : lines_final_at[static_cast<std::size_t>(i)]) {
                std::uint64_t image = 0;
                for (int p : a.lines[li].points()) image |= std::uint64_t{1} << perm[p];
                if (!std::binary_search(b_line_masks.begin(), b_line_masks.end(), image)) {
                    lines_ok = false;
                    break;
                }
            }
            if (lines_ok && self(self, i + 1, used | (std::uint64_t{1} << w))) return true;
        }
        perm[static_cast<std::size_t>(i)] = -1;
        return false;
    };
    dfs(dfs, 0, 0);
    return found;
}

}  // namespace

std::int64_t automorphism_count(const IncidenceStructure& g) {
    const std::vector<std::vector<int>> colors = joint_colors({&g});
    return count_maps(g, g, colors[0], colors[0], true);
}

bool isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (a.num_points != b.num_points || a.num_lines() != b.num_lines()) return false;
    const std::vector<std::vector<int>> colors = joint_colors({&a, &b});
    std::vector<int> ca = colors[0], cb = colors[1];
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
    return count_maps(a, b, colors[0], colors[1], false) > 0;
}

namespace {

std::string node_label(const IncidenceStructure& g, int p) {
    return g.labels.empty() ? std::to_string(p) : g.labels[static_cast<std::size_t>(p)];
}

}  // namespace

std::string to_dot_collinearity(const IncidenceStructure& g) {
    std::ostringstream os;
    os << "graph collinearity {\n";
    for (int p = 0; p < g.num_points; ++p)
        os << "  p" << p << " [label=\"" << node_label(g, p) << "\"];\n";
    for (int x = 0; x < g.num_points; ++x)
        for (int y : g.adj[x].points())
            if (y > x) os << "  p" << x << " -- p" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot_bipartite(const IncidenceStructure& g) {
    std::ostringstream os;
    os << "graph incidence {\n";
    for (int p = 0; p < g.num_points; ++p)
        os << "  p" << p << " [label=\"" << node_label(g, p) << "\"];\n";
    for (int li = 0; li < g.num_lines(); ++li)
        os << "  l" << li << " [label=\"L" << li << "\" shape=box];\n";
    for (int li = 0; li < g.num_lines(); ++li)
        for (int p : g.lines[li].points()) os << "  p" << p << " -- l" << li << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace nearhex
