#include "pcc/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace pcc {

int default_nabla_limit() {
    static const int limit = [] {
        if (const char* s = std::getenv("PCC_NABLA_LIMIT")) {
            int v = std::atoi(s);
            if (v > 0) return v;
        }
        return 10;
    }();
    return limit;
}

namespace {

bool radius_within(const Graph& g, const VertexSet& part, int r) {
    std::vector<char> in_part(g.vertex_count(), 0);
    for (int v : part) in_part[v] = 1;
    std::vector<int> dist(g.vertex_count());
    for (int c : part) { // some member must reach all others within r steps
        for (int v : part) dist[v] = -1;
        dist[c] = 0;
        std::vector<int> bfs{c};
        int max_dist = 0;
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            int u = bfs[head];
            for (int w : g.neighbors(u))
                if (in_part[w] && dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    max_dist = std::max(max_dist, dist[w]);
                    bfs.push_back(w);
                }
        }
        if (bfs.size() == part.size() && max_dist <= r) return true;
    }
    return false;
}

} // namespace

bool verify_model(const Graph& g, const MinorModel& m,
                  const std::vector<std::pair<int, int>>& h_edges,
                  std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (m.r < 0) return fail("negative radius bound");
    std::vector<char> used(g.vertex_count(), 0);
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        const VertexSet& part = m.parts[i];
        if (part.empty()) return fail("part " + std::to_string(i) + " is empty");
        validate_vertex_set(g, part);
        for (int v : part) {
            if (used[v])
                return fail("vertex " + std::to_string(v) + " lies in two parts");
            used[v] = 1;
        }
        if (connected_components(g, part).size() != 1)
            return fail("part " + std::to_string(i) + " is not connected");
        if (!radius_within(g, part, m.r))
            return fail("part " + std::to_string(i) + " has radius above " + std::to_string(m.r));
    }
    const int h = static_cast<int>(m.parts.size());
    for (const auto& [a, b] : h_edges) {
        if (a < 0 || a >= h || b < 0 || b >= h || a == b)
            return fail("minor edge endpoints out of range");
        bool realized = false;
        for (int u : m.parts[a]) {
            for (int v : m.parts[b])
                if (g.has_edge(u, v)) { realized = true; break; }
            if (realized) break;
        }
        if (!realized)
            return fail("minor edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has no host edge");
    }
    return true;
}

namespace {

using Mask = std::uint32_t;

struct ExactSearch {
    const Graph& g;
    int r;
    int n;
    std::vector<Mask> nbr;        // per-vertex neighbor masks
    std::vector<Mask> parts;      // current family
    std::vector<Mask> part_nbrs;  // neighbor-union masks of current family
    Rat best{0, 1};
    std::vector<Mask> best_parts;
    bool have_best = false;

    ExactSearch(const Graph& graph, int radius) : g(graph), r(radius), n(g.vertex_count()) {
        nbr.assign(n, 0);
        for (const auto& [u, v] : g.edges()) {
            nbr[u] |= Mask{1} << v;
            nbr[v] |= Mask{1} << u;
        }
    }

    Mask mask_neighbors(Mask s) const {
        Mask out = 0;
        for (Mask t = s; t;) {
            int v = std::countr_zero(t);
            t &= t - 1;
            out |= nbr[v];
        }
        return out & ~s;
    }

    bool mask_radius_ok(Mask s) const {
        if (std::popcount(s) == 1) return true;
        for (Mask c = s; c;) {
            int center = std::countr_zero(c);
            c &= c - 1;
            Mask reached = Mask{1} << center;
            for (int step = 0; step < r; ++step) {
                Mask grow = 0;
                for (Mask t = reached; t;) {
                    int v = std::countr_zero(t);
                    t &= t - 1;
                    grow |= nbr[v] & s;
                }
                Mask next = reached | grow;
                if (next == reached) break;
                reached = next;
            }
            if (reached == s) return true;
        }
        return false;
    }

    void evaluate() {
        if (parts.empty()) return;
        const int v = static_cast<int>(parts.size());
        long long e = 0;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j)
                if (part_nbrs[i] & parts[j]) ++e;
        Rat density(e, v);
        if (!have_best || best < density) {
            best = density;
            best_parts = parts;
            have_best = true;
        }
    }

    // families of disjoint connected radius-bounded parts, each visited once;
    // the lowest unassigned vertex is either skipped or anchors a new part
    void search(Mask remaining) {
        if (remaining == 0) {
            evaluate();
            return;
        }
        const int anchor = std::countr_zero(remaining);
        search(remaining & ~(Mask{1} << anchor));
        grow_part(Mask{1} << anchor, 0, remaining);
    }

    // connected subsets of `remaining` containing the anchor, each generated
    // exactly once by forbidding already-tried extensions
    void grow_part(Mask part, Mask forbidden, Mask remaining) {
        if (mask_radius_ok(part)) {
            parts.push_back(part);
            part_nbrs.push_back(mask_neighbors(part));
            search(remaining & ~part);
            part_nbrs.pop_back();
            parts.pop_back();
        }
        Mask ext = mask_neighbors(part) & remaining & ~forbidden;
        while (ext) {
            Mask bit = ext & (~ext + 1);
            ext &= ext - 1;
            grow_part(part | bit, forbidden, remaining);
            forbidden |= bit;
        }
    }
};

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> realized_edges(const Graph& g,
                                                const std::vector<VertexSet>& parts) {
    std::vector<char> member(g.vertex_count(), 0);
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) {
            member[v] = 1;
            owner[v] = static_cast<int>(i);
        }
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v] : g.edges()) {
        if (!member[u] || !member[v] || owner[u] == owner[v]) continue;
        auto e = std::minmax(owner[u], owner[v]);
        out.emplace_back(e.first, e.second);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

NablaResult nabla_r_exact(const Graph& g, int r, int limit) {
    if (r < 0) throw std::invalid_argument("nabla_r_exact: radius must be nonnegative");
    const int n = g.vertex_count();
    if (n > limit || n > 25)
        throw oracle_limit_error("nabla_r_exact: graph has " + std::to_string(n) +
                                 " vertices, limit is " + std::to_string(std::min(limit, 25)));
    NablaResult out;
    out.model.r = r;
    if (n == 0) return out;
    ExactSearch search(g, r);
    search.search((Mask{1} << n) - 1);
    out.density = search.best;
    for (Mask m : search.best_parts) out.model.parts.push_back(mask_to_set(m));
    out.h_edges = realized_edges(g, out.model.parts);
    return out;
}

NablaResult nabla_r_greedy(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("nabla_r_greedy: radius must be nonnegative");
    const int n = g.vertex_count();
    NablaResult out;
    out.model.r = r;
    if (n == 0) return out;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<char> covered(n, 0);
    std::vector<int> depth(n);
    std::vector<VertexSet> parts;
    for (int c : order) {
        if (covered[c]) continue;
        VertexSet part{c};
        covered[c] = 1;
        depth[c] = 0;
        for (std::size_t head = 0; head < part.size(); ++head) {
            int u = part[head];
            if (depth[u] == r) continue;
            for (int w : g.neighbors(u))
                if (!covered[w]) {
                    covered[w] = 1;
                    depth[w] = depth[u] + 1;
                    part.push_back(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }

    auto edges = realized_edges(g, parts);
    std::vector<char> incident(parts.size(), 0);
    for (const auto& [a, b] : edges) {
        incident[a] = 1;
        incident[b] = 1;
    }
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (incident[i]) kept.push_back(std::move(parts[i]));
    if (kept.empty()) return out; // edgeless host: report the empty minor
    out.model.parts = std::move(kept);
    out.h_edges = realized_edges(g, out.model.parts);
    out.density = Rat(static_cast<long long>(out.h_edges.size()),
                      static_cast<long long>(out.model.parts.size()));
    std::string why;
    if (!verify_model(g, out.model, out.h_edges, &why))
        throw std::logic_error("nabla_r_greedy: produced an invalid model: " + why);
    return out;
}

} // namespace pcc
