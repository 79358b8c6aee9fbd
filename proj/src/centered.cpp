#include "pcc/centered.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace pcc {

void validate_coloring(const Graph& g, const Coloring& f) {
    if (f.k < 0) throw std::invalid_argument("coloring: k must be nonnegative");
    if (static_cast<int>(f.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring: must assign a color to every vertex");
    for (int c : f.colors)
        if (c < 0 || c >= f.k) throw std::invalid_argument("coloring: color id out of range");
}

std::vector<int> used_colors(const Coloring& f) {
    std::vector<int> used(f.colors);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used;
}

namespace {

std::map<int, int> count_colors(const Coloring& f, const VertexSet& s) {
    std::map<int, int> counts;
    for (int v : s) ++counts[f.colors[v]];
    return counts;
}

bool has_unique_color(const std::map<int, int>& counts) {
    for (const auto& [c, cnt] : counts)
        if (cnt == 1) return true;
    return false;
}

// Search for a connected subset with no unique color inside the given seed
// sets, by repeatedly deleting every uniquely colored vertex: if H is
// connected and some vertex v is the lone holder of its color in H, then v
// is unique in every connected subgraph through v, so all violations of H
// survive inside H - v. A component that runs out of unique-colored vertices
// is itself a violation. Runs in polynomial time for any number of colors.
std::optional<VertexSet> no_unique_subset(const Graph& g, const Coloring& f,
                                          std::vector<VertexSet> seeds) {
    std::deque<VertexSet> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        VertexSet s = std::move(queue.front());
        queue.pop_front();
        for (const VertexSet& comp : connected_components(g, s)) {
            auto counts = count_colors(f, comp);
            VertexSet kept;
            for (int v : comp)
                if (counts[f.colors[v]] > 1) kept.push_back(v);
            if (static_cast<int>(kept.size()) == static_cast<int>(comp.size()))
                return comp; // no unique color at all
            if (!kept.empty()) queue.push_back(std::move(kept));
        }
    }
    return std::nullopt;
}

Verdict violation_verdict(const Coloring& f, VertexSet witness_set) {
    Witness w;
    w.kind = Witness::Kind::violation;
    w.color_counts = count_colors(f, witness_set);
    w.vertices = std::move(witness_set);
    return Verdict{false, std::move(w)};
}

// lexicographically ordered size-`len` subsets of `pool`
template <typename Fn>
bool for_each_combination(const std::vector<int>& pool, int len, Fn&& fn) {
    std::vector<int> idx(len);
    for (int i = 0; i < len; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    if (len > n) return false;
    while (true) {
        std::vector<int> combo(len);
        for (int i = 0; i < len; ++i) combo[i] = pool[idx[i]];
        if (fn(combo)) return true;
        int i = len - 1;
        while (i >= 0 && idx[i] == n - len + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < len; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool witness_set_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// smallest component of g[vertices] without a unique color, or nullopt
std::optional<VertexSet> violating_component(const Graph& g, const Coloring& f,
                                             const VertexSet& vertices) {
    std::optional<VertexSet> best;
    for (const VertexSet& comp : connected_components(g, vertices)) {
        if (has_unique_color(count_colors(f, comp))) continue;
        if (!best || witness_set_less(comp, *best)) best = comp;
    }
    return best;
}

} // namespace

// Subset reduction: a violating connected H that uses color set S lies in one
// component C of the subgraph induced by the S-colored vertices. Every color
// on C belongs to S and already appears at least twice in H, hence at least
// twice in C, so C itself has no unique color and at most |S| <= p colors.
// It therefore suffices to scan, for every used color subset S of size <= p,
// the components of the S-colored vertices for a missing unique color.
// For p >= floor(n/2) the color budget cannot bind (a subgraph without a
// unique color repeats every color, so it has at most floor(n/2) distinct
// colors) and the polynomial unique-elimination search replaces the scan.
Verdict is_p_centered(const Graph& g, const Coloring& f, int p) {
    validate_coloring(g, f);
    if (p < 1) throw std::invalid_argument("is_p_centered: p must be positive");
    const int n = g.vertex_count();
    if (n == 0) return Verdict{};

    if (p >= n / 2) {
        if (auto bad = no_unique_subset(g, f, connected_components(g)))
            return violation_verdict(f, std::move(*bad));
        return Verdict{};
    }

    const std::vector<int> used = used_colors(f);
    const int cap = std::min<int>(p, static_cast<int>(used.size()));
    std::optional<VertexSet> found;
    for (int len = 1; len <= cap && !found; ++len) {
        for_each_combination(used, len, [&](const std::vector<int>& s) {
            std::vector<char> in_s(f.k, 0);
            for (int c : s) in_s[c] = 1;
            VertexSet verts;
            for (int v = 0; v < n; ++v)
                if (in_s[f.colors[v]]) verts.push_back(v);
            found = violating_component(g, f, verts);
            return found.has_value();
        });
    }
    if (found) return violation_verdict(f, std::move(*found));
    return Verdict{};
}

Verdict is_p_centered_bruteforce(const Graph& g, const Coloring& f, int p, int limit) {
    validate_coloring(g, f);
    if (p < 1) throw std::invalid_argument("is_p_centered_bruteforce: p must be positive");
    const int n = g.vertex_count();
    if (n > limit || n > 25)
        throw oracle_limit_error("is_p_centered_bruteforce: graph has " + std::to_string(n) +
                                 " vertices, limit is " + std::to_string(std::min(limit, 25)));
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    std::optional<VertexSet> best;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        // connectivity
        std::uint32_t comp = mask & (~mask + 1), frontier = comp;
        while (frontier) {
            std::uint32_t grow = 0;
            for (std::uint32_t f2 = frontier; f2;) {
                int v = std::countr_zero(f2);
                f2 &= f2 - 1;
                grow |= nbr[v] & mask & ~comp;
            }
            comp |= grow;
            frontier = grow;
        }
        if (comp != mask) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        auto counts = count_colors(f, s);
        if (static_cast<int>(counts.size()) > p) continue;
        if (has_unique_color(counts)) continue;
        if (!best || witness_set_less(s, *best)) best = s;
    }
    if (best) return violation_verdict(f, std::move(*best));
    return Verdict{};
}

namespace {

void validate_split(const Graph& g, const SplitColoring& f) {
    validate_coloring(g, f.base);
    if (!g.labeled())
        throw std::invalid_argument("split coloring: graph must carry root/fresh labels");
    if (static_cast<int>(f.palette_of_color.size()) != f.base.k)
        throw std::invalid_argument("split coloring: palette map must cover every color");
    for (int v = 0; v < g.vertex_count(); ++v) {
        Palette want = g.is_root(v) ? Palette::A1 : Palette::A2;
        if (f.palette_of_color[f.base.colors[v]] != want)
            throw std::invalid_argument("split coloring: vertex uses a color of the wrong palette");
    }
}

std::vector<int> used_palette_colors(const Graph& g, const SplitColoring& f, Palette which) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Palette have = g.is_root(v) ? Palette::A1 : Palette::A2;
        if (have == which) out.push_back(f.base.colors[v]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

SplitColoring split_palette(const Graph& g, const Coloring& f) {
    validate_coloring(g, f);
    if (!g.labeled())
        throw std::invalid_argument("split_palette: graph must carry root/fresh labels");
    SplitColoring out;
    out.base.k = 2 * f.k;
    out.base.colors.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        out.base.colors[v] = g.is_root(v) ? f.colors[v] : f.k + f.colors[v];
    out.palette_of_color.assign(2 * f.k, Palette::A1);
    std::fill(out.palette_of_color.begin() + f.k, out.palette_of_color.end(), Palette::A2);
    return out;
}

// Same subset reduction as is_p_centered, run over pairs of palette subsets.
// A palette whose budget reaches floor(n/2) cannot bind on a subgraph without
// a unique color, so that palette's subset is fixed to "all its colors" and
// the unique-elimination search takes over inside each candidate set.
Verdict is_p1p2_centered(const Graph& g, const SplitColoring& f, int p1, int p2) {
    validate_split(g, f);
    if (p1 < 0 || p2 < 0)
        throw std::invalid_argument("is_p1p2_centered: budgets must be nonnegative");
    const int n = g.vertex_count();
    if (n == 0) return Verdict{};
    const int half = n / 2;
    const Coloring& base = f.base;

    if (p1 >= half && p2 >= half) {
        if (auto bad = no_unique_subset(g, base, connected_components(g)))
            return violation_verdict(base, std::move(*bad));
        return Verdict{};
    }

    const std::vector<int> a1_used = used_palette_colors(g, f, Palette::A1);
    const std::vector<int> a2_used = used_palette_colors(g, f, Palette::A2);

    auto collect = [&](const std::vector<char>& allowed) {
        VertexSet verts;
        for (int v = 0; v < n; ++v)
            if (allowed[base.colors[v]]) verts.push_back(v);
        return verts;
    };

    if (p1 >= half || p2 >= half) {
        // one palette unconstrained: enumerate subsets of the other only
        const bool free_a2 = p2 >= half;
        const std::vector<int>& pool = free_a2 ? a1_used : a2_used;
        const std::vector<int>& rest = free_a2 ? a2_used : a1_used;
        const int cap = std::min<int>(free_a2 ? p1 : p2, static_cast<int>(pool.size()));
        std::optional<VertexSet> found;
        for (int len = 0; len <= cap && !found; ++len) {
            for_each_combination(pool, len, [&](const std::vector<int>& s) {
                std::vector<char> allowed(base.k, 0);
                for (int c : s) allowed[c] = 1;
                for (int c : rest) allowed[c] = 1;
                found = no_unique_subset(g, base, connected_components(g, collect(allowed)));
                return found.has_value();
            });
        }
        if (found) return violation_verdict(base, std::move(*found));
        return Verdict{};
    }

    const int cap1 = std::min<int>(p1, static_cast<int>(a1_used.size()));
    const int cap2 = std::min<int>(p2, static_cast<int>(a2_used.size()));
    std::optional<VertexSet> found;
    for (int total = 1; total <= cap1 + cap2 && !found; ++total) {
        for (int l1 = std::max(0, total - cap2); l1 <= std::min(cap1, total) && !found; ++l1) {
            const int l2 = total - l1;
            for_each_combination(a1_used, l1, [&](const std::vector<int>& s1) {
                return for_each_combination(a2_used, l2, [&](const std::vector<int>& s2) {
                    std::vector<char> allowed(base.k, 0);
                    for (int c : s1) allowed[c] = 1;
                    for (int c : s2) allowed[c] = 1;
                    found = violating_component(g, base, collect(allowed));
                    return found.has_value();
                });
            });
        }
    }
    if (found) return violation_verdict(base, std::move(*found));
    return Verdict{};
}

std::vector<Witness> find_threats(const Graph& g, const SplitColoring& f, int color,
                                  int k1, int k2, int max_size, int limit) {
    validate_split(g, f);
    if (color < 0 || color >= f.base.k)
        throw std::invalid_argument("find_threats: color id out of range");
    if (k1 < 0 || k2 < 0 || max_size < 1)
        throw std::invalid_argument("find_threats: loads must be nonnegative and max_size positive");
    const int n = g.vertex_count();
    if (n > limit || n > 25)
        throw oracle_limit_error("find_threats: graph has " + std::to_string(n) +
                                 " vertices, limit is " + std::to_string(std::min(limit, 25)));
    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= std::uint32_t{1} << v;
        nbr[v] |= std::uint32_t{1} << u;
    }
    std::vector<Witness> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        std::uint32_t comp = mask & (~mask + 1), frontier = comp;
        while (frontier) {
            std::uint32_t grow = 0;
            for (std::uint32_t f2 = frontier; f2;) {
                int v = std::countr_zero(f2);
                f2 &= f2 - 1;
                grow |= nbr[v] & mask & ~comp;
            }
            comp |= grow;
            frontier = grow;
        }
        if (comp != mask) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        auto counts = count_colors(f.base, s);
        bool ok = true;
        int a1 = 0, a2 = 0;
        for (const auto& [c, cnt] : counts) {
            if (cnt == 1 && c != color) { ok = false; break; }
            (f.palette_of_color[c] == Palette::A1 ? a1 : a2) += 1;
        }
        if (!ok) continue;
        auto it = counts.find(color);
        if (it == counts.end() || it->second != 1) continue;
        if (a1 > k1 || a2 > k2) continue;
        Witness w;
        w.kind = Witness::Kind::threat;
        w.vertices = std::move(s);
        w.color_counts = std::move(counts);
        w.threat_color = color;
        w.load_a1 = a1;
        w.load_a2 = a2;
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), [](const Witness& a, const Witness& b) {
        return witness_set_less(a.vertices, b.vertices);
    });
    return out;
}

ReductionReport reduction_check(const Graph& g, const Coloring& f, int p, int t) {
    if (p < 1 || t < 1) throw std::invalid_argument("reduction_check: p and t must be positive");
    ReductionReport r;
    r.p = p;
    r.t = t;
    r.p1 = 3 * p + 2;
    r.p2 = 18 * t * p + 6 * t;
    r.total = r.p1 + r.p2;
    Verdict total = is_p_centered(g, f, r.total);
    r.total_centered = total.centered;
    Verdict split = is_p1p2_centered(g, split_palette(g, f), r.p1, r.p2);
    r.split_centered = split.centered;
    if (!total.centered) {
        r.implication = ReductionReport::Implication::not_applicable;
    } else if (split.centered) {
        r.implication = ReductionReport::Implication::holds;
    } else {
        r.implication = ReductionReport::Implication::counterexample;
        r.counterexample = split.witness;
    }
    return r;
}

} // namespace pcc
