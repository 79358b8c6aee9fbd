#include "pcc/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>

namespace pcc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
    build(std::move(edge_list));
}

Graph Graph::with_labels(int n, std::vector<std::pair<int, int>> edge_list,
                         std::vector<VertexLabel> labels,
                         std::map<int, FreshOrigin> origins) {
    Graph g(n, std::move(edge_list));
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("graph: label list must cover every vertex");
    for (const auto& [v, o] : origins) {
        if (v < 0 || v >= n || labels[v] != VertexLabel::fresh)
            throw std::invalid_argument("graph: origin recorded for a non-fresh vertex");
        (void)o;
    }
    g.labels_ = std::move(labels);
    g.origins_ = std::move(origins);
    return g;
}

void Graph::build(std::vector<std::pair<int, int>> edge_list) {
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex id out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

VertexLabel Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) throw std::logic_error("graph: unlabeled graph has no vertex labels");
    return labels_[v];
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
}

int default_oracle_limit() {
    static const int limit = [] {
        if (const char* s = std::getenv("PCC_ORACLE_LIMIT")) {
            int v = std::atoi(s);
            if (v > 0) return v;
        }
        return 12;
    }();
    return limit;
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw std::invalid_argument("vertex set: id out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("vertex set: must be sorted and duplicate-free");
    }
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    std::vector<char> in_s(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<VertexSet> parts;
    for (int v : s) { // s is sorted, so parts come out ordered by smallest member
        if (seen[v]) continue;
        VertexSet part;
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            part.push_back(u);
            for (int w : g.neighbors(u))
                if (in_s[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    VertexSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return connected_components(g, all);
}

Graph subdivide(const Graph& g, int s) {
    if (g.labeled()) throw std::invalid_argument("subdivide: input must be unlabeled");
    if (s < 0) throw std::invalid_argument("subdivide: subdivision count must be nonnegative");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int total = n + s * m;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m) * (s + 1));
    std::vector<VertexLabel> labels(total, VertexLabel::fresh);
    std::fill(labels.begin(), labels.begin() + n, VertexLabel::root);
    std::map<int, FreshOrigin> origins;
    int next = n;
    for (const auto& [u, v] : g.edges()) {
        int prev = u;
        for (int k = 0; k < s; ++k) {
            origins[next] = FreshOrigin{u, v, k};
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::with_labels(total, std::move(edges), std::move(labels), std::move(origins));
}

namespace {

using Mask = std::uint64_t;

int treedepth_mask(Mask mask, const std::vector<Mask>& nbr,
                   std::unordered_map<Mask, int>& memo) {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;

    // split into connected components of mask
    int best;
    Mask comp = 0;
    {
        Mask start = mask & (~mask + 1);
        Mask frontier = start;
        comp = start;
        while (frontier) {
            Mask grow = 0;
            Mask f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                grow |= nbr[v] & mask & ~comp;
            }
            comp |= grow;
            frontier = grow;
        }
    }
    if (comp != mask) {
        best = std::max(treedepth_mask(comp, nbr, memo), treedepth_mask(mask & ~comp, nbr, memo));
    } else {
        best = 1 << 30;
        Mask rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            best = std::min(best, 1 + treedepth_mask(mask & ~(Mask{1} << v), nbr, memo));
        }
    }
    memo[mask] = best;
    return best;
}

} // namespace

int treedepth_exact(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit || n > 62)
        throw oracle_limit_error("treedepth_exact: graph has " + std::to_string(n) +
                                 " vertices, limit is " + std::to_string(std::min(limit, 62)));
    if (n == 0) return 0;
    std::vector<Mask> nbr(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= Mask{1} << v;
        nbr[v] |= Mask{1} << u;
    }
    std::unordered_map<Mask, int> memo;
    return treedepth_mask((Mask{1} << n) - 1, nbr, memo);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(s.size()), std::move(edges));
}

} // namespace pcc
