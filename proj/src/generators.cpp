#include "pcc/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include "pcc/rng.hpp"

namespace pcc {

namespace {

void validate_params(const FamilyParams& params) {
    if (params.p < 0 || params.t < 0)
        throw std::invalid_argument("family: levels p and t must be nonnegative");
    if (params.base_size < 2)
        throw std::invalid_argument("family: base size must be at least 2");
    if (params.effective_subdivision() < 0)
        throw std::invalid_argument("family: subdivision must be nonnegative");
}

FamilySize size_rec(int pi, int tau, int base,
                    std::vector<std::vector<FamilySize>>& memo,
                    std::vector<std::vector<char>>& done) {
    if (pi == 0 || tau == 0) return {base, 0};
    if (done[pi][tau]) return memo[pi][tau];
    FamilySize backbone = size_rec(pi - 1, tau, base, memo, done);
    FamilySize attach = size_rec(pi, tau - 1, base, memo, done);
    FamilySize out;
    out.vertices = backbone.vertices * (1 + attach.vertices);
    out.edges = backbone.edges + backbone.vertices * (attach.edges + attach.vertices);
    memo[pi][tau] = out;
    done[pi][tau] = 1;
    return out;
}

} // namespace

FamilySize family_size(const FamilyParams& params) {
    validate_params(params);
    std::vector<std::vector<FamilySize>> memo(params.p + 1,
                                              std::vector<FamilySize>(params.t + 1));
    std::vector<std::vector<char>> done(params.p + 1, std::vector<char>(params.t + 1, 0));
    return size_rec(params.p, params.t, params.base_size, memo, done);
}

namespace {

// appends level (pi,tau) at id offset, returns its vertex count
int build_rec(int pi, int tau, int base, int offset,
              std::vector<std::pair<int, int>>& edges) {
    if (pi == 0 || tau == 0) return base;
    int backbone = build_rec(pi - 1, tau, base, offset, edges);
    int next = offset + backbone;
    for (int u = offset; u < offset + backbone; ++u) {
        int attached = build_rec(pi, tau - 1, base, next, edges);
        for (int w = next; w < next + attached; ++w) edges.emplace_back(u, w);
        next += attached;
    }
    return next - offset;
}

} // namespace

Graph family_graph(const FamilyParams& params, std::int64_t limit) {
    FamilySize size = family_size(params);
    if (size.vertices > limit)
        throw oracle_limit_error("family_graph: predicted size is " +
                                 size.vertices.str() + " vertices / " + size.edges.str() +
                                 " edges, materialization limit is " + std::to_string(limit));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(size.edges));
    int n = build_rec(params.p, params.t, params.base_size, 0, edges);
    return Graph(n, std::move(edges));
}

Graph family_subdivided(const FamilyParams& params, std::int64_t limit) {
    FamilySize size = family_size(params);
    const int s = params.effective_subdivision();
    bigint total = size.vertices + size.edges * s;
    if (total > limit)
        throw oracle_limit_error("family_subdivided: predicted size is " + total.str() +
                                 " vertices, materialization limit is " + std::to_string(limit));
    return subdivide(family_graph(params, limit), s);
}

Graph gnp(int n, double q, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp: vertex count must be nonnegative");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("gnp: q must lie in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < q) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph clique_graph(int n) {
    if (n < 1) throw std::invalid_argument("clique: need at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star: leaf count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: dimensions must be positive");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, std::move(edges));
}

} // namespace pcc
