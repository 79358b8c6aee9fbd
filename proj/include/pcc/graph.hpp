#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcc {

// sorted ascending, no duplicates, entries in 0..n-1
using VertexSet = std::vector<int>;

enum class VertexLabel : std::uint8_t { root, fresh };

// provenance of a fresh vertex created by subdivide(): the original edge it
// lies on and its position along the path (0 = next to the smaller endpoint)
struct FreshOrigin {
    int edge_u = 0;
    int edge_v = 0;
    int position = 0;
};

// Immutable simple undirected graph on dense vertex ids 0..n-1. Edges are
// normalized (u < v), sorted, and deduplicated; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    // labeled construction, used by subdivide() and deserialization
    static Graph with_labels(int n, std::vector<std::pair<int, int>> edge_list,
                             std::vector<VertexLabel> labels,
                             std::map<int, FreshOrigin> origins = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool labeled() const { return !labels_.empty(); }
    VertexLabel label(int v) const;
    bool is_root(int v) const { return label(v) == VertexLabel::root; }
    const std::vector<VertexLabel>& labels() const { return labels_; }
    const std::map<int, FreshOrigin>& origins() const { return origins_; }

    // structural equality on (n, edges, labels); origins are not compared
    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexLabel> labels_;
    std::map<int, FreshOrigin> origins_;

    void check_vertex(int v) const;
    void build(std::vector<std::pair<int, int>> edge_list);
};

// thrown when an exact routine is asked to exceed its configured size limit
struct oracle_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// default size cap for the exact (exponential) routines; override with the
// PCC_ORACLE_LIMIT environment variable or a per-call argument
int default_oracle_limit();

void validate_vertex_set(const Graph& g, const VertexSet& s);

// maximal connected subsets of s within the induced subgraph g[s]; each part
// is sorted and parts are ordered by their smallest member
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);

// replace every edge by a path with s internal vertices. Original vertices
// keep their ids and become root-labeled; the s*|E| fresh vertices are
// appended after the roots, edge by edge in normalized edge order, and carry
// their origin. Requires an unlabeled input; s = 0 yields a root-labeled copy.
Graph subdivide(const Graph& g, int s);

// exact treedepth: max over components; on a connected graph 1 + min over
// vertex deletions, memoized on vertex subsets (bitmask keys)
int treedepth_exact(const Graph& g, int limit = default_oracle_limit());

int max_degree(const Graph& g);

// induced subgraph on s; vertex i of the result corresponds to s[i]
Graph induced_subgraph(const Graph& g, const VertexSet& s);

} // namespace pcc
