#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "pcc/graph.hpp"

namespace pcc {

using bigint = boost::multiprecision::cpp_int;

// Parameters of the recursive hard-to-color family. Level (p,0) and (0,t)
// graphs are edgeless on base_size vertices; level (p,t) is a copy of level
// (p-1,t) where every vertex additionally dominates its own private copy of
// level (p,t-1). subdivision < 0 selects the default of 6*t.
struct FamilyParams {
    int p = 1;
    int t = 1;
    int base_size = 2;
    int subdivision = -1;

    int effective_subdivision() const { return subdivision < 0 ? 6 * t : subdivision; }
};

struct FamilySize {
    bigint vertices;
    bigint edges;
};

// exact counts from the size recurrence; never materializes the graph
FamilySize family_size(const FamilyParams& params);

inline constexpr std::int64_t kDefaultMaterializeLimit = 1'000'000;

// materialized family graph. Vertex ids: the (p-1,t) backbone copy comes
// first, then the private copy of each backbone vertex, in backbone id order.
// Refuses (naming the predicted size) when the vertex count exceeds limit.
Graph family_graph(const FamilyParams& params,
                   std::int64_t limit = kDefaultMaterializeLimit);

// family graph with every edge replaced by a path of length subdivision+1
Graph family_subdivided(const FamilyParams& params,
                        std::int64_t limit = kDefaultMaterializeLimit);

// Erdos-Renyi G(n,q): one splitmix64 uniform per vertex pair, pairs visited
// in lexicographic order, edge kept iff the draw is below q. For a fixed
// seed the draws do not depend on q, so raising q only ever adds edges.
Graph gnp(int n, double q, std::uint64_t seed);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph clique_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

} // namespace pcc
