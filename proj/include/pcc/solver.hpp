#pragma once

#include <cstdint>
#include <optional>

#include "pcc/centered.hpp"

namespace pcc {

struct SolveBudget {
    std::uint64_t max_nodes = 20'000'000;
    // 0 disables the wall-clock cutoff; enabling it makes node counts (and
    // therefore serialized results) dependent on machine speed
    double max_seconds = 0.0;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t colorings_tested = 0;
    double elapsed_seconds = 0.0;
};

// status: exact      - chi is the exact minimum and coloring is a witness
//         lower_bound_only - budget ran out, but exhausting smaller palettes
//                      proved chi colors are necessary
//         timeout    - budget ran out before improving on the initial bound;
//                      chi is still a valid (clique-based) lower bound
struct SolveResult {
    enum class Status { exact, lower_bound_only, timeout };
    Status status = Status::exact;
    int chi = 0;
    std::optional<Coloring> coloring;
    SolveStats stats;
};

// Exact minimum number of colors in a p-centered coloring of g, by iterative
// deepening on the palette size from a greedy clique lower bound. Vertices
// are assigned in id order with palette symmetry breaking (a vertex may use
// at most one color beyond those already placed), and a branch is abandoned
// as soon as the colored prefix contains a connected subgraph that stays
// violating in every completion.
SolveResult chi_p_exact(const Graph& g, int p, const SolveBudget& budget = {});

enum class VertexOrder { natural, degree_descending, random };

// Upper bound: greedy proper coloring in the given order, then repeatedly
// give the latest-ordered vertex of a violating subgraph a brand-new color.
// A vertex holding a fresh color is unique in every subgraph through it, so
// each vertex is repaired at most once and the loop ends within n rounds.
Coloring chi_p_greedy(const Graph& g, int p, VertexOrder order = VertexOrder::natural,
                      std::uint64_t seed = 0);

// independent exact baselines (plain backtracking, no centered machinery)
int chromatic_number_exact(const Graph& g, int limit = default_oracle_limit());
// minimum proper coloring in which no 4-vertex path carries only two colors
int star_chromatic_exact(const Graph& g, int limit = default_oracle_limit());

// size of a greedily grown clique (vertices tried by descending degree)
int greedy_clique_size(const Graph& g);

} // namespace pcc
