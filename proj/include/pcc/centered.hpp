#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

// colors are dense ints 0..k-1; every vertex carries exactly one
struct Coloring {
    int k = 0;
    std::vector<int> colors;
};

void validate_coloring(const Graph& g, const Coloring& f);
std::vector<int> used_colors(const Coloring& f);

enum class Palette : std::uint8_t { A1, A2 };

// coloring whose color ids are split into two disjoint palettes; root
// vertices may only use A1 colors and fresh vertices only A2 colors
struct SplitColoring {
    Coloring base;
    std::vector<Palette> palette_of_color; // indexed by color id, size base.k
};

struct Witness {
    enum class Kind { violation, threat };
    Kind kind = Kind::violation;
    VertexSet vertices;
    std::map<int, int> color_counts;
    // threat fields: the color that occurs exactly once, and how many
    // distinct colors of each palette the subgraph carries
    int threat_color = -1;
    int load_a1 = 0;
    int load_a2 = 0;
};

struct Verdict {
    bool centered = true;
    std::optional<Witness> witness;
};

// Does every connected subgraph H of g either use more than p colors or
// contain a color that appears exactly once in H? On failure the verdict
// carries one violating subgraph, chosen deterministically.
Verdict is_p_centered(const Graph& g, const Coloring& f, int p);

// literal enumeration of every connected vertex subset; exponential, for
// cross-checking the production verifier on small graphs
Verdict is_p_centered_bruteforce(const Graph& g, const Coloring& f, int p,
                                 int limit = default_oracle_limit());

// relabel color c as (A1,c) on roots and (A2,c) on fresh vertices; color ids
// 0..k-1 become the A1 palette and k..2k-1 the A2 palette
SplitColoring split_palette(const Graph& g, const Coloring& f);

// two-budget variant: every connected H must use more than p1 colors of A1,
// or more than p2 colors of A2, or contain a color unique in H
Verdict is_p1p2_centered(const Graph& g, const SplitColoring& f, int p1, int p2);

// connected subgraphs of at most max_size vertices in which `color` is the
// only color appearing exactly once, carrying at most k1 distinct A1 colors
// and k2 distinct A2 colors; ordered by (size, vertex sequence)
std::vector<Witness> find_threats(const Graph& g, const SplitColoring& f, int color,
                                  int k1, int k2, int max_size,
                                  int limit = default_oracle_limit());

struct ReductionReport {
    int p = 0;
    int t = 0;
    int p1 = 0;    // 3p+2
    int p2 = 0;    // 18tp+6t
    int total = 0; // p1+p2
    bool total_centered = false;
    bool split_centered = false;
    enum class Implication { holds, not_applicable, counterexample };
    Implication implication = Implication::not_applicable;
    std::optional<Witness> counterexample;
};

// checks, on one labeled graph and coloring, that total-budget centeredness
// carries over to the split palette budgets (p1, p2) = (3p+2, 18tp+6t): if f
// is (p1+p2)-centered then split_palette(g,f) must be (p1,p2)-centered
ReductionReport reduction_check(const Graph& g, const Coloring& f, int p, int t);

} // namespace pcc
