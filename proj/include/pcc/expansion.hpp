#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pcc/graph.hpp"

namespace pcc {

// exact nonnegative rational, always reduced with positive denominator
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// branch sets of a minor model; branch vertex h is parts[h]. r bounds the
// radius of every part, measured inside the part's induced subgraph.
struct MinorModel {
    int r = 0;
    std::vector<VertexSet> parts;
};

// checks that parts are nonempty, disjoint, connected, of radius <= m.r, and
// that every requested minor edge is realized by a host edge between its two
// parts; on failure optionally reports the first problem found
bool verify_model(const Graph& g, const MinorModel& m,
                  const std::vector<std::pair<int, int>>& h_edges,
                  std::string* diagnostic = nullptr);

struct NablaResult {
    Rat density; // |E(H)| / |V(H)| of the best minor found
    MinorModel model;
    std::vector<std::pair<int, int>> h_edges;
};

// size cap for exact minor enumeration; override with PCC_NABLA_LIMIT
int default_nabla_limit();

// greatest edge density over all minors with an r-shallow model, by exhaustive
// enumeration of families of disjoint connected radius-<=r branch sets (parts
// ordered by smallest member; isolated branch vertices are allowed but never
// improve the maximum). Exponential; refuses graphs above the limit.
NablaResult nabla_r_exact(const Graph& g, int r, int limit = default_nabla_limit());

// lower bound: contracts BFS balls of radius <= r grown around uncovered
// vertices of highest degree, discards branch sets with no incident minor
// edge, and verifies the model before reporting
NablaResult nabla_r_greedy(const Graph& g, int r);

} // namespace pcc
