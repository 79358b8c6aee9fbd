#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcc/centered.hpp"
#include "pcc/solver.hpp"

namespace pcc {

// raised when a coloring does not admit the requested number of disjoint
// monochromatic pairs
struct insufficient_pairs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// edge probability ((12e/p)^p * n^(1-p) * ln n)^(1/(2p-1)); throws
// std::range_error (naming the smallest valid n) when the value exceeds 1
double q_threshold(std::int64_t n, int p);

// smallest n for which q_threshold(n, p) <= 1; requires p >= 2
std::int64_t min_valid_n(int p);

// expected-degree window (n*q/2, 2*n*q) at q = q_threshold(n, p)
std::pair<double, double> degree_window(std::int64_t n, int p);
std::pair<double, double> degree_window_at(std::int64_t n, double q);

// disjoint monochromatic vertex pairs; pair i is (x_i, y_i)
struct PairFamily {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

// greedily pairs same-colored vertices (consecutive ids within a class),
// visiting the color classes round-robin in color order until m pairs exist
PairFamily select_pairs(const Coloring& f, int m);

// A violating path over the pair family: s lists p distinct pair indices,
// sigma permutes 0..p-1 with sigma[p-1] == 0, and the witness path visits
// x[s[p-1]], ..., x[s[0]], y[s[sigma[0]]], ..., y[s[sigma[p-1]]]. All 2p-1
// path edges are host edges, and since each pair is monochromatic the path
// carries at most p colors, none unique.
struct PathWitness {
    std::vector<int> s;
    std::vector<int> sigma;
    std::vector<int> path;
};

// the 2p-1 edges of the (s, sigma) structure, in path order
std::vector<std::pair<int, int>> witness_edges(const PairFamily& pf,
                                               const std::vector<int>& s,
                                               const std::vector<int>& sigma);

// lexicographically first (s, sigma) whose structure is fully present in g
std::optional<PathWitness> find_pair_path(const Graph& g, const PairFamily& pf, int p);

struct PairPathEvent {
    std::vector<int> s;
    std::vector<int> sigma;
};

// every (s, sigma) structure over m pairs; count is m*(m-1)*...*(m-p+1)*(p-1)!
std::vector<PairPathEvent> enumerate_events(int m, int p);

// expected number of structures present in G(n,q) with m = n/4 pairs:
// (m)_p * (p-1)! * q^(2p-1)
double janson_mu(std::int64_t n, int p, double q);

// upper bound on the pairwise dependency sum: ordered event pairs sharing i
// pair indices are counted by C(m,i) C(m-i,p-i) C(m-p,p-i) (p!(p-1)!)^2 and
// each contributes at most q^(4p-2i); the i = p term also covers identical
// pairs, which only loosens the bound
double janson_delta_upper(std::int64_t n, int p, double q);

struct JansonReport {
    std::int64_t n = 0;
    int p = 0;
    double q = 0;
    std::int64_t m = 0;
    double mu = 0;
    double delta_upper = 0;
    double zero_prob_upper = 0;          // exp(-mu + delta/2); may underflow to 0
    double log_zero_prob_upper = 0;      // -mu + delta/2
    double log_coloring_count_bound = 0; // (n/2) ln n
    double log_union_bound_product = 0;
    bool union_bound_succeeds = false;   // product < 1
};

JansonReport janson_report(std::int64_t n, int p, std::optional<double> q_override = {});

struct ProbeParams {
    int n = 16;
    int p = 2; // requires p >= 2 and n >= 4p
    std::uint64_t seed = 1;
    int trials = 50;
    std::optional<double> q_override; // default: q_threshold(n, p)
    int colorings_per_trial = 20;     // random colorings with ceil(n/2) colors
    int exact_limit = 12;             // n above this: greedy upper bound instead
    SolveBudget budget{200'000, 0.0};
};

struct ExperimentRow {
    int trial = 0;
    std::uint64_t seed = 0;
    int n = 0;
    int p = 0;
    double q = 0;
    int max_degree = 0;
    double target_bound = 0; // (1/96e) * d^(2-1/p) * p * (ln d)^(-1/p)
    int chi = 0;
    std::string status; // exact | lower_bound_only | timeout | greedy_upper
    double violated_fraction = 0;
    bool witness_found = false;
};

// per-trial pipeline: sample G(n,q) with seed derive_seed(master, trial),
// record the degree and the degree-based coloring target, bound chi_p, then
// probe random ceil(n/2)-colorings for violations (pair-path search first,
// generic verifier as fallback). Budget exhaustion is recorded in the row's
// status; the sweep always completes.
std::vector<ExperimentRow> lower_bound_experiment(const ProbeParams& params);

std::string experiment_csv(const std::vector<ExperimentRow>& rows);

} // namespace pcc
