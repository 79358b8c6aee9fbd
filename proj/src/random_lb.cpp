#include "pcc/random_lb.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pcc/generators.hpp"
#include "pcc/rng.hpp"

namespace pcc {

namespace {

// log of ((12e/p)^p * n^(1-p) * ln n)^(1/(2p-1))
double log_q_threshold(std::int64_t n, int p) {
    double ln_n = std::log(static_cast<double>(n));
    double ln_coef = std::log(12.0) + 1.0 - std::log(static_cast<double>(p));
    return (p * ln_coef + (1.0 - p) * ln_n + std::log(ln_n)) / (2.0 * p - 1.0);
}

void check_threshold_args(std::int64_t n, int p) {
    if (p < 1) throw std::invalid_argument("q_threshold: p must be >= 1");
    if (n < 2) throw std::invalid_argument("q_threshold: n must be >= 2");
}

} // namespace

double q_threshold(std::int64_t n, int p) {
    check_threshold_args(n, p);
    double lq = log_q_threshold(n, p);
    if (lq > 0.0) {
        std::ostringstream msg;
        msg << "q_threshold: value " << std::exp(lq) << " exceeds 1 at n = " << n
            << " for p = " << p << "; ";
        if (p >= 2)
            msg << "smallest valid n is " << min_valid_n(p);
        else
            msg << "no n is valid for p = 1";
        throw std::range_error(msg.str());
    }
    return std::exp(lq);
}

std::int64_t min_valid_n(int p) {
    if (p < 2)
        throw std::range_error("min_valid_n: the threshold exceeds 1 for every n when p < 2");
    if (log_q_threshold(2, p) <= 0.0) return 2;
    // decreasing in n from n = 3 on, so binary search for the crossing
    std::int64_t lo = 3, hi = 4;
    while (log_q_threshold(hi, p) > 0.0) {
        hi *= 2;
        if (hi > (std::int64_t{1} << 60))
            throw std::range_error("min_valid_n: no crossing found");
    }
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (log_q_threshold(mid, p) <= 0.0)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::pair<double, double> degree_window(std::int64_t n, int p) {
    return degree_window_at(n, q_threshold(n, p));
}

std::pair<double, double> degree_window_at(std::int64_t n, double q) {
    double expected = static_cast<double>(n) * q;
    return {expected / 2.0, 2.0 * expected};
}

PairFamily select_pairs(const Coloring& f, int m) {
    if (m < 1) throw std::invalid_argument("select_pairs: m must be >= 1");
    if (f.k < 1) throw std::invalid_argument("select_pairs: coloring must have k >= 1");
    int n = static_cast<int>(f.colors.size());
    for (int c : f.colors)
        if (c < 0 || c >= f.k)
            throw std::invalid_argument("select_pairs: color out of range");
    std::vector<std::vector<int>> classes(f.k);
    for (int v = 0; v < n; ++v) classes[f.colors[v]].push_back(v);
    // round-robin over color classes: round j takes each class's j-th pair
    // (consecutive ids within the class) before any class yields its next one
    PairFamily pf;
    for (std::size_t round = 0; pf.size() < m; ++round) {
        bool any = false;
        for (int c = 0; c < f.k && pf.size() < m; ++c) {
            const auto& cls = classes[c];
            if (2 * round + 1 < cls.size()) {
                pf.pairs.emplace_back(cls[2 * round], cls[2 * round + 1]);
                any = true;
            }
        }
        if (!any) break;
    }
    if (pf.size() < m) {
        std::ostringstream msg;
        msg << "select_pairs: needed " << m << " disjoint monochromatic pairs, found "
            << pf.size();
        throw insufficient_pairs(msg.str());
    }
    return pf;
}

namespace {

void validate_pairs(const Graph& g, const PairFamily& pf) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (auto [x, y] : pf.pairs) {
        if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
            throw std::invalid_argument("pair family: vertex out of range");
        if (x == y || seen[x] || seen[y])
            throw std::invalid_argument("pair family: pairs must be disjoint");
        seen[x] = seen[y] = 1;
    }
}

// true when the sigma edges (one x-y bridge plus the y-chain) are present
bool sigma_realized(const Graph& g, const PairFamily& pf, const std::vector<int>& s,
                    const std::vector<int>& sigma) {
    int p = static_cast<int>(s.size());
    if (!g.has_edge(pf.pairs[s[0]].first, pf.pairs[s[sigma[0]]].second)) return false;
    for (int i = 0; i + 1 < p; ++i)
        if (!g.has_edge(pf.pairs[s[sigma[i]]].second, pf.pairs[s[sigma[i + 1]]].second))
            return false;
    return true;
}

std::vector<int> witness_path(const PairFamily& pf, const std::vector<int>& s,
                              const std::vector<int>& sigma) {
    int p = static_cast<int>(s.size());
    std::vector<int> path;
    path.reserve(2 * p);
    for (int i = p - 1; i >= 0; --i) path.push_back(pf.pairs[s[i]].first);
    for (int i = 0; i < p; ++i) path.push_back(pf.pairs[s[sigma[i]]].second);
    return path;
}

// enumerates sigma in lexicographic order (last entry pinned to 0); returns
// the first realized one
std::optional<std::vector<int>> first_sigma(const Graph& g, const PairFamily& pf,
                                            const std::vector<int>& s) {
    int p = static_cast<int>(s.size());
    std::vector<int> sigma(p);
    std::iota(sigma.begin(), sigma.end() - 1, 1);
    sigma[p - 1] = 0;
    do {
        if (sigma_realized(g, pf, s, sigma)) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end() - 1));
    return std::nullopt;
}

bool extend_tuple(const Graph& g, const PairFamily& pf, int p, std::vector<int>& s,
                  std::vector<char>& used, PathWitness& out) {
    int m = pf.size();
    if (static_cast<int>(s.size()) == p) {
        auto sigma = first_sigma(g, pf, s);
        if (!sigma) return false;
        out = PathWitness{s, *sigma, witness_path(pf, s, *sigma)};
        return true;
    }
    for (int j = 0; j < m; ++j) {
        if (used[j]) continue;
        // the x-vertices of consecutive tuple entries must be adjacent
        if (!s.empty() && !g.has_edge(pf.pairs[s.back()].first, pf.pairs[j].first))
            continue;
        used[j] = 1;
        s.push_back(j);
        if (extend_tuple(g, pf, p, s, used, out)) return true;
        s.pop_back();
        used[j] = 0;
    }
    return false;
}

} // namespace

std::vector<std::pair<int, int>> witness_edges(const PairFamily& pf,
                                               const std::vector<int>& s,
                                               const std::vector<int>& sigma) {
    int p = static_cast<int>(s.size());
    if (static_cast<int>(sigma.size()) != p || p < 1)
        throw std::invalid_argument("witness_edges: s and sigma must have equal size >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * p - 1);
    for (int i = p - 1; i >= 1; --i)
        edges.emplace_back(pf.pairs[s[i]].first, pf.pairs[s[i - 1]].first);
    edges.emplace_back(pf.pairs[s[0]].first, pf.pairs[s[sigma[0]]].second);
    for (int i = 0; i + 1 < p; ++i)
        edges.emplace_back(pf.pairs[s[sigma[i]]].second, pf.pairs[s[sigma[i + 1]]].second);
    return edges;
}

std::optional<PathWitness> find_pair_path(const Graph& g, const PairFamily& pf, int p) {
    if (p < 1) throw std::invalid_argument("find_pair_path: p must be >= 1");
    validate_pairs(g, pf);
    if (p > pf.size()) return std::nullopt;
    std::vector<int> s;
    s.reserve(p);
    std::vector<char> used(pf.size(), 0);
    PathWitness out;
    if (extend_tuple(g, pf, p, s, used, out)) return out;
    return std::nullopt;
}

namespace {

void enumerate_tuples(int m, int p, std::vector<int>& s, std::vector<char>& used,
                      std::vector<PairPathEvent>& out) {
    if (static_cast<int>(s.size()) == p) {
        std::vector<int> sigma(p);
        std::iota(sigma.begin(), sigma.end() - 1, 1);
        sigma[p - 1] = 0;
        do {
            out.push_back(PairPathEvent{s, sigma});
        } while (std::next_permutation(sigma.begin(), sigma.end() - 1));
        return;
    }
    for (int j = 0; j < m; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        s.push_back(j);
        enumerate_tuples(m, p, s, used, out);
        s.pop_back();
        used[j] = 0;
    }
}

double binom(std::int64_t a, int b) {
    if (b < 0 || a < b) return 0.0;
    double r = 1.0;
    for (int i = 0; i < b; ++i) r = r * static_cast<double>(a - i) / (i + 1);
    return r;
}

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

void check_janson_args(std::int64_t n, int p, double q) {
    if (p < 1) throw std::invalid_argument("janson: p must be >= 1");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("janson: q must lie in [0, 1]");
    if (n / 4 < p) throw std::invalid_argument("janson: need n/4 >= p pairs");
}

} // namespace

std::vector<PairPathEvent> enumerate_events(int m, int p) {
    if (m < 0 || p < 1) throw std::invalid_argument("enumerate_events: need m >= 0, p >= 1");
    std::vector<PairPathEvent> out;
    if (p > m) return out;
    std::vector<int> s;
    s.reserve(p);
    std::vector<char> used(m, 0);
    enumerate_tuples(m, p, s, used, out);
    return out;
}

double janson_mu(std::int64_t n, int p, double q) {
    check_janson_args(n, p, q);
    std::int64_t m = n / 4;
    double falling = 1.0;
    for (int i = 0; i < p; ++i) falling *= static_cast<double>(m - i);
    return falling * factorial(p - 1) * std::pow(q, 2.0 * p - 1.0);
}

double janson_delta_upper(std::int64_t n, int p, double q) {
    check_janson_args(n, p, q);
    std::int64_t m = n / 4;
    double orderings = factorial(p) * factorial(p - 1);
    double sum = 0.0;
    for (int i = 2; i <= p; ++i) {
        double ways = binom(m, i) * binom(m - i, p - i) * binom(m - p, p - i);
        sum += ways * orderings * orderings * std::pow(q, 4.0 * p - 2.0 * i);
    }
    return sum;
}

JansonReport janson_report(std::int64_t n, int p, std::optional<double> q_override) {
    double q = q_override ? *q_override : q_threshold(n, p);
    check_janson_args(n, p, q);
    JansonReport r;
    r.n = n;
    r.p = p;
    r.q = q;
    r.m = n / 4;
    r.mu = janson_mu(n, p, q);
    r.delta_upper = janson_delta_upper(n, p, q);
    r.log_zero_prob_upper = -r.mu + r.delta_upper / 2.0;
    r.zero_prob_upper = std::exp(r.log_zero_prob_upper);
    double ln_n = std::log(static_cast<double>(n));
    r.log_coloring_count_bound = (static_cast<double>(n) / 2.0) * ln_n;
    r.log_union_bound_product = r.log_coloring_count_bound + r.log_zero_prob_upper;
    r.union_bound_succeeds = r.log_union_bound_product < 0.0;
    return r;
}

namespace {

std::string solve_status_name(SolveResult::Status s) {
    switch (s) {
    case SolveResult::Status::exact: return "exact";
    case SolveResult::Status::lower_bound_only: return "lower_bound_only";
    default: return "timeout";
    }
}

double degree_target(int d, int p) {
    if (d < 2) return 0.0;
    double c = 1.0 / (96.0 * std::exp(1.0));
    double dd = static_cast<double>(d);
    return c * std::pow(dd, 2.0 - 1.0 / p) * p * std::pow(std::log(dd), -1.0 / p);
}

// violation probe for one random coloring: pair-path search when enough
// monochromatic pairs exist, generic verification otherwise
bool coloring_violated(const Graph& g, const Coloring& f, int p, bool& via_witness) {
    int m = g.vertex_count() / 4;
    try {
        PairFamily pf = select_pairs(f, m);
        if (auto w = find_pair_path(g, pf, p)) {
            via_witness = true;
            return true;
        }
    } catch (const insufficient_pairs&) {
    }
    return !is_p_centered(g, f, p).centered;
}

} // namespace

std::vector<ExperimentRow> lower_bound_experiment(const ProbeParams& params) {
    if (params.p < 2) throw std::invalid_argument("experiment: p must be >= 2");
    if (params.n < 4 * params.p)
        throw std::invalid_argument("experiment: need n >= 4p");
    if (params.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (params.colorings_per_trial < 0)
        throw std::invalid_argument("experiment: colorings_per_trial must be >= 0");
    double q = params.q_override ? *params.q_override : q_threshold(params.n, params.p);
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("experiment: q must lie in [0, 1]");

    std::vector<ExperimentRow> rows;
    rows.reserve(params.trials);
    int k = (params.n + 1) / 2;
    for (int trial = 0; trial < params.trials; ++trial) {
        std::uint64_t seed_i = derive_seed(params.seed, trial);
        Graph g = gnp(params.n, q, seed_i);
        ExperimentRow row;
        row.trial = trial;
        row.seed = seed_i;
        row.n = params.n;
        row.p = params.p;
        row.q = q;
        row.max_degree = max_degree(g);
        row.target_bound = degree_target(row.max_degree, params.p);
        if (params.n <= params.exact_limit) {
            SolveResult res = chi_p_exact(g, params.p, params.budget);
            row.chi = res.chi;
            row.status = solve_status_name(res.status);
        } else {
            Coloring f = chi_p_greedy(g, params.p, VertexOrder::degree_descending, seed_i);
            row.chi = f.k;
            row.status = "greedy_upper";
        }
        int violated = 0;
        for (int j = 0; j < params.colorings_per_trial; ++j) {
            SplitMix64 crng(derive_seed(seed_i, j + 1));
            Coloring f{k, std::vector<int>(params.n)};
            for (int v = 0; v < params.n; ++v)
                f.colors[v] = static_cast<int>(crng.below(static_cast<std::uint64_t>(k)));
            bool via_witness = false;
            if (coloring_violated(g, f, params.p, via_witness)) ++violated;
            if (via_witness) row.witness_found = true;
        }
        row.violated_fraction = params.colorings_per_trial > 0
                                    ? static_cast<double>(violated) / params.colorings_per_trial
                                    : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::string out =
        "trial,seed,n,p,q,max_degree,target_bound,chi_exact_or_bound,status,"
        "violated_fraction,witness_found\n";
    for (const auto& r : rows) {
        out += std::to_string(r.trial);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.p);
        out += ',';
        out += format_double(r.q);
        out += ',';
        out += std::to_string(r.max_degree);
        out += ',';
        out += format_double(r.target_bound);
        out += ',';
        out += std::to_string(r.chi);
        out += ',';
        out += r.status;
        out += ',';
        out += format_double(r.violated_fraction);
        out += ',';
        out += r.witness_found ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace pcc
