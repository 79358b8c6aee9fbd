#include <doctest.h>

#include <cmath>
#include <set>

#include "pcc/centered.hpp"
#include "pcc/generators.hpp"
#include "pcc/random_lb.hpp"
#include "pcc/rng.hpp"

using namespace pcc;

namespace {

Coloring make_coloring(int k, std::vector<int> colors) {
    Coloring f;
    f.k = k;
    f.colors = std::move(colors);
    return f;
}

// independent long-double evaluation of the threshold formula
long double reference_q(long double n, int p) {
    long double ln_n = std::log(n);
    long double base = std::pow(12.0L * std::exp(1.0L) / p, (long double)p) *
                       std::pow(n, 1.0L - p) * ln_n;
    return std::pow(base, 1.0L / (2 * p - 1));
}

int count_realized(const Graph& g, const PairFamily& pf,
                   const std::vector<PairPathEvent>& events) {
    int count = 0;
    for (const auto& ev : events) {
        bool ok = true;
        for (auto [u, v] : witness_edges(pf, ev.s, ev.sigma))
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

double binom_ref(long long a, int b) {
    if (b < 0 || a < b) return 0.0;
    double r = 1;
    for (int i = 0; i < b; ++i) r = r * double(a - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("threshold value matches an independent high-precision evaluation") {
    CHECK(q_threshold(1'000'000, 2) ==
          doctest::Approx((double)reference_q(1e6L, 2)).epsilon(1e-12));
    CHECK(q_threshold(1'000'000, 2) == doctest::Approx(0.154319023987).epsilon(1e-9));
    CHECK(q_threshold(2026, 2) == doctest::Approx(0.999888).epsilon(1e-4));
    CHECK(q_threshold(2000, 3) == doctest::Approx(0.300313).epsilon(1e-4));
    CHECK(q_threshold(100'000, 4) ==
          doctest::Approx((double)reference_q(1e5L, 4)).epsilon(1e-12));
}

TEST_CASE("threshold errors below the valid range and names the boundary") {
    CHECK_THROWS_AS(q_threshold(2000, 2), std::range_error);
    try {
        q_threshold(2000, 2);
    } catch (const std::range_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("2026") != std::string::npos);
    }
    CHECK_THROWS_AS(q_threshold(16, 2), std::range_error);
    CHECK_THROWS_AS(q_threshold(1000, 1), std::range_error);
    CHECK_THROWS_AS(q_threshold(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(q_threshold(100, 0), std::invalid_argument);
}

TEST_CASE("smallest valid n per budget") {
    CHECK(min_valid_n(2) == 2026);
    CHECK(min_valid_n(3) == 75);
    CHECK(min_valid_n(4) == 25);
    CHECK_THROWS_AS(min_valid_n(1), std::range_error);
    // boundary: valid at the reported n, invalid just below
    CHECK_NOTHROW(q_threshold(2026, 2));
    CHECK_THROWS_AS(q_threshold(2025, 2), std::range_error);
    CHECK_NOTHROW(q_threshold(75, 3));
    CHECK_THROWS_AS(q_threshold(74, 3), std::range_error);
}

TEST_CASE("threshold decreases in n") {
    for (int p : {2, 3, 4}) {
        double prev = 2.0;
        for (std::int64_t n : {3000, 10'000, 100'000, 1'000'000, 10'000'000}) {
            double q = q_threshold(n, p);
            CHECK(q < prev);
            prev = q;
        }
    }
}

TEST_CASE("degree window is (nq/2, 2nq)") {
    auto [lo, hi] = degree_window(1'000'000, 2);
    CHECK(hi == doctest::Approx(4.0 * lo));
    CHECK(lo == doctest::Approx(77159.5).epsilon(1e-4));
    auto [lo2, hi2] = degree_window_at(100, 0.3);
    CHECK(lo2 == doctest::Approx(15.0));
    CHECK(hi2 == doctest::Approx(60.0));
}

TEST_CASE("pair selection visits color classes round-robin") {
    // classes {0,1,2,3} and {4,5,6,7}: first pair of each class comes first
    Coloring f = make_coloring(2, {0, 0, 0, 0, 1, 1, 1, 1});
    PairFamily two = select_pairs(f, 2);
    REQUIRE(two.size() == 2);
    CHECK(two.pairs[0] == std::pair<int, int>{0, 1});
    CHECK(two.pairs[1] == std::pair<int, int>{4, 5});
    PairFamily four = select_pairs(f, 4);
    REQUIRE(four.size() == 4);
    CHECK(four.pairs[2] == std::pair<int, int>{2, 3});
    CHECK(four.pairs[3] == std::pair<int, int>{6, 7});

    // a single class of size 2m yields m pairs
    Coloring mono = make_coloring(1, std::vector<int>(6, 0));
    PairFamily three = select_pairs(mono, 3);
    REQUIRE(three.size() == 3);
    CHECK(three.pairs[2] == std::pair<int, int>{4, 5});

    // interleaved ids pair by position within the class, not adjacency
    Coloring mixed = make_coloring(2, {0, 1, 0, 1, 0, 1});
    PairFamily pf = select_pairs(mixed, 2);
    CHECK(pf.pairs[0] == std::pair<int, int>{0, 2});
    CHECK(pf.pairs[1] == std::pair<int, int>{1, 3});
}

TEST_CASE("pair selection fails loudly when pairs run out") {
    Coloring distinct = make_coloring(4, {0, 1, 2, 3});
    CHECK_THROWS_AS(select_pairs(distinct, 1), insufficient_pairs);
    Coloring f = make_coloring(2, {0, 0, 1, 1});
    CHECK_THROWS_AS(select_pairs(f, 3), insufficient_pairs);
    try {
        select_pairs(f, 3);
    } catch (const insufficient_pairs& e) {
        std::string msg = e.what();
        CHECK(msg.find("3") != std::string::npos);
        CHECK(msg.find("2") != std::string::npos);
    }
    CHECK_THROWS_AS(select_pairs(f, 0), std::invalid_argument);
}

TEST_CASE("pair path search finds the alternating-path structure") {
    // pairs (0,1) and (2,3); edges form x2-x1-y2-y1 with x1=0,y1=1,x2=2,y2=3
    Graph g(4, {{0, 2}, {0, 3}, {1, 3}});
    PairFamily pf;
    pf.pairs = {{0, 1}, {2, 3}};
    auto w = find_pair_path(g, pf, 2);
    REQUIRE(w);
    CHECK(w->s == std::vector<int>{0, 1});
    CHECK(w->sigma == std::vector<int>{1, 0});
    CHECK(w->path == std::vector<int>{2, 0, 3, 1});
    // the witness path edges all exist in order
    auto edges = witness_edges(pf, w->s, w->sigma);
    REQUIRE(edges.size() == 3);
    for (auto [u, v] : edges) CHECK(g.has_edge(u, v));
}

TEST_CASE("pair path search is exhaustive and lexicographically first") {
    // complete graph on pair vertices: a witness always exists, s=(0,1) first
    Graph k8 = clique_graph(8);
    PairFamily pf;
    pf.pairs = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    for (int p = 1; p <= 4; ++p) {
        auto w = find_pair_path(k8, pf, p);
        REQUIRE(w);
        std::vector<int> expect_s;
        for (int i = 0; i < p; ++i) expect_s.push_back(i);
        CHECK(w->s == expect_s);
        CHECK(static_cast<int>(w->path.size()) == 2 * p);
    }
    // edgeless graph: none
    Graph empty(8, {});
    CHECK_FALSE(find_pair_path(empty, pf, 2));
    // more pairs requested than available: none
    CHECK_FALSE(find_pair_path(k8, pf, 5));
}

TEST_CASE("every found pair path violates p-centeredness on its vertices") {
    std::uint64_t seed = 600;
    int found = 0;
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = gnp(16, 0.45, ++seed);
        Coloring f = make_coloring(8, {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7});
        PairFamily pf = select_pairs(f, 4);
        for (int p = 2; p <= 3; ++p) {
            auto w = find_pair_path(g, pf, p);
            if (!w) continue;
            ++found;
            VertexSet vs(w->path);
            std::sort(vs.begin(), vs.end());
            Graph sub = induced_subgraph(g, vs);
            std::vector<int> sub_colors(vs.size());
            for (std::size_t i = 0; i < vs.size(); ++i) sub_colors[i] = f.colors[vs[i]];
            Verdict verdict = is_p_centered(sub, make_coloring(f.k, sub_colors), p);
            CHECK_FALSE(verdict.centered);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("pair path validation") {
    Graph g(4, {{0, 1}});
    PairFamily overlapping;
    overlapping.pairs = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(find_pair_path(g, overlapping, 1), std::invalid_argument);
    PairFamily degenerate;
    degenerate.pairs = {{2, 2}};
    CHECK_THROWS_AS(find_pair_path(g, degenerate, 1), std::invalid_argument);
    PairFamily fine;
    fine.pairs = {{0, 1}};
    CHECK_THROWS_AS(find_pair_path(g, fine, 0), std::invalid_argument);
    // p=1 structure is a single pair joined by its own edge
    auto w = find_pair_path(g, fine, 1);
    REQUIRE(w);
    CHECK(w->path == std::vector<int>{0, 1});
}

TEST_CASE("event enumeration counts (m)_p (p-1)!") {
    for (int m = 0; m <= 5; ++m) {
        for (int p = 1; p <= 3; ++p) {
            auto events = enumerate_events(m, p);
            long long expect = 1;
            for (int i = 0; i < p; ++i) expect *= (m - i);
            if (p > m) expect = 0;
            for (int i = 2; i < p; ++i) expect *= i; // (p-1)!
            CHECK(static_cast<long long>(events.size()) == std::max(0LL, expect));
            // all events distinct and well-formed
            std::set<std::pair<std::vector<int>, std::vector<int>>> uniq;
            for (const auto& ev : events) {
                CHECK(static_cast<int>(ev.s.size()) == p);
                CHECK(ev.sigma.back() == 0);
                uniq.insert({ev.s, ev.sigma});
            }
            CHECK(uniq.size() == events.size());
        }
    }
}

TEST_CASE("mu on frozen references") {
    CHECK(janson_mu(16, 2, 0.5) == doctest::Approx(1.5));
    CHECK(janson_mu(16, 2, 0.25) == doctest::Approx(12.0 * std::pow(0.25, 3)));
    CHECK(janson_mu(24, 2, 0.3) == doctest::Approx(30.0 * std::pow(0.3, 3)));
    CHECK_THROWS_AS(janson_mu(8, 3, 0.5), std::invalid_argument); // m = 2 < p
    CHECK_THROWS_AS(janson_mu(16, 2, 1.5), std::invalid_argument);
}

TEST_CASE("mu dominates (3/2) n ln n at the threshold") {
    for (int p : {2, 3, 4}) {
        for (std::int64_t n : {10'000LL, 100'000LL, 1'000'000LL, 10'000'000LL, 100'000'000LL}) {
            if (p == 2 && n < 2026) continue;
            double q = q_threshold(n, p);
            double mu = janson_mu(n, p, q);
            CHECK(mu >= 1.5 * double(n) * std::log(double(n)));
        }
    }
}

TEST_CASE("delta upper bound: closed form and exhaustive pair counting") {
    CHECK(janson_delta_upper(16, 2, 0.5) == doctest::Approx(24.0 * std::pow(0.5, 4)));
    // ordered event pairs (including identical ones at full overlap) whose
    // supports share exactly i indices, counted literally
    for (int m = 2; m <= 5; ++m) {
        for (int p = 2; p <= 3; ++p) {
            if (p > m) continue;
            auto events = enumerate_events(m, p);
            for (int i = 2; i <= p; ++i) {
                long long literal = 0;
                for (const auto& a : events) {
                    std::set<int> sa(a.s.begin(), a.s.end());
                    for (const auto& b : events) {
                        int shared = 0;
                        for (int x : b.s) shared += sa.count(x);
                        if (shared == i) ++literal;
                    }
                }
                double formula = binom_ref(m, i) * binom_ref(m - i, p - i) *
                                 binom_ref(m - p, p - i);
                double orderings = 1;
                for (int x = 2; x <= p; ++x) orderings *= x;
                for (int x = 2; x <= p - 1; ++x) orderings *= x;
                formula *= orderings * orderings;
                CHECK(double(literal) == doctest::Approx(formula));
            }
        }
    }
}

TEST_CASE("mu matches the Monte-Carlo mean of the structure count") {
    struct Combo {
        int n, p;
        double q;
    };
    for (Combo c : {Combo{16, 2, 0.5}, Combo{16, 2, 0.25}, Combo{24, 2, 0.3}}) {
        int m = c.n / 4;
        PairFamily pf;
        for (int i = 0; i < m; ++i) pf.pairs.emplace_back(2 * i, 2 * i + 1);
        auto events = enumerate_events(m, c.p);
        const int samples = 20'000;
        double sum = 0, sum_sq = 0;
        for (int i = 0; i < samples; ++i) {
            Graph g = gnp(c.n, c.q, derive_seed(0xABCD, i));
            int x = count_realized(g, pf, events);
            sum += x;
            sum_sq += double(x) * x;
        }
        double mean = sum / samples;
        double var = sum_sq / samples - mean * mean;
        double sigma = std::sqrt(std::max(var, 1e-12) / samples);
        double mu = janson_mu(c.n, c.p, c.q);
        CHECK(std::abs(mean - mu) <= 3.5 * sigma);
    }
}

TEST_CASE("zero-probability report wiring") {
    JansonReport r = janson_report(16, 2, 0.5);
    CHECK(r.m == 4);
    CHECK(r.mu == doctest::Approx(1.5));
    CHECK(r.delta_upper == doctest::Approx(1.5));
    CHECK(r.log_zero_prob_upper == doctest::Approx(-1.5 + 0.75));
    CHECK(r.zero_prob_upper == doctest::Approx(std::exp(-0.75)));
    CHECK(r.log_coloring_count_bound == doctest::Approx(8.0 * std::log(16.0)));
    CHECK(r.log_union_bound_product ==
          doctest::Approx(r.log_coloring_count_bound + r.log_zero_prob_upper));
    CHECK(r.union_bound_succeeds == (r.log_union_bound_product < 0.0));
    CHECK_FALSE(r.union_bound_succeeds);

    // large-n regime: the default threshold makes the union bound succeed
    JansonReport big = janson_report(1'000'000, 2);
    CHECK(big.q == doctest::Approx(q_threshold(1'000'000, 2)));
    CHECK(big.mu >= 1.5e6 * std::log(1e6));
    CHECK(big.zero_prob_upper == 0.0); // underflows; the log field carries it
    CHECK(big.log_union_bound_product < 0.0);
    CHECK(big.union_bound_succeeds);
}

TEST_CASE("experiment rows are deterministic and internally consistent") {
    ProbeParams params;
    params.n = 16;
    params.p = 2;
    params.seed = 99;
    params.trials = 6;
    params.q_override = 0.5;
    params.colorings_per_trial = 10;
    params.exact_limit = 16;
    params.budget.max_nodes = 2'000'000;
    auto rows = lower_bound_experiment(params);
    auto rows2 = lower_bound_experiment(params);
    REQUIRE(rows.size() == 6);
    CHECK(experiment_csv(rows) == experiment_csv(rows2));
    for (int i = 0; i < 6; ++i) {
        const auto& row = rows[i];
        CHECK(row.trial == i);
        CHECK(row.seed == derive_seed(99, i));
        CHECK(row.q == 0.5);
        CHECK(row.status == "exact");
        CHECK(row.chi >= greedy_clique_size(gnp(16, 0.5, row.seed)));
        CHECK(row.max_degree == max_degree(gnp(16, 0.5, row.seed)));
        CHECK(row.violated_fraction >= 0.0);
        CHECK(row.violated_fraction <= 1.0);
        if (row.max_degree >= 2) CHECK(row.target_bound > 0.0);
    }
}

TEST_CASE("experiment validation and greedy fallback") {
    ProbeParams bad;
    bad.p = 1;
    CHECK_THROWS_AS(lower_bound_experiment(bad), std::invalid_argument);
    ProbeParams tiny;
    tiny.n = 7;
    tiny.p = 2;
    CHECK_THROWS_AS(lower_bound_experiment(tiny), std::invalid_argument);

    ProbeParams greedy;
    greedy.n = 16;
    greedy.p = 2;
    greedy.q_override = 0.5;
    greedy.trials = 2;
    greedy.colorings_per_trial = 4;
    greedy.exact_limit = 12; // n above the exact limit: upper bound rows
    auto rows = lower_bound_experiment(greedy);
    for (const auto& row : rows) CHECK(row.status == "greedy_upper");
}

TEST_CASE("experiment csv layout") {
    ProbeParams params;
    params.n = 16;
    params.p = 2;
    params.seed = 5;
    params.trials = 2;
    params.q_override = 0.5;
    params.colorings_per_trial = 3;
    params.exact_limit = 16;
    std::string csv = experiment_csv(lower_bound_experiment(params));
    CHECK(csv.find("trial,seed,n,p,q,max_degree,target_bound,chi_exact_or_bound,status,"
                   "violated_fraction,witness_found\n") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.find("exact") != std::string::npos);
}
