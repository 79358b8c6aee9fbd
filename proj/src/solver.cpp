#include "pcc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "pcc/rng.hpp"

namespace pcc {

int greedy_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

namespace {

class CenteredSearch {
public:
    CenteredSearch(const Graph& g, int p, const SolveBudget& budget, SolveStats& stats)
        : g_(g), p_(p), budget_(budget), stats_(stats), n_(g.vertex_count()),
          col_(n_, -1), stamp_(n_, 0),
          start_(std::chrono::steady_clock::now()) {}

    // true iff a p-centered coloring with k colors exists; budget_hit() set
    // when the search was cut short
    bool run(int k) {
        k_ = k;
        use_count_.assign(k, 0);
        comp_buf_.reserve(n_);
        return assign(0);
    }

    bool budget_hit() const { return budget_hit_; }
    const std::vector<int>& coloring() const { return col_; }

private:
    const Graph& g_;
    int p_;
    SolveBudget budget_;
    SolveStats& stats_;
    int n_;
    int k_ = 0;
    std::vector<int> col_;
    std::vector<int> use_count_;
    std::vector<int> stamp_;
    int stamp_now_ = 0;
    std::vector<int> comp_buf_;
    bool budget_hit_ = false;
    std::chrono::steady_clock::time_point start_;

    bool out_of_budget() {
        if (stats_.nodes >= budget_.max_nodes) return true;
        if (budget_.max_seconds > 0 && (stats_.nodes & 0xFFF) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() >= budget_.max_seconds) return true;
        }
        return false;
    }

    bool assign(int v) {
        if (budget_hit_) return false;
        if (v == n_) {
            ++stats_.colorings_tested;
            return true;
        }
        int max_used = 0;
        for (int c = 0; c < k_; ++c)
            if (use_count_[c] > 0) max_used = c + 1;
        const int top = std::min(k_ - 1, max_used); // symmetry: at most one new color
        for (int c = 0; c <= top; ++c) {
            ++stats_.nodes;
            if (out_of_budget()) { budget_hit_ = true; return false; }
            col_[v] = c;
            ++use_count_[c];
            if (prefix_ok(v) && assign(v + 1)) return true;
            --use_count_[c];
            col_[v] = -1;
            if (budget_hit_) return false;
        }
        return false;
    }

    // Is the colored prefix 0..v still completable? A connected set of
    // colored vertices with at most p colors and no unique color is a
    // violating subgraph of every completion, so the branch dies. Any such
    // set that first became violating when v got its color lies, for some
    // color set S containing col_[v], inside v's component of the S-colored
    // prefix; checking those components after every assignment catches every
    // violation by the time its last vertex is colored.
    bool prefix_ok(int v) {
        if (p_ >= (v + 1) / 2) return prefix_no_unique_free(v);
        const int c = col_[v];
        std::vector<int> others;
        for (int d = 0; d < k_; ++d)
            if (d != c && use_count_[d] > 0) others.push_back(d);
        const int extra = std::min<int>(p_ - 1, static_cast<int>(others.size()));
        std::vector<char> in_s(k_, 0);
        in_s[c] = 1;
        std::vector<int> pick;
        return subsets_ok(v, others, 0, extra, in_s, pick);
    }

    bool subsets_ok(int v, const std::vector<int>& others, int from, int room,
                    std::vector<char>& in_s, std::vector<int>& pick) {
        if (!component_ok(v, in_s)) return false;
        if (room == 0) return true;
        for (int i = from; i < static_cast<int>(others.size()); ++i) {
            in_s[others[i]] = 1;
            pick.push_back(others[i]);
            bool ok = subsets_ok(v, others, i + 1, room - 1, in_s, pick);
            pick.pop_back();
            in_s[others[i]] = 0;
            if (!ok) return false;
        }
        return true;
    }

    // component of v within the colored, S-colored vertices: needs a color
    // appearing exactly once
    bool component_ok(int v, const std::vector<char>& in_s) {
        ++stamp_now_;
        comp_buf_.clear();
        comp_buf_.push_back(v);
        stamp_[v] = stamp_now_;
        for (std::size_t head = 0; head < comp_buf_.size(); ++head) {
            int u = comp_buf_[head];
            for (int w : g_.neighbors(u))
                if (col_[w] >= 0 && in_s[col_[w]] && stamp_[w] != stamp_now_) {
                    stamp_[w] = stamp_now_;
                    comp_buf_.push_back(w);
                }
        }
        std::vector<int> cnt(k_, 0);
        for (int u : comp_buf_) ++cnt[col_[u]];
        for (int u : comp_buf_)
            if (cnt[col_[u]] == 1) return true;
        return comp_buf_.empty(); // unreachable; v itself is in the component
    }

    // unique-color elimination over the whole colored prefix, for budgets so
    // large that the color-count condition cannot bind
    bool prefix_no_unique_free(int v) {
        std::vector<std::vector<int>> queue;
        {
            ++stamp_now_;
            for (int u = 0; u <= v; ++u) {
                if (stamp_[u] == stamp_now_) continue;
                std::vector<int> comp{u};
                stamp_[u] = stamp_now_;
                for (std::size_t head = 0; head < comp.size(); ++head)
                    for (int w : g_.neighbors(comp[head]))
                        if (w <= v && col_[w] >= 0 && stamp_[w] != stamp_now_) {
                            stamp_[w] = stamp_now_;
                            comp.push_back(w);
                        }
                queue.push_back(std::move(comp));
            }
        }
        std::vector<int> cnt(k_, 0);
        while (!queue.empty()) {
            std::vector<int> comp = std::move(queue.back());
            queue.pop_back();
            for (int u : comp) ++cnt[col_[u]];
            std::vector<int> kept;
            for (int u : comp)
                if (cnt[col_[u]] > 1) kept.push_back(u);
            for (int u : comp) --cnt[col_[u]]; // restore
            if (kept.size() == comp.size()) return false;
            if (kept.empty()) continue;
            // split kept into components
            ++stamp_now_;
            std::vector<char> in_kept(n_, 0);
            for (int u : kept) in_kept[u] = 1;
            for (int u : kept) {
                if (stamp_[u] == stamp_now_) continue;
                std::vector<int> comp2{u};
                stamp_[u] = stamp_now_;
                for (std::size_t head = 0; head < comp2.size(); ++head)
                    for (int w : g_.neighbors(comp2[head]))
                        if (in_kept[w] && stamp_[w] != stamp_now_) {
                            stamp_[w] = stamp_now_;
                            comp2.push_back(w);
                        }
                queue.push_back(std::move(comp2));
            }
        }
        return true;
    }
};

} // namespace

SolveResult chi_p_exact(const Graph& g, int p, const SolveBudget& budget) {
    if (p < 1) throw std::invalid_argument("chi_p_exact: p must be positive");
    SolveResult result;
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (n == 0) {
        result.status = SolveResult::Status::exact;
        result.chi = 0;
        result.coloring = Coloring{0, {}};
        return result;
    }
    const int lb = std::max(1, greedy_clique_size(g));
    CenteredSearch search(g, p, budget, result.stats);
    int k = lb;
    while (true) {
        bool found = search.run(k);
        if (found) {
            Coloring f{k, search.coloring()};
            Verdict check = is_p_centered(g, f, p);
            if (!check.centered)
                throw std::logic_error("chi_p_exact: internal search produced an invalid coloring");
            result.status = SolveResult::Status::exact;
            result.chi = k;
            result.coloring = std::move(f);
            break;
        }
        if (search.budget_hit()) {
            // palette k-1 (or the clique bound) is already proven infeasible
            result.status = k > lb ? SolveResult::Status::lower_bound_only
                                   : SolveResult::Status::timeout;
            result.chi = k;
            result.coloring.reset();
            break;
        }
        ++k; // exhausted: k colors are impossible
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    result.stats.elapsed_seconds = elapsed.count();
    return result;
}

Coloring chi_p_greedy(const Graph& g, int p, VertexOrder order, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (n == 0) return Coloring{0, {}};
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    switch (order) {
        case VertexOrder::natural: break;
        case VertexOrder::degree_descending:
            std::stable_sort(seq.begin(), seq.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });
            break;
        case VertexOrder::random: {
            SplitMix64 rng(seed);
            for (int i = n - 1; i > 0; --i) {
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
                std::swap(seq[i], seq[j]);
            }
            break;
        }
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[seq[i]] = i;

    Coloring f;
    f.colors.assign(n, -1);
    for (int v : seq) {
        std::vector<char> taken(n + 1, 0);
        for (int w : g.neighbors(v))
            if (f.colors[w] >= 0) taken[f.colors[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        f.colors[v] = c;
    }
    f.k = *std::max_element(f.colors.begin(), f.colors.end()) + 1;

    while (true) {
        Verdict verdict = is_p_centered(g, f, p);
        if (verdict.centered) break;
        const VertexSet& w = verdict.witness->vertices;
        int pick = w.front();
        for (int v : w)
            if (pos[v] > pos[pick]) pick = v;
        f.colors[pick] = f.k++;
    }
    return f;
}

namespace {

// plain proper-coloring backtracker, independent of the centered machinery
bool proper_colorable(const Graph& g, int k, std::vector<int>& col, int v) {
    const int n = g.vertex_count();
    if (v == n) return true;
    int max_used = -1;
    for (int u = 0; u < v; ++u) max_used = std::max(max_used, col[u]);
    const int top = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (w < v && col[w] == c) { ok = false; break; }
        if (!ok) continue;
        col[v] = c;
        if (proper_colorable(g, k, col, v + 1)) return true;
        col[v] = -1;
    }
    return false;
}

// does the colored prefix contain a 2-colored path on 4 vertices through v?
bool bicolored_p4_at(const Graph& g, const std::vector<int>& col, int v) {
    for (int a : g.neighbors(v)) {
        if (col[a] < 0) continue;
        for (int b : g.neighbors(a)) {
            if (b == v || col[b] < 0) continue;
            for (int c : g.neighbors(b)) {
                if (c == v || c == a || col[c] < 0) continue;
                // path v-a-b-c (v as an endpoint)
                if (col[v] == col[b] && col[a] == col[c]) return true;
            }
        }
    }
    for (int a : g.neighbors(v)) {
        if (col[a] < 0) continue;
        for (int b : g.neighbors(v)) {
            if (b == a || col[b] < 0) continue;
            for (int c : g.neighbors(b)) {
                if (c == v || c == a || col[c] < 0) continue;
                // path a-v-b-c (v as an inner vertex)
                if (col[a] == col[b] && col[v] == col[c]) return true;
            }
        }
    }
    return false;
}

bool star_colorable(const Graph& g, int k, std::vector<int>& col, int v) {
    const int n = g.vertex_count();
    if (v == n) return true;
    int max_used = -1;
    for (int u = 0; u < v; ++u) max_used = std::max(max_used, col[u]);
    const int top = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= top; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (w < v && col[w] == c) { ok = false; break; }
        if (!ok) continue;
        col[v] = c;
        if (!bicolored_p4_at(g, col, v) && star_colorable(g, k, col, v + 1)) return true;
        col[v] = -1;
    }
    return false;
}

void check_oracle_size(const Graph& g, int limit, const char* who) {
    if (g.vertex_count() > limit)
        throw oracle_limit_error(std::string(who) + ": graph has " +
                                 std::to_string(g.vertex_count()) + " vertices, limit is " +
                                 std::to_string(limit));
}

} // namespace

int chromatic_number_exact(const Graph& g, int limit) {
    check_oracle_size(g, limit, "chromatic_number_exact");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n, -1);
        if (proper_colorable(g, k, col, 0)) return k;
    }
    return n;
}

int star_chromatic_exact(const Graph& g, int limit) {
    check_oracle_size(g, limit, "star_chromatic_exact");
    const int n = g.vertex_count();
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n, -1);
        if (star_colorable(g, k, col, 0)) return k;
    }
    return n;
}

} // namespace pcc
