#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class SolveStatus {
    Exact,            // search completed; best_size is the clique number
    LowerBoundOnly,   // budget exhausted; best_size is only a lower bound
    DecisionSatisfied,// a clique of the requested target size was found
    Refuted,          // search completed without reaching the target size
};

inline const char* to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Exact: return "Exact";
    case SolveStatus::LowerBoundOnly: return "LowerBoundOnly";
    case SolveStatus::DecisionSatisfied: return "DecisionSatisfied";
    case SolveStatus::Refuted: return "Refuted";
    }
    return "?";
}

// Termination policy for a single search. Unset fields mean unbounded.
// The node budget is checked at every node expansion, the wall-clock budget
// at least every 2^14 nodes.
struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_duration;
    std::optional<int> target_size; // decision mode: stop once a clique this large is found

    static Budget unlimited() { return {}; }
};

struct CliqueResult {
    int best_size = 0;
    std::vector<int> witness; // ascending vertex ids, size best_size
    SolveStatus status = SolveStatus::Exact;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0.0};
    std::string vertex_order; // ordering rule the solver used, for reproducibility

    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
};

// Cooperative interrupt: long searches poll this flag and wind down with
// LowerBoundOnly so partial results can still be flushed. Safe to set from
// a signal handler.
inline std::atomic<bool> g_interrupt{false};

inline bool is_clique(const DenseGraph& g, const std::vector<int>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        const int v = vertices[a];
        if (v < 0 || v >= g.vertex_count())
            return false;
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[b] == v || !g.edge(v, vertices[b]))
                return false;
        }
    }
    return true;
}

// Deterministic maximal clique: scan vertices by descending degree (ties by
// lower index) and keep every vertex adjacent to all chosen so far. Used to
// seed the exact search with an initial incumbent.
inline std::vector<int> greedy_clique(const DenseGraph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return {};
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool compatible = true;
        for (int c : clique) {
            if (!g.edge(v, c)) {
                compatible = false;
                break;
            }
        }
        if (compatible)
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

/**
 * Exact maximum-clique search in the style of Ostergard's cliquer.
 *
 * Vertices are renumbered v_0..v_{n-1} by descending degree (ties by lower
 * original index). For i = n-1 down to 0 the solver searches all cliques
 * containing v_i inside the suffix {v_i..v_{n-1}} and maintains c[i], an
 * upper bound on the clique number of that suffix with c[i] <= c[i+1] + 1.
 * A branch with current size s and candidate set U is cut when
 *   s + |U| <= incumbent, or
 *   s + c[min U] <= incumbent, or
 *   s + greedy_coloring(U) <= incumbent.
 * The coloring also directs the branching: candidates are processed in
 * decreasing color order, and since a clique uses pairwise-distinct colors,
 * the loop stops at the first candidate whose color cannot beat the
 * incumbent. Each pass over a suffix can improve the incumbent at most
 * once, so an iteration stops as soon as it records an improvement.
 *
 * In decision mode (Budget::target_size) the search stops as soon as the
 * incumbent reaches the target; if it completes instead, the refutation is
 * exact and the incumbent equals the clique number.
 *
 * With threads > 1 the first-level branches of each iteration are handed to
 * a small worker pool. The only shared state is the incumbent, which grows
 * monotonically, so the reported best_size is independent of scheduling.
 */
class CliqueSolver {
public:
    static constexpr const char* kOrderRule = "degree-desc,index-asc";

    CliqueSolver(const DenseGraph& g, Budget budget = {}, unsigned threads = 1)
        : g_(g), budget_(budget),
          threads_(std::max(1u, threads)),
          n_(g.vertex_count()),
          words_((n_ + 63) / 64) {}

    CliqueResult run() {
        const auto start = std::chrono::steady_clock::now();
        if (budget_.max_duration)
            deadline_ = start + *budget_.max_duration;

        CliqueResult result;
        result.vertex_order = kOrderRule;
        if (n_ == 0) {
            result.status = budget_.target_size ? SolveStatus::Refuted : SolveStatus::Exact;
            result.elapsed = std::chrono::steady_clock::now() - start;
            return result;
        }

        build_order();

        best_witness_ = greedy_clique(g_);
        best_size_ = static_cast<int>(best_witness_.size());
        incumbent_size_.store(best_size_, std::memory_order_release);
        if (budget_.target_size && best_size_ >= *budget_.target_size) {
            satisfied_ = true;
            stop_.store(true, std::memory_order_release);
        }

        c_.assign(static_cast<std::size_t>(n_) + 1, 0);
        root_set_.assign(static_cast<std::size_t>(words_), 0);
        contexts_.resize(threads_);
        for (auto& ctx : contexts_)
            ctx.init(n_, words_);

        for (int i = n_ - 1; i >= 0 && !stop_.load(std::memory_order_acquire); --i) {
            run_iteration(i);
            c_[static_cast<std::size_t>(i)] =
                std::min(incumbent_size_.load(std::memory_order_acquire),
                         c_[static_cast<std::size_t>(i) + 1] + 1);
            check_clock();
        }

        result.nodes_explored = nodes_.load(std::memory_order_relaxed);
        result.elapsed = std::chrono::steady_clock::now() - start;
        result.best_size = best_size_;
        result.witness = best_witness_;
        if (budget_.target_size) {
            if (satisfied_) {
                result.status = SolveStatus::DecisionSatisfied;
                result.best_size = *budget_.target_size;
                result.witness.resize(static_cast<std::size_t>(result.best_size));
            } else {
                result.status = aborted_ ? SolveStatus::LowerBoundOnly : SolveStatus::Refuted;
            }
        } else {
            result.status = aborted_ ? SolveStatus::LowerBoundOnly : SolveStatus::Exact;
        }
        return result;
    }

    // c table in solver order; meaningful after a completed run.
    const std::vector<int>& suffix_bounds() const { return c_; }

private:
    struct WorkerContext {
        std::vector<std::uint64_t> levels;  // (n+2) candidate sets of `words` words
        std::vector<std::uint64_t> classes; // coloring scratch, n sets of `words` words
        std::vector<std::vector<int>> branch_verts; // per-depth processing order
        std::vector<std::vector<int>> branch_cols;  // matching color of each entry
        std::vector<int> stack;             // current clique, solver positions
        int n = 0;
        int words = 0;

        void init(int n_in, int w) {
            n = n_in;
            words = w;
            levels.assign(static_cast<std::size_t>(n + 2) * w, 0);
            classes.assign(static_cast<std::size_t>(std::max(1, n)) * w, 0);
            branch_verts.assign(static_cast<std::size_t>(n) + 2, {});
            branch_cols.assign(static_cast<std::size_t>(n) + 2, {});
            stack.assign(static_cast<std::size_t>(n) + 1, 0);
        }
        std::uint64_t* level(int depth) { return levels.data() + static_cast<std::size_t>(depth) * words; }
        std::uint64_t* color_class(int c) { return classes.data() + static_cast<std::size_t>(c) * words; }
        // branch lists grow on first use of a depth, so shallow searches of
        // big graphs stay cheap
        void ensure_depth(int depth) {
            auto& v = branch_verts[static_cast<std::size_t>(depth)];
            if (v.empty() && n > 0) {
                v.resize(static_cast<std::size_t>(n));
                branch_cols[static_cast<std::size_t>(depth)].resize(static_cast<std::size_t>(n));
            }
        }
    };

    // --- word-set helpers -------------------------------------------------

    static int popcount_words(const std::uint64_t* w, int words) {
        int total = 0;
        for (int k = 0; k < words; ++k)
            total += std::popcount(w[k]);
        return total;
    }

    static int first_bit(const std::uint64_t* w, int words) {
        for (int k = 0; k < words; ++k)
            if (w[k])
                return k * 64 + std::countr_zero(w[k]);
        return -1;
    }

    static void clear_bit(std::uint64_t* w, int bit) {
        w[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
    }

    const std::uint64_t* adj_row(int pos) const {
        return adj_.data() + static_cast<std::size_t>(pos) * words_;
    }

    // dst = a & b
    void intersect(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b) const {
        for (int k = 0; k < words_; ++k)
            dst[k] = a[k] & b[k];
    }

    // drop every position <= bound
    static void clear_through(std::uint64_t* w, int bound) {
        const int q = bound >> 6;
        for (int k = 0; k < q; ++k)
            w[k] = 0;
        w[q] &= ~((std::uint64_t{2} << (bound & 63)) - 1);
    }

    // --- setup ------------------------------------------------------------

    void build_order() {
        order_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            order_[static_cast<std::size_t>(v)] = v;
        std::vector<int> deg(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            deg[static_cast<std::size_t>(v)] = g_.degree(v);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
                return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
            return a < b;
        });
        std::vector<int> rank(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos)
            rank[static_cast<std::size_t>(order_[static_cast<std::size_t>(pos)])] = pos;

        adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int v = 0; v < n_; ++v) {
            const int pv = rank[static_cast<std::size_t>(v)];
            std::uint64_t* row = adj_.data() + static_cast<std::size_t>(pv) * words_;
            for (int u = 0; u < n_; ++u) {
                if (u != v && g_.edge(v, u)) {
                    const int pu = rank[static_cast<std::size_t>(u)];
                    row[pu >> 6] |= std::uint64_t{1} << (pu & 63);
                }
            }
        }
    }

    // --- search -----------------------------------------------------------

    void run_iteration(int root) {
        root_ = root;
        iteration_found_.store(false, std::memory_order_release);
        exhausted_.store(false, std::memory_order_release);
        task_index_.store(0, std::memory_order_release);

        std::uint64_t* root_set = root_candidates_storage();
        std::copy(adj_row(root), adj_row(root) + words_, root_set);
        clear_through(root_set, root);

        tasks_.clear();
        for (int k = 0; k < words_; ++k) {
            std::uint64_t w = root_set[k];
            while (w) {
                tasks_.push_back(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        if (tasks_.empty())
            return;

        // whole-iteration cut: one color per clique vertex
        {
            const int lb = incumbent_size_.load(std::memory_order_acquire);
            if (1 + static_cast<int>(tasks_.size()) <= lb)
                return;
            int len = 0;
            const int classes = color_order(root_set, contexts_[0], n_, len);
            if (1 + classes <= lb)
                return;
        }

        const unsigned workers =
            std::min<std::size_t>(threads_, tasks_.size() >= kParallelMinTasks ? threads_ : 1);
        if (workers <= 1) {
            work_loop(contexts_[0]);
            return;
        }
        std::vector<std::thread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back([this, w] { work_loop(contexts_[w]); });
        work_loop(contexts_[0]);
        for (auto& t : pool)
            t.join();
    }

    void work_loop(WorkerContext& ctx) {
        while (!stop_.load(std::memory_order_acquire) &&
               !iteration_found_.load(std::memory_order_acquire) &&
               !exhausted_.load(std::memory_order_acquire)) {
            const std::size_t t = task_index_.fetch_add(1, std::memory_order_relaxed);
            if (t >= tasks_.size())
                return;
            process_task(t, ctx);
        }
    }

    void process_task(std::size_t t, WorkerContext& ctx) {
        const int lb = incumbent_size_.load(std::memory_order_acquire);
        // Remaining first-level candidates shrink with t, and c is
        // non-increasing in position, so either cut also covers every
        // later task of this iteration.
        if (1 + static_cast<int>(tasks_.size() - t) <= lb) {
            exhausted_.store(true, std::memory_order_release);
            return;
        }
        const int u = tasks_[t];
        if (1 + c_[static_cast<std::size_t>(u)] <= lb) {
            exhausted_.store(true, std::memory_order_release);
            return;
        }
        if (!count_node())
            return;
        ctx.stack[0] = root_;
        ctx.stack[1] = u;
        if (2 > lb) {
            record(ctx.stack.data(), 2);
            return;
        }
        std::uint64_t* child = ctx.level(2);
        intersect(child, root_candidates_storage(), adj_row(u));
        clear_through(child, u);
        expand(child, 2, ctx);
    }

    // Search all cliques extending ctx.stack[0..size-1] with candidates U.
    // Returns true to unwind the whole iteration (improvement found, or a
    // stop condition fired).
    bool expand(std::uint64_t* candidates, int size, WorkerContext& ctx) {
        if (stop_.load(std::memory_order_relaxed) ||
            iteration_found_.load(std::memory_order_relaxed))
            return true;
        const int remaining = popcount_words(candidates, words_);
        if (remaining == 0)
            return false;
        int lb = incumbent_size_.load(std::memory_order_relaxed);
        if (size + remaining <= lb)
            return false;
        if (size + c_[static_cast<std::size_t>(first_bit(candidates, words_))] <= lb)
            return false;

        int len = 0;
        const int classes = color_order(candidates, ctx, size, len);
        if (size + classes <= lb)
            return false;
        const int* verts = ctx.branch_verts[static_cast<std::size_t>(size)].data();
        const int* cols = ctx.branch_cols[static_cast<std::size_t>(size)].data();

        for (int idx = len - 1; idx >= 0; --idx) {
            if (stop_.load(std::memory_order_relaxed) ||
                iteration_found_.load(std::memory_order_relaxed))
                return true;
            lb = incumbent_size_.load(std::memory_order_relaxed);
            // every remaining candidate has color <= cols[idx]
            if (size + cols[idx] <= lb)
                return false;
            // remaining candidates all lie in the suffix of their minimum
            if (size + c_[static_cast<std::size_t>(first_bit(candidates, words_))] <= lb)
                return false;
            const int u = verts[idx];
            clear_bit(candidates, u);
            if (!count_node())
                return true;
            ctx.stack[static_cast<std::size_t>(size)] = u;
            if (size + 1 > lb) {
                record(ctx.stack.data(), size + 1);
                return true;
            }
            std::uint64_t* child = ctx.level(size + 1);
            intersect(child, candidates, adj_row(u));
            if (expand(child, size + 1, ctx))
                return true;
        }
        return false;
    }

    // Greedy coloring of the candidate set, in ascending position order.
    // Fills the depth's branch list sorted by ascending color (so branching
    // walks it backward, highest color first) and returns the class count,
    // an upper bound on the set's clique number.
    int color_order(const std::uint64_t* candidates, WorkerContext& ctx, int depth, int& len) {
        int classes = 0;
        for (int k = 0; k < words_; ++k) {
            std::uint64_t w = candidates[k];
            while (w) {
                const int v = k * 64 + std::countr_zero(w);
                w &= w - 1;
                const std::uint64_t* nbr = adj_row(v);
                int assigned = -1;
                for (int c = 0; c < classes; ++c) {
                    const std::uint64_t* cls = ctx.color_class(c);
                    bool conflict = false;
                    for (int m = 0; m < words_; ++m) {
                        if (cls[m] & nbr[m]) {
                            conflict = true;
                            break;
                        }
                    }
                    if (!conflict) {
                        assigned = c;
                        break;
                    }
                }
                if (assigned < 0) {
                    assigned = classes++;
                    std::uint64_t* cls = ctx.color_class(assigned);
                    for (int m = 0; m < words_; ++m)
                        cls[m] = 0;
                }
                ctx.color_class(assigned)[v >> 6] |= std::uint64_t{1} << (v & 63);
            }
        }
        ctx.ensure_depth(depth);
        int* verts = ctx.branch_verts[static_cast<std::size_t>(depth)].data();
        int* cols = ctx.branch_cols[static_cast<std::size_t>(depth)].data();
        len = 0;
        for (int c = 0; c < classes; ++c) {
            const std::uint64_t* cls = ctx.color_class(c);
            for (int k = 0; k < words_; ++k) {
                std::uint64_t w = cls[k];
                while (w) {
                    verts[len] = k * 64 + std::countr_zero(w);
                    cols[len] = c + 1;
                    ++len;
                    w &= w - 1;
                }
            }
        }
        return classes;
    }

    void record(const int* stack, int size) {
        std::scoped_lock lock(best_mutex_);
        if (size <= best_size_)
            return;
        best_size_ = size;
        best_witness_.resize(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k)
            best_witness_[static_cast<std::size_t>(k)] = order_[static_cast<std::size_t>(stack[k])];
        std::sort(best_witness_.begin(), best_witness_.end());
        incumbent_size_.store(size, std::memory_order_release);
        iteration_found_.store(true, std::memory_order_release);
        if (budget_.target_size && size >= *budget_.target_size) {
            satisfied_ = true;
            stop_.store(true, std::memory_order_release);
        }
    }

    // --- budget -----------------------------------------------------------

    bool count_node() {
        const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget_.max_nodes && n > *budget_.max_nodes) {
            abort_search();
            return false;
        }
        if ((n & 0x3FFF) == 0)
            check_clock();
        return !stop_.load(std::memory_order_relaxed);
    }

    void check_clock() {
        if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
            abort_search();
        if (g_interrupt.load(std::memory_order_relaxed))
            abort_search();
    }

    void abort_search() {
        aborted_.store(true, std::memory_order_relaxed);
        stop_.store(true, std::memory_order_release);
    }

    std::uint64_t* root_candidates_storage() { return root_set_.data(); }

    static constexpr std::size_t kParallelMinTasks = 4;

    const DenseGraph& g_;
    Budget budget_;
    unsigned threads_;
    int n_;
    int words_;

    std::vector<int> order_;       // position -> original vertex
    std::vector<std::uint64_t> adj_; // adjacency over positions, row-major
    std::vector<int> c_;           // suffix clique-number bounds
    std::vector<std::uint64_t> root_set_;

    std::vector<WorkerContext> contexts_;
    std::vector<int> tasks_;
    int root_ = 0;

    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::size_t> task_index_{0};
    std::atomic<int> incumbent_size_{0};
    std::atomic<bool> iteration_found_{false};
    std::atomic<bool> exhausted_{false};
    std::atomic<bool> stop_{false};
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<bool> aborted_{false};
    bool satisfied_ = false; // written under best_mutex_, read after workers join

    std::mutex best_mutex_;
    int best_size_ = 0;
    std::vector<int> best_witness_;
};

// Exact clique number (status Exact) under an unbounded budget; with a
// finite budget the incumbent is returned as LowerBoundOnly when the search
// does not complete.
inline CliqueResult max_clique(const DenseGraph& g, Budget budget = {}, unsigned threads = 1) {
    budget.target_size.reset();
    CliqueSolver solver(g, budget, threads);
    return solver.run();
}

// Decision variant: look for a clique of size target, allowing early exit.
// A completed search without a hit is an exact refutation and best_size is
// the clique number found along the way.
inline CliqueResult has_clique_of_size(const DenseGraph& g, int target, Budget budget = {},
                                       unsigned threads = 1) {
    if (target < 1)
        throw std::domain_error("has_clique_of_size: target must be >= 1");
    budget.target_size = target;
    CliqueSolver solver(g, budget, threads);
    return solver.run();
}

// Independent oracle: enumerate all maximal cliques (Bron-Kerbosch with
// pivoting) over single-word bitsets and report the largest. Shares no
// search code with CliqueSolver; limited to n <= 64 by construction.
inline CliqueResult brute_force_max_clique(const DenseGraph& g) {
    const int n = g.vertex_count();
    if (n > 64)
        throw std::domain_error("brute_force_max_clique: refusing n = " + std::to_string(n) +
                                " > 64 vertices");
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.edge(i, j))
                nbr[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;

    std::vector<int> current;
    std::vector<int> best;
    std::uint64_t calls = 0;

    auto enumerate = [&](auto&& self, std::uint64_t p, std::uint64_t x) -> void {
        ++calls;
        if (p == 0 && x == 0) {
            if (current.size() > best.size())
                best = current;
            return;
        }
        // pivot on the vertex of P|X covering most of P
        std::uint64_t px = p | x;
        int pivot = -1;
        int cover = -1;
        for (std::uint64_t w = px; w;) {
            const int v = std::countr_zero(w);
            w &= w - 1;
            const int c = std::popcount(p & nbr[static_cast<std::size_t>(v)]);
            if (c > cover) {
                cover = c;
                pivot = v;
            }
        }
        std::uint64_t branch = p & ~nbr[static_cast<std::size_t>(pivot)];
        while (branch) {
            const int v = std::countr_zero(branch);
            const std::uint64_t bit = std::uint64_t{1} << v;
            branch &= branch - 1;
            current.push_back(v);
            self(self, p & nbr[static_cast<std::size_t>(v)], x & nbr[static_cast<std::size_t>(v)]);
            current.pop_back();
            p &= ~bit;
            x |= bit;
        }
    };

    if (n > 0) {
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        enumerate(enumerate, all, 0);
    }

    CliqueResult result;
    result.best_size = static_cast<int>(best.size());
    std::sort(best.begin(), best.end());
    result.witness = std::move(best);
    result.status = SolveStatus::Exact;
    result.nodes_explored = calls;
    result.elapsed = std::chrono::steady_clock::now() - start;
    result.vertex_order = "input";
    return result;
}

// Largest independent set, computed as the clique number of the complement.
inline CliqueResult independence_number(const DenseGraph& g, Budget budget = {},
                                        unsigned threads = 1) {
    return max_clique(complement(g), budget, threads);
}

} // namespace ramsey
