#ifndef MCCAC_SOLVER_HPP
#define MCCAC_SOLVER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mccac/bounds.hpp"
#include "mccac/code.hpp"
#include "mccac/conflict_graph.hpp"
#include "mccac/enumerate.hpp"
#include "mccac/pattern.hpp"

namespace mccac {

enum class SolveStatus { Optimal, LowerBoundOnly };

struct SearchOutcome {
    CodeParams params;
    bool restricted = false;
    Code best_code;
    int size = 0;
    SolveStatus status = SolveStatus::LowerBoundOnly;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

struct SolverOptions {
    std::uint64_t node_budget = 500'000'000;
    double time_limit_seconds = 0.0;  // 0 means no limit
    int jobs = 1;
    std::optional<Code> seed;         // initial incumbent, e.g. a composed code
    EnumerationLimits limits{};
    // when set, a closed-form bound prunes at the root and can certify an
    // incumbent without exhausting the tree
    bool use_closed_form_bounds = true;
};

namespace detail {

struct StopSearch {};

/// Exact maximum independent set on the conflict graph, run as maximum clique
/// on the complement with a greedy-coloring bound.
class MaxCodeSolver {
public:
    MaxCodeSolver(const ConflictGraph& graph, int upper_cap, std::uint64_t node_budget,
                  double time_limit_seconds)
        : n_(graph.order()), words_((n_ + 63) / 64), upper_cap_(upper_cap),
          node_budget_(node_budget) {
        deadline_valid_ = time_limit_seconds > 0.0;
        if (deadline_valid_)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(time_limit_seconds));

        // vertex order: descending conflict degree, ties by canonical order
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return graph.degree(a) > graph.degree(b);
        });
        position_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) position_[order_[i]] = i;

        // complement adjacency in solver indexing: edge = compatible pair
        comp_.assign(n_, std::vector<std::uint64_t>(words_, 0));
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (i != j && !graph.edge(order_[i], order_[j]))
                    comp_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
            }
        }
    }

    int original_vertex(int solver_index) const { return order_[solver_index]; }
    int solver_index(int original_vertex) const { return position_[original_vertex]; }

    bool compatible(int u, int v) const { return (comp_[u][v >> 6] >> (v & 63)) & 1; }

    void set_incumbent(const std::vector<int>& clique_solver_indices) {
        best_set_ = clique_solver_indices;
        best_size_.store(static_cast<int>(clique_solver_indices.size()));
    }

    /// Greedy clique in static order, used as the default incumbent.
    std::vector<int> greedy_clique() const {
        std::vector<int> chosen;
        for (int v = 0; v < n_; ++v) {
            bool ok = true;
            for (int u : chosen) {
                if (!compatible(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) chosen.push_back(v);
        }
        return chosen;
    }

    void run(int jobs) {
        if (n_ == 0) return;
        if (best_size_.load() >= upper_cap_) return;  // incumbent meets a proven bound

        std::vector<int> root(n_);
        std::iota(root.begin(), root.end(), 0);
        std::vector<int> colors;
        std::vector<int> ordered = color_sort(root, colors);

        if (jobs <= 1) {
            std::vector<int> current;
            try {
                branch_list(ordered, colors, current);
            } catch (const StopSearch&) {
            }
            return;
        }

        // parallel mode: top-level branches are independent subproblems;
        // workers share the incumbent size and the node counter
        std::atomic<int> next_branch{static_cast<int>(ordered.size()) - 1};
        std::vector<std::thread> workers;
        const int worker_count = std::min(jobs, static_cast<int>(ordered.size()));
        for (int t = 0; t < worker_count; ++t) {
            workers.emplace_back([&]() {
                try {
                    while (true) {
                        int i = next_branch.fetch_sub(1);
                        if (i < 0) break;
                        if (colors[i] <= best_size_.load() || best_size_.load() >= upper_cap_)
                            continue;
                        int v = ordered[i];
                        std::vector<int> current{v};
                        std::vector<int> candidates;
                        for (int k = 0; k < i; ++k) {
                            if (compatible(v, ordered[k])) candidates.push_back(ordered[k]);
                        }
                        descend(candidates, current);
                        record(current);
                        current.pop_back();
                    }
                } catch (const StopSearch&) {
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    int best_size() const { return best_size_.load(); }
    const std::vector<int>& best_set() const { return best_set_; }
    std::uint64_t nodes() const { return nodes_.load(); }
    bool truncated() const { return truncated_.load(); }
    bool stopped_by_bound() const { return bound_met_.load(); }

private:
    void tick() {
        std::uint64_t count = nodes_.fetch_add(1) + 1;
        if (count > node_budget_) {
            truncated_.store(true);
            throw StopSearch{};
        }
        if (deadline_valid_ && (count & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline_) {
            truncated_.store(true);
            throw StopSearch{};
        }
        if (bound_met_.load()) throw StopSearch{};
    }

    /// Greedy coloring of the candidate set; returns vertices sorted by color
    /// (ascending), with colors[i] = color of ordered[i]. A clique contains at
    /// most one vertex per color class.
    std::vector<int> color_sort(const std::vector<int>& candidates, std::vector<int>& colors) const {
        std::vector<std::vector<std::uint64_t>> class_bits;
        std::vector<std::vector<int>> classes;
        for (int v : candidates) {
            bool placed = false;
            for (std::size_t k = 0; k < classes.size(); ++k) {
                bool clash = false;
                for (int w = 0; w < words_; ++w) {
                    if (class_bits[k][w] & comp_[v][w]) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) {
                    classes[k].push_back(v);
                    class_bits[k][v >> 6] |= std::uint64_t{1} << (v & 63);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                classes.emplace_back(std::vector<int>{v});
                class_bits.emplace_back(words_, 0);
                class_bits.back()[v >> 6] |= std::uint64_t{1} << (v & 63);
            }
        }
        std::vector<int> ordered;
        colors.clear();
        for (std::size_t k = 0; k < classes.size(); ++k) {
            for (int v : classes[k]) {
                ordered.push_back(v);
                colors.push_back(static_cast<int>(k) + 1);
            }
        }
        return ordered;
    }

    void descend(const std::vector<int>& candidates, std::vector<int>& current) {
        if (candidates.empty()) return;
        std::vector<int> colors;
        std::vector<int> ordered = color_sort(candidates, colors);
        branch_list(ordered, colors, current);
    }

    void branch_list(const std::vector<int>& ordered, const std::vector<int>& colors,
                     std::vector<int>& current) {
        tick();
        for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + colors[i] <= best_size_.load()) return;
            int v = ordered[i];
            current.push_back(v);
            std::vector<int> next;
            for (int k = 0; k < i; ++k) {
                if (compatible(v, ordered[k])) next.push_back(ordered[k]);
            }
            if (next.empty()) record(current);
            else descend(next, current);
            current.pop_back();
        }
    }

    void record(const std::vector<int>& clique) {
        const int size = static_cast<int>(clique.size());
        if (size <= best_size_.load()) return;
        std::lock_guard<std::mutex> lock(best_mutex_);
        if (size <= static_cast<int>(best_set_.size())) return;
        best_set_ = clique;
        best_size_.store(size);
        if (size >= upper_cap_) bound_met_.store(true);
    }

    int n_;
    int words_;
    int upper_cap_;
    std::uint64_t node_budget_;
    bool deadline_valid_ = false;
    std::chrono::steady_clock::time_point deadline_;

    std::vector<int> order_;     // solver index -> original vertex
    std::vector<int> position_;  // original vertex -> solver index
    std::vector<std::vector<std::uint64_t>> comp_;

    std::atomic<int> best_size_{0};
    std::vector<int> best_set_;
    std::mutex best_mutex_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> truncated_{false};
    std::atomic<bool> bound_met_{false};
};

inline std::optional<long long> applicable_bound(const CodeParams& params, bool restricted) {
    std::optional<long long> best;
    auto consider = [&](long long value) {
        if (!best || value < *best) best = value;
    };
    if (params.weight == 3 && params.channels >= 3)
        consider(bound_weight3(params.channels, params.length).value);
    if (params.weight == 4 && params.channels >= 4)
        consider(bound_weight4(params.channels, params.length).value);
    if (restricted && (params.weight == 3 || params.weight == 4) &&
        params.channels >= params.weight)
        consider(bound_restricted(params.channels, params.length, params.weight).value);
    return best;
}

}  // namespace detail

/// Exact search for a maximum code: branch-and-bound maximum independent set
/// on the conflict graph of all canonical patterns. Status is Optimal only
/// when the tree was exhausted (or the incumbent met a proven bound).
inline SearchOutcome max_code(const CodeParams& params, bool restricted,
                              const SolverOptions& options = {}) {
    const auto started = std::chrono::steady_clock::now();
    PatternUniverse universe = enumerate_patterns(params, restricted, options.limits);
    ConflictGraph graph = build_conflict_graph(universe.patterns, params);

    std::optional<long long> bound = detail::applicable_bound(params, restricted);
    int cap = graph.order();
    if (options.use_closed_form_bounds && bound && *bound < cap)
        cap = static_cast<int>(*bound);

    detail::MaxCodeSolver solver(graph, cap, options.node_budget, options.time_limit_seconds);

    std::vector<int> incumbent = solver.greedy_clique();
    if (options.seed) {
        if (options.seed->params() != params)
            throw std::invalid_argument("max_code: seed code has different parameters");
        std::vector<int> seeded;
        for (const auto& pattern : options.seed->patterns()) {
            auto it = std::lower_bound(universe.patterns.begin(), universe.patterns.end(), pattern);
            if (it == universe.patterns.end() || !(*it == pattern))
                throw std::invalid_argument("max_code: seed pattern not in the universe");
            seeded.push_back(solver.solver_index(
                static_cast<int>(it - universe.patterns.begin())));
        }
        if (seeded.size() > incumbent.size()) incumbent = std::move(seeded);
    }
    solver.set_incumbent(incumbent);
    solver.run(options.jobs);

    SearchOutcome outcome;
    outcome.params = params;
    outcome.restricted = restricted;
    outcome.size = solver.best_size();
    outcome.nodes_explored = solver.nodes();
    outcome.status = solver.truncated() ? SolveStatus::LowerBoundOnly : SolveStatus::Optimal;

    std::vector<SchedulingPattern> chosen;
    for (int v : solver.best_set()) chosen.push_back(universe.patterns[solver.original_vertex(v)]);
    std::sort(chosen.begin(), chosen.end());
    outcome.best_code = Code(params, std::move(chosen));
    outcome.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return outcome;
}

struct CertificationReport {
    bool verified = false;            // both verifier paths accepted the code
    std::optional<long long> bound;   // closed-form bound when applicable
    std::optional<long long> gap;     // bound - size; exact only for optimal outcomes
    bool gap_is_exact = false;
};

/// Re-verifies a search outcome through both verifier paths and reports the
/// distance to the closed-form bound. Throws on an internally inconsistent
/// outcome (corrupted code or a bound violation).
inline CertificationReport certify(const SearchOutcome& outcome) {
    CertificationReport report;
    VerificationReport by_differences = verify_code(outcome.best_code, outcome.restricted);
    VerificationReport by_correlation = verify_definitional(outcome.best_code);
    if (!by_differences.valid || !by_correlation.valid)
        throw std::logic_error("certify: outcome code failed re-verification");
    if (outcome.best_code.size() != outcome.size)
        throw std::logic_error("certify: outcome size mismatch");
    report.verified = true;

    report.bound = detail::applicable_bound(outcome.params, outcome.restricted);
    if (report.bound) {
        report.gap = *report.bound - outcome.size;
        report.gap_is_exact = outcome.status == SolveStatus::Optimal;
        if (*report.gap < 0)
            throw std::logic_error("certify: code size exceeds the closed-form bound");
    }
    return report;
}

}  // namespace mccac

#endif  // MCCAC_SOLVER_HPP
