#ifndef MCCAC_CAC_HPP
#define MCCAC_CAC_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mccac/code.hpp"
#include "mccac/errors.hpp"
#include "mccac/numtheory.hpp"
#include "mccac/pattern.hpp"
#include "mccac/search_status.hpp"
#include "mccac/zl_set.hpp"

namespace mccac {

/// Single-channel conflict-avoiding code: weight-w subsets of Z_L whose
/// difference sets are pairwise disjoint.
struct Cac {
    int length = 0;
    int weight = 0;
    std::vector<std::vector<int>> patterns;       // sorted, canonical shift form
    bool equi_difference = false;
    std::optional<std::vector<int>> generators;   // one per pattern when equi-difference
};

/// Canonical (lexicographically least) shift representative of a time set.
inline std::vector<int> canonical_times(std::vector<int> times, int length) {
    std::sort(times.begin(), times.end());
    std::vector<int> best = times;
    std::vector<int> shifted(times.size());
    for (int tau = 1; tau < length; ++tau) {
        for (std::size_t i = 0; i < times.size(); ++i)
            shifted[i] = (times[i] + tau) % length;
        std::sort(shifted.begin(), shifted.end());
        if (shifted < best) best = shifted;
    }
    return best;
}

/// Nonzero pairwise differences (both signs) of a time set, mod L.
inline ZlSet time_difference_set(const std::vector<int>& times, int length) {
    ZlSet out(length);
    for (int a : times) {
        for (int b : times) {
            if (a != b) out.insert(a - b);
        }
    }
    out.erase(0);
    return out;
}

inline int normalize_generator(int g, int length) {
    int r = g % length;
    if (r < 0) r += length;
    return std::min(r, length - r);
}

/// The arithmetic-progression codeword {0, g, 2g, ..., (w-1)g}, if its
/// elements are distinct in Z_L.
inline std::optional<std::vector<int>> equi_diff_times(int g, int length, int weight) {
    std::vector<int> times;
    for (int i = 0; i < weight; ++i) {
        int t = static_cast<int>((static_cast<long long>(i) * g) % length);
        if (std::find(times.begin(), times.end(), t) != times.end()) return std::nullopt;
        times.push_back(t);
    }
    std::sort(times.begin(), times.end());
    return times;
}

/// Difference class {+-g, +-2g, ...} covered by an equi-difference codeword.
inline ZlSet generator_class(int g, int length, int weight) {
    ZlSet out(length);
    for (int i = 1; i < weight; ++i) {
        out.insert(static_cast<long long>(i) * g);
        out.insert(-static_cast<long long>(i) * g);
    }
    out.erase(0);
    return out;
}

/// Normalized generator if the time set is an arithmetic progression in Z_L.
inline std::optional<int> equi_diff_generator_of(const std::vector<int>& times, int length) {
    const int w = static_cast<int>(times.size());
    std::vector<int> canon = canonical_times(times, length);
    for (int g = 1; g < length; ++g) {
        auto candidate = equi_diff_times(g, length, w);
        if (candidate && canonical_times(*candidate, length) == canon)
            return normalize_generator(g, length);
    }
    return std::nullopt;
}

inline Code cac_to_code(const Cac& cac) {
    std::vector<SchedulingPattern> patterns;
    patterns.reserve(cac.patterns.size());
    for (const auto& times : cac.patterns) {
        std::vector<Slot> entries;
        for (int t : times) entries.push_back({0, t});
        patterns.emplace_back(std::move(entries));
    }
    return Code({1, cac.length, cac.weight}, std::move(patterns));
}

inline bool verify_cac(const Cac& cac) {
    for (const auto& times : cac.patterns) {
        if (static_cast<int>(times.size()) != cac.weight) return false;
        for (int t : times) {
            if (t < 0 || t >= cac.length) return false;
        }
        std::vector<int> sorted = times;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    }
    ZlSet used(cac.length);
    for (const auto& times : cac.patterns) {
        ZlSet diffs = time_difference_set(times, cac.length);
        if (diffs.intersects(used)) return false;
        used.merge(diffs);
    }
    return true;
}

/// True when the difference sets of the codewords cover Z_L \ {0} exactly.
inline bool is_tight(const Cac& cac) {
    if (!verify_cac(cac)) return false;
    ZlSet used(cac.length);
    for (const auto& times : cac.patterns) used.merge(time_difference_set(times, cac.length));
    return used.size() == cac.length - 1;
}

struct CacSearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<Cac> cac;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

struct GeneratorCandidate {
    int generator;
    ZlSet covers;
};

inline bool exact_cover_dfs(const std::vector<GeneratorCandidate>& candidates, ZlSet& covered,
                            int remaining, std::vector<int>& chosen, std::uint64_t& nodes,
                            std::uint64_t budget) {
    if (remaining == 0) return true;
    if (++nodes > budget) throw std::overflow_error("node budget exhausted");
    // branch on the smallest uncovered difference; completeness follows from
    // every difference needing exactly one covering class
    int target = -1;
    for (int d = 1; d < covered.modulus(); ++d) {
        if (!covered.contains(d)) {
            target = d;
            break;
        }
    }
    if (target < 0) return false;  // nothing left to cover but classes remain unused
    for (const auto& candidate : candidates) {
        if (!candidate.covers.contains(target)) continue;
        if (candidate.covers.intersects(covered)) continue;
        if (candidate.covers.size() > remaining) continue;
        covered.merge(candidate.covers);
        chosen.push_back(candidate.generator);
        if (exact_cover_dfs(candidates, covered, remaining - candidate.covers.size(), chosen,
                            nodes, budget))
            return true;
        chosen.pop_back();
        covered.subtract(candidate.covers);
    }
    return false;
}

}  // namespace detail

/// Exact backtracking search for an equi-difference CAC(L,w) whose generator
/// classes partition Z_L \ {0}. Distinguishes a budget stop from exhaustion.
inline CacSearchResult search_equi_diff_tight_cac(int length, int weight,
                                                  std::uint64_t node_budget = 50'000'000) {
    if (weight != 3 && weight != 4)
        throw UnsupportedWeightError("search_equi_diff_tight_cac: weight must be 3 or 4");
    if (length < weight)
        throw std::invalid_argument("search_equi_diff_tight_cac: length must be >= weight");

    std::vector<detail::GeneratorCandidate> candidates;
    for (int g = 1; g <= length / 2; ++g) {
        if (!equi_diff_times(g, length, weight)) continue;
        candidates.push_back({g, generator_class(g, length, weight)});
    }

    CacSearchResult result;
    ZlSet covered(length);
    std::vector<int> chosen;
    bool found = false;
    try {
        found = detail::exact_cover_dfs(candidates, covered, length - 1, chosen,
                                        result.nodes_explored, node_budget);
    } catch (const std::overflow_error&) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    if (!found) {
        result.status = SearchStatus::ProvenNonexistent;
        return result;
    }

    Cac cac;
    cac.length = length;
    cac.weight = weight;
    cac.equi_difference = true;
    cac.generators = chosen;
    for (int g : chosen) cac.patterns.push_back(canonical_times(*equi_diff_times(g, length, weight), length));
    result.status = SearchStatus::Found;
    result.cac = std::move(cac);
    return result;
}

/// Exact backtracking search for any CAC(L,w) with the given number of
/// codewords. Candidates are canonical shift representatives, arithmetic
/// progressions first, then lexicographic order; first fit.
inline CacSearchResult search_cac(int length, int weight, int target_size,
                                  std::uint64_t node_budget = 50'000'000) {
    if (weight < 2) throw std::invalid_argument("search_cac: weight must be >= 2");
    if (length < weight) throw std::invalid_argument("search_cac: length must be >= weight");
    if (target_size < 0) throw std::invalid_argument("search_cac: negative target");

    // enumerate canonical representatives; each contains 0
    std::vector<std::vector<int>> reps;
    auto emit = [&](const std::vector<int>& times) {
        if (canonical_times(times, length) == times) reps.push_back(times);
    };
    // choose weight-1 increasing values from [1, length)
    std::vector<int> stack;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(stack.size()) == weight - 1) {
            std::vector<int> times{0};
            times.insert(times.end(), stack.begin(), stack.end());
            emit(times);
            return;
        }
        for (int v = start; v < length; ++v) {
            stack.push_back(v);
            rec(v + 1);
            stack.pop_back();
        }
    };
    rec(1);

    // arithmetic progressions first, then the rest, each group lexicographic
    std::stable_partition(reps.begin(), reps.end(), [&](const std::vector<int>& times) {
        return equi_diff_generator_of(times, length).has_value();
    });

    std::vector<ZlSet> diff_sets;
    diff_sets.reserve(reps.size());
    for (const auto& times : reps) diff_sets.push_back(time_difference_set(times, length));

    CacSearchResult result;
    std::vector<int> chosen;
    const int n = static_cast<int>(reps.size());

    std::function<bool(int, ZlSet&)> dfs = [&](int start, ZlSet& used) -> bool {
        if (static_cast<int>(chosen.size()) == target_size) return true;
        if (++result.nodes_explored > node_budget) throw std::overflow_error("budget");
        int needed = target_size - static_cast<int>(chosen.size());
        for (int i = start; n - i >= needed; ++i) {
            if (diff_sets[i].intersects(used)) continue;
            used.merge(diff_sets[i]);
            chosen.push_back(i);
            if (dfs(i + 1, used)) return true;
            chosen.pop_back();
            used.subtract(diff_sets[i]);
        }
        return false;
    };

    ZlSet used(length);
    bool found = false;
    try {
        found = dfs(0, used);
    } catch (const std::overflow_error&) {
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    if (!found) {
        result.status = SearchStatus::ProvenNonexistent;
        return result;
    }

    Cac cac;
    cac.length = length;
    cac.weight = weight;
    std::vector<int> generators;
    bool all_equi = true;
    for (int i : chosen) {
        cac.patterns.push_back(reps[i]);
        auto g = equi_diff_generator_of(reps[i], length);
        if (g) generators.push_back(*g);
        else all_equi = false;
    }
    cac.equi_difference = all_equi;
    if (all_equi) cac.generators = std::move(generators);
    result.status = SearchStatus::Found;
    result.cac = std::move(cac);
    return result;
}

/// CAC(2t,3) with (t-1)/2 codewords for odd primes t > 3 having -1 and -3 as
/// quadratic non-residues. The guarantee is existential, so the codewords are
/// produced by exact search and verified.
inline Cac momihara_cac(int t, std::uint64_t node_budget = 50'000'000) {
    if (t <= 3 || !is_prime(t) || t % 2 == 0)
        throw HypothesisNotMetError("momihara_cac: t must be an odd prime > 3, got " +
                                    std::to_string(t));
    if (quadratic_residue(-1, t))
        throw HypothesisNotMetError("momihara_cac: -1 is a quadratic residue mod " +
                                    std::to_string(t));
    if (quadratic_residue(-3, t))
        throw HypothesisNotMetError("momihara_cac: -3 is a quadratic residue mod " +
                                    std::to_string(t));

    CacSearchResult search = search_cac(2 * t, 3, (t - 1) / 2, node_budget);
    if (search.status == SearchStatus::BudgetExhausted)
        throw std::runtime_error("momihara_cac: node budget exhausted at t = " +
                                 std::to_string(t));
    if (search.status != SearchStatus::Found || !verify_cac(*search.cac))
        throw std::logic_error("momihara_cac: no CAC(2t,3) of size (t-1)/2 found at t = " +
                               std::to_string(t));
    return *search.cac;
}

}  // namespace mccac

#endif  // MCCAC_CAC_HPP
