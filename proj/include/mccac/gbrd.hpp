#ifndef MCCAC_GBRD_HPP
#define MCCAC_GBRD_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mccac/difference_matrix.hpp"
#include "mccac/errors.hpp"
#include "mccac/pattern.hpp"
#include "mccac/search_status.hpp"
#include "mccac/zl_set.hpp"

namespace mccac {

/// Generalized Bhaskar Rao design signed over Z_L: an M x b array whose cells
/// are empty or elements of Z_L, with exactly w filled cells per column, such
/// that each row pair's differences over commonly-filled columns cover Z_L
/// exactly once.
struct Gbrd {
    int rows = 0;
    int length = 0;  // group order L
    int weight = 0;  // filled cells per column
    std::vector<std::vector<std::optional<int>>> cells;  // [row][column]

    int column_count() const { return rows == 0 ? 0 : static_cast<int>(cells[0].size()); }
};

inline long long gbrd_column_count(int rows, int length, int weight) {
    const long long numerator = static_cast<long long>(length) * rows * (rows - 1);
    const long long denominator = static_cast<long long>(weight) * (weight - 1);
    if (denominator == 0 || numerator % denominator != 0)
        throw ShapeInfeasibleError("gbrd: L*M*(M-1) = " + std::to_string(numerator) +
                                   " is not divisible by w*(w-1) = " + std::to_string(denominator));
    return numerator / denominator;
}

inline bool verify_gbrd(const Gbrd& design, int length, int weight) {
    const int M = design.rows;
    if (M < 2 || length < 1 || weight < 2 || weight > M) return false;
    if (design.length != length || design.weight != weight) return false;
    if (static_cast<int>(design.cells.size()) != M) return false;

    long long expected_columns;
    try {
        expected_columns = gbrd_column_count(M, length, weight);
    } catch (const ShapeInfeasibleError&) {
        return false;
    }
    const int b = design.column_count();
    if (b != expected_columns) return false;
    for (const auto& row : design.cells) {
        if (static_cast<int>(row.size()) != b) return false;
    }

    for (int c = 0; c < b; ++c) {
        int filled = 0;
        for (int r = 0; r < M; ++r) {
            if (design.cells[r][c]) {
                ++filled;
                if (*design.cells[r][c] < 0 || *design.cells[r][c] >= length) return false;
            }
        }
        if (filled != weight) return false;
    }

    for (int r1 = 0; r1 < M; ++r1) {
        for (int r2 = r1 + 1; r2 < M; ++r2) {
            ZlSet seen(length);
            int common = 0;
            for (int c = 0; c < b; ++c) {
                if (!design.cells[r1][c] || !design.cells[r2][c]) continue;
                ++common;
                int d = *design.cells[r1][c] - *design.cells[r2][c];
                if (seen.contains(d)) return false;
                seen.insert(d);
            }
            if (common != length || seen.size() != length) return false;
        }
    }
    return true;
}

/// A difference matrix viewed as the fully-filled GBRD with M = w.
inline Gbrd gbrd_from_difference_matrix(const DifferenceMatrix& matrix) {
    Gbrd design;
    design.rows = matrix.row_count();
    design.length = matrix.length;
    design.weight = matrix.row_count();
    design.cells.assign(design.rows, std::vector<std::optional<int>>(matrix.length));
    for (int r = 0; r < design.rows; ++r) {
        for (int c = 0; c < matrix.length; ++c) design.cells[r][c] = matrix.rows[r][c];
    }
    return design;
}

/// Explicit 4 x 4t GBRD over Z_2t with three filled cells per column.
/// Columns come in four families of t, indexed by j = 0..t-1.
inline Gbrd gbrd_4x4t(int t) {
    if (t < 1) throw std::invalid_argument("gbrd_4x4t: t must be >= 1");
    const int L = 2 * t;
    Gbrd design;
    design.rows = 4;
    design.length = L;
    design.weight = 3;
    design.cells.assign(4, std::vector<std::optional<int>>(4 * t));
    auto put = [&](int row, int col, long long value) {
        design.cells[row][col] = static_cast<int>(((value % L) + L) % L);
    };
    for (int j = 0; j < t; ++j) {
        put(0, j, 0);
        put(1, j, j);
        put(2, j, 2 * j);

        put(0, t + j, 0);
        put(1, t + j, t + j);
        put(3, t + j, t - j);

        put(0, 2 * t + j, 0);
        put(2, 2 * t + j, 2 * j + 1);
        put(3, 2 * t + j, t + j + 1);

        put(1, 3 * t + j, 0);
        put(2, 3 * t + j, t + j);
        put(3, 3 * t + j, 2 * j + 1);
    }
    return design;
}

/// Columns of a GBRD read as scheduling patterns (canonical shift form).
inline std::vector<SchedulingPattern> gbrd_to_patterns(const Gbrd& design) {
    std::vector<SchedulingPattern> out;
    out.reserve(design.column_count());
    for (int c = 0; c < design.column_count(); ++c) {
        std::vector<Slot> entries;
        for (int r = 0; r < design.rows; ++r) {
            if (design.cells[r][c]) entries.push_back({r, *design.cells[r][c]});
        }
        out.push_back(canonicalize(SchedulingPattern(std::move(entries)), design.length));
    }
    return out;
}

struct GbrdSearchResult {
    SearchStatus status = SearchStatus::BudgetExhausted;
    std::optional<Gbrd> gbrd;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

/// Feasibility of the column support counts: every row pair must be commonly
/// filled in exactly L columns, so the per-support column counts n_T solve
///   sum over supports T containing {r1,r2} of n_T = L   for every pair.
/// Returns false only when that integer system has no solution (for example
/// M=4, w=3 forces every count to L/2, so odd L is impossible). Returns true
/// on solvable systems and when the check exceeds its node cap.
inline bool support_counts_feasible(int rows, int length, int weight,
                                    std::uint64_t cap = 2'000'000) {
    std::vector<std::vector<int>> supports;
    std::vector<int> pick;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(pick.size()) == weight) {
            supports.push_back(pick);
            return;
        }
        for (int r = start; r < rows; ++r) {
            pick.push_back(r);
            gen(r + 1);
            pick.pop_back();
        }
    };
    gen(0);

    std::vector<std::pair<int, int>> pairs;
    for (int r1 = 0; r1 < rows; ++r1)
        for (int r2 = r1 + 1; r2 < rows; ++r2) pairs.emplace_back(r1, r2);

    // which supports touch each pair, and the last such support index
    std::vector<std::vector<int>> touching(pairs.size());
    std::vector<int> last_touch(pairs.size(), -1);
    auto contains = [](const std::vector<int>& t, int r) {
        return std::binary_search(t.begin(), t.end(), r);
    };
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (std::size_t s = 0; s < supports.size(); ++s) {
            if (contains(supports[s], pairs[p].first) && contains(supports[s], pairs[p].second)) {
                touching[p].push_back(static_cast<int>(s));
                last_touch[p] = static_cast<int>(s);
            }
        }
    }

    std::vector<int> sums(pairs.size(), 0);
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> dfs = [&](std::size_t s) -> bool {
        if (++nodes > cap) throw std::overflow_error("cap");
        if (s == supports.size()) return true;
        int max_count = length;
        std::vector<int> my_pairs;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (std::find(touching[p].begin(), touching[p].end(), static_cast<int>(s)) !=
                touching[p].end()) {
                my_pairs.push_back(static_cast<int>(p));
                max_count = std::min(max_count, length - sums[p]);
            }
        }
        for (int n = 0; n <= max_count; ++n) {
            for (int p : my_pairs) sums[p] += n;
            bool ok = true;
            for (int p : my_pairs) {
                if (last_touch[p] == static_cast<int>(s) && sums[p] != length) ok = false;
            }
            if (ok && dfs(s + 1)) return true;
            for (int p : my_pairs) sums[p] -= n;
        }
        return false;
    };
    try {
        return dfs(0);
    } catch (const std::overflow_error&) {
        return true;  // undecided within the cap; let the column search decide
    }
}

}  // namespace detail

namespace detail {

struct GbrdSearchState {
    int rows, length, weight;
    std::vector<std::vector<int>> supports;        // sorted row subsets of size w
    std::vector<ZlSet> covered;                    // per row pair (r1<r2)
    std::vector<std::vector<std::optional<int>>> columns;  // chosen, [col][row]
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;

    int pair_index(int r1, int r2) const { return r1 * rows + r2; }

    bool column_fits(const std::vector<std::optional<int>>& column) const {
        for (int r1 = 0; r1 < rows; ++r1) {
            if (!column[r1]) continue;
            for (int r2 = r1 + 1; r2 < rows; ++r2) {
                if (!column[r2]) continue;
                if (covered[pair_index(r1, r2)].contains(*column[r1] - *column[r2])) return false;
            }
        }
        return true;
    }

    void apply(const std::vector<std::optional<int>>& column, bool add) {
        for (int r1 = 0; r1 < rows; ++r1) {
            if (!column[r1]) continue;
            for (int r2 = r1 + 1; r2 < rows; ++r2) {
                if (!column[r2]) continue;
                ZlSet& cell = covered[pair_index(r1, r2)];
                if (add) cell.insert(*column[r1] - *column[r2]);
                else cell.erase(*column[r1] - *column[r2]);
            }
        }
    }

    // first uncovered (row pair, difference), pair-major
    bool next_target(int& r1, int& r2, int& d) const {
        for (r1 = 0; r1 < rows; ++r1) {
            for (r2 = r1 + 1; r2 < rows; ++r2) {
                const ZlSet& cell = covered[pair_index(r1, r2)];
                for (d = 0; d < length; ++d) {
                    if (!cell.contains(d)) return true;
                }
            }
        }
        return false;
    }

    bool dfs() {
        int r1, r2, d;
        if (!next_target(r1, r2, d)) return true;  // every pair fully covered
        if (++nodes > budget) throw std::overflow_error("budget");
        // try every column that covers the target cell (r1,r2,d)
        for (const auto& support : supports) {
            if (!std::binary_search(support.begin(), support.end(), r1)) continue;
            if (!std::binary_search(support.begin(), support.end(), r2)) continue;
            std::vector<int> free_rows;
            for (int r : support) {
                if (r != r1 && r != r2) free_rows.push_back(r);
            }
            std::vector<std::optional<int>> column(rows);
            // shifting a whole column preserves every difference, so one cell
            // can be pinned without losing solutions
            column[r1] = 0;
            column[r2] = ((-d) % length + length) % length;
            std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
                if (idx == free_rows.size()) {
                    if (!column_fits(column)) return false;
                    apply(column, true);
                    columns.push_back(column);
                    if (dfs()) return true;
                    columns.pop_back();
                    apply(column, false);
                    return false;
                }
                for (int v = 0; v < length; ++v) {
                    column[free_rows[idx]] = v;
                    if (assign(idx + 1)) return true;
                }
                column[free_rows[idx]] = std::nullopt;
                return false;
            };
            if (assign(0)) return true;
        }
        return false;
    }
};

}  // namespace detail

/// Exact backtracking search for an M x b GBRD over Z_L with w filled cells
/// per column. Throws ShapeInfeasibleError when the column count is not an
/// integer; otherwise distinguishes exhaustion from a budget stop.
inline GbrdSearchResult search_gbrd(int rows, int length, int weight,
                                    std::uint64_t node_budget = 50'000'000) {
    if (rows < 2 || weight < 2 || weight > rows)
        throw std::invalid_argument("search_gbrd: need 2 <= w <= M");
    gbrd_column_count(rows, length, weight);  // shape check

    if (!detail::support_counts_feasible(rows, length, weight)) {
        GbrdSearchResult result;
        result.status = SearchStatus::ProvenNonexistent;
        return result;
    }

    detail::GbrdSearchState state;
    state.rows = rows;
    state.length = length;
    state.weight = weight;
    state.covered.assign(rows * rows, ZlSet(length));
    state.budget = node_budget;

    // all row subsets of size w, lexicographic
    std::vector<int> pick;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(pick.size()) == weight) {
            state.supports.push_back(pick);
            return;
        }
        for (int r = start; r < rows; ++r) {
            pick.push_back(r);
            gen(r + 1);
            pick.pop_back();
        }
    };
    gen(0);

    GbrdSearchResult result;
    bool found = false;
    try {
        found = state.dfs();
    } catch (const std::overflow_error&) {
        result.nodes_explored = state.nodes;
        result.status = SearchStatus::BudgetExhausted;
        return result;
    }
    result.nodes_explored = state.nodes;
    if (!found) {
        result.status = SearchStatus::ProvenNonexistent;
        return result;
    }

    Gbrd design;
    design.rows = rows;
    design.length = length;
    design.weight = weight;
    design.cells.assign(rows, std::vector<std::optional<int>>(state.columns.size()));
    for (std::size_t c = 0; c < state.columns.size(); ++c) {
        for (int r = 0; r < rows; ++r) design.cells[r][c] = state.columns[c][r];
    }
    result.status = SearchStatus::Found;
    result.gbrd = std::move(design);
    return result;
}

}  // namespace mccac

#endif  // MCCAC_GBRD_HPP
