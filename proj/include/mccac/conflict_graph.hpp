#ifndef MCCAC_CONFLICT_GRAPH_HPP
#define MCCAC_CONFLICT_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "mccac/pattern.hpp"

namespace mccac {

/// Conflict graph over canonical patterns: an edge joins two patterns whose
/// difference arrays intersect in some cell, i.e. which cannot coexist in a
/// code. Codes are exactly the independent sets.
class ConflictGraph {
public:
    ConflictGraph() = default;

    explicit ConflictGraph(int order)
        : order_(order), words_((order + 63) / 64), rows_(order, std::vector<std::uint64_t>(words_, 0)),
          degrees_(order, 0) {}

    int order() const { return order_; }

    bool edge(int u, int v) const { return (rows_[u][v >> 6] >> (v & 63)) & 1; }

    void add_edge(int u, int v) {
        if (u == v || edge(u, v)) return;
        rows_[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        rows_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
        ++degrees_[u];
        ++degrees_[v];
    }

    int degree(int v) const { return degrees_[v]; }
    const std::vector<std::uint64_t>& row(int v) const { return rows_[v]; }
    int words() const { return words_; }

private:
    int order_ = 0;
    int words_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> degrees_;
};

inline ConflictGraph build_conflict_graph(const std::vector<SchedulingPattern>& patterns,
                                          const CodeParams& params) {
    std::vector<DifferenceArray> arrays;
    arrays.reserve(patterns.size());
    for (const auto& p : patterns) arrays.push_back(difference_array(p, params));

    ConflictGraph graph(static_cast<int>(patterns.size()));
    for (int u = 0; u < graph.order(); ++u) {
        for (int v = u + 1; v < graph.order(); ++v) {
            if (arrays[u].intersects(arrays[v])) graph.add_edge(u, v);
        }
    }
    return graph;
}

}  // namespace mccac

#endif  // MCCAC_CONFLICT_GRAPH_HPP
