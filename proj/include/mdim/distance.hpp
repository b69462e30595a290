#ifndef MDIM_DISTANCE_HPP
#define MDIM_DISTANCE_HPP

#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// All-pairs shortest-path distances. Unreachable pairs hold kInfinite.
class DistanceMatrix {
public:
    static constexpr int kInfinite = -1;

    explicit DistanceMatrix(int order) : order_(order), dist_(order, std::vector<int>(order, kInfinite)) {}

    int order() const { return order_; }
    int at(int u, int v) const { return dist_[u][v]; }
    void set(int u, int v, int d) { dist_[u][v] = d; }

    bool all_finite() const;
    /// Largest finite distance, or kInfinite when some pair is unreachable.
    int diameter() const;

private:
    int order_;
    std::vector<std::vector<int>> dist_;
};

/// Breadth-first search from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

struct GraphProfile {
    int diameter;           // DistanceMatrix::kInfinite when disconnected
    int regular_valency;    // -1 when irregular
    bool bipartite;
    int clique_number;
    long long edge_count;
};

GraphProfile profile(const Graph& g);

bool is_bipartite(const Graph& g);

/// One maximum clique, found by exact branch-and-bound with a greedy
/// colouring bound. Returned vertices are sorted ascending.
std::vector<int> max_clique(const Graph& g);

}  // namespace mdim

#endif
