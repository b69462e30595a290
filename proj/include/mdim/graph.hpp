#ifndef MDIM_GRAPH_HPP
#define MDIM_GRAPH_HPP

#include <string>
#include <vector>

#include "mdim/bitrow.hpp"

namespace mdim {

/// Simple undirected graph: adjacency as one bit row per vertex plus a unique
/// display label per vertex. Instances are treated as immutable once a
/// constructor function returns them; all queries are const and thread-safe.
class Graph {
public:
    Graph(int order, std::vector<std::string> labels);

    // Convenience: labels "0".."order-1".
    explicit Graph(int order);

    int order() const { return order_; }

    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const BitRow& row(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    std::vector<int> neighbors(int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    // Index of the vertex carrying `label`, or -1.
    int vertex_by_label(const std::string& label) const;

    long long edge_count() const;
    std::vector<int> degree_sequence() const;  // sorted ascending
    // Degree shared by every vertex, or -1 when the graph is irregular.
    int regular_valency() const;
    bool is_connected() const;

private:
    int order_;
    std::vector<BitRow> adj_;
    std::vector<std::string> labels_;
};

/// Same vertex set; u ~ v iff u != v and not adjacent in g.
Graph complement(const Graph& g);

/// Vertices of g then h, no cross edges. Labels are suffixed with "'" on the
/// h side whenever they would collide with a label of g.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace mdim

#endif
