#ifndef MDIM_RESOLVING_HPP
#define MDIM_RESOLVING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"

namespace mdim {

/// Ordered vertex subset; members are kept strictly increasing so that equal
/// sets compare equal and search output is deterministic.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::vector<int> members, int order);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const;
    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> members_;
};

/// One coordinate per member of the defining set, entry t = d(v, r_t).
using MetricVector = std::vector<int>;

enum class ResolutionKind { Resolving, Doubly, Strong };

/// Verdict for one candidate set. A false verdict always carries the
/// lexicographically least failing vertex pair as a re-checkable witness.
struct ResolutionReport {
    ResolutionKind kind;
    bool verdict;
    std::optional<std::pair<int, int>> witness;
};

struct DimensionResult {
    int dimension = 0;
    VertexSet optimal_set;
    std::uint64_t search_space_checked = 0;
    // Candidate sets refuted at size dimension-1 (0 when dimension is 1 or
    // the value came from a reduction rather than subset search).
    std::uint64_t refuted_below = 0;
};

MetricVector metric_vector(const DistanceMatrix& d, int v, const VertexSet& set);

/// True verdict iff all vertices have pairwise distinct metric vectors.
ResolutionReport is_resolving(const DistanceMatrix& d, const VertexSet& set);

/// d(u,x) - d(u,y) != d(v,x) - d(v,y).
bool doubly_resolves(const DistanceMatrix& d, int x, int y, int u, int v);

ResolutionReport is_doubly_resolving(const DistanceMatrix& d, const VertexSet& set);

/// u lies on a shortest v-w path or v lies on a shortest u-w path.
bool strongly_resolves(const DistanceMatrix& d, int w, int u, int v);

ResolutionReport is_strong_resolving(const DistanceMatrix& d, const VertexSet& set);

/// Exact metric dimension by ascending-size exhaustive subset search; the
/// returned set is the lexicographically first optimum. Rejects disconnected
/// input.
DimensionResult metric_dimension(const Graph& g);

/// Exact minimum doubly resolving set size. The search floor is
/// max(2, metric_dimension(g)); one size below the floor is still refuted
/// exhaustively as a safety check.
DimensionResult min_doubly_resolving(const Graph& g);

/// Same vertex set; edge (u,v) iff u and v are mutually maximally distant:
/// d(u,v) >= d(u,w) for every neighbour w of v and d(u,v) >= d(v,w) for every
/// neighbour w of u.
Graph strong_resolving_graph(const Graph& g);

/// Exact minimum vertex cover by branch and bound with degree-1 reduction.
VertexSet min_vertex_cover(const Graph& g);

/// Exact strong metric dimension, computed as the minimum vertex cover of the
/// strong resolving graph; for order <= 16 an independent ascending-size
/// subset search runs as well and the two answers are asserted equal.
DimensionResult strong_metric_dimension(const Graph& g);

}  // namespace mdim

#endif
